#include "tvg/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "tvg/errors.hpp"

namespace tvg {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::string collapse_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = false;
    for (char c : s) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out += ' ';
            in_space = false;
            out += c;
        }
    }
    return out;
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

std::int64_t IngestReport::get(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

std::string IngestReport::to_text() const {
    std::ostringstream out;
    for (const auto& [key, value] : counts) out << key << '=' << value << '\n';
    return out.str();
}

const PaperRecord& Corpus::paper(const std::string& id) const {
    auto it = papers_.find(id);
    if (it == papers_.end()) throw LookupError("unknown paper id: " + id);
    return it->second;
}

std::pair<TimeInstant, TimeInstant> Corpus::lifetime() const {
    if (!lifetime_) throw InvalidArgumentError("corpus has no dated papers");
    return *lifetime_;
}

// ---- author normalization ------------------------------------------------

std::string author_key(std::string_view display) {
    std::string key;
    key.reserve(display.size());
    for (char c : display)
        key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return key;
}

std::vector<std::string> normalize_authors(std::string_view raw) {
    // Drop parenthesized affiliations (nesting tolerated).
    std::string stripped;
    stripped.reserve(raw.size());
    int depth = 0;
    for (char c : raw) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            if (depth > 0) --depth;
        } else if (depth == 0) {
            stripped += c;
        }
    }
    // Separators: commas and the standalone word "and" (any case).
    std::string seps;
    seps.reserve(stripped.size());
    const std::string lower = author_key(stripped);
    for (std::size_t i = 0; i < stripped.size();) {
        if (stripped[i] == ',') {
            seps += '\x1f';
            ++i;
            continue;
        }
        if (lower.compare(i, 3, "and") == 0 &&
            (i == 0 || std::isspace(static_cast<unsigned char>(stripped[i - 1]))) &&
            (i + 3 == stripped.size() ||
             std::isspace(static_cast<unsigned char>(stripped[i + 3])))) {
            seps += '\x1f';
            i += 3;
            continue;
        }
        seps += stripped[i];
        ++i;
    }
    std::vector<std::string> authors;
    std::set<std::string> seen;
    for (const std::string& part : split(seps, '\x1f')) {
        const std::string display = collapse_whitespace(trim(part));
        if (display.empty()) continue;
        if (seen.insert(author_key(display)).second) authors.push_back(display);
    }
    return authors;
}

// ---- adapters ------------------------------------------------------------

std::string normalize_cross_listed_id(std::string_view id) {
    if (id.size() > 7 && id.substr(0, 2) == "11")
        return std::string(id.substr(2));
    return std::string(id);
}

EdgeList parse_citation_edges(std::istream& in, bool strict) {
    EdgeList result;
    std::set<std::pair<std::string, std::string>> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string from, to, extra;
        if (!(ls >> from >> to) || (ls >> extra)) {
            if (strict)
                throw ParseError("malformed edge line " + std::to_string(lineno) +
                                 ": " + line);
            ++result.malformed;
            continue;
        }
        from = normalize_cross_listed_id(from);
        to = normalize_cross_listed_id(to);
        if (!seen.emplace(from, to).second) {
            ++result.duplicates;
            continue;
        }
        result.edges.emplace_back(std::move(from), std::move(to));
    }
    return result;
}

DateTable parse_dates(std::istream& in, bool strict) {
    DateTable result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::istringstream ls(t);
        std::string id, date;
        if (!(ls >> id >> date)) {
            if (strict)
                throw ParseError("malformed dates line " + std::to_string(lineno) +
                                 ": " + line);
            ++result.malformed;
            continue;
        }
        const auto parsed = parse_iso_date(date);
        if (!parsed) {
            if (strict)
                throw ParseError("unparseable date at line " +
                                 std::to_string(lineno) + ": " + date);
            ++result.malformed;
            continue;
        }
        id = normalize_cross_listed_id(id);
        auto [it, inserted] = result.dates.emplace(id, *parsed);
        if (!inserted) {
            it->second = *parsed; // last one wins
            ++result.duplicates;
        }
    }
    return result;
}

AbstractMetadata parse_abstract_metadata(std::istream& in) {
    AbstractMetadata meta;
    std::string line;
    std::string current_key;
    std::map<std::string, std::string> fields;
    while (std::getline(in, line)) {
        if (trim(line).empty() || line.rfind("----", 0) == 0 || line == "\\\\")
            continue;
        if (!line.empty() && std::isspace(static_cast<unsigned char>(line[0]))) {
            // Wrapped field value continues on indented lines.
            if (!current_key.empty()) fields[current_key] += ' ' + trim(line);
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        current_key = trim(line.substr(0, colon));
        fields[current_key] = trim(line.substr(colon + 1));
    }
    if (auto it = fields.find("Paper"); it != fields.end()) {
        std::string id = it->second;
        const auto slash = id.rfind('/');
        if (slash != std::string::npos) id = id.substr(slash + 1);
        meta.paper_id = normalize_cross_listed_id(id);
    }
    if (auto it = fields.find("Authors"); it != fields.end())
        meta.raw_author_line = collapse_whitespace(it->second);
    if (auto it = fields.find("Date"); it != fields.end())
        meta.date = parse_iso_date(it->second);
    return meta;
}

// ---- CorpusBuilder -------------------------------------------------------

void CorpusBuilder::add_paper(std::string id, std::optional<TimeInstant> date,
                              std::string_view raw_author_line,
                              std::vector<std::string> references) {
    add_paper_normalized(std::move(id), date, normalize_authors(raw_author_line),
                         std::move(references));
}

void CorpusBuilder::add_paper_normalized(std::string id,
                                         std::optional<TimeInstant> date,
                                         std::vector<std::string> authors,
                                         std::vector<std::string> references) {
    report_.bump("papers_in");
    if (authors.empty() && !allow_missing_authors_) {
        report_.bump("papers_quarantined");
        quarantined_.push_back(std::move(id));
        return;
    }
    PaperRecord rec;
    rec.id = id;
    rec.date = date;
    rec.author_keys.reserve(authors.size());
    for (const std::string& a : authors) rec.author_keys.push_back(author_key(a));
    rec.authors = std::move(authors);
    // Dedup references, keep file order.
    std::set<std::string> seen;
    for (std::string& ref : references) {
        if (ref == rec.id) {
            report_.bump("self_references_dropped");
            continue;
        }
        if (seen.insert(ref).second) rec.references.push_back(std::move(ref));
    }
    auto it = papers_.find(rec.id);
    if (it != papers_.end()) {
        report_.bump("duplicate_papers");
        it->second = std::move(rec); // last one wins
    } else {
        papers_.emplace(rec.id, std::move(rec));
    }
}

Corpus CorpusBuilder::finish() {
    Corpus corpus;
    corpus.papers_ = std::move(papers_);
    corpus.quarantined_ = std::move(quarantined_);
    corpus.report_ = std::move(report_);

    std::optional<TimeInstant> lo, hi;
    std::int64_t citations = 0, dangling = 0, undated = 0;
    for (auto& [id, rec] : corpus.papers_) {
        if (rec.date) {
            if (!lo || *rec.date < *lo) lo = rec.date;
            if (!hi || *hi < *rec.date) hi = rec.date;
        } else {
            ++undated;
        }
        for (const std::string& ref : rec.references) {
            if (corpus.papers_.count(ref)) {
                ++citations;
            } else {
                ++dangling;
            }
        }
        for (std::size_t i = 0; i < rec.authors.size(); ++i)
            corpus.author_display_.emplace(rec.author_keys[i], rec.authors[i]);
    }
    if (lo) corpus.lifetime_ = {*lo, *hi + 1};
    corpus.report_.counts["papers_kept"] =
        static_cast<std::int64_t>(corpus.papers_.size());
    corpus.report_.counts["papers_undated"] = undated;
    corpus.report_.counts["citations_internal"] = citations;
    corpus.report_.counts["references_dangling"] = dangling;
    corpus.report_.counts["authors_distinct"] =
        static_cast<std::int64_t>(corpus.author_display_.size());
    corpus.report_.counts.try_emplace("papers_quarantined", 0);
    return corpus;
}

// ---- canonical format ----------------------------------------------------

Corpus load_corpus_canonical(std::istream& in, bool strict) {
    CorpusBuilder builder;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        const auto cols = split(line, '\t');
        if (cols.size() != 4) {
            if (strict)
                throw ParseError("canonical record needs 4 tab-separated fields, line " +
                                 std::to_string(lineno));
            continue;
        }
        std::optional<TimeInstant> date;
        if (!cols[1].empty()) {
            date = parse_iso_date(cols[1]);
            if (!date) {
                if (strict)
                    throw ParseError("bad date at line " + std::to_string(lineno) +
                                     ": " + cols[1]);
                continue;
            }
        }
        std::vector<std::string> authors;
        for (const std::string& a : split(cols[2], ';')) {
            const std::string t = trim(a);
            if (!t.empty()) authors.push_back(t);
        }
        std::vector<std::string> refs;
        for (const std::string& r : split(cols[3], ',')) {
            const std::string t = trim(r);
            if (!t.empty()) refs.push_back(t);
        }
        builder.add_paper_normalized(cols[0], date, std::move(authors),
                                     std::move(refs));
    }
    return builder.finish();
}

void export_corpus_canonical(const Corpus& corpus, std::ostream& out) {
    for (const auto& [id, rec] : corpus.papers()) {
        out << id << '\t';
        if (rec.date) out << format_iso_date(*rec.date);
        out << '\t';
        for (std::size_t i = 0; i < rec.authors.size(); ++i) {
            if (i) out << ';';
            out << rec.authors[i];
        }
        out << '\t';
        for (std::size_t i = 0; i < rec.references.size(); ++i) {
            if (i) out << ',';
            out << rec.references[i];
        }
        out << '\n';
    }
}

// ---- load_corpus ---------------------------------------------------------

namespace {
std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);
    return in;
}
} // namespace

Corpus load_corpus(const CorpusPaths& paths) {
    if (!paths.canonical.empty()) {
        auto in = open_or_throw(paths.canonical);
        return load_corpus_canonical(in, paths.strict);
    }
    if (paths.edges.empty() || paths.dates.empty())
        throw ConfigError("need either a canonical record file or edges+dates files");

    auto edges_in = open_or_throw(paths.edges);
    const EdgeList edges = parse_citation_edges(edges_in, paths.strict);
    auto dates_in = open_or_throw(paths.dates);
    const DateTable dates = parse_dates(dates_in, paths.strict);

    // Author metadata, when present.
    std::map<std::string, std::string> author_lines;
    std::int64_t abstracts_missing_authors = 0;
    if (!paths.abstracts_dir.empty()) {
        namespace fs = std::filesystem;
        if (!fs::is_directory(paths.abstracts_dir))
            throw ConfigError("abstracts dir not found: " + paths.abstracts_dir);
        std::vector<fs::path> files;
        for (const auto& entry : fs::recursive_directory_iterator(paths.abstracts_dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) {
            std::ifstream in(file);
            const AbstractMetadata meta = parse_abstract_metadata(in);
            if (meta.paper_id.empty()) continue;
            if (meta.raw_author_line.empty()) {
                ++abstracts_missing_authors;
                continue;
            }
            author_lines[meta.paper_id] = meta.raw_author_line;
        }
    }

    // Papers = ids in the dates table plus any id appearing in the edge file.
    std::map<std::string, std::vector<std::string>> refs;
    std::set<std::string> ids;
    for (const auto& [id, date] : dates.dates) ids.insert(id);
    for (const auto& [from, to] : edges.edges) {
        ids.insert(from);
        ids.insert(to);
        refs[from].push_back(to);
    }

    CorpusBuilder builder;
    const bool have_authors = !paths.abstracts_dir.empty();
    if (!have_authors) builder.allow_missing_authors();
    for (const std::string& id : ids) {
        std::optional<TimeInstant> date;
        if (auto it = dates.dates.find(id); it != dates.dates.end())
            date = it->second;
        std::vector<std::string> r;
        if (auto it = refs.find(id); it != refs.end()) r = it->second;
        std::string raw_authors;
        if (auto it = author_lines.find(id); it != author_lines.end())
            raw_authors = it->second;
        builder.add_paper(id, date, raw_authors, std::move(r));
    }
    builder.bump("edge_duplicates", edges.duplicates);
    builder.bump("edge_malformed", edges.malformed);
    builder.bump("date_duplicates", dates.duplicates);
    builder.bump("date_malformed", dates.malformed);
    builder.bump("abstracts_missing_authors", abstracts_missing_authors);
    return builder.finish();
}

} // namespace tvg
