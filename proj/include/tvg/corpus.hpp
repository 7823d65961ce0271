#ifndef TVG_CORPUS_HPP
#define TVG_CORPUS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tvg/time.hpp"

namespace tvg {

struct PaperRecord {
    std::string id;
    // Missing in SNAP-style inputs when the id never appears in the dates
    // file; such records stay in the citation graph but are skipped by the
    // temporal builders.
    std::optional<TimeInstant> date;
    std::vector<std::string> authors;     // display names, original order
    std::vector<std::string> author_keys; // case-folded identities, parallel
    std::vector<std::string> references;  // deduplicated, file order
};

// Flat key -> count map; serialized one "key=value" line per entry.
struct IngestReport {
    std::map<std::string, std::int64_t> counts;

    std::int64_t get(const std::string& key) const;
    void bump(const std::string& key, std::int64_t by = 1) { counts[key] += by; }
    std::string to_text() const;
};

class Corpus {
public:
    const std::map<std::string, PaperRecord>& papers() const { return papers_; }
    const PaperRecord& paper(const std::string& id) const; // LookupError
    bool contains(const std::string& id) const { return papers_.count(id) > 0; }

    // [min submission date, max submission date + 1 day) over dated papers.
    std::pair<TimeInstant, TimeInstant> lifetime() const;
    bool has_lifetime() const { return lifetime_.has_value(); }

    const IngestReport& report() const { return report_; }
    // First display form seen for a case-folded author key.
    const std::map<std::string, std::string>& author_display() const {
        return author_display_;
    }
    const std::vector<std::string>& quarantined_ids() const {
        return quarantined_;
    }

private:
    friend class CorpusBuilder;
    std::map<std::string, PaperRecord> papers_;
    std::optional<std::pair<TimeInstant, TimeInstant>> lifetime_;
    IngestReport report_;
    std::map<std::string, std::string> author_display_;
    std::vector<std::string> quarantined_;
};

// Single-writer corpus assembly; parsing of individual files is stateless.
class CorpusBuilder {
public:
    // Records with no parsable authors are quarantined unless
    // allow_missing_authors() was called (edges+dates-only loads).
    void add_paper(std::string id, std::optional<TimeInstant> date,
                   std::string_view raw_author_line,
                   std::vector<std::string> references);
    void add_paper_normalized(std::string id, std::optional<TimeInstant> date,
                              std::vector<std::string> authors,
                              std::vector<std::string> references);
    void allow_missing_authors() { allow_missing_authors_ = true; }
    void bump(const std::string& key, std::int64_t by = 1) {
        report_.bump(key, by);
    }
    Corpus finish();

private:
    std::map<std::string, PaperRecord> papers_;
    std::vector<std::string> quarantined_;
    IngestReport report_;
    bool allow_missing_authors_ = false;
};

// ---- adapters ------------------------------------------------------------

struct EdgeList {
    std::vector<std::pair<std::string, std::string>> edges;
    std::int64_t duplicates = 0;
    std::int64_t malformed = 0; // lenient mode only
};

// '#'-commented two-column citation file. strict=true throws ParseError with
// the offending line number; lenient mode counts and skips bad lines.
EdgeList parse_citation_edges(std::istream& in, bool strict = true);

struct DateTable {
    std::map<std::string, TimeInstant> dates;
    std::int64_t duplicates = 0; // later entries overwrite
    std::int64_t malformed = 0;
};

// Two-column "paper_id YYYY-MM-DD" file. Cross-listed ids (longer than the
// canonical seven digits and carrying the "11" prefix) are normalized by
// stripping the prefix.
DateTable parse_dates(std::istream& in, bool strict = true);

std::string normalize_cross_listed_id(std::string_view id);

struct AbstractMetadata {
    std::string paper_id;
    std::string raw_author_line; // empty when the Authors field is missing
    std::optional<TimeInstant> date;
};

// Key-value header block with "Paper:", "Date:" and "Authors:" keys;
// indented continuation lines are joined onto the previous field.
AbstractMetadata parse_abstract_metadata(std::istream& in);

// Splits on commas and the word "and", strips parenthesized affiliations,
// collapses whitespace, case-folds for identity while keeping display casing.
std::vector<std::string> normalize_authors(std::string_view raw);
std::string author_key(std::string_view display);

// ---- corpus loading ------------------------------------------------------

struct CorpusPaths {
    std::string canonical;      // one record per line (see canonical format)
    std::string edges;          // citation edge file
    std::string dates;          // dates file
    std::string abstracts_dir;  // optional directory of header-block files
    bool strict = true;
};

// Canonical record: id<TAB>YYYY-MM-DD<TAB>author;author;...<TAB>ref,ref,...
Corpus load_corpus_canonical(std::istream& in, bool strict = true);
Corpus load_corpus(const CorpusPaths& paths); // ConfigError on missing input
void export_corpus_canonical(const Corpus& corpus, std::ostream& out);

} // namespace tvg

#endif // TVG_CORPUS_HPP
