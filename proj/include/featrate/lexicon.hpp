#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "featrate/ingest.hpp"
#include "featrate/string_hash.hpp"

namespace featrate {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A group of related feature words. `members` holds every word of the set in
// file order, starting with the keyword.
struct FeatureSet {
  std::string keyword;
  std::vector<std::string> members;
};

// The feature lexicon: pairwise-disjoint feature sets plus the inverse index
// from member word to owning set. Immutable once built.
class FeatureLexicon {
 public:
  FeatureLexicon() = default;

  // Validates disjointness; throws LexiconError on a duplicate member or an
  // empty set. Duplicates inside one set are collapsed.
  static FeatureLexicon from_sets(std::vector<FeatureSet> sets);

  // Parses the line format: first token is the keyword, tokens split on
  // commas and whitespace, "||" ignored, '#' starts a comment line.
  static FeatureLexicon parse(std::istream& in, std::string_view source = "<stream>");

  const std::vector<FeatureSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }

  // Keyword of the set owning `token`, if any. Exact lowercase match.
  std::optional<std::string_view> resolve(std::string_view token) const;
  bool is_keyword(std::string_view token) const;

 private:
  std::vector<FeatureSet> sets_;
  StringMap<std::size_t> member_index_;
};

FeatureLexicon load_lexicon(const std::filesystem::path& path);

struct FrequencyRow {
  std::string token;
  std::size_t count = 0;
  double fraction = 0.0;  // count / number of reviews
};

struct FrequencyReport {
  std::size_t review_count = 0;
  double min_fraction = 0.0;
  std::vector<FrequencyRow> rows;  // count descending, then token ascending
};

class EmoticonSet;

// Token occurrence counts over every review text after character retention,
// tokenization and lowercasing (no spell correction). Rows with
// count < min_fraction * review_count are omitted.
FrequencyReport frequency_table(const Corpus& corpus, double min_fraction,
                                const EmoticonSet& emoticons);

}  // namespace featrate
