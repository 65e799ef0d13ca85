#pragma once

#include <array>
#include <filesystem>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "featrate/segment.hpp"
#include "featrate/string_hash.hpp"

namespace featrate {

// Constants of the valence heuristics. Defaults are the published values of
// the rule-based analyzer whose lexicon ships in data/.
struct HeuristicConfig {
  double negation_scalar = -0.74;
  std::size_t negation_window = 3;
  double booster_increment = 0.293;
  std::array<double, 3> booster_decay = {1.0, 0.95, 0.9};
  double exclamation_increment = 0.292;
  int exclamation_cap = 4;
  double allcaps_increment = 0.733;
  double normalization_alpha = 15.0;

  // Throws std::invalid_argument on a non-positive alpha or negative caps.
  void validate() const;
};

class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  // Valence file: tab separated, token then mean valence; further columns
  // ignored. Entries made of lowercase letters, apostrophes and hyphens are
  // words; entries containing a space are skipped; anything else is an
  // emoticon. A repeated entry overrides the earlier one.
  void read_valences(std::istream& in, std::string_view source = "<stream>");
  // One token per line, optionally followed by a tab and a signed increment.
  // Without an increment the token boosts by HeuristicConfig::booster_increment.
  void read_boosters(std::istream& in, std::string_view source = "<stream>");
  // One token per line.
  void read_negators(std::istream& in);

  void set_valence(std::string word, double valence);
  void set_emoticon(std::string emoticon, double valence);
  void set_booster(std::string word, std::optional<double> increment = std::nullopt);
  void add_negator(std::string word);

  std::optional<double> valence(std::string_view word) const;
  std::optional<double> emoticon_valence(std::string_view emoticon) const;
  bool is_booster(std::string_view word) const { return boosters_.contains(word); }
  // Signed increment for a booster word; 0 for non-boosters.
  double booster_increment(std::string_view word, const HeuristicConfig& cfg) const;
  // Listed negators plus any word containing "n't".
  bool is_negator(std::string_view word) const;

  std::size_t word_count() const { return valences_.size(); }
  std::size_t emoticon_count() const { return emoticons_.size(); }

 private:
  StringMap<double> valences_;
  StringMap<double> emoticons_;
  StringMap<std::optional<double>> boosters_;
  StringSet negators_;
};

SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& valences,
                                        const std::filesystem::path& boosters,
                                        const std::filesystem::path& negators);

struct SentenceScore {
  double compound = 0.0;  // in [-1, 1]
  int stars = 3;          // bucket(compound)
};

// Sum of per-token valences after the all-caps, booster and negation rules,
// plus exclamation emphasis in the direction of the sum.
double raw_valence_sum(const Sentence& sentence, const SentimentLexicon& lex,
                       const HeuristicConfig& cfg);

// raw / sqrt(raw^2 + alpha), clamped to [-1, 1].
double compound(double raw, const HeuristicConfig& cfg);

// Five equal-width bins over [-1, 1], left-closed, last bin closed at 1.
// Throws std::domain_error outside [-1, 1] or on NaN.
int bucket(double compound_score);

SentenceScore score_sentence(const Sentence& sentence, const SentimentLexicon& lex,
                             const HeuristicConfig& cfg);

}  // namespace featrate
