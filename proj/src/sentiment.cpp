#include "featrate/sentiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <vector>

#include "featrate/csv.hpp"

namespace featrate {

namespace {

std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(v)) {
    return std::nullopt;
  }
  return v;
}

bool is_word_entry(std::string_view token) {
  for (char c : token) {
    if (!((c >= 'a' && c <= 'z') || c == '\'' || c == '-')) return false;
  }
  return !token.empty();
}

std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

}  // namespace

void HeuristicConfig::validate() const {
  if (!(normalization_alpha > 0.0)) {
    throw std::invalid_argument("normalization_alpha must be positive");
  }
  if (exclamation_cap < 0) throw std::invalid_argument("exclamation_cap must be non-negative");
}

void SentimentLexicon::read_valences(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                               ": expected token<TAB>valence");
    }
    const std::string_view token(line.data(), tab);
    std::string_view rest(line.data() + tab + 1, line.size() - tab - 1);
    rest = rest.substr(0, rest.find('\t'));
    const auto value = parse_double(rest);
    if (!value) {
      throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                               ": bad valence");
    }
    if (token.find(' ') != std::string_view::npos) continue;
    if (is_word_entry(token)) {
      set_valence(std::string(token), *value);
    } else {
      set_emoticon(std::string(token), *value);
    }
  }
}

void SentimentLexicon::read_boosters(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto sep = body.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      set_booster(std::string(body));
      continue;
    }
    const auto inc = parse_double(body.substr(sep + 1));
    if (!inc) {
      throw std::runtime_error(std::string(source) + ":" + std::to_string(line_no) +
                               ": bad booster increment");
    }
    set_booster(std::string(body.substr(0, sep)), *inc);
  }
}

void SentimentLexicon::read_negators(std::istream& in) {
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    add_negator(std::string(body));
  }
}

void SentimentLexicon::set_valence(std::string word, double valence) {
  valences_.insert_or_assign(lower_copy(word), valence);
}

void SentimentLexicon::set_emoticon(std::string emoticon, double valence) {
  emoticons_.insert_or_assign(std::move(emoticon), valence);
}

void SentimentLexicon::set_booster(std::string word, std::optional<double> increment) {
  boosters_.insert_or_assign(lower_copy(word), increment);
}

void SentimentLexicon::add_negator(std::string word) { negators_.insert(lower_copy(word)); }

std::optional<double> SentimentLexicon::valence(std::string_view word) const {
  const auto it = valences_.find(word);
  if (it == valences_.end()) return std::nullopt;
  return it->second;
}

std::optional<double> SentimentLexicon::emoticon_valence(std::string_view emoticon) const {
  const auto it = emoticons_.find(emoticon);
  if (it == emoticons_.end()) return std::nullopt;
  return it->second;
}

double SentimentLexicon::booster_increment(std::string_view word,
                                           const HeuristicConfig& cfg) const {
  const auto it = boosters_.find(word);
  if (it == boosters_.end()) return 0.0;
  return it->second.value_or(cfg.booster_increment);
}

bool SentimentLexicon::is_negator(std::string_view word) const {
  return negators_.contains(word) || word.find("n't") != std::string_view::npos;
}

SentimentLexicon load_sentiment_lexicon(const std::filesystem::path& valences,
                                        const std::filesystem::path& boosters,
                                        const std::filesystem::path& negators) {
  SentimentLexicon lex;
  std::ifstream v(valences);
  if (!v) throw std::runtime_error("cannot read valence lexicon: " + valences.string());
  lex.read_valences(v, valences.string());
  std::ifstream b(boosters);
  if (!b) throw std::runtime_error("cannot read booster list: " + boosters.string());
  lex.read_boosters(b, boosters.string());
  std::ifstream n(negators);
  if (!n) throw std::runtime_error("cannot read negator list: " + negators.string());
  lex.read_negators(n);
  return lex;
}

double raw_valence_sum(const Sentence& sentence, const SentimentLexicon& lex,
                       const HeuristicConfig& cfg) {
  std::vector<const Token*> items;
  std::size_t words = 0;
  std::size_t capped = 0;
  for (const auto& t : sentence.tokens) {
    if (t.kind == TokenKind::punctuation) continue;
    items.push_back(&t);
    if (t.kind == TokenKind::word) {
      ++words;
      if (t.all_caps) ++capped;
    }
  }
  // Capitals only emphasise when the rest of the sentence is not shouting.
  const bool caps_stand_out = capped > 0 && capped < words;

  double sum = 0.0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Token& tok = *items[i];
    if (tok.kind == TokenKind::emoticon) {
      sum += lex.emoticon_valence(tok.text).value_or(0.0);
      continue;
    }
    // Intensity modifiers carry no valence of their own.
    if (lex.is_booster(tok.text)) continue;
    const auto base = lex.valence(tok.text);
    if (!base) continue;

    double v = *base;
    if (tok.all_caps && caps_stand_out) v += v > 0 ? cfg.allcaps_increment : -cfg.allcaps_increment;

    for (std::size_t d = 1; d <= cfg.booster_decay.size() && d <= i; ++d) {
      const Token& prev = *items[i - d];
      if (prev.kind != TokenKind::word) continue;
      double inc = lex.booster_increment(prev.text, cfg);
      if (inc == 0.0) continue;
      if (v < 0) inc = -inc;
      v += inc * cfg.booster_decay[d - 1];
    }

    bool negated = false;
    for (std::size_t d = 1; d <= cfg.negation_window && d <= i && !negated; ++d) {
      const Token& prev = *items[i - d];
      negated = prev.kind == TokenKind::word && lex.is_negator(prev.text);
    }
    if (negated) v *= cfg.negation_scalar;

    sum += v;
  }

  const int bangs = std::min(sentence.exclamations, cfg.exclamation_cap);
  const double emphasis = bangs * cfg.exclamation_increment;
  if (sum > 0) {
    sum += emphasis;
  } else if (sum < 0) {
    sum -= emphasis;
  }
  return sum;
}

double compound(double raw, const HeuristicConfig& cfg) {
  // Same value as raw / sqrt(raw^2 + alpha), but built from monotone steps
  // only, so rounding can never make a larger raw score map lower.
  if (raw == 0.0) return 0.0;
  const double c = std::copysign(1.0 / std::sqrt(1.0 + cfg.normalization_alpha / (raw * raw)), raw);
  return std::clamp(c, -1.0, 1.0);
}

int bucket(double c) {
  if (!(c >= -1.0 && c <= 1.0)) {
    throw std::domain_error("compound score outside [-1, 1]: " + std::to_string(c));
  }
  if (c < -0.6) return 1;
  if (c < -0.2) return 2;
  if (c < 0.2) return 3;
  if (c < 0.6) return 4;
  return 5;
}

SentenceScore score_sentence(const Sentence& sentence, const SentimentLexicon& lex,
                             const HeuristicConfig& cfg) {
  SentenceScore s;
  s.compound = compound(raw_valence_sum(sentence, lex, cfg), cfg);
  s.stars = bucket(s.compound);
  return s;
}

}  // namespace featrate
