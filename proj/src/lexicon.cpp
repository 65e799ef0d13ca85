#include "featrate/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "featrate/csv.hpp"
#include "featrate/preprocess.hpp"

namespace featrate {

namespace {

std::vector<std::string> split_lexicon_line(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty() && current != "||") tokens.push_back(std::move(current));
    current.clear();
  };
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      flush();
    } else {
      current.push_back(c);
    }
  }
  flush();
  return tokens;
}

}  // namespace

FeatureLexicon FeatureLexicon::from_sets(std::vector<FeatureSet> sets) {
  FeatureLexicon lex;
  lex.sets_.reserve(sets.size());
  for (auto& set : sets) {
    if (set.keyword.empty()) throw LexiconError("feature set with empty keyword");
    const std::size_t index = lex.sets_.size();

    FeatureSet clean;
    clean.keyword = set.keyword;
    clean.members.push_back(set.keyword);
    for (auto& m : set.members) {
      if (m.empty()) continue;
      if (std::find(clean.members.begin(), clean.members.end(), m) == clean.members.end()) {
        clean.members.push_back(std::move(m));
      }
    }
    for (const auto& m : clean.members) {
      const auto [it, inserted] = lex.member_index_.try_emplace(m, index);
      if (!inserted) {
        throw LexiconError("word \"" + m + "\" belongs to both \"" +
                           lex.sets_[it->second].keyword + "\" and \"" + clean.keyword + "\"");
      }
    }
    lex.sets_.push_back(std::move(clean));
  }
  return lex;
}

FeatureLexicon FeatureLexicon::parse(std::istream& in, std::string_view source) {
  std::vector<FeatureSet> sets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto tokens = split_lexicon_line(body);
    if (tokens.empty()) {
      throw LexiconError(std::string(source) + ":" + std::to_string(line_no) +
                         ": feature set has no words");
    }
    for (auto& t : tokens) {
      std::transform(t.begin(), t.end(), t.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    }
    FeatureSet set;
    set.keyword = tokens.front();
    set.members = std::move(tokens);
    sets.push_back(std::move(set));
  }
  return from_sets(std::move(sets));
}

std::optional<std::string_view> FeatureLexicon::resolve(std::string_view token) const {
  const auto it = member_index_.find(token);
  if (it == member_index_.end()) return std::nullopt;
  return std::string_view(sets_[it->second].keyword);
}

bool FeatureLexicon::is_keyword(std::string_view token) const {
  const auto kw = resolve(token);
  return kw && *kw == token;
}

FeatureLexicon load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot read feature lexicon: " + path.string());
  return FeatureLexicon::parse(in, path.string());
}

FrequencyReport frequency_table(const Corpus& corpus, double min_fraction,
                                const EmoticonSet& emoticons) {
  if (!(min_fraction >= 0.0 && min_fraction <= 1.0)) {
    throw std::invalid_argument("min_fraction must lie in [0, 1]");
  }
  StringMap<std::size_t> counts;
  for (const auto& [name, records] : corpus.products()) {
    for (const auto& rec : records) {
      for (auto& tok : tokenize(retain_useful_chars(rec.review_text), emoticons)) {
        if (tok.kind == TokenKind::word) tok.text = to_lower(tok.text);
        ++counts[tok.text];
      }
    }
  }

  FrequencyReport report;
  report.review_count = corpus.review_count();
  report.min_fraction = min_fraction;
  const double threshold = min_fraction * static_cast<double>(report.review_count);
  for (auto& [token, count] : counts) {
    if (static_cast<double>(count) < threshold) continue;
    const double fraction = report.review_count == 0
                                ? 0.0
                                : static_cast<double>(count) / static_cast<double>(report.review_count);
    report.rows.push_back({token, count, fraction});
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const auto& a, const auto& b) {
    return a.count != b.count ? a.count > b.count : a.token < b.token;
  });
  return report;
}

}  // namespace featrate
