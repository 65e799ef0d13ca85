#include "featrate/segment.hpp"

#include <algorithm>

namespace featrate {

namespace {

bool is_terminator(const Token& t, SentenceSplit mode) {
  if (t.kind != TokenKind::punctuation) return false;
  if (t.text == ".") return true;
  return mode == SentenceSplit::lenient && (t.text == "!" || t.text == "?");
}

bool is_bang(const Token& t) { return t.kind == TokenKind::punctuation && t.text == "!"; }

}  // namespace

std::vector<Sentence> split_sentences(const CleanComment& comment, SentenceSplit mode) {
  std::vector<Sentence> out;
  const auto& toks = comment.tokens;
  Sentence current;
  current.votes = comment.votes;

  std::size_t i = 0;
  while (i < toks.size()) {
    if (!is_terminator(toks[i], mode)) {
      if (is_bang(toks[i])) ++current.exclamations;
      current.tokens.push_back(toks[i]);
      ++i;
      continue;
    }
    // Consume the whole terminator run; it closes the current sentence.
    int bangs = 0;
    char last = '\0';
    for (; i < toks.size() && is_terminator(toks[i], mode); ++i) {
      if (is_bang(toks[i])) ++bangs;
      last = toks[i].text.front();
    }
    if (!current.tokens.empty()) {
      current.exclamations += bangs;
      current.terminator = last;
      out.push_back(std::move(current));
    }
    current = Sentence{};
    current.votes = comment.votes;
  }
  if (!current.tokens.empty() && mode == SentenceSplit::lenient) {
    out.push_back(std::move(current));
  }
  return out;
}

std::vector<Sentence> relevant_sentences(std::vector<Sentence> sentences,
                                         const FeatureLexicon& lexicon) {
  std::vector<Sentence> kept;
  for (auto& s : sentences) {
    s.features.clear();
    for (const auto& t : s.tokens) {
      if (t.kind != TokenKind::word) continue;
      if (const auto kw = lexicon.resolve(t.text)) s.features.emplace_back(*kw);
    }
    std::sort(s.features.begin(), s.features.end());
    s.features.erase(std::unique(s.features.begin(), s.features.end()), s.features.end());
    if (!s.features.empty()) kept.push_back(std::move(s));
  }
  return kept;
}

}  // namespace featrate
