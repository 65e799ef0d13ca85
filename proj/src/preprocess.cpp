#include "featrate/preprocess.hpp"

#include <array>
#include <fstream>

#include "featrate/csv.hpp"

namespace featrate {

namespace {

constexpr std::string_view kPunctuation = ".,:;-!? ";
constexpr std::string_view kEmoticonChars = "':-()=*83$><^/[]#{}|;\\&";

constexpr std::array<bool, 256> make_retained_table() {
  std::array<bool, 256> table{};
  for (int c = 'a'; c <= 'z'; ++c) table[static_cast<unsigned>(c)] = true;
  for (int c = 'A'; c <= 'Z'; ++c) table[static_cast<unsigned>(c)] = true;
  for (char c : kPunctuation) table[static_cast<unsigned char>(c)] = true;
  for (char c : kEmoticonChars) table[static_cast<unsigned char>(c)] = true;
  return table;
}

constexpr auto kRetained = make_retained_table();

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool joins_word(char c) { return is_letter(c) || c == '\'' || c == '-'; }

void push_punct(std::vector<Token>& out, char c) {
  out.push_back({std::string(1, c), TokenKind::punctuation, false});
}

// Segment of letters, apostrophes and hyphens: edge non-letters become
// punctuation, the span between the first and last letter is the word.
void emit_segment(std::vector<Token>& out, std::string_view seg) {
  std::size_t first = 0;
  while (first < seg.size() && !is_letter(seg[first])) ++first;
  if (first == seg.size()) {
    for (char c : seg) push_punct(out, c);
    return;
  }
  std::size_t last = seg.size() - 1;
  while (!is_letter(seg[last])) --last;
  for (std::size_t i = 0; i < first; ++i) push_punct(out, seg[i]);
  out.push_back({std::string(seg.substr(first, last - first + 1)), TokenKind::word, false});
  for (std::size_t i = last + 1; i < seg.size(); ++i) push_punct(out, seg[i]);
}

void tokenize_chunk(std::vector<Token>& out, std::string_view chunk, const EmoticonSet& emoticons) {
  if (emoticons.contains(chunk)) {
    out.push_back({std::string(chunk), TokenKind::emoticon, false});
    return;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= chunk.size(); ++i) {
    if (i < chunk.size() && joins_word(chunk[i])) continue;
    if (i > start) emit_segment(out, chunk.substr(start, i - start));
    if (i < chunk.size()) push_punct(out, chunk[i]);
    start = i + 1;
  }
}

}  // namespace

EmoticonSet::EmoticonSet(std::vector<std::string> entries) {
  for (auto& e : entries) {
    if (!e.empty()) entries_.insert(std::move(e));
  }
}

EmoticonSet EmoticonSet::parse(std::istream& in) {
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto body = trim(line);
    if (!body.empty()) entries.emplace_back(body);
  }
  return EmoticonSet(std::move(entries));
}

EmoticonSet load_emoticons(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read emoticon list: " + path.string());
  return EmoticonSet::parse(in);
}

bool is_retained_char(char c) { return kRetained[static_cast<unsigned char>(c)]; }

std::string retain_useful_chars(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    if (c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') c = ' ';
    if (!is_retained_char(c)) continue;
    if (c == ' ' && (out.empty() || out.back() == ' ')) continue;
    out.push_back(c);
  }
  if (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<Token> tokenize(std::string_view cleaned, const EmoticonSet& emoticons) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < cleaned.size()) {
    if (cleaned[pos] == ' ') {
      ++pos;
      continue;
    }
    auto end = cleaned.find(' ', pos);
    if (end == std::string_view::npos) end = cleaned.size();
    tokenize_chunk(tokens, cleaned.substr(pos, end - pos), emoticons);
    pos = end;
  }
  return tokens;
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) {
    if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Token correct_token(const Token& token, const FeatureLexicon& lexicon, SpellCorrector& speller) {
  if (token.kind != TokenKind::word) return token;

  bool has_letter = false;
  bool all_upper = true;
  for (char c : token.text) {
    if (!is_letter(c)) continue;
    has_letter = true;
    all_upper = all_upper && is_upper(c);
  }

  Token out;
  out.kind = TokenKind::word;
  out.all_caps = token.all_caps || (has_letter && all_upper);

  const std::string lower = to_lower(token.text);
  if (const auto kw = lexicon.resolve(lower)) {
    out.text = std::string(*kw);
    return out;
  }
  std::string corrected = speller.correct(lower);
  if (const auto kw = lexicon.resolve(corrected)) {
    out.text = std::string(*kw);
  } else {
    out.text = std::move(corrected);
  }
  return out;
}

std::optional<CleanComment> preprocess_comment(const ReviewRecord& record,
                                               const TextPipeline& pipeline) {
  auto tokens = tokenize(retain_useful_chars(record.review_text), pipeline.emoticons);
  if (tokens.empty()) return std::nullopt;
  CleanComment comment;
  comment.votes = record.review_votes;
  comment.source_rating = record.overall_rating;
  comment.tokens.reserve(tokens.size());
  for (const auto& t : tokens) {
    comment.tokens.push_back(correct_token(t, pipeline.lexicon, pipeline.speller));
  }
  return comment;
}

}  // namespace featrate
