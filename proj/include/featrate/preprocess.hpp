#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "featrate/ingest.hpp"
#include "featrate/lexicon.hpp"
#include "featrate/spell.hpp"
#include "featrate/string_hash.hpp"

namespace featrate {

enum class TokenKind { word, punctuation, emoticon };

struct Token {
  std::string text;
  TokenKind kind = TokenKind::word;
  // Word was written in capitals (all of its letters uppercase) before it
  // was lowercased. Always false for punctuation and emoticons.
  bool all_caps = false;

  friend bool operator==(const Token&, const Token&) = default;
};

// Emoticons recognised as whole whitespace-delimited chunks, matched verbatim.
class EmoticonSet {
 public:
  EmoticonSet() = default;
  explicit EmoticonSet(std::vector<std::string> entries);

  // One emoticon per line; blank lines ignored.
  static EmoticonSet parse(std::istream& in);

  bool contains(std::string_view chunk) const { return entries_.contains(chunk); }
  std::size_t size() const { return entries_.size(); }

 private:
  StringSet entries_;
};

EmoticonSet load_emoticons(const std::filesystem::path& path);

// True for every character the cleaner keeps: letters, the punctuation
// ". , : ; - ! ?", space, and the emoticon characters ' : - ( ) = * 8 3 $ > < ^ / [ ] # { } | ; \ &.
bool is_retained_char(char c);

// Deletes every non-retained character (all other digits included), collapses
// runs of spaces and trims. Tabs and newlines act as spaces.
std::string retain_useful_chars(std::string_view raw);

// Splits cleaned text into word, punctuation and emoticon tokens. A
// whitespace chunk that is a listed emoticon becomes one emoticon token.
// Otherwise non-letters at the chunk edges become single-character
// punctuation tokens, and the letter run between them is split at any
// interior character other than an apostrophe or hyphen. Word text keeps its
// original case.
std::vector<Token> tokenize(std::string_view cleaned, const EmoticonSet& emoticons);

std::string to_lower(std::string_view s);

// Keyword substitution with spell correction. Non-word tokens pass through.
// A word is lowercased; if it is a lexicon member it becomes the set's
// keyword; else its spell correction replaces it, mapped to a keyword when the
// correction is a member.
Token correct_token(const Token& token, const FeatureLexicon& lexicon, SpellCorrector& speller);

struct CleanComment {
  std::vector<Token> tokens;  // never empty
  std::int64_t votes = 0;
  int source_rating = 0;
};

// Shared, read-only text resources plus the (thread-safe) spell memo.
struct TextPipeline {
  const FeatureLexicon& lexicon;
  const EmoticonSet& emoticons;
  SpellCorrector& speller;
};

// retain_useful_chars -> tokenize -> correct_token. Absent when no token
// survives cleaning.
std::optional<CleanComment> preprocess_comment(const ReviewRecord& record,
                                               const TextPipeline& pipeline);

}  // namespace featrate
