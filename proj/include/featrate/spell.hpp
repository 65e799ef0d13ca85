#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "featrate/string_hash.hpp"

namespace featrate {

class SpellError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lowercase word -> corpus frequency. All frequencies are positive.
class SpellDictionary {
 public:
  SpellDictionary() = default;

  // Lines of "word count"; blank lines and '#' comments skipped.
  static SpellDictionary parse(std::istream& in, std::string_view source = "<stream>");

  void add(std::string word, std::uint64_t frequency);

  std::optional<std::uint64_t> frequency(std::string_view word) const;
  bool contains(std::string_view word) const { return entries_.contains(word); }
  std::size_t size() const { return entries_.size(); }
  std::size_t max_word_length() const { return max_length_; }
  std::uint64_t fingerprint() const;

 private:
  StringMap<std::uint64_t> entries_;
  std::size_t max_length_ = 0;
};

SpellDictionary load_spell_dictionary(const std::filesystem::path& path);

// Frequency-ranked edit search. Returns `word` unchanged when it is in the
// dictionary or shorter than 3 characters; otherwise the most frequent
// dictionary word one edit away, else two edits away, else `word`. Edits are
// single-character deletion, adjacent transposition, substitution and
// insertion over a-z. Frequency ties go to the lexicographically smaller word.
std::string spell_correct(std::string_view word, const SpellDictionary& dict);

// Memoizing wrapper around spell_correct, safe for concurrent use.
class SpellCorrector {
 public:
  explicit SpellCorrector(const SpellDictionary& dict) : dict_(dict) {}
  SpellCorrector(const SpellCorrector&) = delete;
  SpellCorrector& operator=(const SpellCorrector&) = delete;

  std::string correct(std::string_view word);

  const SpellDictionary& dictionary() const { return dict_; }
  std::size_t cache_size() const;

  // Persisted memo format: "word<TAB>correction" per line, sorted by word.
  void save_cache(std::ostream& out) const;
  void load_cache(std::istream& in);

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mu;
    StringMap<std::string> memo;
  };

  Shard& shard_for(std::string_view word);

  const SpellDictionary& dict_;
  std::array<Shard, kShards> shards_;
};

}  // namespace featrate
