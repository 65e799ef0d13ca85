#include "featrate/spell.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <vector>

#include "featrate/csv.hpp"

namespace featrate {

namespace {

constexpr std::string_view kAlphabet = "abcdefghijklmnopqrstuvwxyz";
constexpr std::size_t kMinCorrectableLength = 3;

// Calls visit(candidate) for every string one edit away from `word`.
// Candidates may repeat.
template <typename Visit>
void for_each_edit(std::string_view word, Visit&& visit) {
  std::string buf;
  const std::size_t n = word.size();
  buf.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {  // deletions
    buf.assign(word.substr(0, i)).append(word.substr(i + 1));
    visit(buf);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {  // transpositions
    buf.assign(word);
    std::swap(buf[i], buf[i + 1]);
    visit(buf);
  }
  for (std::size_t i = 0; i < n; ++i) {  // substitutions
    buf.assign(word);
    for (char c : kAlphabet) {
      buf[i] = c;
      visit(buf);
    }
  }
  for (std::size_t i = 0; i <= n; ++i) {  // insertions
    buf.assign(word.substr(0, i)).push_back(' ');
    buf.append(word.substr(i));
    for (char c : kAlphabet) {
      buf[i] = c;
      visit(buf);
    }
  }
}

struct Best {
  bool found = false;
  std::uint64_t frequency = 0;
  std::string value;

  void offer(const std::string& candidate, std::uint64_t freq) {
    if (!found || freq > frequency || (freq == frequency && candidate < value)) {
      value = candidate;
      frequency = freq;
      found = true;
    }
  }
};

std::uint64_t fnv1a(std::string_view s, std::uint64_t h) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

SpellDictionary SpellDictionary::parse(std::istream& in, std::string_view source) {
  SpellDictionary dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto space = body.find_first_of(" \t");
    if (space == std::string_view::npos) {
      throw SpellError(std::string(source) + ":" + std::to_string(line_no) +
                       ": expected \"word count\"");
    }
    const auto word = body.substr(0, space);
    const auto count_text = trim(body.substr(space + 1));
    std::uint64_t count = 0;
    const auto [end, ec] =
        std::from_chars(count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc{} || end != count_text.data() + count_text.size() || count == 0) {
      throw SpellError(std::string(source) + ":" + std::to_string(line_no) +
                       ": frequency must be a positive integer");
    }
    dict.add(std::string(word), count);
  }
  return dict;
}

void SpellDictionary::add(std::string word, std::uint64_t frequency) {
  if (frequency == 0) throw SpellError("dictionary frequency must be positive: " + word);
  max_length_ = std::max(max_length_, word.size());
  entries_.insert_or_assign(std::move(word), frequency);
}

std::optional<std::uint64_t> SpellDictionary::frequency(std::string_view word) const {
  const auto it = entries_.find(word);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::uint64_t SpellDictionary::fingerprint() const {
  // Order-independent so it does not depend on hash table iteration order.
  std::uint64_t sum = entries_.size();
  for (const auto& [word, freq] : entries_) {
    sum += fnv1a(word, 1469598103934665603ULL) * 31 + freq;
  }
  return sum;
}

SpellDictionary load_spell_dictionary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SpellError("cannot read spell dictionary: " + path.string());
  return SpellDictionary::parse(in, path.string());
}

std::string spell_correct(std::string_view word, const SpellDictionary& dict) {
  if (word.size() < kMinCorrectableLength || dict.contains(word)) return std::string(word);

  const std::size_t max_len = dict.max_word_length();
  Best best;
  auto consider = [&](const std::string& candidate) {
    if (candidate.size() > max_len) return;
    if (const auto f = dict.frequency(candidate)) best.offer(candidate, *f);
  };

  for_each_edit(word, consider);
  if (best.found) return best.value;

  std::vector<std::string> first_ring;
  for_each_edit(word, [&](const std::string& e) {
    if (e.size() <= max_len + 1) first_ring.push_back(e);
  });
  std::sort(first_ring.begin(), first_ring.end());
  first_ring.erase(std::unique(first_ring.begin(), first_ring.end()), first_ring.end());
  for (const auto& e : first_ring) for_each_edit(e, consider);
  if (best.found) return best.value;

  return std::string(word);
}

SpellCorrector::Shard& SpellCorrector::shard_for(std::string_view word) {
  return shards_[StringHash{}(word) % kShards];
}

std::string SpellCorrector::correct(std::string_view word) {
  Shard& shard = shard_for(word);
  {
    std::lock_guard lock(shard.mu);
    if (const auto it = shard.memo.find(word); it != shard.memo.end()) return it->second;
  }
  // Computed outside the lock; concurrent misses on one word compute the
  // same deterministic value.
  std::string corrected = spell_correct(word, dict_);
  std::lock_guard lock(shard.mu);
  shard.memo.try_emplace(std::string(word), corrected);
  return corrected;
}

std::size_t SpellCorrector::cache_size() const {
  std::size_t total = 0;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mu);
    total += shard.memo.size();
  }
  return total;
}

void SpellCorrector::save_cache(std::ostream& out) const {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& shard : shards_) {
    std::lock_guard lock(shard.mu);
    rows.insert(rows.end(), shard.memo.begin(), shard.memo.end());
  }
  std::sort(rows.begin(), rows.end());

  // The header ties the memo to the dictionary it was computed against.
  out << "#featrate-spell-cache " << dict_.fingerprint() << '\n';
  for (const auto& [word, fix] : rows) out << word << '\t' << fix << '\n';
}

void SpellCorrector::load_cache(std::istream& in) {
  const std::string expected = "#featrate-spell-cache " + std::to_string(dict_.fingerprint());

  std::string line;
  if (!std::getline(in, line)) return;
  if (trim(line) != expected) return;  // built against another dictionary
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) continue;
    std::string word = line.substr(0, tab);
    std::string fix = line.substr(tab + 1);
    if (!fix.empty() && fix.back() == '\r') fix.pop_back();
    Shard& shard = shard_for(word);
    std::lock_guard lock(shard.mu);
    shard.memo.insert_or_assign(std::move(word), std::move(fix));
  }
}

}  // namespace featrate
