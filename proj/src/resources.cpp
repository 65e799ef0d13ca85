#include "featrate/resources.hpp"

#include <cstdlib>

#ifndef FEATRATE_DEFAULT_DATA_DIR
#define FEATRATE_DEFAULT_DATA_DIR "data"
#endif

namespace featrate {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("FEATRATE_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return FEATRATE_DEFAULT_DATA_DIR;
}

ResourcePaths ResourcePaths::bundled(const std::filesystem::path& dir) {
  ResourcePaths p;
  p.feature_lexicon = dir / "feature_lexicon.txt";
  p.emoticons = dir / "emoticons.txt";
  p.spell_dictionary = dir / "spell_dictionary.txt";
  p.valences = dir / "vader_lexicon.txt";
  p.boosters = dir / "boosters.txt";
  p.negators = dir / "negators.txt";
  return p;
}

Resources Resources::load(const ResourcePaths& paths) {
  Resources r;
  r.lexicon = load_lexicon(paths.feature_lexicon);
  r.emoticons = load_emoticons(paths.emoticons);
  r.dictionary = load_spell_dictionary(paths.spell_dictionary);
  r.sentiment = load_sentiment_lexicon(paths.valences, paths.boosters, paths.negators);
  return r;
}

}  // namespace featrate
