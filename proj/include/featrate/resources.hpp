#pragma once

#include <filesystem>

#include "featrate/lexicon.hpp"
#include "featrate/preprocess.hpp"
#include "featrate/sentiment.hpp"
#include "featrate/spell.hpp"

namespace featrate {

// $FEATRATE_DATA_DIR when set, else the data/ directory of the source tree.
std::filesystem::path data_dir();

struct ResourcePaths {
  std::filesystem::path feature_lexicon;
  std::filesystem::path emoticons;
  std::filesystem::path spell_dictionary;
  std::filesystem::path valences;
  std::filesystem::path boosters;
  std::filesystem::path negators;

  // The bundled file names under `dir`.
  static ResourcePaths bundled(const std::filesystem::path& dir = data_dir());
};

// All lexicons and dictionaries a rating run reads. Immutable after load.
struct Resources {
  FeatureLexicon lexicon;
  EmoticonSet emoticons;
  SpellDictionary dictionary;
  SentimentLexicon sentiment;

  static Resources load(const ResourcePaths& paths);
};

}  // namespace featrate
