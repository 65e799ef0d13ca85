#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "featrate/lexicon.hpp"
#include "featrate/preprocess.hpp"

namespace featrate {

struct Sentence {
  std::vector<Token> tokens;          // terminators excluded; never empty
  std::vector<std::string> features;  // sorted, unique feature keywords
  std::int64_t votes = 0;             // votes of the owning review
  // '!' marks attached to the sentence: those inside it plus those in the
  // terminator run that closes it.
  int exclamations = 0;
  // Last terminator of the closing run, or '\0' when the sentence was closed
  // by the end of the comment.
  char terminator = '\0';
};

enum class SentenceSplit {
  // Boundaries at "." only; an unterminated tail is discarded.
  period_only,
  // Boundaries at ".", "!" and "?"; end of comment closes the last sentence.
  lenient,
};

// Consecutive terminators never produce empty sentences.
std::vector<Sentence> split_sentences(const CleanComment& comment,
                                      SentenceSplit mode = SentenceSplit::lenient);

// Keeps the sentences containing at least one feature keyword and fills
// their `features` field.
std::vector<Sentence> relevant_sentences(std::vector<Sentence> sentences,
                                         const FeatureLexicon& lexicon);

}  // namespace featrate
