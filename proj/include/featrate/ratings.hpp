#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "featrate/ingest.hpp"
#include "featrate/preprocess.hpp"
#include "featrate/segment.hpp"
#include "featrate/sentiment.hpp"

namespace featrate {

// A relevant sentence reduced to what aggregation needs.
struct ScoredSentence {
  std::vector<std::string> features;  // unique keywords
  int stars = 3;                      // 1..5
  std::int64_t votes = 0;             // review votes, before the self-vote
};

// Running totals for one feature. Each contributing sentence adds
// stars * (votes + 1) to `cumulative` and votes + 1 to `weight_total`.
struct FeatureTotals {
  std::int64_t cumulative = 0;
  std::int64_t weight_total = 0;
  std::int64_t mention_count = 0;
};

using FeatureAccumulation = std::map<std::string, FeatureTotals, std::less<>>;

void accumulate_into(FeatureAccumulation& acc, const ScoredSentence& sentence);
FeatureAccumulation accumulate(std::span<const ScoredSentence> sentences);

struct FeatureRating {
  std::string feature;
  std::int64_t cumulative = 0;
  std::int64_t weight_total = 0;
  std::int64_t mention_count = 0;
  double final_rating = 0.0;  // cumulative / weight_total, unrounded
};

// Vote-weighted mean per feature, ordered by feature. Throws
// std::logic_error on a zero weight, which accumulate never produces.
std::vector<FeatureRating> finalize(const FeatureAccumulation& acc);

struct ProductRatings {
  std::string product_name;
  std::map<std::string, FeatureRating, std::less<>> ratings;  // rated features only
  std::int64_t total_votes = 0;  // raw votes over all the product's reviews
};

// Everything needed to turn review text into sentence ratings.
struct RatingPipeline {
  TextPipeline text;
  const SentimentLexicon& sentiment;
  HeuristicConfig heuristics{};
  SentenceSplit split = SentenceSplit::lenient;
};

// Scored relevant sentences of one review, in order.
std::vector<ScoredSentence> score_review(const ReviewRecord& record, const RatingPipeline& pipeline);

ProductRatings rate_product(std::string_view product_name, std::span<const ReviewRecord> records,
                            const RatingPipeline& pipeline);

using CorpusRatings = std::map<std::string, ProductRatings, std::less<>>;

// Products are rated independently on `workers` threads; the result does not
// depend on the worker count.
CorpusRatings rate_corpus(const Corpus& corpus, const RatingPipeline& pipeline,
                          unsigned workers = 1);

}  // namespace featrate
