#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "featrate/ingest.hpp"
#include "featrate/ratings.hpp"

namespace featrate {

class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProductRank {
  std::string product_name;
  std::size_t best_feature_count = 0;
  std::int64_t tiebreak_votes = 0;
  std::vector<std::string> best_features;  // sorted
};

// A product is best on a feature when its final rating equals the maximum
// over all products rated on that feature; ties all count. Ordered by
// best_feature_count desc, tiebreak_votes desc, product_name asc. Products
// with no rated feature are still listed, with a count of zero.
std::vector<ProductRank> rank_products(const CorpusRatings& all);

struct Recommendation {
  std::string feature;
  std::string product_name;
  double rating = 0.0;
};

// Highest-ranked product among those tied at the feature's maximum rating.
// Throws NotFoundError when no product is rated on the feature.
Recommendation recommend(std::string_view feature, const CorpusRatings& all,
                         std::span<const ProductRank> ranking);

// One recommendation per feature rated anywhere, ordered by feature.
std::vector<Recommendation> recommend_all(const CorpusRatings& all,
                                          std::span<const ProductRank> ranking);

enum class GroundTruthWeights { votes, votes_plus_one };

// Vote-weighted mean of customer star ratings. With GroundTruthWeights::votes
// and no votes at all, every review weighs the same. Throws NotFoundError on
// an empty list.
double ground_truth(std::span<const ReviewRecord> records,
                    GroundTruthWeights weights = GroundTruthWeights::votes_plus_one);

// Round half up, clamped to 1..5.
int to_star_class(double rating);

struct EvalReport {
  std::size_t n = 0;
  double mse = 0.0;
  double rmse = 0.0;
  double mae = 0.0;
  // confusion[actual - 1][predicted - 1]
  std::array<std::array<std::size_t, 5>, 5> confusion{};
  double exact_accuracy = 0.0;
  double within_one_accuracy = 0.0;

  std::size_t exact_count() const;
  std::size_t within_one_count() const;
};

struct EvalPair {
  double predicted = 0.0;
  double actual = 0.0;
};

EvalReport evaluate_pairs(std::span<const EvalPair> pairs);

// Compares each product's "phone" rating with its ground truth. Products
// without a phone rating are left out.
EvalReport evaluate_phone_feature(const Corpus& corpus, const CorpusRatings& all,
                                  GroundTruthWeights weights = GroundTruthWeights::votes_plus_one,
                                  std::string_view feature = "phone");

}  // namespace featrate
