#include "featrate/rankeval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace featrate {

std::vector<ProductRank> rank_products(const CorpusRatings& all) {
  std::map<std::string_view, double, std::less<>> best_value;
  for (const auto& [name, pr] : all) {
    for (const auto& [feature, rating] : pr.ratings) {
      auto [it, inserted] = best_value.try_emplace(feature, rating.final_rating);
      if (!inserted) it->second = std::max(it->second, rating.final_rating);
    }
  }

  std::vector<ProductRank> ranks;
  ranks.reserve(all.size());
  for (const auto& [name, pr] : all) {
    ProductRank r;
    r.product_name = name;
    r.tiebreak_votes = pr.total_votes;
    for (const auto& [feature, rating] : pr.ratings) {
      if (rating.final_rating == best_value.find(feature)->second) {
        r.best_features.push_back(feature);
      }
    }
    r.best_feature_count = r.best_features.size();
    ranks.push_back(std::move(r));
  }
  std::sort(ranks.begin(), ranks.end(), [](const ProductRank& a, const ProductRank& b) {
    if (a.best_feature_count != b.best_feature_count) {
      return a.best_feature_count > b.best_feature_count;
    }
    if (a.tiebreak_votes != b.tiebreak_votes) return a.tiebreak_votes > b.tiebreak_votes;
    return a.product_name < b.product_name;
  });
  return ranks;
}

Recommendation recommend(std::string_view feature, const CorpusRatings& all,
                         std::span<const ProductRank> ranking) {
  bool found = false;
  double best = 0.0;
  for (const auto& [name, pr] : all) {
    const auto it = pr.ratings.find(feature);
    if (it == pr.ratings.end()) continue;
    best = found ? std::max(best, it->second.final_rating) : it->second.final_rating;
    found = true;
  }
  if (!found) throw NotFoundError("no product is rated on feature \"" + std::string(feature) + "\"");

  for (const auto& rank : ranking) {
    const auto p = all.find(rank.product_name);
    if (p == all.end()) continue;
    const auto it = p->second.ratings.find(feature);
    if (it != p->second.ratings.end() && it->second.final_rating == best) {
      return {std::string(feature), rank.product_name, best};
    }
  }
  // Ranking does not cover the winner; fall back to name order.
  for (const auto& [name, pr] : all) {
    const auto it = pr.ratings.find(feature);
    if (it != pr.ratings.end() && it->second.final_rating == best) {
      return {std::string(feature), name, best};
    }
  }
  throw std::logic_error("maximum rating vanished");
}

std::vector<Recommendation> recommend_all(const CorpusRatings& all,
                                          std::span<const ProductRank> ranking) {
  std::vector<std::string> features;
  for (const auto& [name, pr] : all) {
    for (const auto& [feature, rating] : pr.ratings) features.push_back(feature);
  }
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()), features.end());

  std::vector<Recommendation> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(recommend(f, all, ranking));
  return out;
}

double ground_truth(std::span<const ReviewRecord> records, GroundTruthWeights weights) {
  if (records.empty()) throw NotFoundError("ground truth needs at least one review");
  const std::int64_t self = weights == GroundTruthWeights::votes_plus_one ? 1 : 0;
  std::int64_t weighted = 0;
  std::int64_t total = 0;
  for (const auto& r : records) {
    weighted += r.overall_rating * (r.review_votes + self);
    total += r.review_votes + self;
  }
  if (total == 0) {
    for (const auto& r : records) weighted += r.overall_rating;
    total = static_cast<std::int64_t>(records.size());
  }
  return static_cast<double>(weighted) / static_cast<double>(total);
}

int to_star_class(double rating) {
  const double rounded = std::floor(rating + 0.5);
  return static_cast<int>(std::clamp(rounded, 1.0, 5.0));
}

std::size_t EvalReport::exact_count() const {
  std::size_t sum = 0;
  for (std::size_t i = 0; i < 5; ++i) sum += confusion[i][i];
  return sum;
}

std::size_t EvalReport::within_one_count() const {
  std::size_t sum = exact_count();
  for (std::size_t i = 0; i + 1 < 5; ++i) sum += confusion[i][i + 1] + confusion[i + 1][i];
  return sum;
}

EvalReport evaluate_pairs(std::span<const EvalPair> pairs) {
  EvalReport rep;
  rep.n = pairs.size();
  if (pairs.empty()) return rep;
  double sq = 0.0;
  double abs = 0.0;
  for (const auto& p : pairs) {
    const double err = p.predicted - p.actual;
    sq += err * err;
    abs += std::fabs(err);
    ++rep.confusion[to_star_class(p.actual) - 1][to_star_class(p.predicted) - 1];
  }
  const auto n = static_cast<double>(rep.n);
  rep.mse = sq / n;
  rep.rmse = std::sqrt(rep.mse);
  rep.mae = abs / n;
  rep.exact_accuracy = static_cast<double>(rep.exact_count()) / n;
  rep.within_one_accuracy = static_cast<double>(rep.within_one_count()) / n;
  // Power-mean inequality; a violation means the sums above are broken.
  if (rep.mae > rep.rmse * (1.0 + 1e-12)) throw std::logic_error("MAE exceeds RMSE");
  return rep;
}

EvalReport evaluate_phone_feature(const Corpus& corpus, const CorpusRatings& all,
                                  GroundTruthWeights weights, std::string_view feature) {
  std::vector<EvalPair> pairs;
  for (const auto& [name, records] : corpus.products()) {
    const auto p = all.find(name);
    if (p == all.end()) continue;
    const auto it = p->second.ratings.find(feature);
    if (it == p->second.ratings.end()) continue;
    pairs.push_back({it->second.final_rating, ground_truth(records, weights)});
  }
  return evaluate_pairs(pairs);
}

}  // namespace featrate
