#include "featrate/ratings.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace featrate {

void accumulate_into(FeatureAccumulation& acc, const ScoredSentence& sentence) {
  const std::int64_t weight = sentence.votes + 1;
  for (const auto& feature : sentence.features) {
    auto& totals = acc[feature];
    totals.cumulative += sentence.stars * weight;
    totals.weight_total += weight;
    ++totals.mention_count;
  }
}

FeatureAccumulation accumulate(std::span<const ScoredSentence> sentences) {
  FeatureAccumulation acc;
  for (const auto& s : sentences) accumulate_into(acc, s);
  return acc;
}

std::vector<FeatureRating> finalize(const FeatureAccumulation& acc) {
  std::vector<FeatureRating> out;
  out.reserve(acc.size());
  for (const auto& [feature, totals] : acc) {
    if (totals.weight_total <= 0) {
      throw std::logic_error("feature \"" + feature + "\" has no accumulated weight");
    }
    FeatureRating r;
    r.feature = feature;
    r.cumulative = totals.cumulative;
    r.weight_total = totals.weight_total;
    r.mention_count = totals.mention_count;
    r.final_rating =
        static_cast<double>(totals.cumulative) / static_cast<double>(totals.weight_total);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ScoredSentence> score_review(const ReviewRecord& record,
                                         const RatingPipeline& pipeline) {
  std::vector<ScoredSentence> out;
  const auto comment = preprocess_comment(record, pipeline.text);
  if (!comment) return out;
  auto sentences =
      relevant_sentences(split_sentences(*comment, pipeline.split), pipeline.text.lexicon);
  out.reserve(sentences.size());
  for (auto& s : sentences) {
    const auto score = score_sentence(s, pipeline.sentiment, pipeline.heuristics);
    out.push_back({std::move(s.features), score.stars, s.votes});
  }
  return out;
}

ProductRatings rate_product(std::string_view product_name, std::span<const ReviewRecord> records,
                            const RatingPipeline& pipeline) {
  ProductRatings result;
  result.product_name = std::string(product_name);
  FeatureAccumulation acc;
  for (const auto& rec : records) {
    result.total_votes += rec.review_votes;
    for (const auto& s : score_review(rec, pipeline)) accumulate_into(acc, s);
  }
  for (auto& r : finalize(acc)) {
    auto key = r.feature;
    result.ratings.emplace(std::move(key), std::move(r));
  }
  return result;
}

CorpusRatings rate_corpus(const Corpus& corpus, const RatingPipeline& pipeline,
                          unsigned workers) {
  pipeline.heuristics.validate();
  std::vector<const Corpus::ProductMap::value_type*> jobs;
  jobs.reserve(corpus.product_count());
  for (const auto& entry : corpus.products()) jobs.push_back(&entry);

  std::vector<ProductRatings> results(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&] {
    try {
      for (std::size_t i = next++; i < jobs.size(); i = next++) {
        results[i] = rate_product(jobs[i]->first, jobs[i]->second, pipeline);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      next = jobs.size();
    }
  };

  const unsigned n = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(jobs.size())));
  if (n <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  CorpusRatings out;
  for (auto& r : results) {
    auto key = r.product_name;
    out.emplace(std::move(key), std::move(r));
  }
  return out;
}

}  // namespace featrate
