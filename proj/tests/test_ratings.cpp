#include <random>

#include "doctest.h"
#include "featrate/ingest.hpp"
#include "featrate/ratings.hpp"
#include "test_support.hpp"

using namespace featrate;

namespace {

struct Fixture {
  const Resources& res = testing::bundled();
  SpellCorrector speller{res.dictionary};
  RatingPipeline pipeline{TextPipeline{res.lexicon, res.emoticons, speller}, res.sentiment};
};

ReviewRecord review(std::string text, std::int64_t votes = 0, int rating = 4) {
  return {"P", std::nullopt, std::nullopt, rating, std::move(text), votes};
}

const FeatureTotals& totals(const FeatureAccumulation& acc, const std::string& f) {
  return acc.find(f)->second;
}

}  // namespace

TEST_CASE("accumulate weighs stars by votes plus one") {
  const std::vector<ScoredSentence> one = {{{"battery"}, 5, 2}};
  const auto a = accumulate(one);
  CHECK(totals(a, "battery").cumulative == 15);
  CHECK(totals(a, "battery").weight_total == 3);

  const std::vector<ScoredSentence> two = {{{"sound"}, 5, 2}, {{"sound"}, 3, 0}};
  const auto b = accumulate(two);
  CHECK(totals(b, "sound").cumulative == 18);
  CHECK(totals(b, "sound").weight_total == 4);
  CHECK(totals(b, "sound").mention_count == 2);
  const auto fin = finalize(b);
  REQUIRE(fin.size() == 1);
  CHECK(fin[0].final_rating == 4.5);

  const std::vector<ScoredSentence> multi = {{{"battery", "sound"}, 4, 0}};
  const auto c = accumulate(multi);
  CHECK(totals(c, "sound").cumulative == 4);
  CHECK(totals(c, "battery").cumulative == 4);
  CHECK(totals(c, "battery").weight_total == 1);
}

TEST_CASE("finalize examples") {
  FeatureAccumulation acc;
  acc["x"] = {5, 1, 1};
  acc["y"] = {3 * 17, 17, 4};
  const auto fin = finalize(acc);
  CHECK(fin[0].feature == "x");
  CHECK(fin[0].final_rating == 5.0);
  CHECK(fin[1].final_rating == 3.0);
  acc["z"] = {0, 0, 0};
  CHECK_THROWS_AS(finalize(acc), std::logic_error);
}

TEST_CASE("aggregation properties on random inputs") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> stars(1, 5), votes(0, 10), count(1, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScoredSentence> s;
    for (int n = count(rng); n > 0; --n) s.push_back({{"f"}, stars(rng), votes(rng)});
    const double base = finalize(accumulate(s))[0].final_rating;
    CHECK(base >= 1.0);
    CHECK(base <= 5.0);

    // Duplicating every sentence leaves the mean unchanged.
    auto doubled = s;
    doubled.insert(doubled.end(), s.begin(), s.end());
    CHECK(finalize(accumulate(doubled))[0].final_rating == doctest::Approx(base).epsilon(1e-12));

    // Extra votes on a sentence pull the mean toward its stars.
    auto boosted = s;
    boosted[0].votes += 5;
    const double moved = finalize(accumulate(boosted))[0].final_rating;
    if (boosted[0].stars > base) CHECK(moved >= base);
    if (boosted[0].stars < base) CHECK(moved <= base);

    // Without votes the result is the plain mean.
    auto flat = s;
    double sum = 0;
    for (auto& x : flat) {
      x.votes = 0;
      sum += x.stars;
    }
    CHECK(finalize(accumulate(flat))[0].final_rating ==
          doctest::Approx(sum / static_cast<double>(flat.size())).epsilon(1e-12));
  }
}

TEST_CASE("rate_product on single reviews") {
  Fixture fx;
  const std::vector<ReviewRecord> great = {review("Great battery.")};
  const auto r = rate_product("P", great, fx.pipeline);
  REQUIRE(r.ratings.size() == 1);
  CHECK(r.ratings.at("battery").final_rating == 5.0);

  const std::vector<ReviewRecord> none = {review("I love it."), review("123")};
  CHECK(rate_product("P", none, fx.pipeline).ratings.empty());
}

TEST_CASE("score_review respects the split mode") {
  Fixture fx;
  const auto r = review("Great battery!! Bad screen.", 2);
  const auto lenient = score_review(r, fx.pipeline);
  REQUIRE(lenient.size() == 2);
  CHECK(lenient[0].features == std::vector<std::string>{"battery"});
  CHECK(lenient[0].votes == 2);
  CHECK(lenient[1].features == std::vector<std::string>{"screen"});
  auto strict = fx.pipeline;
  strict.split = SentenceSplit::period_only;
  const auto s = score_review(r, strict);
  REQUIRE(s.size() == 1);
  CHECK(s[0].features == std::vector<std::string>{"battery", "screen"});
}

TEST_CASE("rate_corpus does not depend on the worker count") {
  Fixture fx;
  const auto loaded = load_csv(testing::fixture_path("pipeline_reviews.csv"));
  const auto one = rate_corpus(loaded.corpus, fx.pipeline, 1);
  const auto eight = rate_corpus(loaded.corpus, fx.pipeline, 8);
  REQUIRE(one.size() == 3);
  REQUIRE(one.size() == eight.size());
  for (const auto& [name, pr] : one) {
    const auto& other = eight.at(name);
    CHECK(pr.total_votes == other.total_votes);
    REQUIRE(pr.ratings.size() == other.ratings.size());
    for (const auto& [f, r] : pr.ratings) {
      CHECK(r.cumulative == other.ratings.at(f).cumulative);
      CHECK(r.weight_total == other.ratings.at(f).weight_total);
    }
  }
  CHECK(one.at("Nokia N9 - Black").total_votes == 6);
  CHECK(rate_corpus(Corpus{}, fx.pipeline, 4).empty());
}
