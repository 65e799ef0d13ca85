#include <sstream>

#include "doctest.h"
#include "featrate/report.hpp"

using namespace featrate;

namespace {

CorpusRatings sample() {
  CorpusRatings all;
  auto& pr = all["Acme Phone, Unlocked"];
  pr.product_name = "Acme Phone, Unlocked";
  pr.ratings["screen"] = {"screen", 14, 6, 2, 14.0 / 6.0};
  return all;
}

}  // namespace

TEST_CASE("fixed three-decimal formatting and csv escaping") {
  CHECK(format_fixed3(2.3333333) == "2.333");
  CHECK(format_fixed3(5.0) == "5.000");
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"x\"") == "\"say \"\"x\"\"\"");
}

TEST_CASE("ratings csv and json") {
  std::ostringstream csv;
  write_ratings(csv, sample(), OutputFormat::csv);
  CHECK(csv.str() ==
        "product,feature,final,mention_count,weight_total\n"
        "\"Acme Phone, Unlocked\",screen,2.333,2,6\n");
  std::ostringstream json;
  write_ratings(json, sample(), OutputFormat::json);
  CHECK(json.str().find("\"final\": 2.333") != std::string::npos);
  CHECK(json.str().find("\"cumulative\": 14") != std::string::npos);
}

TEST_CASE("ranking and recommendation csv") {
  std::vector<ProductRank> ranking = {{"A", 2, 10, {"a", "b"}}, {"B", 0, 0, {}}};
  std::ostringstream out;
  write_ranking(out, ranking, OutputFormat::csv);
  CHECK(out.str() == "rank,product,best_feature_count,tiebreak_votes\n1,A,2,10\n2,B,0,0\n");
  std::vector<Recommendation> recs = {{"music", "Nokia N9 - Black", 5.0}};
  std::ostringstream rec;
  write_recommendations(rec, recs, OutputFormat::csv);
  CHECK(rec.str() == "feature,product,rating\nmusic,Nokia N9 - Black,5.000\n");
}

TEST_CASE("evaluation text report") {
  EvalReport r;
  r.n = 2;
  r.mse = 0.18;
  r.rmse = 0.424;
  r.mae = 0.3;
  r.confusion[3][2] = 1;
  r.confusion[4][4] = 1;
  r.exact_accuracy = 0.5;
  r.within_one_accuracy = 1.0;
  std::ostringstream out;
  write_eval_text(out, r);
  const auto s = out.str();
  CHECK(s.find("MSE") != std::string::npos);
  CHECK(s.find("0.180") != std::string::npos);
  CHECK(s.find("Exact accuracy:      50.0% (1/2)") != std::string::npos);
  CHECK(s.find("Within-one accuracy: 100.0% (2/2)") != std::string::npos);
}
