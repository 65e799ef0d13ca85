#include "featrate/report.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace featrate {

namespace {

using nlohmann::json;

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

std::string format_fixed3(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", value);
  return buf;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_frequency(std::ostream& out, const FrequencyReport& report, OutputFormat format) {
  if (format == OutputFormat::json) {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"token", r.token}, {"count", r.count}, {"fraction", r.fraction}});
    }
    json doc = {{"review_count", report.review_count},
                {"min_fraction", report.min_fraction},
                {"rows", std::move(rows)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "token,count,fraction\n";
  for (const auto& r : report.rows) {
    char frac[64];
    std::snprintf(frac, sizeof frac, "%.6f", r.fraction);
    out << csv_escape(r.token) << ',' << r.count << ',' << frac << '\n';
  }
}

void write_ratings(std::ostream& out, const CorpusRatings& ratings, OutputFormat format) {
  if (format == OutputFormat::json) {
    json doc = json::object();
    for (const auto& [product, pr] : ratings) {
      json features = json::object();
      for (const auto& [feature, r] : pr.ratings) {
        features[feature] = {{"final", round3(r.final_rating)},
                             {"cumulative", r.cumulative},
                             {"mention_count", r.mention_count},
                             {"weight_total", r.weight_total}};
      }
      doc[product] = std::move(features);
    }
    out << doc.dump(2) << '\n';
    return;
  }
  out << "product,feature,final,mention_count,weight_total\n";
  for (const auto& [product, pr] : ratings) {
    for (const auto& [feature, r] : pr.ratings) {
      out << csv_escape(product) << ',' << feature << ',' << format_fixed3(r.final_rating) << ','
          << r.mention_count << ',' << r.weight_total << '\n';
    }
  }
}

void write_ranking(std::ostream& out, std::span<const ProductRank> ranking, OutputFormat format) {
  if (format == OutputFormat::json) {
    json rows = json::array();
    std::size_t pos = 0;
    for (const auto& r : ranking) {
      rows.push_back({{"rank", ++pos},
                      {"product", r.product_name},
                      {"best_feature_count", r.best_feature_count},
                      {"tiebreak_votes", r.tiebreak_votes},
                      {"best_features", r.best_features}});
    }
    out << rows.dump(2) << '\n';
    return;
  }
  out << "rank,product,best_feature_count,tiebreak_votes\n";
  std::size_t pos = 0;
  for (const auto& r : ranking) {
    out << ++pos << ',' << csv_escape(r.product_name) << ',' << r.best_feature_count << ','
        << r.tiebreak_votes << '\n';
  }
}

void write_recommendations(std::ostream& out, std::span<const Recommendation> recs,
                           OutputFormat format) {
  if (format == OutputFormat::json) {
    json rows = json::array();
    for (const auto& r : recs) {
      rows.push_back({{"feature", r.feature}, {"product", r.product_name}, {"rating", round3(r.rating)}});
    }
    out << rows.dump(2) << '\n';
    return;
  }
  out << "feature,product,rating\n";
  for (const auto& r : recs) {
    out << r.feature << ',' << csv_escape(r.product_name) << ',' << format_fixed3(r.rating) << '\n';
  }
}

void write_eval_json(std::ostream& out, const EvalReport& report) {
  json confusion = json::array();
  for (const auto& row : report.confusion) confusion.push_back(row);
  json doc = {{"n", report.n},
              {"mse", report.mse},
              {"rmse", report.rmse},
              {"mae", report.mae},
              {"exact_accuracy", report.exact_accuracy},
              {"within_one_accuracy", report.within_one_accuracy},
              {"confusion", std::move(confusion)}};
  out << doc.dump(2) << '\n';
}

void write_eval_text(std::ostream& out, const EvalReport& report) {
  char line[160];
  out << "Error metrics (n = " << report.n << ")\n";
  std::snprintf(line, sizeof line, "  %-8s| %-8s| %-8s\n", "MSE", "RMSE", "MAE");
  out << line;
  std::snprintf(line, sizeof line, "  %-8.3f| %-8.3f| %-8.3f\n", report.mse, report.rmse,
                report.mae);
  out << line << '\n';

  out << "Confusion matrix (rows: actual stars, columns: predicted stars)\n";
  std::snprintf(line, sizeof line, "  %-8s", "");
  out << line;
  for (int p = 1; p <= 5; ++p) {
    std::snprintf(line, sizeof line, "%8d", p);
    out << line;
  }
  out << '\n';
  for (int a = 1; a <= 5; ++a) {
    std::snprintf(line, sizeof line, "  %-8d", a);
    out << line;
    for (int p = 1; p <= 5; ++p) {
      std::snprintf(line, sizeof line, "%8zu", report.confusion[a - 1][p - 1]);
      out << line;
    }
    out << '\n';
  }
  out << '\n';
  std::snprintf(line, sizeof line, "Exact accuracy:      %.1f%% (%zu/%zu)\n",
                100.0 * report.exact_accuracy, report.exact_count(), report.n);
  out << line;
  std::snprintf(line, sizeof line, "Within-one accuracy: %.1f%% (%zu/%zu)\n",
                100.0 * report.within_one_accuracy, report.within_one_count(), report.n);
  out << line;
}

}  // namespace featrate
