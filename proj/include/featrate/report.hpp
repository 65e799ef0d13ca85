#pragma once

#include <ostream>
#include <span>
#include <string>

#include "featrate/lexicon.hpp"
#include "featrate/rankeval.hpp"
#include "featrate/ratings.hpp"

namespace featrate {

enum class OutputFormat { csv, json };

// Ratings and scores are written with three decimals.
std::string format_fixed3(double value);

void write_frequency(std::ostream& out, const FrequencyReport& report, OutputFormat format);

// CSV columns: product,feature,final,mention_count,weight_total; rows sorted
// by (product, feature). JSON: product -> feature -> fields.
void write_ratings(std::ostream& out, const CorpusRatings& ratings, OutputFormat format);

void write_ranking(std::ostream& out, std::span<const ProductRank> ranking, OutputFormat format);

void write_recommendations(std::ostream& out, std::span<const Recommendation> recs,
                           OutputFormat format);

void write_eval_json(std::ostream& out, const EvalReport& report);

// Error metrics table followed by the 5x5 confusion matrix.
void write_eval_text(std::ostream& out, const EvalReport& report);

// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

}  // namespace featrate
