#include "featrate/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "featrate/csv.hpp"

namespace featrate {

namespace {

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

// Integral values only; "4" and "4.0" are both accepted.
std::optional<std::int64_t> parse_integral(std::string_view text) {
  const auto value = parse_number(text);
  if (!value || std::floor(*value) != *value || std::fabs(*value) > 9.0e15) {
    return std::nullopt;
  }
  return static_cast<std::int64_t>(*value);
}

struct ColumnIndex {
  std::ptrdiff_t product = -1;
  std::ptrdiff_t brand = -1;
  std::ptrdiff_t price = -1;
  std::ptrdiff_t rating = -1;
  std::ptrdiff_t review = -1;
  std::ptrdiff_t votes = -1;
};

std::ptrdiff_t find_column(const std::vector<std::string>& header, const std::string& name,
                           bool required) {
  if (name.empty()) {
    if (required) throw IngestError("column mapping: required column name is empty");
    return -1;
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == name) return static_cast<std::ptrdiff_t>(i);
  }
  throw IngestError("missing column in header: \"" + name + "\"");
}

const std::string* cell(const std::vector<std::string>& row, std::ptrdiff_t index) {
  if (index < 0) return nullptr;
  return &row[static_cast<std::size_t>(index)];
}

}  // namespace

void Corpus::add(ReviewRecord record) {
  auto& bucket = products_[record.product_name];
  bucket.push_back(std::move(record));
  ++review_count_;
}

LoadResult parse_csv(std::istream& in, const ColumnMapping& columns) {
  CsvReader reader(in);
  std::vector<std::string> header;
  if (!reader.next(header)) throw IngestError("empty input: header row required");
  if (!header.empty() && header[0].starts_with("\xEF\xBB\xBF")) header[0].erase(0, 3);

  ColumnIndex idx;
  idx.product = find_column(header, columns.product, true);
  idx.brand = find_column(header, columns.brand, false);
  idx.price = find_column(header, columns.price, false);
  idx.rating = find_column(header, columns.rating, true);
  idx.review = find_column(header, columns.review, true);
  idx.votes = find_column(header, columns.votes, false);

  LoadResult result;
  LoadReport& report = result.report;
  std::vector<std::string> row;
  while (reader.next(row)) {
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    ++report.data_rows;
    if (row.size() != header.size()) {
      ++report.dropped_malformed;
      continue;
    }
    for (auto& field : row) field = sanitize_utf8(field);

    ReviewRecord rec;
    rec.product_name = std::string(trim(*cell(row, idx.product)));
    if (rec.product_name.empty()) {
      ++report.dropped_malformed;
      continue;
    }
    rec.review_text = *cell(row, idx.review);
    if (trim(rec.review_text).empty()) {
      ++report.dropped_empty_text;
      continue;
    }
    const auto rating = parse_integral(*cell(row, idx.rating));
    if (!rating || *rating < 1 || *rating > 5) {
      ++report.dropped_bad_rating;
      continue;
    }
    rec.overall_rating = static_cast<int>(*rating);

    if (const auto* votes = cell(row, idx.votes); votes && !trim(*votes).empty()) {
      const auto v = parse_integral(*votes);
      if (!v || *v < 0) {
        ++report.dropped_malformed;
        continue;
      }
      rec.review_votes = *v;
    }
    if (const auto* brand = cell(row, idx.brand); brand && !trim(*brand).empty()) {
      rec.brand_name = std::string(trim(*brand));
    }
    // Price is informational; an unparsable cell simply leaves it unset.
    if (const auto* price = cell(row, idx.price)) rec.price = parse_number(*price);

    result.corpus.add(std::move(rec));
    ++report.kept;
  }
  return result;
}

LoadResult load_csv(const std::filesystem::path& path, const ColumnMapping& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot read input file: " + path.string());
  return parse_csv(in, columns);
}

CorpusStats corpus_stats(const Corpus& corpus) {
  CorpusStats stats;
  stats.product_count = corpus.product_count();
  for (const auto& [name, records] : corpus.products()) {
    stats.review_count += records.size();
    for (const auto& r : records) ++stats.vote_histogram[r.review_votes];
  }
  return stats;
}

}  // namespace featrate
