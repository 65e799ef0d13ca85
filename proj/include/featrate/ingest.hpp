#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace featrate {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ReviewRecord {
  std::string product_name;
  std::optional<std::string> brand_name;
  std::optional<double> price;
  int overall_rating = 0;
  std::string review_text;
  std::int64_t review_votes = 0;
};

// Header names for each field. An empty name for brand, price or votes
// means the column is absent from the file.
struct ColumnMapping {
  std::string product = "Product Name";
  std::string brand = "Brand Name";
  std::string price = "Price";
  std::string rating = "Rating";
  std::string review = "Reviews";
  std::string votes = "Review Votes";
};

// Reviews grouped by exact trimmed product name, in file order per product.
class Corpus {
 public:
  using ProductMap = std::map<std::string, std::vector<ReviewRecord>, std::less<>>;

  void add(ReviewRecord record);

  const ProductMap& products() const { return products_; }
  std::size_t product_count() const { return products_.size(); }
  std::size_t review_count() const { return review_count_; }
  bool empty() const { return review_count_ == 0; }

 private:
  ProductMap products_;
  std::size_t review_count_ = 0;
};

// Every data row lands in exactly one bucket:
// data_rows == kept + dropped_empty_text + dropped_bad_rating + dropped_malformed.
struct LoadReport {
  std::size_t data_rows = 0;
  std::size_t kept = 0;
  std::size_t dropped_empty_text = 0;
  std::size_t dropped_bad_rating = 0;
  std::size_t dropped_malformed = 0;

  std::size_t dropped() const {
    return dropped_empty_text + dropped_bad_rating + dropped_malformed;
  }
};

struct LoadResult {
  Corpus corpus;
  LoadReport report;
};

// Throws IngestError when the file cannot be read or a mapped column is
// missing from the header.
LoadResult load_csv(const std::filesystem::path& path, const ColumnMapping& columns = {});
LoadResult parse_csv(std::istream& in, const ColumnMapping& columns = {});

struct CorpusStats {
  std::size_t product_count = 0;
  std::size_t review_count = 0;
  std::map<std::int64_t, std::size_t> vote_histogram;  // votes -> reviews
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace featrate
