#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace featrate {

// Minimal RFC 4180 reader: comma separated, double-quote quoting with ""
// escapes, quoted fields may span lines, CRLF or LF line endings.
class CsvReader {
 public:
  explicit CsvReader(std::istream& in) : in_(in) {}

  // Reads the next record into `fields`. Returns false at end of input.
  bool next(std::vector<std::string>& fields);

  // 1-based physical line on which the last returned record started.
  std::size_t record_line() const { return record_line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 1;
  std::size_t record_line_ = 0;
};

// Replaces every invalid UTF-8 sequence with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

// Trims ASCII whitespace from both ends.
std::string_view trim(std::string_view s);

}  // namespace featrate
