#pragma once

// Minimal RFC-4180 reader/writer plus UTF-8 sanitation used by every
// on-disk artifact of the pipeline.

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace tweetsent::csv {

using Row = std::vector<std::string>;

struct RowError {
  std::size_t line = 0;  // 1-based physical line where the record started
  std::string message;
};

/// Streaming record reader. Quoted fields may span lines; "" escapes a quote.
/// A malformed record (stray quote inside an unquoted field, text after a
/// closing quote, unterminated quote at EOF) is reported through `error()`
/// and `next()` still advances past it.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  /// Returns false at end of input. On a malformed record returns true,
  /// leaves `row` holding whatever was parsed and sets `error()`.
  bool next(Row& row);

  const std::optional<RowError>& error() const { return error_; }
  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
  std::optional<RowError> error_;
};

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string escape(std::string_view field);

void write_row(std::ostream& out, const Row& row);

/// Replaces invalid UTF-8 sequences with U+FFFD. Returns the number of
/// replacements made.
std::size_t sanitize_utf8(std::string& text);

}  // namespace tweetsent::csv
