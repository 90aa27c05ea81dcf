#include "tweetsent/csv.hpp"

#include <cstdint>

namespace tweetsent::csv {

bool Reader::next(Row& row) {
  row.clear();
  error_.reset();

  int c = in_.get();
  if (c == std::char_traits<char>::eof()) return false;

  ++line_;
  const std::size_t start_line = line_;
  std::string field;
  bool quoted = false;       // currently inside a quoted section
  bool was_quoted = false;   // field started with a quote
  bool after_close = false;  // closing quote seen, expecting , or EOL

  auto set_error = [&](const char* msg) {
    if (!error_) error_ = RowError{start_line, msg};
  };

  for (;; c = in_.get()) {
    if (c == std::char_traits<char>::eof()) {
      if (quoted) set_error("unterminated quoted field");
      row.push_back(std::move(field));
      return true;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in_.peek() == '"') {
          in_.get();
          field.push_back('"');
        } else {
          quoted = false;
          after_close = true;
        }
      } else {
        if (ch == '\n') ++line_;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
      was_quoted = after_close = false;
      continue;
    }
    if (ch == '\r' || ch == '\n') {
      if (ch == '\r' && in_.peek() == '\n') in_.get();
      row.push_back(std::move(field));
      return true;
    }
    if (after_close) {
      set_error("unexpected character after closing quote");
      field.push_back(ch);
      continue;
    }
    if (ch == '"') {
      if (field.empty() && !was_quoted) {
        quoted = was_quoted = true;
      } else {
        set_error("quote inside unquoted field");
        field.push_back(ch);
      }
      continue;
    }
    field.push_back(ch);
  }
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char ch : field) {
    if (ch == '"') out.push_back('"');
    out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out.put(',');
    out << escape(row[i]);
  }
  out.put('\n');
}

std::size_t sanitize_utf8(std::string& text) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  std::size_t replaced = 0;
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  std::size_t i = 0;
  bool dirty = false;

  while (i < n) {
    const unsigned char b = s[i];
    std::size_t len = 0;
    std::uint32_t cp = 0;
    if (b < 0x80) {
      len = 1;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    }

    bool ok = len != 0 && i + len <= n;
    for (std::size_t k = 1; ok && k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) ok = false;
      else cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    if (ok && len > 1) {
      // overlong encodings, surrogates, out of range
      static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
      if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ok = false;
      }
    }

    if (ok) {
      if (dirty) out.append(text, i, len);
      i += len;
      continue;
    }
    if (!dirty) {
      out.assign(text, 0, i);
      dirty = true;
    }
    out.append(kReplacement);
    ++replaced;
    ++i;
    // skip continuation bytes belonging to the broken sequence
    while (i < n && (s[i] & 0xC0) == 0x80) ++i;
  }
  if (dirty) text = std::move(out);
  return replaced;
}

}  // namespace tweetsent::csv
