#include "isemlab/table_io.hpp"

#include <fstream>
#include <sstream>

namespace isemlab {

namespace {

struct LineReader {
  std::istream& in;
  int line_no = 0;

  // Next significant line (skips blanks and '#' comments).
  bool next(std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      size_t start = raw.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;
      if (raw[start] == '#') continue;
      out = raw;
      return true;
    }
    return false;
  }
};

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

int parse_int(const std::string& tok, int line_no) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

FiniteSemigroup parse_table(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty input");
  auto head = tokens_of(line);
  if (head.size() != 1)
    throw ParseError(reader.line_no, "first line must be the order alone");
  int n = parse_int(head[0], reader.line_no);
  if (n < 1) throw ParseError(reader.line_no, "order must be at least 1");

  std::vector<Element> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r) {
    if (!reader.next(line))
      throw ParseError(reader.line_no + 1, "expected row " + std::to_string(r + 1));
    auto toks = tokens_of(line);
    if (static_cast<int>(toks.size()) != n)
      throw ParseError(reader.line_no,
                       "row " + std::to_string(r + 1) + " has " +
                           std::to_string(toks.size()) + " entries, expected " +
                           std::to_string(n));
    for (auto& t : toks) {
      int v = parse_int(t, reader.line_no);
      if (v < 1 || v > n)
        throw ParseError(reader.line_no, "entry " + t + " out of range [1, " +
                                             std::to_string(n) + "]");
      table.push_back(v - 1);
    }
  }

  std::vector<std::string> labels;
  if (reader.next(line)) {
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0] != "labels:")
      throw ParseError(reader.line_no, "unexpected content after table");
    if (static_cast<int>(toks.size()) != n + 1)
      throw ParseError(reader.line_no, "expected " + std::to_string(n) +
                                           " labels");
    labels.assign(toks.begin() + 1, toks.end());
    if (reader.next(line))
      throw ParseError(reader.line_no, "unexpected content after labels");
  }

  return FiniteSemigroup::from_table(n, std::move(table), std::move(labels));
}

FiniteSemigroup parse_table_text(const std::string& text) {
  std::istringstream ss(text);
  return parse_table(ss);
}

FiniteSemigroup read_table_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  return parse_table(f);
}

std::string emit_table(const FiniteSemigroup& s) {
  std::ostringstream out;
  int n = s.order();
  out << n << '\n';
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y) out << ' ';
      out << s.product(x, y) + 1;
    }
    out << '\n';
  }
  if (s.has_labels()) {
    out << "labels:";
    for (const auto& l : s.labels()) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

}  // namespace isemlab
