#pragma once

#include <iosfwd>
#include <string>

#include "isemlab/semigroup.hpp"

namespace isemlab {

/// Table text format:
///   line 1:         n
///   lines 2..n+1:   n space-separated 1-based entries (row i = products i*1 .. i*n)
///   optional:       "labels: a b c ..."
/// Lines starting with '#' are comments. Throws ParseError (with the 1-based
/// line number), IndexOutOfRangeError or NotAssociativeError.
FiniteSemigroup parse_table(std::istream& in);
FiniteSemigroup parse_table_text(const std::string& text);
FiniteSemigroup read_table_file(const std::string& path);

/// Emits exactly the format accepted by parse_table; parse(emit(s)) == s.
std::string emit_table(const FiniteSemigroup& s);

}  // namespace isemlab
