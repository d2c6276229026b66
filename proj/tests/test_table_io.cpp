#include "doctest.h"
#include "isemlab/samples.hpp"
#include "isemlab/table_io.hpp"

using namespace isemlab;

TEST_SUITE("table_io") {

TEST_CASE("parses the documented format with comments and labels") {
  const char* text =
      "# a band on four elements\n"
      "4\n"
      "1 3 3 1\n"
      "4 2 2 4\n"
      "# rows three and four repeat one and two\n"
      "1 3 3 1\n"
      "4 2 2 4\n"
      "labels: a b c d\n";
  FiniteSemigroup s = parse_table_text(text);
  CHECK(s.order() == 4);
  CHECK(s.table() == samples::band_b4().table());
  CHECK(s.label(0) == "a");
}

TEST_CASE("round-trips through emit") {
  for (const FiniteSemigroup& s :
       {samples::band_b4(), samples::brandt_b2(), samples::cyclic_group(5),
        samples::chain_semilattice(3)}) {
    CHECK(parse_table_text(emit_table(s)) == s);
  }
}

TEST_CASE("reports the offending line on malformed rows") {
  try {
    parse_table_text("2\n1 2\n1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("rejects out-of-range entries with the line number") {
  try {
    parse_table_text("2\n1 2\n2 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("rejects trailing garbage and empty input") {
  CHECK_THROWS_AS(parse_table_text("1\n1\nextra\n"), ParseError);
  CHECK_THROWS_AS(parse_table_text(""), ParseError);
  CHECK_THROWS_AS(parse_table_text("# only comments\n"), ParseError);
}

TEST_CASE("non-associative input surfaces the violation") {
  CHECK_THROWS_AS(parse_table_text("2\n2 2\n1 1\n"), NotAssociativeError);
}

}  // TEST_SUITE
