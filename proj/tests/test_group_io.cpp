#include "doctest.h"
#include "psl2mu/catalog.hpp"
#include "psl2mu/errors.hpp"
#include "psl2mu/group_io.hpp"

using namespace psl2mu;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_group(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("reads generators with comments and blank lines") {
  const auto g = parse_group("# A5\n\ndegree 5\n(0 1 2 3 4)  # five-cycle\n\n(0 1 2)\n");
  CHECK(g.degree() == 5);
  CHECK(g.order() == 60);
  CHECK(g.generators().size() == 2);
}

TEST_CASE("identity and trivial groups") {
  CHECK(parse_group("degree 3\n").order() == 1);
  CHECK(parse_group("degree 3\n()\n").order() == 1);
  CHECK(parse_group("degree 4\n(0)(1 2)\n").order() == 2);
}

TEST_CASE("malformed input reports the line") {
  CHECK(error_line("degree 3\n(0 1\n") == 2);
  CHECK(error_line("degree 3\n(0 1)\n(0 5)\n") == 3);
  CHECK(error_line("degree 3\n(0 1 0)\n") == 2);
  CHECK(error_line("# header\ndegre 3\n") == 2);
  CHECK(error_line("degree x\n") == 1);
  CHECK(error_line("degree 0\n") == 1);
  CHECK(error_line("degree 3\n0 1\n") == 2);
  CHECK(error_line("degree 3\n(0 -1)\n") == 2);
  CHECK(error_line("\n# nothing\n") == 2);
  CHECK_THROWS_AS(load_group("/nonexistent/group.txt"), ParseError);
}

TEST_CASE("write round trip") {
  for (const auto& entry : builtin_catalog()) {
    const auto text = write_group(entry.group);
    const auto back = parse_group(text);
    CHECK(back.order() == entry.group.order());
    CHECK(back.generators() == entry.group.generators());
  }
}

TEST_CASE("cap is applied") {
  const auto g = parse_group("degree 6\n(0 1 2 3 4 5)\n(0 1)\n", 100);
  CHECK(g.order() == 720);
  CHECK_THROWS_AS(g.elements(), CapExceeded);
}
