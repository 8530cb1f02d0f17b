#include <fstream>
#include <sstream>

#include "doctest.h"
#include "skewlat/io.hpp"
#include "skewlat/models.hpp"
#include "skewlat/verify.hpp"

using namespace skewlat;

namespace {

std::string golden_text(const std::string& file) {
  std::ifstream in(std::string(SKEWLAT_GOLDEN_DIR) + "/" + file, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("the m=1 model emits the golden file byte for byte") {
  const AlgebraFile file{"pfn1", build_pfn_algebra(1)};
  CHECK(emit_algebra_file(file) == golden_text("pfn1.skl"));
}

TEST_CASE("emission and parsing are mutually inverse") {
  const Corpus corpus = enumerate_instances({});
  int checked = 0;
  for (const Instance& inst : corpus.instances) {
    if (inst.alg.size > 16 && checked > 8) continue;  // keep the loop quick
    ++checked;
    const AlgebraFile file{inst.name, inst.alg};
    const std::string text = emit_algebra_file(file);
    const AlgebraFile back = parse_algebra_file(text);
    CHECK(back.name == file.name);
    CHECK(back.alg == file.alg);
    CHECK(emit_algebra_file(back) == text);
  }
  CHECK(checked > 8);
}

TEST_CASE("names are optional") {
  const AlgebraFile file{std::nullopt, chain_lattice(2)};
  const std::string text = emit_algebra_file(file);
  CHECK(text.find("name") == std::string::npos);
  const AlgebraFile back = parse_algebra_file(text);
  CHECK(!back.name.has_value());
  CHECK(back.alg == file.alg);
}

TEST_CASE("comments and odd whitespace are tolerated") {
  const AlgebraFile parsed = parse_algebra_file(
      "# a comment\nskl1   # trailing\n\n  size 2\nmeet\n 0 0\n0   1\njoin\n0 1\n1 1\n"
      "# more\nzero 0\ntop 1\n");
  CHECK(parsed.alg.size == 2);
  CHECK(parsed.alg.meet(1, 1) == 1);
  CHECK(parsed.alg.zero == 0);
  CHECK(parsed.alg.top == 1);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_algebra_file("skl2\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 1);
    CHECK(e.column == 1);
  }

  try {
    parse_algebra_file("skl1\nsize 2\nmeet\n0 0\n0 x\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 5);
    CHECK(e.column == 3);
  }

  // out-of-range entries are positioned parse errors, not structural ones
  try {
    parse_algebra_file("skl1\nsize 2\nmeet\n0 9\n0 1\njoin\n0 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const parse_error& e) {
    CHECK(e.line == 4);
  }

  CHECK_THROWS_AS(parse_algebra_file("skl1\nsize 2\nmeet\n0 0\n0 1\n"), parse_error);  // truncated
  CHECK_THROWS_AS(parse_algebra_file("skl1\nsize 0\nmeet\njoin\n"), parse_error);
  CHECK_THROWS_AS(
      parse_algebra_file("skl1\nsize 1\nmeet\n0\njoin\n0\nzero 0\nzero 0\n"), parse_error);
  CHECK_THROWS_AS(parse_algebra_file("skl1\nsize 1\nmeet\n0\njoin\n0\nwhat 3\n"), parse_error);
}

TEST_CASE("missing files are io errors") {
  CHECK_THROWS_AS(load_algebra_file("/nonexistent/algebra.skl"), io_error);
}

TEST_SUITE_END();
