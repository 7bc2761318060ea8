#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "ftqft/io.hpp"

using namespace ftqft;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/ftqft_io_" + name;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("group json round trip") {
  auto g = quaternion_group();
  Json j = group_to_json(*g);
  auto g2 = group_from_json(j);
  CHECK(g2->order() == 8);
  CHECK(g2->exponent() == 4);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) CHECK(g->mul(a, b) == g2->mul(a, b));
  CHECK(g2->name_of(1) == "-1");
}

TEST_CASE("permutation group file format") {
  std::string path = write_temp("perm.json",
                                R"({"degree": 3, "generators": [[1,2,0],[1,0,2]]})");
  auto g = load_group_file(path);
  CHECK(g->order() == 6);
  std::remove(path.c_str());
}

TEST_CASE("group file validation errors") {
  std::string path = write_temp("bad.json", R"({"order": 2, "table": [[0,0],[1,1]]})");
  CHECK_THROWS_AS(load_group_file(path), NotAGroup);
  std::remove(path.c_str());
  std::string missing = write_temp("nofield.json", R"({"order": 2})");
  CHECK_THROWS_AS(load_group_file(missing), ParseError);
  std::remove(missing.c_str());
  CHECK_THROWS_AS(load_group_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("cocycle json round trip preserves values") {
  auto z4 = cyclic_group(4);
  Cochain w = cyclic_3cocycle(z4, 1);
  Json j = cochain_to_json(w, 4);
  j["group"] = group_to_json(*z4);
  Cochain w2 = cochain_from_json(j);
  CHECK(w2.degree() == 3);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) CHECK(w({a, b, c}) == w2({a, b, c}));
}

TEST_CASE("gset file parsing") {
  std::string path = write_temp(
      "gset.json",
      R"({"group": {"order": 2, "table": [[0,1],[1,0]]}, "action": [[0,1],[1,0]]})");
  auto s = load_gset_file(path);
  CHECK(s->size() == 2);
  CHECK(s->orbits().size() == 1);
  std::remove(path.c_str());
  std::string bad = write_temp(
      "gset_bad.json",
      R"({"group": {"order": 2, "table": [[0,1],[1,0]]}, "action": [[0,1],[1,1]]})");
  CHECK_THROWS_AS(load_gset_file(bad), Error);
  std::remove(bad.c_str());
}

TEST_CASE("presentation parsing") {
  std::string path = write_temp(
      "pres.json", R"({"generators": 2, "relators": [[1,2,-1,-2]]})");
  auto p = load_presentation_file(path);
  CHECK(p.generators == 2);
  CHECK(p.relators.size() == 1);
  std::remove(path.c_str());
  std::string bad = write_temp("pres_bad.json",
                               R"({"generators": 1, "relators": [[2]]})");
  CHECK_THROWS_AS(load_presentation_file(bad), ParseError);
  std::remove(bad.c_str());
}

TEST_CASE("exact scalar serialization never uses floats") {
  auto z = Cyclotomic::zeta(8).scaled(Rat(3, 7)) + Cyclotomic(Rat(1, 2));
  Json j = cyclotomic_to_json(z);
  CHECK(j["conductor"] == 8);
  CHECK(j["str"].get<std::string>().find("z8") != std::string::npos);
  for (const auto& c : j["coeffs"]) CHECK(c.is_string());
  Json q = rational_to_json(Rat(-5, 3));
  CHECK(q["numerator"] == "-5");
  CHECK(q["denominator"] == "3");
}

TEST_CASE("fnv1a64 is stable") {
  CHECK(fnv1a64("") == "cbf29ce484222325");
  CHECK(fnv1a64("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a64("hello") == fnv1a64("hello"));
  CHECK(fnv1a64("hello") != fnv1a64("hellp"));
}
