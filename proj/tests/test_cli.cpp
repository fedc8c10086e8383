#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "torelli/serialize.hpp"

using namespace torelli;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string &content) {
    path = "cli_test_tmp_" + std::to_string(counter++) + ".json";
    std::ofstream(path) << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static inline int counter = 0;
};

} // namespace

TEST_CASE("mapping-class word grammar") {
  auto f = parse_mc_word("t_a1");
  REQUIRE(f.size() == 1);
  CHECK(f[0].name == "t_a1");
  CHECK(f[0].exponent == 1);

  f = parse_mc_word("  t_a12*t_d^-2 ");
  REQUIRE(f.size() == 2);
  CHECK(f[0].name == "t_a12");
  CHECK(f[0].exponent == 1);
  CHECK(f[1].name == "t_d");
  CHECK(f[1].exponent == -2);

  f = parse_mc_word("t_e ^ 3 * t_a1 ^ -1");
  CHECK(f[0].exponent == 3);
  CHECK(f[1].exponent == -1);

  CHECK_THROWS_AS(parse_mc_word(""), ParseError);
  CHECK_THROWS_AS(parse_mc_word("t_d t_e"), ParseError); // missing '*'
  CHECK_THROWS_AS(parse_mc_word("t_d^"), ParseError);
  CHECK_THROWS_AS(parse_mc_word("t_d^x"), ParseError);
  CHECK_THROWS_AS(parse_mc_word("* t_d"), ParseError);
}

TEST_CASE("word resolution against the library") {
  auto lib = twist_library(2);
  CHECK(resolve_mc_word(parse_mc_word("t_a1"), lib, 2) == lib.at("t_a1"));
  CHECK(resolve_mc_word(parse_mc_word("t_d^-1"), lib, 2) == lib.at("t_d^-1"));
  CHECK(resolve_mc_word(parse_mc_word("t_d * t_d^-1"), lib, 2)
            .is_identity());
  CHECK(resolve_mc_word(parse_mc_word("t_a1^2"), lib, 2) ==
        lib.at("t_a1").compose(lib.at("t_a1")));
  CHECK(resolve_mc_word(parse_mc_word("t_e^0"), lib, 2).is_identity());

  // index order is part of the grammar
  CHECK_THROWS_WITH_AS(resolve_mc_word(parse_mc_word("t_a21"), lib, 2),
                       doctest::Contains("k<l"), ParseError);
  CHECK_THROWS_WITH_AS(resolve_mc_word(parse_mc_word("t_x"), lib, 2),
                       doctest::Contains("unknown name"), ParseError);
}

TEST_CASE("user endo files") {
  // t_d's images spelled out verbatim match the library entry
  auto lib = twist_library(2);
  const SurfaceEndo &td = lib.at("t_d");
  auto img = [&](Generator::Kind k, int i) {
    return td.image(Generator{k, i}).str();
  };
  std::string entry = R"([{"name": "my_twist", "genus": 2, "images": {)";
  entry += "\"a1\": \"" + img(Generator::Alpha, 1) + "\", ";
  entry += "\"b1\": \"" + img(Generator::Beta, 1) + "\", ";
  entry += "\"a2\": \"" + img(Generator::Alpha, 2) + "\", ";
  entry += "\"b2\": \"" + img(Generator::Beta, 2) + "\"}}]";
  TempFile good(entry);
  auto loaded = load_user_endos(good.path, 2);
  REQUIRE(loaded.count("my_twist") == 1);
  CHECK(loaded.at("my_twist") == td);

  // boundary violation is rejected with the defect word
  TempFile bad(R"([{"name": "broken", "genus": 2, "images": {
    "a1": "a1", "b1": "a1", "a2": "a2", "b2": "b2"}}])");
  CHECK_THROWS_WITH_AS(load_user_endos(bad.path, 2),
                       doctest::Contains("defect"), AlgebraError);

  TempFile empty("   \n");
  CHECK(load_user_endos(empty.path, 2).empty());
}

TEST_CASE("structured tau output round-trips") {
  auto lib = twist_library(2);
  for (const char *name : {"t_a1", "t_a12"}) {
    DerivationElement d = tau_alt(lib.at(name), 1);
    DerivationElement back = derivation_from_json(to_json(d));
    CHECK(back == d);
    CHECK(back.symplectic == d.symplectic);
  }
  DerivationElement d2 = tau_alt(lib.at("t_e"), 2);
  CHECK_FALSE(d2.is_zero());
  CHECK(derivation_from_json(to_json(d2)) == d2);
  // fractional coefficients survive the num/den encoding
  DerivationElement half = d2;
  for (auto &[i, v] : half.a_part) v = v * (Rat(1) / 3);
  for (auto &[i, v] : half.b_part) v = v * (Rat(1) / 3);
  CHECK(derivation_from_json(to_json(half)) == half);
}

TEST_CASE("text rendering") {
  auto lib = twist_library(2);
  CHECK(tau_text(tau_alt(lib.at("t_a1"), 1)) == "-(1)·a1⊗a1");
  CHECK(tau_text(tau_alt(lib.at("t_d"), 1)) == "0");
  CHECK(tau_text(tau_alt(lib.at("t_a12"), 1)) ==
        "-(1)·a1⊗a1 - (1)·a1⊗a2 - (1)·a2⊗a1 - (1)·a2⊗a2");
}

TEST_CASE("diagram serialization") {
  auto lib = twist_library(2);
  auto ba = WeightedAlphabet::ba(2);
  DiagramElement e = diagrammatic_tau_alt(lib.at("t_a1"), 1);
  nlohmann::json j = to_json(e);
  CHECK(j.at("genus") == 2);
  CHECK(j.at("adeg") == 1);
  REQUIRE(j.at("terms").size() == 1);
  CHECK(j.at("terms")[0].at("root_color") == "a1");
  CHECK(j.at("terms")[0].at("lyndon_word") == "a1");
  CHECK(j.at("terms")[0].at("coeff").at("num") == "-1");
  CHECK(j.at("terms")[0].at("coeff").at("den") == "2");
}
