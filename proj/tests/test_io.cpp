#include <random>

#include <gtest/gtest.h>

#include "lagsel/io.hpp"
#include "lagsel/random.hpp"

using namespace lagsel;
using io::Json;

TEST(Json, RationalEncoding) {
  EXPECT_EQ(io::encode(Rational(3, 4)), Json("3/4"));
  EXPECT_EQ(io::encode(Rational(-2)), Json("-2"));
  EXPECT_EQ(io::decode_rational(Json("6/8")), Rational(3, 4));
  EXPECT_EQ(io::decode_rational(Json(5)), Rational(5));
  EXPECT_THROW(io::decode_rational(Json(0.5)), InvalidInput);
}

TEST(Json, SubspaceRoundTrip) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const Subspace s = random::subspace(rng, m, std::uniform_int_distribution<std::size_t>(0, m)(rng));
    const Json j = io::encode(s);
    EXPECT_EQ(j.at("ambient_dim"), m);
    EXPECT_EQ(io::decode_subspace(io::parse(j.dump())), s);
  }
}

TEST(Json, FormAndFlagRoundTrip) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    const SkewForm b = random::skew_form(rng, m);
    const Flag f = random::flag(rng, m);
    EXPECT_EQ(io::decode_form(io::encode(b)), b);
    EXPECT_EQ(io::decode_flag(io::encode(f)), f);
  }
}

TEST(Json, FormInputValidation) {
  EXPECT_EQ(io::decode_form(io::parse(R"({"dim": 2, "upper": [[1, 2, "3/2"]]})")),
            SkewForm::from_upper(2, {{0, 1, Rational(3, 2)}}));
  EXPECT_EQ(io::decode_form(io::parse(R"({"dim": 2, "matrix": [["0", "1"], ["-1", "0"]]})")),
            SkewForm::from_upper(2, {{0, 1, Rational(1)}}));
  EXPECT_THROW(io::decode_form(io::parse(R"({"dim": 2, "matrix": [["0", "1"], ["1", "0"]]})")), InvalidInput);
  EXPECT_THROW(io::decode_form(io::parse(R"({"dim": 2, "upper": [[2, 1, "1"]]})")), InvalidInput);
  EXPECT_THROW(io::decode_form(io::parse(R"({"dim": 2, "upper": [[0, 1, "1"]]})")), InvalidInput);
  EXPECT_THROW(io::decode_form(io::parse(R"({"upper": []})")), InvalidInput);
  EXPECT_THROW(io::parse("{not json"), InvalidInput);
}

TEST(Json, AlgebraResolution) {
  EXPECT_EQ(io::resolve_algebra("g54").algebra.dim(), 5u);
  EXPECT_EQ(io::resolve_algebra("heisenberg:2").algebra.dim(), 5u);
  EXPECT_EQ(io::resolve_algebra("axb:[[1,0],[0,1]]").algebra.dim(), 3u);
  EXPECT_EQ(io::resolve_algebra(R"({"builtin": "axb", "matrix": [[2]]})").algebra.dim(), 2u);
  const auto custom = io::resolve_algebra(R"({"dim": 3, "brackets": [[2, 3, ["1", "0", "0"]]]})");
  EXPECT_EQ(custom.algebra.bracket_basis(1, 2), (Vector{1, 0, 0}));
  EXPECT_THROW(io::resolve_algebra("g99"), InvalidInput);
  EXPECT_THROW(io::resolve_algebra("heisenberg:x"), InvalidInput);
  EXPECT_THROW(io::resolve_algebra("axb:[[0,1],[0,0]]"), NotJordanHolder);
  EXPECT_THROW(io::resolve_algebra(R"({"dim": 3, "brackets": [[1, 2, ["0","0","1"]], [1, 3, ["1","0","0"]]]})"),
               JacobiViolation);
}

TEST(Json, AlgebraRoundTrip) {
  const auto g615 = make_g615();
  const LieAlgebra back = io::decode_algebra(io::encode(g615.algebra));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(back.bracket_basis(i, j), g615.algebra.bracket_basis(i, j));
}

TEST(Json, ReportsAreStable) {
  const SkewForm b = SkewForm::from_upper(5, {{2, 3, Rational(-1)}});
  const Json trace = io::encode(filtration(b, Flag::standard(5)));
  EXPECT_EQ(trace.at("d"), 1);
  EXPECT_EQ(trace.at("i"), Json::array({3}));
  EXPECT_EQ(trace.at("j"), Json::array({4}));
  const Json report = io::encode(verify_filtration_lemmas(b, Flag::standard(5)));
  EXPECT_TRUE(report.at("passed").get<bool>());
  EXPECT_EQ(io::encode(selection_cell(b, Flag::standard(5))), Json::array({4}));
}
