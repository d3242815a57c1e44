#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "waveset/errors.hpp"
#include "waveset/torus.hpp"

using namespace waveset;
using test::q;
using test::set;

namespace {

// Random covering set: a partition of [0,1) with each atom shifted by a
// random integer, plus random extra intervals.
IntervalSet random_cover(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cuts(0, 4), shift(-2, 2);
  std::vector<Rational> pts{0, 1};
  for (int i = cuts(rng); i > 0; --i) pts.push_back(oracle::random_point(rng, 0, 1, 16));
  std::sort(pts.begin(), pts.end());
  std::vector<Interval> raw;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rational k(shift(rng));
    raw.push_back({pts[i] + k, pts[i + 1] + k});
  }
  for (const auto& iv : test::random_intervals(rng, 3, 2, 8)) raw.push_back(iv);
  return IntervalSet::normalize(std::move(raw));
}

}  // namespace

TEST_CASE("fold multiplicity examples") {
  CHECK(fold_multiplicity(set({{"-1/2", "1/2"}})) == Piecewise::constant(0, 1, 1));
  CHECK(fold_multiplicity(set({{"-1", "1"}})) == Piecewise::constant(0, 1, 2));
  CHECK(fold_multiplicity(set({{"0", "1/2"}})) == Piecewise({0, q("1/2"), 1}, {1, 0}));
  CHECK(fold_multiplicity(IntervalSet{}) == Piecewise::constant(0, 1, 0));
}

TEST_CASE("S3 and covering examples") {
  CHECK(check_S3(set({{"-1/2", "1/2"}})));
  CHECK_FALSE(check_S3(set({{"-1", "1"}})));
  CHECK(check_cover_r4(set({{"-1", "1"}})));
  CHECK_FALSE(check_S3(set({{"0", "1/3"}})));
  CHECK_FALSE(check_cover_r4(set({{"0", "1/3"}})));
  CHECK(uncovered_residues(set({{"0", "1/3"}})) == set({{"1/3", "1"}}));
}

TEST_CASE("periodize window examples") {
  CHECK(periodize_window(set({{"0", "1/4"}}), 1) == set({{"-1", "-3/4"}, {"0", "1/4"}}));
  CHECK(periodize_window(IntervalSet{}, 3).empty());
  CHECK(periodize_window(set({{"-1/8", "1/8"}}), 2) ==
        set({{"-2", "-15/8"}, {"-9/8", "-7/8"}, {"-1/8", "1/8"}, {"7/8", "9/8"}, {"15/8", "2"}}));
  CHECK(periodize_clip(set({{"0", "1/4"}}), {q("-1/2"), q("3/2")}) == set({{"0", "1/4"}, {"1", "5/4"}}));
}

TEST_CASE("transversal examples") {
  CHECK(extract_transversal(set({{"-1/2", "1/2"}})) == set({{"-1/2", "1/2"}}));
  CHECK(extract_transversal(set({{"-1", "1"}})) == set({{"-1", "0"}}));
  CHECK(extract_transversal(set({{"-1", "1"}}), true) == set({{"-1/2", "1/2"}}));
  CHECK(extract_transversal(set({{"-1/4", "1/2"}, {"1/2", "3/4"}})) == set({{"-1/4", "3/4"}}));
}

TEST_CASE("transversal of a non-covering set names the uncovered residues") {
  // [-1/4,1/2) u [3/4,1) leaves [1/2,3/4) uncovered and covers [3/4,1) twice.
  IntervalSet s = set({{"-1/4", "1/2"}, {"3/4", "1"}});
  CHECK_FALSE(check_cover_r4(s));
  try {
    extract_transversal(s);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(e.condition() == "r4");
    CHECK(e.witness() == set({{"1/2", "3/4"}}));
  }
}

TEST_CASE("fold of a step function") {
  StepFn g = test::step({{"-5/8", "-3/8", "1/2"}, {"-3/8", "3/8", "1"}, {"3/8", "5/8", "1/2"}});
  CHECK(fold(g) == Piecewise::constant(0, 1, 1));
  CHECK(fold(test::step({{"-1", "1", "1"}})) == Piecewise::constant(0, 1, 2));
}

TEST_CASE("multiplicity integrates to the measure and matches counting [property]") {
  std::mt19937_64 rng(505);
  for (int i = 0; i < 200; ++i) {
    IntervalSet s = test::random_set(rng, 5, 3, 8);
    TorusStep m = fold_multiplicity(s);
    CHECK(m.integral() == s.measure());
    CHECK(fold_multiplicity(translate(Rational(i % 5 - 2), s)) == m);
    auto r = test::raw(s);
    for (int t = 0; t < 10; ++t) {
      Rational x = oracle::random_point(rng, 0, 1);
      CHECK(m.at(x) == oracle::translation_count(r, x));
    }
    for (long big = 3; big >= 1; --big)
      CHECK(intersect(periodize_window(s, 3), IntervalSet::of(-big, big)) == periodize_window(s, big));
  }
}

TEST_CASE("transversals tile and stay inside the cover [property]") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 200; ++i) {
    IntervalSet cover = random_cover(rng);
    REQUIRE(check_cover_r4(cover));
    for (bool centered : {false, true}) {
      IntervalSet k = extract_transversal(cover, centered);
      CHECK(check_S3(k));
      CHECK(subset_mod_null(k, cover));
      CHECK(extract_transversal(cover, centered) == k);
      auto r = test::raw(k);
      for (int t = 0; t < 5; ++t) CHECK(oracle::translation_count(r, oracle::random_point(rng, 0, 1)) == 1);
    }
  }
}
