#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "waveset/construct.hpp"
#include "waveset/errors.hpp"
#include "waveset/spectral.hpp"
#include "waveset/torus.hpp"

#include <cmath>

using namespace waveset;
using test::q;
using test::set;
using test::step;

namespace {

const StepFn kShannonG = step({{"-1/2", "1/2", "1"}});
const StepFn kShannonH = step({{"-1", "-1/2", "1"}, {"1/2", "1", "1"}});
const StepFn kThreeLevelG = step({{"-5/8", "-3/8", "1/2"}, {"-3/8", "3/8", "1"}, {"3/8", "5/8", "1/2"}});
const IntervalSet kJourne = set({{"-16/7", "-2"}, {"-1/2", "-2/7"}, {"2/7", "1/2"}, {"2", "16/7"}});

const Piecewise& side_sum(const CalderonResult& c, int sign) { return sign > 0 ? *c.positive.sum : *c.negative.sum; }

// Calderon sums at random annulus points versus the brute-force j-sum.
int calderon_mismatches(const StepFn& h, int samples, std::uint64_t seed) {
  CalderonResult c = calderon(h);
  std::mt19937_64 rng(seed);
  auto r = test::raw(h);
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    int sign = i % 2 ? 1 : -1;
    Rational x = oracle::random_point(rng, 1, 2);
    Rational y = sign > 0 ? x : Rational(-x);
    if (sign < 0 && y == -1) continue;
    Rational stored = sign > 0 ? side_sum(c, 1).at(x) : side_sum(c, -1).at(y);
    if (stored != oracle::dilation_sum(r, y)) ++bad;
  }
  return bad;
}

int dimension_mismatches(const StepFn& h, int depth, int samples, std::uint64_t seed) {
  DimFnWindow d = dimension_function(h, depth);
  std::mt19937_64 rng(seed);
  auto r = test::raw(h);
  int bad = 0;
  for (int i = 0; i < samples; ++i) {
    Rational x = oracle::random_point(rng, d.values.lo(), d.values.hi());
    if (x < d.values.lo()) continue;
    if (d.values.at(x) != oracle::dimension_sum(r, x)) ++bad;
  }
  return bad;
}

Rational tq_sum(const oracle::RawStep& psi, const Rational& x, long alpha) {
  Rational s = 0;
  Rational scale = 1;
  for (int m = 0; m <= 64; ++m, scale *= 2) s += psi.at(scale * x) * psi.at(scale * (x + alpha));
  return s;
}

}  // namespace

TEST_CASE("scaling spectrum validation") {
  CHECK(validate_scaling_spectrum(kShannonG).pass);
  SpectrumVerdict three = validate_scaling_spectrum(kThreeLevelG);
  CHECK(three.pass);
  CHECK(three.f1);
  CHECK(three.f2);
  CHECK(three.f3);

  SpectrumVerdict wide = validate_scaling_spectrum(step({{"-1", "1", "1"}}));
  CHECK_FALSE(wide.pass);
  CHECK(wide.condition == "F3");

  SpectrumVerdict flat = validate_scaling_spectrum(step({{"-1", "1", "1/2"}}));
  CHECK(flat.condition == "F2");
  CHECK(flat.witness == set({{"-1", "1"}}));

  SpectrumVerdict unstable = validate_scaling_spectrum(step({{"-1/4", "1/4", "1"}, {"5/4", "7/4", "1"}}));
  CHECK(unstable.f3);
  CHECK(unstable.f2);
  CHECK(unstable.condition == "F1");

  CHECK(validate_scaling_spectrum(step({{"0", "1", "-1"}})).condition == "nonnegative");
}

TEST_CASE("wavelet spectrum from a scaling spectrum") {
  CHECK(psi_spectrum_from_scaling(kShannonG) == kShannonH);
  StepFn h = psi_spectrum_from_scaling(kThreeLevelG);
  CHECK(h.integral() == 1);
  CHECK(h.support() == set({{"-5/4", "-3/8"}, {"3/8", "5/4"}}));
  CHECK(h.at(q("1/2")) == q("1/2"));
  CHECK(h.at(q("5/8")) == 1);
  CHECK(h.at(q("1")) == q("1/2"));

  // g = 1 near 0 but 2 on +-[1/4,1/2): g(xi/2) - g(xi) = -1 there.
  StepFn bad = step({{"-1/2", "-1/4", "2"}, {"-1/4", "1/4", "1"}, {"1/4", "1/2", "2"}});
  try {
    psi_spectrum_from_scaling(bad);
    FAIL("expected a negativity error");
  } catch (const PreconditionError& e) {
    CHECK(e.condition() == "nonnegative");
    CHECK(subset_mod_null(e.witness(), set({{"-1/2", "-1/4"}, {"1/4", "1/2"}})));
  }
}

TEST_CASE("Calderon sums") {
  CalderonResult shannon = calderon(kShannonH);
  CHECK(shannon.identically_one);
  CHECK_FALSE(shannon.diverges);

  CalderonResult quarter = calderon(psi_b_spectrum(q("1/4")));
  CHECK(quarter.min == 2);
  CHECK(quarter.max == 2);
  CHECK(calderon(psi_b_spectrum(q("1/8"))).min == 3);
  CHECK(calderon(psi_b_spectrum(q("1/8"))).max == 3);

  CalderonResult near_zero = calderon(step({{"-1/8", "1/8", "1"}}));
  CHECK(near_zero.diverges);
  CHECK(near_zero.positive.diverges());
  CHECK(near_zero.negative.diverges());

  CalderonResult one_sided = calderon(step({{"1/2", "1", "1"}}));
  CHECK(one_sided.min == 0);
  CHECK_FALSE(one_sided.identically_one);
}

TEST_CASE("Calderon sum of psi_{1/4} matches sampling and the logarithmic average") {
  StepFn h = psi_b_spectrum(q("1/4"));
  CHECK(calderon_mismatches(h, 1000, 31) == 0);
  // Average against d xi / xi over one octave equals int h(xi) d xi / xi = 2 ln 2.
  CalderonResult full = calderon(h);
  const Piecewise& c = *full.positive.sum;
  double avg = 0;
  for (std::size_t i = 0; i < c.pieces(); ++i)
    avg += c.values()[i].get_d() * std::log(c.breaks()[i + 1].get_d() / c.breaks()[i].get_d());
  CHECK(avg / std::log(2.0) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("Calderon sums match sampling and are dilation invariant [property]") {
  std::mt19937_64 rng(1001);
  for (int i = 0; i < 120; ++i) {
    StepFn f = test::random_step(rng, 3, 3, 8);
    // Nonnegative and bounded away from 0.
    std::vector<StepPiece> pieces;
    for (const auto& p : f.pieces()) {
      IntervalSet keep = subtract(IntervalSet::normalize({p.span}), IntervalSet::of(q("-1/8"), q("1/8")));
      for (const auto& iv : keep.parts()) pieces.push_back({iv, abs(p.value)});
    }
    StepFn h = StepFn::from_pieces(pieces);
    CalderonResult c = calderon(h);
    REQUIRE_FALSE(c.diverges);
    CHECK(calderon_mismatches(h, 10, rng()) == 0);
    CalderonResult d = calderon(h.dilate(2));
    CHECK(*d.positive.sum == *c.positive.sum);
    CHECK(*d.negative.sum == *c.negative.sum);
  }
}

TEST_CASE("dimension function windows") {
  DimFnWindow shannon = dimension_function(kShannonH, 20);
  CHECK(shannon.values == Piecewise::constant(pow2(-20), 1 - pow2(-20), 1));
  CHECK(shannon.depth == 20);

  DimFnWindow journe = dimension_function(StepFn::indicator(kJourne), 20);
  std::set<Rational> values(journe.values.values().begin(), journe.values.values().end());
  CHECK(values == std::set<Rational>{0, 1, 2});
  CHECK(journe.values.where([](const Rational& v) { return v == 2; }).measure() > 0);
  CHECK(journe.values.at(q("1/8")) == 2);

  DimFnWindow zero = dimension_function(StepFn{}, 10);
  CHECK(zero.values == Piecewise::constant(pow2(-10), 1 - pow2(-10), 0));

  CHECK_THROWS_AS(dimension_function(kShannonH, 1), InputError);
}

TEST_CASE("dimension functions match the double sum") {
  CHECK(dimension_mismatches(StepFn::indicator(kJourne), 20, 1000, 41) == 0);
  CHECK(dimension_mismatches(kShannonH, 20, 300, 42) == 0);
  CHECK(dimension_mismatches(psi_spectrum_from_scaling(kThreeLevelG), 12, 300, 43) == 0);
  CHECK(dimension_mismatches(psi_b_spectrum(q("1/4")), 12, 300, 44) == 0);
}

TEST_CASE("window exactness across depths [property]") {
  std::mt19937_64 rng(1101);
  for (int i = 0; i < 100; ++i) {
    StepFn h = test::random_step(rng, 3, 2, 8);
    std::vector<StepPiece> pieces;
    for (const auto& p : h.pieces()) pieces.push_back({p.span, abs(p.value)});
    h = StepFn::from_pieces(pieces);
    int depth = 3 + i % 5;
    DimFnWindow a = dimension_function(h, depth), b = dimension_function(h, depth + 5);
    CHECK(b.values.restrict(a.values.lo(), a.values.hi()) == a.values);
    // Where the tail is known, D(y) agrees with the window.
    if (a.tail && b.tail) {
      Rational y = pow2(-(depth + 3));
      if (y < a.tail->rho) CHECK(*a.at(y) == b.values.at(y));
    }
  }
}

TEST_CASE("conditions D1-D4") {
  DimConditionsReport shannon = check_D1_D4(dimension_function(kShannonH, 22), 20);
  CHECK(shannon.d1.status == Check::pass);
  CHECK(shannon.d2.status == Check::pass);
  CHECK(shannon.d3.status == Check::no_violation);
  CHECK(shannon.d4.status == Check::pass);
  CHECK(shannon.d2_checked_measure > q("9/10"));

  DimConditionsReport journe = check_D1_D4(dimension_function(StepFn::indicator(kJourne), 22), 20);
  CHECK(journe.d1.status == Check::pass);
  CHECK(journe.d2.status == Check::pass);
  CHECK(journe.d4.status == Check::pass);

  // Half of an orthonormal spectrum has D = 1/2 everywhere.
  StepFn half = step({{"-1", "-1/2", "1/2"}, {"1/2", "1", "1/2"}});
  DimConditionsReport synthetic = check_D1_D4(dimension_function(half, 12), 10);
  CHECK(synthetic.d1.status == Check::fail);
  CHECK(synthetic.d4.status == Check::fail);

  CHECK_THROWS_AS(check_D1_D4(dimension_function(kShannonH, 10), 9), InputError);
}

TEST_CASE("D2 holds for constructed wavelet sets [property]") {
  std::mt19937_64 rng(1201);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    IntervalSet cover = test::random_scaling_cover(rng, i % 3 == 0);
    ScalingSetResult r = construct_scaling_set(cover, 30, 30);
    if (!r.defects.exact) continue;
    StepFn psi = StepFn::indicator(r.w);
    REQUIRE(orthonormality_check(psi).pass);
    DimConditionsReport rep = check_D1_D4(dimension_function(psi, 12), 10);
    CHECK(rep.d1.status == Check::pass);
    CHECK(rep.d2.status == Check::pass);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("MRA decisions") {
  CHECK(mra_check(kShannonH).verdict == MraVerdict::is_mra);
  CHECK(mra_check(psi_b_spectrum(q("1/2"))).verdict == MraVerdict::is_mra);
  CHECK(mra_check(psi_spectrum_from_scaling(kThreeLevelG)).verdict == MraVerdict::is_mra);

  MraResult journe = mra_check(StepFn::indicator(kJourne));
  CHECK(journe.verdict == MraVerdict::not_mra);
  CHECK(journe.witness_value == 2);
  Interval w = journe.witness.parts().front();
  auto r = test::raw(StepFn::indicator(kJourne));
  CHECK(oracle::dimension_sum(r, (w.lo + w.hi) / 2) == 2);
}

TEST_CASE("translation equations") {
  StepFn shannon = StepFn::indicator(set({{"-1", "-1/2"}, {"1/2", "1"}}));
  CHECK(tq_check(shannon, 1).zero);
  CHECK(tq_check(shannon, -1).zero);
  CHECK(tq_check(shannon, 5).zero);

  StepFn quarter = psi_b_spectrum(q("1/4"));
  TqResult t = tq_check(quarter, 1);
  CHECK_FALSE(t.zero);
  Interval w = t.witness.parts().front();
  CHECK(tq_sum(test::raw(quarter), (w.lo + w.hi) / 2, 1) != 0);

  CHECK_THROWS_AS(tq_check(shannon, 2), InputError);
}

TEST_CASE("translation equations match the brute-force m-sum [property]") {
  std::mt19937_64 rng(1301);
  for (int i = 0; i < 100; ++i) {
    StepFn psi = test::random_step(rng, 3, 2, 8);
    long alpha = 2 * static_cast<long>(rng() % 5) - 3;
    if (alpha % 2 == 0) alpha += 1;
    TqResult t = tq_check(psi, alpha);
    auto r = test::raw(psi);
    for (int k = 0; k < 10; ++k) {
      Rational x = oracle::random_rational(rng, 3, 1000003);
      CHECK(t.t.at(x) == tq_sum(r, x, alpha));
    }
  }
}

TEST_CASE("orthonormality") {
  CHECK(orthonormality_check(StepFn::indicator(set({{"-1", "-1/2"}, {"1/2", "1"}}))).pass);
  CHECK(orthonormality_check(StepFn::indicator(kJourne)).pass);

  OrthonormalityReport quarter = orthonormality_check(psi_b_spectrum(q("1/4")));
  CHECK_FALSE(quarter.pass);
  CHECK(quarter.calderon.min == 2);

  OrthonormalityReport one_sided = orthonormality_check(step({{"1/2", "1", "1"}}));
  CHECK_FALSE(one_sided.pass);
  CHECK(one_sided.calderon.min == 0);

  // Right Calderon sum and tq but the wrong norm: a sign flip keeps |psi^| and passes.
  CHECK(orthonormality_check(step({{"-1", "-1/2", "-1"}, {"1/2", "1", "1"}})).pass);
}

TEST_CASE("psi_b family") {
  PsiBReport half = psi_b_report(q("1/2"));
  CHECK(half.orthonormality.pass);
  CHECK(half.table_row == "orthonormal wavelet");
  CHECK(half.row_certified);

  PsiBReport quarter = psi_b_report(q("1/4"));
  CHECK(quarter.calderon.min == 2);
  CHECK(quarter.calderon.max == 2);
  CHECK_FALSE(quarter.orthonormality.pass);
  CHECK(quarter.row_consistent);

  PsiBReport eighth = psi_b_report(q("1/8"));
  CHECK(eighth.calderon.min == 3);
  CHECK(eighth.calderon.max == 3);
  CHECK(eighth.table_row == "frame wavelet (not Riesz)");
  CHECK(eighth.row_consistent);

  CHECK(psi_b_report(q("1/7")).table_row.empty());
  CHECK(psi_b_report(q("1/3")).table_row == "biorthogonal Riesz wavelet");
  CHECK(psi_b_report(q("0")).table_row == "not a frame wavelet");
  CHECK(psi_b_spectrum(q("1/4")).integral() == q("3/2"));
  CHECK_THROWS_AS(psi_b_spectrum(1), InputError);
  CHECK_THROWS_AS(psi_b_spectrum(q("-1/2")), InputError);
}
