#include "waveset/construct.hpp"

#include "waveset/errors.hpp"
#include "waveset/spectral.hpp"
#include "waveset/torus.hpp"

#include <algorithm>
#include <vector>

namespace waveset {

namespace {

const Rational kHalf(1, 2);

IntervalSet centered_unit() { return IntervalSet::of(-kHalf, kHalf); }

// Number of unit cells [m, m+1) met by the hull of s.
Integer periods(const IntervalSet& s) {
  if (s.empty()) return 0;
  Interval h = s.hull();
  return Integer(ceil(h.hi) - floor(h.lo));
}

// Union over k != 0 of [k - x, k + y), restricted to cells near `around`.
IntervalSet integer_neighborhoods(const Interval& around, const Rational& x, const Rational& y) {
  std::vector<Interval> out;
  for (Integer k = floor(around.lo) - 1; k <= ceil(around.hi) + 1; ++k) {
    if (k == 0) continue;
    Rational c(k);
    out.push_back({c - x, c + y});
  }
  return IntervalSet::normalize(std::move(out));
}

void require_scaling_cover(const IntervalSet& cover) {
  if (cover.empty()) throw PreconditionError("S2", IntervalSet::of(-1, 1), "empty set cannot contain a scaling set");
  if (!check_S1(cover))
    throw PreconditionError("S1", subtract(cover, scale(2, cover)), "set is not contained in its double (S1)");
  IntervalSet gaps = uncovered_residues(cover);
  if (!gaps.empty()) throw PreconditionError("r4", gaps, "integer translates do not cover the line (r4)");
  if (!check_S2(cover))
    throw PreconditionError("S2", zero_gap(cover), "set does not contain a punctured neighborhood of 0 (S2)");
}

}  // namespace

bool check_S1(const IntervalSet& s) { return subset_mod_null(s, scale(2, s)); }

std::optional<std::pair<Rational, Rational>> zero_neighborhood(const IntervalSet& s) {
  for (const auto& iv : s.parts())
    if (iv.lo < 0 && 0 < iv.hi) return std::pair<Rational, Rational>{Rational(-iv.lo), iv.hi};
  return std::nullopt;
}

bool check_S2(const IntervalSet& s) { return zero_neighborhood(s).has_value(); }

IntervalSet zero_gap(const IntervalSet& s) {
  Rational d = 1;
  for (const auto& iv : s.parts())
    for (const Rational* e : {&iv.lo, &iv.hi})
      if (*e != 0 && abs(*e) < d) d = abs(*e);
  return subtract(IntervalSet::of(-d, d), s);
}

ScalingSetResult construct_scaling_set(const IntervalSet& cover, int depth_n, int depth_j) {
  if (depth_n < 0 || depth_j < 0) throw InputError("construction depths must be non-negative");
  require_scaling_cover(cover);

  ScalingSetResult result;
  IntervalSet k_prime = extract_transversal(cover, /*prefer_centered=*/true);
  IntervalSet k0 = intersect(cover, centered_unit());
  IntervalSet k = unite(k0, subtract(k_prime, periodize_clip(k0, k_prime.hull())));
  result.k = k;

  const Interval hull = k.hull();
  const Rational left_reach = -hull.lo;  // K is inside [-left_reach, right_reach)
  const Rational right_reach = hull.hi;
  const Rational k_measure = k.measure();
  const bool fast = subset_mod_null(k, centered_unit());

  // T_j = ((2^-j K)^P \ 2^-j K) on the hull of K; every 2^-n K lies in that hull.
  std::vector<IntervalSet> removed(static_cast<std::size_t>(depth_n) + depth_j + 1);
  if (!fast) {
    for (int j = 1; j <= depth_n + depth_j; ++j) {
      IntervalSet y = scale(pow2(-j), k);
      removed[j] = subtract(periodize_clip(y, hull), y);
    }
  }

  std::vector<IntervalSet> pieces;
  std::vector<bool> certified;
  for (int n = 0; n <= depth_n; ++n) {
    IntervalSet e = scale(pow2(-n), k);
    if (!fast)
      for (int j = n + 1; j <= n + depth_j; ++j) e = subtract(e, removed[j]);
    // Copies removed beyond the truncation live within 2^-(n+J+1) of nonzero
    // integers; if E_n misses that zone the truncation at this n is lossless.
    const Rational zone = pow2(-(n + depth_j + 1));
    bool tail_empty = fast || e.empty() ||
                      intersect(e, integer_neighborhoods(e.hull(), zone * left_reach, zone * right_reach)).empty();
    pieces.push_back(std::move(e));
    certified.push_back(tail_empty);
  }

  IntervalSet exact_part;
  IntervalSet s;
  for (int n = 0; n <= depth_n; ++n) {
    s = unite(s, pieces[n]);
    if (certified[n]) exact_part = unite(exact_part, pieces[n]);
  }

  // Outer tail: E_n for n > N lies in [-2^-(N+1) A, 2^-(N+1) B).
  const Rational outer = pow2(-(depth_n + 1));
  auto nb = zero_neighborhood(exact_part);
  bool outer_certified = nb && outer * left_reach <= nb->first && outer * right_reach <= nb->second;

  Rational coverage = outer_certified ? Rational(0) : Rational(pow2(-depth_n) * k_measure);
  bool all_certified = true;
  for (int n = 0; n <= depth_n; ++n) {
    if (certified[n] || subset_mod_null(pieces[n], exact_part)) continue;
    all_certified = false;
    // The loss inside E_n is also bounded by |2^-n K| itself.
    IntervalSet scaled = scale(pow2(-n), k);
    Rational share = std::min(Rational(Rational(periods(scaled) + 1) * pow2(-depth_j)), Rational(1));
    coverage += share * k_measure * pow2(-n);
  }

  DefectReport& d = result.defects;
  d.depth_n = depth_n;
  d.depth_j = depth_j;
  d.fast_path = fast;
  d.exact = all_certified && outer_certified;
  d.coverage_defect = d.exact ? Rational(0) : coverage;
  d.s1_defect = d.exact ? Rational(0) : Rational(pow2(-depth_n) * k_measure);
  d.containment_exact = subset_mod_null(s, cover);

  result.w = subtract(scale(2, s), s);
  result.s = std::move(s);
  return result;
}

ScalingSetResult scaling_set_in_support(const IntervalSet& support, int depth_n, int depth_j) {
  ScalingSetResult r = construct_scaling_set(support, depth_n, depth_j);
  if (!subset_mod_null(r.s, support))
    throw std::logic_error("constructed scaling set escaped the support");
  return r;
}

WaveletSetVerdict verify_wavelet_set(const IntervalSet& w) {
  TorusStep m = fold_multiplicity(w);
  for (std::size_t i = 0; i < m.pieces(); ++i) {
    if (m.values()[i] == 1) continue;
    return {false, m.values()[i] == 0 ? "translation gap" : "translation overlap",
            IntervalSet::normalize({m.piece(i)})};
  }

  for (const auto& iv : w.parts()) {
    if (iv.lo <= 0 && 0 <= iv.hi) {
      IntervalSet near_zero = intersect(w, scale(2, w));
      return {false, "dilation overlap near 0", IntervalSet::normalize({near_zero.parts().front()})};
    }
  }

  // Dilation multiplicity is invariant under xi -> 2 xi, so one annulus per
  // half-line decides it everywhere.
  for (int sign : {1, -1}) {
    std::vector<Interval> half;
    for (const auto& iv : w.parts())
      if ((sign > 0) == (iv.lo > 0)) half.push_back(iv);
    IntervalSet side = IntervalSet::normalize(std::move(half));
    IntervalSet positive = sign > 0 ? side : scale(-1, side);
    Rational c = positive.empty() ? Rational(1) : positive.hull().lo;
    Interval annulus{c, Rational(2 * c)};
    if (positive.empty()) {
      IntervalSet gap = IntervalSet::of(annulus.lo, annulus.hi);
      return {false, "dilation gap", sign > 0 ? gap : scale(-1, gap)};
    }
    const Rational r = positive.hull().lo;
    const Rational big = positive.hull().hi;
    PiecewiseAccumulator acc(annulus.lo, annulus.hi);
    // 2^j [r, big) meets [c, 2c) iff 2^j r < 2c and 2^j big > c.
    long j = 0;
    while (pow2(j) * big > c) --j;
    for (++j; pow2(j) * r < 2 * c; ++j) {
      IntervalSet hit = intersect(scale(pow2(j), positive), IntervalSet::of(annulus.lo, annulus.hi));
      for (const auto& iv : hit.parts()) acc.add(iv.lo, iv.hi, 1);
    }
    Piecewise mult = acc.build();
    for (std::size_t i = 0; i < mult.pieces(); ++i) {
      if (mult.values()[i] == 1) continue;
      IntervalSet where = IntervalSet::normalize({mult.piece(i)});
      return {false, mult.values()[i] == 0 ? "dilation gap" : "dilation overlap",
              sign > 0 ? where : scale(-1, where)};
    }
  }
  return {true, "", {}};
}

RzeResult rze_pipeline(const StepFn& g, int depth_n, int depth_j) {
  SpectrumVerdict v = validate_scaling_spectrum(g);
  if (!v.pass) throw PreconditionError(v.condition, v.witness, "not a scaling spectrum: " + v.condition + " fails");

  RzeResult out;
  out.scaling = scaling_set_in_support(g.support(), depth_n, depth_j);
  out.psi_spectrum = psi_spectrum_from_scaling(g);
  out.supp_psi = out.psi_spectrum.support();
  IntervalSet outside = subtract(out.scaling.w, out.supp_psi);
  out.contained = outside.empty();
  out.uncontained_measure = outside.measure();
  // W = 2S \ S moves by at most 3 times the scaling-set defect.
  out.containment_bound = 3 * out.scaling.defects.coverage_defect;
  return out;
}

}  // namespace waveset
