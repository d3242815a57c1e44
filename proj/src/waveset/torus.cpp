#include "waveset/torus.hpp"

#include "waveset/errors.hpp"

#include <algorithm>
#include <optional>

namespace waveset {

namespace {

const Rational kHalf(1, 2);

void fold_into(PiecewiseAccumulator& acc, const Interval& iv, const Rational& value) {
  Rational fa(floor(iv.lo));
  Rational fb(floor(iv.hi));
  if (fa == fb) {
    acc.add(iv.lo - fa, iv.hi - fa, value);
    return;
  }
  acc.add(iv.lo - fa, 1, value);
  acc.add_constant(value * (fb - fa - 1));
  if (fb < iv.hi) acc.add(0, iv.hi - fb, value);
}

}  // namespace

TorusStep fold_multiplicity(const IntervalSet& s) {
  PiecewiseAccumulator acc(0, 1);
  for (const auto& iv : s.parts()) fold_into(acc, iv, 1);
  return acc.build();
}

TorusStep fold(const StepFn& f) {
  PiecewiseAccumulator acc(0, 1);
  for (const auto& p : f.pieces()) fold_into(acc, p.span, p.value);
  return acc.build();
}

IntervalSet residues(const IntervalSet& s) {
  std::vector<Interval> out;
  for (const auto& iv : s.parts()) {
    if (iv.length() >= 1) return IntervalSet::of(0, 1);
    Rational fa(floor(iv.lo));
    Rational fb(floor(iv.hi));
    if (fa == fb || iv.hi == fb) {
      out.push_back({iv.lo - fa, iv.hi - fa});
    } else {
      out.push_back({iv.lo - fa, 1});
      out.push_back({0, iv.hi - fb});
    }
  }
  return IntervalSet::normalize(std::move(out));
}

bool check_S3(const IntervalSet& s) {
  TorusStep m = fold_multiplicity(s);
  return m.pieces() == 1 && m.values()[0] == 1;
}

bool check_cover_r4(const IntervalSet& s) { return uncovered_residues(s).empty(); }

IntervalSet uncovered_residues(const IntervalSet& s) { return subtract(IntervalSet::of(0, 1), residues(s)); }

IntervalSet periodize_clip(const IntervalSet& e, const Interval& window) {
  if (e.empty() || !(window.lo < window.hi)) return {};
  IntervalSet r = residues(e);
  std::vector<Interval> out;
  for (Integer k = floor(window.lo); k < ceil(window.hi); ++k) {
    Rational shift(k);
    for (const auto& iv : r.parts()) out.push_back({iv.lo + shift, iv.hi + shift});
  }
  return intersect(IntervalSet::normalize(std::move(out)), IntervalSet::of(window.lo, window.hi));
}

IntervalSet periodize_window(const IntervalSet& e, long m) {
  if (m < 1) throw InputError("periodization window half-width must be >= 1");
  return periodize_clip(e, {Rational(-m), Rational(m)});
}

IntervalSet extract_transversal(const IntervalSet& cover, bool prefer_centered) {
  IntervalSet gaps = uncovered_residues(cover);
  if (!gaps.empty())
    throw PreconditionError("r4", gaps, "translates do not cover the line; uncovered residues exist");

  std::vector<Rational> cuts{Rational(0), Rational(1)};
  if (prefer_centered) cuts.push_back(kHalf);
  for (const auto& iv : cover.parts()) {
    cuts.push_back(frac(iv.lo));
    cuts.push_back(frac(iv.hi));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> chosen;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& u = cuts[i];
    const Rational& v = cuts[i + 1];
    std::optional<Integer> best;
    std::optional<Integer> centered;
    Integer centered_k = (v <= kHalf) ? Integer(0) : Integer(-1);
    for (const auto& iv : cover.parts()) {
      Integer k_lo = ceil(Rational(iv.lo - u));
      Integer k_hi = floor(Rational(iv.hi - v));
      if (k_hi < k_lo) continue;
      if (!best || k_lo < *best) best = k_lo;
      if (prefer_centered && k_lo <= centered_k && centered_k <= k_hi) centered = centered_k;
    }
    // Atoms are refined by every folded endpoint, so some shift always fits.
    Rational k(centered ? *centered : *best);
    chosen.push_back({u + k, v + k});
  }
  return IntervalSet::normalize(std::move(chosen));
}

}  // namespace waveset
