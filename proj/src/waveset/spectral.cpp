#include "waveset/spectral.hpp"

#include "waveset/construct.hpp"
#include "waveset/errors.hpp"
#include "waveset/torus.hpp"

#include <algorithm>

namespace waveset {

namespace {

const Rational kHalf(1, 2);

// Largest m with 2^m <= y, y > 0.
long floor_log2(const Rational& y) {
  long m = static_cast<long>(mpz_sizeinbase(y.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(y.get_den_mpz_t(), 2));
  while (pow2(m) > y) --m;
  while (pow2(m + 1) <= y) ++m;
  return m;
}

Rational max_abs_extent(const StepFn& f) {
  Interval h = f.support().hull();
  return std::max(abs(h.lo), abs(h.hi));
}

Rational min_abs_extent(const StepFn& f) {
  Rational r = -1;
  for (const auto& p : f.pieces()) {
    Rational d = (p.span.lo < 0 && 0 < p.span.hi) ? Rational(0) : std::min(abs(p.span.lo), abs(p.span.hi));
    if (r < 0 || d < r) r = d;
  }
  return r;
}

// Piece [a,b) of a function on [1,2) becomes [-b,-a) on [-2,-1).
Piecewise reflect(const Piecewise& p) {
  std::vector<Rational> breaks;
  std::vector<Rational> values(p.values().rbegin(), p.values().rend());
  for (auto it = p.breaks().rbegin(); it != p.breaks().rend(); ++it) breaks.push_back(-*it);
  return Piecewise(std::move(breaks), std::move(values));
}

CalderonSide calderon_side(const StepFn& h, int sign) {
  StepFn f = sign > 0 ? h : h.dilate(-1);
  std::vector<StepPiece> half;
  for (const auto& p : f.pieces()) {
    if (p.span.hi <= 0) continue;
    if (p.span.lo <= 0) return {};
    half.push_back(p);
  }
  if (half.empty()) {
    Piecewise zero = Piecewise::constant(1, 2, 0);
    return {sign > 0 ? zero : reflect(zero)};
  }
  const Rational& r = half.front().span.lo;
  const Rational& big = half.back().span.hi;
  PiecewiseAccumulator acc(1, 2);
  // h(2^j xi) with xi in [1,2) is nonzero only when 2^j < big and 2^(j+1) > r.
  for (long j = floor_log2(r) - 1; pow2(j) < big; ++j) {
    if (!(pow2(j + 1) > r)) continue;
    Rational inv = pow2(-j);
    for (const auto& p : half) acc.add(p.span.lo * inv, p.span.hi * inv, p.value);
  }
  Piecewise sum = acc.build();
  return {sign > 0 ? sum : reflect(sum)};
}

// y in (0, inf) rescaled by a power of 2 into [1, 2).
Rational to_annulus(const Rational& y) { return Rational(y * pow2(-floor_log2(y))); }

ConditionResult fail_on(IntervalSet witness, std::string note = {}) {
  return {Check::fail, std::move(witness), std::move(note)};
}

}  // namespace

const char* to_string(Check c) {
  switch (c) {
    case Check::pass: return "pass";
    case Check::fail: return "fail";
    case Check::no_violation: return "no_violation";
  }
  return "?";
}

const char* to_string(MraVerdict v) {
  switch (v) {
    case MraVerdict::is_mra: return "is_mra";
    case MraVerdict::not_mra: return "not_mra";
    case MraVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

SpectrumVerdict validate_scaling_spectrum(const StepFn& g) {
  SpectrumVerdict v;
  for (const auto& p : g.pieces())
    if (p.value < 0) {
      v.condition = "nonnegative";
      v.witness = IntervalSet::normalize({p.span});
      return v;
    }

  IntervalSet f3_witness;
  TorusStep periodized = fold(g);
  for (std::size_t i = 0; i < periodized.pieces(); ++i)
    if (periodized.values()[i] != 1) {
      f3_witness = IntervalSet::normalize({periodized.piece(i)});
      break;
    }
  v.f3 = f3_witness.empty();

  IntervalSet ones = StepFn::from_pieces([&] {
                       std::vector<StepPiece> keep;
                       for (const auto& p : g.pieces())
                         if (p.value == 1) keep.push_back(p);
                       return keep;
                     }())
                         .support();
  v.f2 = check_S2(ones);
  IntervalSet f2_witness;
  if (!v.f2) {
    // The gap adjacent to 0.
    Rational d = 1;
    for (const auto& iv : ones.parts())
      for (const Rational* e : {&iv.lo, &iv.hi})
        if (*e != 0 && abs(*e) < d) d = abs(*e);
    f2_witness = subtract(IntervalSet::of(-d, d), ones);
  }

  // (F1): phi^(2 xi) = m(xi) phi^(xi) with m 1-periodic. The support must be
  // stable under halving and |m|^2 = g(2 xi)/g(xi) must agree across translates.
  IntervalSet supp = g.support();
  IntervalSet f1_witness = subtract(scale(kHalf, supp), supp);
  if (f1_witness.empty()) {
    StepFn g2 = g.dilate(2);
    std::vector<Rational> cuts{Rational(0), Rational(1)};
    for (const auto& p : g.pieces())
      for (const Rational* e : {&p.span.lo, &p.span.hi}) {
        cuts.push_back(frac(*e));
        cuts.push_back(frac(Rational(*e / 2)));
      }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size() && f1_witness.empty(); ++i) {
      const Rational& u = cuts[i];
      const Rational& w = cuts[i + 1];
      std::optional<Rational> seen;
      for (const auto& iv : supp.parts()) {
        for (Integer k = ceil(Rational(iv.lo - u)); k <= floor(Rational(iv.hi - w)); ++k) {
          Rational x = u + Rational(k);
          Rational ratio = g2.at(x) / g.at(x);
          if (!seen) {
            seen = ratio;
          } else if (*seen != ratio) {
            f1_witness = IntervalSet::of(x, x + (w - u));
            break;
          }
        }
        if (!f1_witness.empty()) break;
      }
    }
  }
  v.f1 = f1_witness.empty();

  if (!v.f3) {
    v.condition = "F3";
    v.witness = f3_witness;
  } else if (!v.f2) {
    v.condition = "F2";
    v.witness = f2_witness;
  } else if (!v.f1) {
    v.condition = "F1";
    v.witness = f1_witness;
  }
  v.pass = v.f1 && v.f2 && v.f3;
  return v;
}

StepFn psi_spectrum_from_scaling(const StepFn& g) {
  StepFn h = g.dilate(kHalf) - g;
  for (const auto& p : h.pieces())
    if (p.value < 0)
      throw PreconditionError("nonnegative", IntervalSet::normalize({p.span}),
                              "g(xi/2) - g(xi) is negative; g is not a scaling spectrum");
  return h;
}

CalderonResult calderon(const StepFn& h) {
  CalderonResult r;
  r.positive = calderon_side(h, 1);
  r.negative = calderon_side(h, -1);
  r.diverges = r.positive.diverges() || r.negative.diverges();
  bool first = true;
  for (const CalderonSide* side : {&r.positive, &r.negative}) {
    if (side->diverges()) continue;
    if (first || side->sum->min() < r.min) r.min = side->sum->min();
    if (first || side->sum->max() > r.max) r.max = side->sum->max();
    first = false;
  }
  r.identically_one = !r.diverges && r.min == 1 && r.max == 1;
  return r;
}

std::optional<Rational> DimFnWindow::at(const Rational& y) const {
  Rational u = frac(y);
  if (values.lo() <= u && u < values.hi()) return values.at(u);
  if (!tail || u == 0) return std::nullopt;
  if (u < tail->rho) return Rational(tail->c_pos.at(to_annulus(u)) + tail->e_pos);
  if (u > 1 - tail->rho) {
    Rational t = 1 - u;
    Rational a = to_annulus(t);
    if (a == 1) a = 2;
    return Rational(tail->c_neg.at(-a) + tail->e_neg);
  }
  return std::nullopt;
}

DimFnWindow dimension_function(const StepFn& h, int depth) {
  if (depth < 2) throw InputError("dimension function depth must be >= 2");
  const Rational edge = pow2(-depth);
  DimFnWindow out{Piecewise::constant(edge, 1 - edge, 0), depth, true, std::nullopt};
  if (h.is_zero()) {
    out.boundary_note = false;
    out.tail = DimTail{Piecewise::constant(1, 2, 0), Piecewise::constant(-2, -1, 0), 0, 0, kHalf};
    return out;
  }

  const Rational reach = max_abs_extent(h);
  PiecewiseAccumulator acc(edge, 1 - edge);
  // Beyond reach * 2^-j <= 2^-L the folded term lives outside the window.
  for (long j = 1; reach * pow2(-j) > edge; ++j) {
    TorusStep t = fold(h.dilate(pow2(j)));
    for (std::size_t i = 0; i < t.pieces(); ++i) acc.add(t.breaks()[i], t.breaks()[i + 1], t.values()[i]);
  }
  out.values = acc.build();

  CalderonResult cal = calderon(h);
  if (cal.diverges) return out;

  // D = F + G on (-1/2, 1/2), with G the k = 0 terms (equal to the Calderon
  // sum below min|supp h|) and F the k != 0 terms, locally constant at 0.
  DimTail tail{*cal.positive.sum, *cal.negative.sum, 0, 0, std::min(min_abs_extent(h), kHalf)};
  std::vector<Rational> ends;
  for (const auto& p : h.pieces()) {
    ends.push_back(p.span.lo);
    ends.push_back(p.span.hi);
  }
  for (long j = 1; pow2(j) < 2 * reach; ++j) {
    const Rational scale_j = pow2(j);
    Integer kmax = ceil(Rational(reach / scale_j)) + 1;
    for (Integer k = -kmax; k <= kmax; ++k) {
      if (k == 0) continue;
      Rational x = scale_j * Rational(k);
      tail.e_pos += h.at(x);
      tail.e_neg += h.left_limit(x);
    }
    for (const auto& p : ends) {
      Rational x = p / scale_j;
      Integer below = ceil(x) - 1;
      if (below == 0) below = -1;
      Integer above = floor(x) + 1;
      if (above == 0) above = 1;
      tail.rho = std::min(tail.rho, Rational(x - Rational(below)));
      tail.rho = std::min(tail.rho, Rational(Rational(above) - x));
    }
  }
  out.boundary_note = edge > tail.rho;
  out.tail = std::move(tail);
  return out;
}

DimConditionsReport check_D1_D4(const DimFnWindow& dim, int depth) {
  if (depth < 2 || dim.depth < depth + 2)
    throw InputError("dimension function must be computed at depth >= L + 2 (have " + std::to_string(dim.depth) +
                     ", L = " + std::to_string(depth) + ")");
  DimConditionsReport rep;
  rep.depth = depth;
  const Rational lo = pow2(-depth);
  const Rational hi = 1 - lo;
  const Piecewise view = dim.values.restrict(lo, hi);
  const Piecewise& full = dim.values;
  auto computed = [&](const Rational& x) { return full.lo() <= x && x < full.hi(); };

  // (D1)
  IntervalSet bad = view.where([](const Rational& v) { return v < 0 || !is_integer(v); });
  rep.d1 = bad.empty() ? ConditionResult{Check::pass, {}, {}} : fail_on(bad, "non-integer value");

  // (D2) on atoms where xi, xi + 1/2 and 2 xi (mod 1) all fall in the computed window.
  std::vector<Rational> cuts{lo, hi, kHalf};
  for (const auto& b : full.breaks()) {
    cuts.push_back(b);
    cuts.push_back(frac(Rational(b + kHalf)));
    cuts.push_back(Rational(b / 2));
    cuts.push_back(Rational((b + 1) / 2));
  }
  std::erase_if(cuts, [&](const Rational& c) { return c < lo || hi < c; });
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  rep.d2 = {Check::pass, {}, {}};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Rational& u = cuts[i];
    Rational shifted = frac(Rational(u + kHalf));
    Rational doubled = frac(Rational(2 * u));
    if (!computed(u) || !computed(shifted) || !computed(doubled)) continue;
    rep.d2_checked_measure += cuts[i + 1] - u;
    if (full.at(u) + full.at(shifted) != full.at(doubled) + 1 && rep.d2.status == Check::pass)
      rep.d2 = fail_on(IntervalSet::of(u, cuts[i + 1]), "D(xi) + D(xi + 1/2) != D(2 xi) + 1");
  }

  // (D3): Delta_L = {D(2^-j xi) >= 1, j <= L} contains Delta and is
  // 2^L-periodic, so its residue count is 0 or infinite. Residues reachable
  // are the endpoints of length-L doubling orbits inside U.
  IntervalSet unknown = subtract(IntervalSet::of(0, 1), IntervalSet::of(full.lo(), full.hi()));
  IntervalSet u_set = unite(full.where([](const Rational& v) { return v >= 1; }), unknown);
  IntervalSet reach = u_set;
  for (int m = 0; m < depth; ++m) reach = intersect(u_set, residues(scale(2, reach)));
  IntervalSet d3_bad = subtract(view.where([](const Rational& v) { return v >= 1; }), reach);
  rep.d3 = d3_bad.empty()
               ? ConditionResult{Check::no_violation, {}, "no violation found at depth " + std::to_string(depth)}
               : fail_on(d3_bad, "no translate of xi lies in Delta_L while D(xi) >= 1");

  // (D4): liminf_j D(2^-j xi) equals the tail value c(xi) + e on each half-line.
  if (dim.tail) {
    IntervalSet low_pos = dim.tail->c_pos.where([&](const Rational& v) { return v + dim.tail->e_pos < 1; });
    IntervalSet low_neg = dim.tail->c_neg.where([&](const Rational& v) { return v + dim.tail->e_neg < 1; });
    if (!low_pos.empty())
      rep.d4 = fail_on(low_pos, "liminf below 1 on this dyadic annulus (positive side)");
    else if (!low_neg.empty())
      rep.d4 = fail_on(low_neg, "liminf below 1 on this dyadic annulus (negative side)");
    else
      rep.d4 = {Check::pass, {}, {}};
  } else {
    rep.d4 = {Check::no_violation, {}, "spectrum reaches 0; behavior near the integers not determined"};
  }
  return rep;
}

MraResult mra_check(const StepFn& h, int depth) {
  DimFnWindow dim = dimension_function(h, depth);
  MraResult r;
  for (std::size_t i = 0; i < dim.values.pieces(); ++i) {
    if (dim.values.values()[i] == 1) continue;
    r.verdict = MraVerdict::not_mra;
    r.witness = IntervalSet::normalize({dim.values.piece(i)});
    r.witness_value = dim.values.values()[i];
    return r;
  }
  if (dim.boundary_note || !dim.tail) {
    r.note = "dimension function equals 1 on the window; values near the integers are not determined";
    return r;
  }
  const DimTail& t = *dim.tail;
  for (int sign : {1, -1}) {
    const Piecewise& c = sign > 0 ? t.c_pos : t.c_neg;
    const Rational& e = sign > 0 ? t.e_pos : t.e_neg;
    for (std::size_t i = 0; i < c.pieces(); ++i) {
      if (c.values()[i] + e == 1) continue;
      // Move the annulus piece into (0, rho) (or (-rho, 0)), inside one period.
      Interval piece = c.piece(i);
      long m = 1;
      while (pow2(-m) * 2 > t.rho) ++m;
      IntervalSet near = scale(pow2(-m), IntervalSet::normalize({piece}));
      r.verdict = MraVerdict::not_mra;
      r.witness = sign > 0 ? near : translate(1, near);
      r.witness_value = c.values()[i] + e;
      return r;
    }
  }
  r.verdict = MraVerdict::is_mra;
  return r;
}

TqResult tq_check(const StepFn& psi, long alpha) {
  if (alpha % 2 == 0) throw InputError("alpha must be odd (reduce even alpha by dilation first)");
  TqResult r;
  r.alpha = alpha;
  if (psi.is_zero()) return r;
  const Rational reach = max_abs_extent(psi);
  const Rational a(alpha);
  // Both factors are nonzero only when 2^m |alpha| <= 2R.
  for (long m = 0; pow2(m) * abs(a) <= 2 * reach; ++m) {
    StepFn dilated = psi.dilate(pow2(m));
    r.t = r.t + dilated * dilated.shift(a);
  }
  r.zero = r.t.is_zero();
  if (!r.zero) r.witness = IntervalSet::normalize({r.t.pieces().front().span});
  return r;
}

OrthonormalityReport orthonormality_check(const StepFn& psi) {
  OrthonormalityReport rep;
  StepFn h = psi * psi;
  rep.calderon = calderon(h);
  rep.norm_sq = h.integral();
  if (!psi.is_zero()) {
    Integer bound = floor(Rational(2 * max_abs_extent(psi)));
    for (Integer a = -bound; a <= bound; ++a) {
      if (mpz_odd_p(a.get_mpz_t()) == 0) continue;
      TqResult t = tq_check(psi, a.get_si());
      if (!t.zero) rep.tq_failures.push_back(t.alpha);
      rep.tq.push_back(std::move(t));
    }
  }
  rep.pass = rep.calderon.identically_one && rep.tq_failures.empty() && rep.norm_sq == 1;
  return rep;
}

StepFn psi_b_spectrum(const Rational& b) {
  if (b < 0 || b >= 1) throw InputError("b must lie in [0,1)");
  return StepFn::indicator(IntervalSet::normalize({{-1, Rational(-b)}, {b, 1}}));
}

PsiBReport psi_b_report(const Rational& b) {
  PsiBReport rep;
  rep.b = b;
  StepFn psi = psi_b_spectrum(b);
  rep.norm_sq = (psi * psi).integral();
  rep.calderon = calderon(psi * psi);
  rep.orthonormality = orthonormality_check(psi);
  rep.frame_necessary = !rep.calderon.diverges && rep.calderon.min > 0;

  const Rational eighth(1, 8), sixth(1, 6), third(1, 3);
  bool not_frame_row = false;
  if (b == 0) {
    rep.table_row = "not a frame wavelet";
    not_frame_row = true;
  } else if (b <= eighth) {
    rep.table_row = "frame wavelet (not Riesz)";
  } else if (b <= sixth) {
    rep.table_row.clear();
  } else if (b < third) {
    rep.table_row = "not a frame wavelet";
    not_frame_row = true;
  } else if (b < kHalf) {
    rep.table_row = "biorthogonal Riesz wavelet";
  } else if (b == kHalf) {
    rep.table_row = "orthonormal wavelet";
  } else {
    rep.table_row = "not a frame wavelet";
    not_frame_row = true;
  }

  if (rep.table_row.empty()) {
    rep.row_consistent = true;
    rep.row_certified = false;
  } else if (not_frame_row) {
    // Necessary conditions can only refute frame-ness.
    rep.row_consistent = true;
    rep.row_certified = !rep.frame_necessary;
  } else if (rep.table_row == "orthonormal wavelet") {
    rep.row_consistent = rep.orthonormality.pass;
    rep.row_certified = rep.orthonormality.pass;
  } else {
    rep.row_consistent = rep.frame_necessary;
    rep.row_certified = false;
  }
  return rep;
}

}  // namespace waveset
