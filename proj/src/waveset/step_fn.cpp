#include "waveset/step_fn.hpp"

#include "waveset/errors.hpp"

#include <algorithm>

namespace waveset {

namespace {

std::vector<StepPiece> canonical(std::vector<StepPiece> sorted) {
  std::vector<StepPiece> out;
  out.reserve(sorted.size());
  for (auto& p : sorted) {
    if (p.value == 0 || !(p.span.lo < p.span.hi)) continue;
    if (!out.empty() && out.back().span.hi == p.span.lo && out.back().value == p.value) {
      out.back().span.hi = p.span.hi;
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

const StepPiece* find_piece(const std::vector<StepPiece>& pieces, const Rational& x) {
  auto it = std::upper_bound(pieces.begin(), pieces.end(), x,
                             [](const Rational& v, const StepPiece& p) { return v < p.span.lo; });
  if (it == pieces.begin()) return nullptr;
  --it;
  return it->span.contains(x) ? &*it : nullptr;
}

}  // namespace

StepFn StepFn::from_pieces(std::vector<StepPiece> pieces) {
  for (const auto& p : pieces)
    if (p.span.hi < p.span.lo) throw InputError("step piece with lo > hi");
  std::erase_if(pieces, [](const StepPiece& p) { return !(p.span.lo < p.span.hi); });
  std::sort(pieces.begin(), pieces.end(), [](const StepPiece& x, const StepPiece& y) { return x.span.lo < y.span.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i].span.lo < pieces[i - 1].span.hi)
      throw InputError("overlapping step pieces at [" + to_string(pieces[i].span.lo) + "," +
                       to_string(pieces[i - 1].span.hi) + ")");
  StepFn f;
  f.pieces_ = canonical(std::move(pieces));
  return f;
}

StepFn StepFn::indicator(const IntervalSet& set, const Rational& value) {
  std::vector<StepPiece> pieces;
  for (const auto& iv : set.parts()) pieces.push_back({iv, value});
  StepFn f;
  f.pieces_ = canonical(std::move(pieces));
  return f;
}

Rational StepFn::at(const Rational& x) const {
  const StepPiece* p = find_piece(pieces_, x);
  return p ? p->value : Rational(0);
}

Rational StepFn::left_limit(const Rational& x) const {
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const StepPiece& p, const Rational& v) { return p.span.lo < v; });
  if (it == pieces_.begin()) return 0;
  --it;
  return (it->span.lo < x && x <= it->span.hi) ? it->value : Rational(0);
}

IntervalSet StepFn::support() const {
  std::vector<Interval> parts;
  for (const auto& p : pieces_) parts.push_back(p.span);
  return IntervalSet::normalize(std::move(parts));
}

Rational StepFn::integral() const {
  Rational s = 0;
  for (const auto& p : pieces_) s += p.value * p.span.length();
  return s;
}

bool StepFn::nonnegative() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const StepPiece& p) { return p.value > 0; });
}

Rational StepFn::min() const {
  Rational m = 0;
  for (const auto& p : pieces_) m = std::min(m, p.value);
  return m;
}

Rational StepFn::max() const {
  Rational m = 0;
  for (const auto& p : pieces_) m = std::max(m, p.value);
  return m;
}

StepFn StepFn::dilate(const Rational& s) const {
  if (s == 0) throw InputError("dilation factor must be nonzero");
  Rational inv = 1 / s;
  std::vector<StepPiece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    Rational a = p.span.lo * inv, b = p.span.hi * inv;
    if (s > 0)
      out.push_back({{a, b}, p.value});
    else
      out.push_back({{b, a}, p.value});
  }
  if (s < 0) std::reverse(out.begin(), out.end());
  StepFn f;
  f.pieces_ = canonical(std::move(out));
  return f;
}

StepFn StepFn::shift(const Rational& t) const {
  StepFn f = *this;
  for (auto& p : f.pieces_) {
    p.span.lo -= t;
    p.span.hi -= t;
  }
  return f;
}

StepFn combine(const StepFn& a, const StepFn& b, const std::function<Rational(const Rational&, const Rational&)>& op) {
  std::vector<Rational> cuts;
  for (const auto* f : {&a, &b})
    for (const auto& p : f->pieces()) {
      cuts.push_back(p.span.lo);
      cuts.push_back(p.span.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<StepPiece> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational v = op(a.at(cuts[i]), b.at(cuts[i]));
    if (v != 0) out.push_back({{cuts[i], cuts[i + 1]}, std::move(v)});
  }
  return StepFn::from_pieces(std::move(out));
}

StepFn operator+(const StepFn& a, const StepFn& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); });
}
StepFn operator-(const StepFn& a, const StepFn& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); });
}
StepFn operator*(const StepFn& a, const StepFn& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); });
}

}  // namespace waveset
