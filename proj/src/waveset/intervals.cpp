#include "waveset/intervals.hpp"

#include "waveset/errors.hpp"

#include <algorithm>

namespace waveset {

namespace {

// Appends [lo,hi) to an already canonical, sorted list whose last element
// starts at or before lo.
void append_merged(std::vector<Interval>& out, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) return;
  if (!out.empty() && lo <= out.back().hi) {
    if (out.back().hi < hi) out.back().hi = hi;
    return;
  }
  out.push_back({lo, hi});
}

}  // namespace

class IntervalSetBuilder {
 public:
  static IntervalSet adopt(std::vector<Interval> canonical) { return IntervalSet(std::move(canonical)); }
};

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
  for (const auto& iv : raw)
    if (iv.hi < iv.lo) throw InputError("interval with lo > hi: [" + to_string(iv.lo) + "," + to_string(iv.hi) + ")");
  std::sort(raw.begin(), raw.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  out.reserve(raw.size());
  for (const auto& iv : raw) append_merged(out, iv.lo, iv.hi);
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::of(const Rational& lo, const Rational& hi) { return normalize({{lo, hi}}); }

Rational IntervalSet::measure() const {
  Rational m = 0;
  for (const auto& iv : parts_) m += iv.hi - iv.lo;
  return m;
}

bool IntervalSet::contains(const Rational& x) const {
  auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                             [](const Rational& v, const Interval& iv) { return v < iv.lo; });
  if (it == parts_.begin()) return false;
  return std::prev(it)->contains(x);
}

Interval IntervalSet::hull() const { return {parts_.front().lo, parts_.back().hi}; }

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  out.reserve(a.size() + b.size());
  auto pa = a.parts();
  auto pb = b.parts();
  std::size_t i = 0, j = 0;
  while (i < pa.size() || j < pb.size()) {
    const Interval& next = (j == pb.size() || (i < pa.size() && pa[i].lo <= pb[j].lo)) ? pa[i++] : pb[j++];
    append_merged(out, next.lo, next.hi);
  }
  return IntervalSetBuilder::adopt(std::move(out));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  auto pa = a.parts();
  auto pb = b.parts();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    const Rational& lo = std::max(pa[i].lo, pb[j].lo);
    const Rational& hi = std::min(pa[i].hi, pb[j].hi);
    if (lo < hi) out.push_back({lo, hi});
    if (pa[i].hi < pb[j].hi)
      ++i;
    else
      ++j;
  }
  return IntervalSetBuilder::adopt(std::move(out));
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  auto pb = b.parts();
  std::size_t j = 0;
  for (const auto& iv : a.parts()) {
    Rational cur = iv.lo;
    while (j < pb.size() && pb[j].hi <= cur) ++j;
    std::size_t k = j;
    while (k < pb.size() && pb[k].lo < iv.hi) {
      if (cur < pb[k].lo) out.push_back({cur, pb[k].lo});
      if (cur < pb[k].hi) cur = pb[k].hi;
      if (!(cur < iv.hi)) break;
      ++k;
    }
    if (cur < iv.hi) out.push_back({cur, iv.hi});
  }
  return IntervalSetBuilder::adopt(std::move(out));
}

IntervalSet scale(const Rational& s, const IntervalSet& set) {
  if (s == 0) throw InputError("scale factor must be nonzero");
  std::vector<Interval> out;
  out.reserve(set.size());
  if (s > 0) {
    for (const auto& iv : set.parts()) out.push_back({Rational(s * iv.lo), Rational(s * iv.hi)});
  } else {
    auto parts = set.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it)
      out.push_back({Rational(s * it->hi), Rational(s * it->lo)});
  }
  return IntervalSetBuilder::adopt(std::move(out));
}

IntervalSet translate(const Rational& t, const IntervalSet& set) {
  std::vector<Interval> out;
  out.reserve(set.size());
  for (const auto& iv : set.parts()) out.push_back({Rational(iv.lo + t), Rational(iv.hi + t)});
  return IntervalSetBuilder::adopt(std::move(out));
}

Rational sym_diff_measure(const IntervalSet& a, const IntervalSet& b) {
  return Rational(subtract(a, b).measure() + subtract(b, a).measure());
}

bool subset_mod_null(const IntervalSet& a, const IntervalSet& b) { return subtract(a, b).empty(); }

}  // namespace waveset
