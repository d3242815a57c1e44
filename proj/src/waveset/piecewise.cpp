#include "waveset/piecewise.hpp"

#include "waveset/errors.hpp"

#include <algorithm>

namespace waveset {

Piecewise::Piecewise(std::vector<Rational> breaks, std::vector<Rational> values) {
  if (breaks.size() < 2 || values.size() + 1 != breaks.size())
    throw InputError("piecewise function needs n+1 breaks for n values");
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (!(breaks[i] < breaks[i + 1])) throw InputError("piecewise breaks must be strictly increasing");
  breaks_.push_back(breaks.front());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values_.empty() && values_.back() == values[i]) {
      breaks_.back() = breaks[i + 1];
      continue;
    }
    values_.push_back(values[i]);
    breaks_.push_back(breaks[i + 1]);
  }
}

Piecewise Piecewise::constant(const Rational& lo, const Rational& hi, const Rational& value) {
  return Piecewise({lo, hi}, {value});
}

const Rational& Piecewise::at(const Rational& x) const {
  if (x < lo() || !(x < hi())) throw InputError("evaluation point " + to_string(x) + " outside domain");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

Rational Piecewise::integral() const {
  Rational s = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * (breaks_[i + 1] - breaks_[i]);
  return s;
}

Rational Piecewise::min() const { return *std::min_element(values_.begin(), values_.end()); }
Rational Piecewise::max() const { return *std::max_element(values_.begin(), values_.end()); }

Piecewise Piecewise::restrict(const Rational& lo, const Rational& hi) const {
  if (lo < this->lo() || this->hi() < hi || !(lo < hi)) throw InputError("restriction outside domain");
  std::vector<Rational> b{lo};
  std::vector<Rational> v;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (breaks_[i + 1] <= lo || hi <= breaks_[i]) continue;
    v.push_back(values_[i]);
    b.push_back(std::min(breaks_[i + 1], hi));
  }
  return Piecewise(std::move(b), std::move(v));
}

IntervalSet Piecewise::where(const std::function<bool(const Rational&)>& pred) const {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (pred(values_[i])) out.push_back(piece(i));
  return IntervalSet::normalize(std::move(out));
}

PiecewiseAccumulator::PiecewiseAccumulator(Rational lo, Rational hi, Rational base)
    : lo_(std::move(lo)), hi_(std::move(hi)), base_(std::move(base)) {
  if (!(lo_ < hi_)) throw InputError("empty accumulator domain");
}

void PiecewiseAccumulator::add(const Rational& lo, const Rational& hi, const Rational& value) {
  const Rational& a = std::max(lo, lo_);
  const Rational& b = std::min(hi, hi_);
  if (!(a < b) || value == 0) return;
  deltas_[a] += value;
  deltas_[b] -= value;
}

void PiecewiseAccumulator::mark(const Rational& x) {
  if (lo_ < x && x < hi_) deltas_.try_emplace(x, 0);
}

Piecewise PiecewiseAccumulator::build() const {
  std::vector<Rational> breaks{lo_};
  std::vector<Rational> values;
  Rational cur = base_;
  auto it = deltas_.begin();
  if (it != deltas_.end() && it->first == lo_) {
    cur += it->second;
    ++it;
  }
  for (; it != deltas_.end() && it->first < hi_; ++it) {
    values.push_back(cur);
    breaks.push_back(it->first);
    cur += it->second;
  }
  values.push_back(cur);
  breaks.push_back(hi_);
  return Piecewise(std::move(breaks), std::move(values));
}

}  // namespace waveset
