#pragma once

#include "waveset/intervals.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace waveset {

/// Piecewise-constant function on a bounded domain [breaks.front(), breaks.back()).
/// Piece i is [breaks[i], breaks[i+1]) with value values[i]. Adjacent pieces
/// never share a value.
class Piecewise {
 public:
  Piecewise(std::vector<Rational> breaks, std::vector<Rational> values);
  static Piecewise constant(const Rational& lo, const Rational& hi, const Rational& value);

  const std::vector<Rational>& breaks() const { return breaks_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }
  const Rational& lo() const { return breaks_.front(); }
  const Rational& hi() const { return breaks_.back(); }
  Interval piece(std::size_t i) const { return {breaks_[i], breaks_[i + 1]}; }

  /// Value at x (right-continuous). Precondition: lo() <= x < hi().
  const Rational& at(const Rational& x) const;
  Rational integral() const;
  Rational min() const;
  Rational max() const;

  /// Restriction to [lo, hi) which must lie inside the domain.
  Piecewise restrict(const Rational& lo, const Rational& hi) const;
  /// Union of the pieces whose value satisfies pred.
  IntervalSet where(const std::function<bool(const Rational&)>& pred) const;

  friend bool operator==(const Piecewise&, const Piecewise&) = default;

 private:
  std::vector<Rational> breaks_;
  std::vector<Rational> values_;
};

/// 1-periodic step function, stored on the fundamental domain [0,1).
using TorusStep = Piecewise;

/// Accumulates "add value on [lo,hi)" contributions over a fixed domain and
/// produces the resulting Piecewise.
class PiecewiseAccumulator {
 public:
  PiecewiseAccumulator(Rational lo, Rational hi, Rational base = 0);
  /// Adds value on [lo,hi) clipped to the domain.
  void add(const Rational& lo, const Rational& hi, const Rational& value);
  void add_constant(const Rational& value) { base_ += value; }
  void mark(const Rational& x);
  Piecewise build() const;

 private:
  Rational lo_;
  Rational hi_;
  Rational base_;
  std::map<Rational, Rational> deltas_;
};

}  // namespace waveset
