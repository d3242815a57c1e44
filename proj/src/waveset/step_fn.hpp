#pragma once

#include "waveset/intervals.hpp"

#include <functional>
#include <vector>

namespace waveset {

struct StepPiece {
  Interval span;
  Rational value;
  friend bool operator==(const StepPiece&, const StepPiece&) = default;
};

/// Compactly supported piecewise-constant function on the real line with
/// rational breakpoints and values; zero outside the stored pieces. Canonical:
/// pieces sorted and disjoint, no zero values, touching equal-valued pieces
/// merged.
class StepFn {
 public:
  StepFn() = default;

  /// Rejects overlapping pieces; drops zero-valued and empty pieces.
  static StepFn from_pieces(std::vector<StepPiece> pieces);
  static StepFn indicator(const IntervalSet& set, const Rational& value = 1);

  const std::vector<StepPiece>& pieces() const { return pieces_; }
  bool is_zero() const { return pieces_.empty(); }

  /// Right-continuous value f(x).
  Rational at(const Rational& x) const;
  /// lim f(y) as y -> x from below.
  Rational left_limit(const Rational& x) const;

  IntervalSet support() const;
  Rational integral() const;
  bool nonnegative() const;
  /// Min and max over the real line, including the implicit zero outside the support.
  Rational min() const;
  Rational max() const;

  /// x -> f(s*x), s != 0.
  StepFn dilate(const Rational& s) const;
  /// x -> f(x + t).
  StepFn shift(const Rational& t) const;

  friend bool operator==(const StepFn&, const StepFn&) = default;

 private:
  std::vector<StepPiece> pieces_;
};

/// Pointwise combination; op(0,0) must be 0.
StepFn combine(const StepFn& a, const StepFn& b, const std::function<Rational(const Rational&, const Rational&)>& op);
StepFn operator+(const StepFn& a, const StepFn& b);
StepFn operator-(const StepFn& a, const StepFn& b);
StepFn operator*(const StepFn& a, const StepFn& b);

}  // namespace waveset
