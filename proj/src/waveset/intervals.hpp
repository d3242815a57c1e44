#pragma once

#include "waveset/rational.hpp"

#include <span>
#include <vector>

namespace waveset {

/// Half-open interval [lo, hi). Stored intervals always satisfy lo < hi.
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return Rational(hi - lo); }
  bool contains(const Rational& x) const { return lo <= x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite union of half-open rational intervals in canonical form: parts
/// sorted, pairwise separated by gaps of positive length. Two sets that agree
/// modulo null sets have identical representations, so operator== is equality
/// modulo null sets.
class IntervalSet {
 public:
  IntervalSet() = default;

  /// Canonical form of an arbitrary list (unsorted, overlapping, touching,
  /// zero-length entries allowed). Entries with lo > hi are rejected.
  static IntervalSet normalize(std::vector<Interval> raw);
  static IntervalSet of(const Rational& lo, const Rational& hi);

  std::span<const Interval> parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Rational measure() const;
  bool contains(const Rational& x) const;
  /// Smallest interval containing the set. Precondition: non-empty.
  Interval hull() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  explicit IntervalSet(std::vector<Interval> canonical) : parts_(std::move(canonical)) {}
  friend class IntervalSetBuilder;

  std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);

/// Image {s*x : x in set}. Negative s reverses orientation; s == 0 throws.
IntervalSet scale(const Rational& s, const IntervalSet& set);
IntervalSet translate(const Rational& t, const IntervalSet& set);

inline Rational measure(const IntervalSet& s) { return s.measure(); }
Rational sym_diff_measure(const IntervalSet& a, const IntervalSet& b);
bool subset_mod_null(const IntervalSet& a, const IntervalSet& b);

}  // namespace waveset
