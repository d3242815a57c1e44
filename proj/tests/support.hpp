// Shared test helpers: literals, random generators, and conversions to the
// brute-force oracle types.
#pragma once

#include "oracles.hpp"
#include "waveset/intervals.hpp"
#include "waveset/rational.hpp"
#include "waveset/step_fn.hpp"
#include "waveset/torus.hpp"

#include <algorithm>
#include <random>
#include <tuple>
#include <string>
#include <vector>

namespace test {

using waveset::Interval;
using waveset::IntervalSet;
using waveset::Rational;
using waveset::StepFn;

inline Rational q(const std::string& s) { return waveset::parse_rational(s); }

inline IntervalSet set(std::initializer_list<std::pair<const char*, const char*>> ivs) {
  std::vector<Interval> raw;
  for (const auto& [lo, hi] : ivs) raw.push_back({q(lo), q(hi)});
  return IntervalSet::normalize(std::move(raw));
}

inline StepFn step(std::initializer_list<std::tuple<const char*, const char*, const char*>> pieces) {
  std::vector<waveset::StepPiece> raw;
  for (const auto& [lo, hi, v] : pieces) raw.push_back({{q(lo), q(hi)}, q(v)});
  return StepFn::from_pieces(std::move(raw));
}

inline oracle::RawSet raw(const IntervalSet& s) {
  oracle::RawSet r;
  for (const auto& iv : s.parts()) r.ivs.push_back({iv.lo, iv.hi});
  return r;
}

inline oracle::RawStep raw(const StepFn& f) {
  oracle::RawStep r;
  for (const auto& p : f.pieces()) r.pieces.push_back({{p.span.lo, p.span.hi}, p.value});
  return r;
}

/// Up to max_parts random intervals (possibly overlapping or touching) with
/// endpoints on the grid (1/den) Z inside [-range, range].
inline std::vector<Interval> random_intervals(std::mt19937_64& rng, int max_parts = 5, long range = 3,
                                              long den = 8) {
  std::uniform_int_distribution<int> count(0, max_parts);
  std::vector<Interval> out;
  for (int i = count(rng); i > 0; --i) {
    Rational a = oracle::random_rational(rng, range, den), b = oracle::random_rational(rng, range, den);
    if (b < a) std::swap(a, b);
    out.push_back({a, b});
  }
  return out;
}

inline IntervalSet random_set(std::mt19937_64& rng, int max_parts = 5, long range = 3, long den = 8) {
  return IntervalSet::normalize(random_intervals(rng, max_parts, range, den));
}

inline StepFn random_step(std::mt19937_64& rng, int max_parts = 4, long range = 2, long den = 8) {
  // Disjoint pieces from consecutive sorted grid points.
  std::uniform_int_distribution<int> count(1, max_parts);
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<Rational> pts;
  for (int i = 2 * count(rng); i > 0; --i) pts.push_back(oracle::random_rational(rng, range, den));
  std::sort(pts.begin(), pts.end());
  std::vector<waveset::StepPiece> pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); i += 2) pieces.push_back({{pts[i], pts[i + 1]}, Rational(value(rng)) / 2});
  return StepFn::from_pieces(std::move(pieces));
}

// Random set satisfying (S1), (S2) and the covering condition: a
// neighborhood [-a,b) of 0 grown by intervals whose halves already lie inside.
// Narrow neighborhoods force far pieces into the transversal.
inline waveset::IntervalSet random_scaling_cover(std::mt19937_64& rng, bool narrow = false) {
  for (;;) {
    std::uniform_int_distribution<int> grid(1, narrow ? 5 : 12), extra(narrow ? 2 : 0, narrow ? 7 : 3);
    waveset::Rational a = waveset::Rational(grid(rng)) / 16, b = waveset::Rational(grid(rng)) / 16;
    waveset::IntervalSet s = waveset::IntervalSet::of(-a, b);
    for (int i = extra(rng); i > 0; --i) {
      // Pick [c,d) with [c/2, d/2) inside a random part of s.
      const waveset::Interval& part = s.parts()[static_cast<std::size_t>(rng() % s.size())];
      waveset::Rational u = oracle::random_point(rng, part.lo, part.hi, 32), v = oracle::random_point(rng, part.lo, part.hi, 32);
      if (v < u) std::swap(u, v);
      s = waveset::unite(s, waveset::IntervalSet::normalize({{2 * u, 2 * v}}));
    }
    if (waveset::check_cover_r4(s)) return s;
  }
}

}  // namespace test
