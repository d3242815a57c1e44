#pragma once

#include "waveset/intervals.hpp"
#include "waveset/step_fn.hpp"

#include <optional>
#include <string>
#include <utility>

namespace waveset {

/// Certified bounds on how far a depth-truncated construction may be from the
/// infinite-depth set. All bounds are exact rationals and are zero when the
/// truncation is proven lossless.
struct DefectReport {
  Rational s1_defect = 0;        ///< bound on |S \ 2S|
  Rational coverage_defect = 0;  ///< bound on |S_computed (sym. diff.) S_ideal|
  bool containment_exact = true;
  int depth_n = 0;
  int depth_j = 0;
  bool exact = false;      ///< every truncation source certified empty
  bool fast_path = false;  ///< transversal K stayed inside [-1/2,1/2)
};

struct ScalingSetResult {
  IntervalSet s;
  IntervalSet w;  ///< 2S \ S
  IntervalSet k;  ///< the transversal the construction was built from
  DefectReport defects;
};

inline constexpr int kDefaultDepthN = 40;
inline constexpr int kDefaultDepthJ = 40;

bool check_S1(const IntervalSet& s);
/// Largest (a, b) with (-a,0) u (0,b) contained in s, if any.
std::optional<std::pair<Rational, Rational>> zero_neighborhood(const IntervalSet& s);
bool check_S2(const IntervalSet& s);

/// Part of (-d, d) missing from s, d the smallest nonzero endpoint modulus
/// (capped at 1). Non-null exactly when (S2) fails.
IntervalSet zero_gap(const IntervalSet& s);

/// Scaling set inside `cover`, which must satisfy (S1), (S2) and the covering
/// condition. E_n is truncated at relative depth j <= n + depth_j and the union
/// at n <= depth_n. Throws PreconditionError naming the failed condition.
ScalingSetResult construct_scaling_set(const IntervalSet& cover, int depth_n = kDefaultDepthN,
                                       int depth_j = kDefaultDepthJ);

/// Scaling set inside the support of a scaling function's transform.
ScalingSetResult scaling_set_in_support(const IntervalSet& support, int depth_n = kDefaultDepthN,
                                        int depth_j = kDefaultDepthJ);

struct WaveletSetVerdict {
  bool pass = false;
  std::string reason;  ///< empty on pass
  IntervalSet witness;
};

/// Exact decision whether {w + k} and {2^j w} both tile the line.
WaveletSetVerdict verify_wavelet_set(const IntervalSet& w);

struct RzeResult {
  ScalingSetResult scaling;
  StepFn psi_spectrum;  ///< |psi^|^2 = g(./2) - g
  IntervalSet supp_psi;
  bool contained = false;
  Rational uncontained_measure = 0;  ///< |W \ supp psi^|
  Rational containment_bound = 0;    ///< certified bound on |W \ supp psi^|
};

/// Wavelet set inside the frequency support of the MRA wavelet whose scaling
/// spectrum is g = |phi^|^2.
RzeResult rze_pipeline(const StepFn& g, int depth_n = kDefaultDepthN, int depth_j = kDefaultDepthJ);

}  // namespace waveset
