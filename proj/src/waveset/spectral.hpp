#pragma once

#include "waveset/intervals.hpp"
#include "waveset/piecewise.hpp"
#include "waveset/step_fn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace waveset {

inline constexpr int kDefaultDimDepth = 20;

struct SpectrumVerdict {
  bool pass = false;
  bool f1 = false;
  bool f2 = false;
  bool f3 = false;
  std::string condition;  ///< first failed condition ("nonnegative", "F3", "F2", "F1")
  IntervalSet witness;
};

/// Checks (F1)-(F3) exactly for g = |phi^|^2.
SpectrumVerdict validate_scaling_spectrum(const StepFn& g);

/// h(xi) = g(xi/2) - g(xi). Throws PreconditionError("nonnegative") where h < 0.
StepFn psi_spectrum_from_scaling(const StepFn& g);

/// Calderon sum sum_j h(2^j xi) on one half-line, as a function on the annulus
/// [1,2) (positive side) or [-2,-1) (negative side). Empty when the sum
/// diverges because h stays positive up to 0 on that side.
struct CalderonSide {
  std::optional<Piecewise> sum;
  bool diverges() const { return !sum.has_value(); }
};

struct CalderonResult {
  CalderonSide positive;
  CalderonSide negative;
  bool diverges = false;
  Rational min = 0;  ///< over the finite sides
  Rational max = 0;
  bool identically_one = false;
};

CalderonResult calderon(const StepFn& h);

/// Behavior of the dimension function next to the integers, where the window
/// cannot reach: for 0 < y < rho, D(y) = c+(y) + e+ and D(-y) = c-(-y) + e-.
struct DimTail {
  Piecewise c_pos;  ///< Calderon sum on [1,2)
  Piecewise c_neg;  ///< Calderon sum on [-2,-1)
  Rational e_pos;
  Rational e_neg;
  Rational rho;
};

struct DimFnWindow {
  Piecewise values;  ///< D on [2^-L, 1 - 2^-L)
  int depth = 0;
  bool boundary_note = true;  ///< D near the integers is not determined by this object
  std::optional<DimTail> tail;

  /// D(y) for any real y, when determined.
  std::optional<Rational> at(const Rational& y) const;
};

/// Wavelet dimension function of h = |psi^|^2, exact on the depth-L window.
DimFnWindow dimension_function(const StepFn& h, int depth = kDefaultDimDepth);

enum class Check { pass, fail, no_violation };
const char* to_string(Check c);

struct ConditionResult {
  Check status = Check::no_violation;
  IntervalSet witness;
  std::string note;
};

struct DimConditionsReport {
  int depth = 0;
  ConditionResult d1, d2, d3, d4;
  Rational d2_checked_measure = 0;
};

/// (D1)-(D4) at depth L. The window must be computed at depth >= L + 2.
DimConditionsReport check_D1_D4(const DimFnWindow& dim, int depth);

enum class MraVerdict { is_mra, not_mra, inconclusive };
const char* to_string(MraVerdict v);

struct MraResult {
  MraVerdict verdict = MraVerdict::inconclusive;
  IntervalSet witness;
  Rational witness_value = 0;
  std::string note;
};

MraResult mra_check(const StepFn& h, int depth = kDefaultDimDepth);

struct TqResult {
  long alpha = 1;
  StepFn t;  ///< sum_{m>=0} psi(2^m xi) psi(2^m (xi + alpha))
  bool zero = true;
  IntervalSet witness;
};

/// Translation equation for odd alpha, with real-valued psi^.
TqResult tq_check(const StepFn& psi, long alpha);

struct OrthonormalityReport {
  bool pass = false;
  CalderonResult calderon;
  Rational norm_sq = 0;
  std::vector<TqResult> tq;  ///< every odd |alpha| <= 2R
  std::vector<long> tq_failures;
};

OrthonormalityReport orthonormality_check(const StepFn& psi);

StepFn psi_b_spectrum(const Rational& b);

struct PsiBReport {
  Rational b;
  Rational norm_sq;
  CalderonResult calderon;
  OrthonormalityReport orthonormality;
  bool frame_necessary = false;  ///< Calderon sum bounded above and away from 0
  std::string table_row;         ///< empty when b lies in the open range (1/8, 1/6]
  bool row_consistent = true;
  bool row_certified = false;
};

PsiBReport psi_b_report(const Rational& b);

}  // namespace waveset
