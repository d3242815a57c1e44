#pragma once

#include "waveset/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace waveset {

/// a + b*sqrt(d) with d square-free and >= 2; d == 0 marks a plain rational.
class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(Rational a);  // NOLINT: rationals embed implicitly
  QuadScalar(Rational a, Rational b, long d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  Rational norm() const { return Rational(a_ * a_ - Rational(d_) * b_ * b_); }
  QuadScalar conjugate() const { return {a_, Rational(-b_), d_}; }

  friend QuadScalar operator+(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator-(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y);
  friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y);
  QuadScalar operator-() const { return {Rational(-a_), Rational(-b_), d_}; }
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) { return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_; }

  /// Non-negative square root inside Q(sqrt(field)), if it exists there.
  std::optional<QuadScalar> sqrt_in_field(long field) const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  long d_ = 0;
};

/// Field tag shared by two scalars; throws InputError for different fields.
long common_field(long d1, long d2);
bool is_square_free(long d);

/// Row-major 2x2 matrix over Q or a single Q(sqrt(d)).
struct Mat2 {
  std::array<QuadScalar, 4> e{};

  static Mat2 identity() { return {{Rational(1), Rational(0), Rational(0), Rational(1)}}; }
  const QuadScalar& operator()(int r, int c) const { return e[static_cast<std::size_t>(2 * r + c)]; }
  QuadScalar& operator()(int r, int c) { return e[static_cast<std::size_t>(2 * r + c)]; }

  QuadScalar det() const;
  QuadScalar trace() const;
  long field() const;
  bool is_rational() const;
  Mat2 transpose() const;
  Mat2 inverse() const;
  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

enum class MsfVerdict { exists, not_exists, unsupported };
const char* to_string(MsfVerdict v);

struct MsfDecision {
  MsfVerdict verdict = MsfVerdict::exists;
  std::optional<QuadScalar> contracting_eigenvalue;
  std::optional<std::array<Integer, 2>> witness;  ///< z in Z^2 with P z in the contracting eigenspace
  bool unit_eigenvalue = false;                   ///< some eigenvalue has modulus exactly 1
  QuadScalar det;
  std::string note;
};

/// Existence of an (A, P Z^2)-wavelet set. Requires |det A| > 1 and P invertible.
MsfDecision wavelet_set_exists(const Mat2& a, const Mat2& p);

/// #{z in Z^2 : |A^-j P z| <= 1}. Rational matrices only.
Integer lattice_count(const Mat2& a, const Mat2& p, long j);

struct LceRow {
  long j;
  Integer count;
  Rational ratio;  ///< count / max(1, |det A|^j)
};

struct LceReport {
  std::vector<LceRow> rows;
  Rational c;
  bool bounded = true;
  std::optional<long> witness_j;
};

/// Finite-range probe of #|Gamma n A^j B(0,1)| <= C max(1, |det A|^j).
LceReport lce_report(const Mat2& a, const Mat2& p, long jmin, long jmax, const Rational& c);

}  // namespace waveset
