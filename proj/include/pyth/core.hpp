#pragma once

// Triples, conic points, parameter labels and the exact 3x3 algebra shared by
// every other module. Triples act as column vectors unless a function says
// otherwise.

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

#include "pyth/scalar.hpp"

namespace pyth {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;
template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using Triple = Vector3<Int>;
using Mat3 = Matrix3<Rat>;

struct ConicPoint {
  Int u;
  Int v;

  friend bool operator==(const ConicPoint&, const ConicPoint&) = default;
  friend auto operator<=>(const ConicPoint&, const ConicPoint&) = default;
};

/// Label (beta, gamma) selecting one product, conic and matrix family.
struct BetaGamma {
  Rat beta;
  Rat gamma;

  bool is_integral() const { return beta.is_integer() && gamma.is_integer(); }
  friend bool operator==(const BetaGamma&, const BetaGamma&) = default;
};

enum class ErrorKind {
  NonIntegralResult,
  InvalidFamilyParams,
  NotOnUnitConic,
  NotPositiveNonSquare,
  DegeneratePoint,
};

std::string_view error_name(ErrorKind kind);

/// Domain error raised by the library; `kind()` names the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const { return kind_; }
  std::string_view name() const { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

inline Triple triple(Int x, Int y, Int z) { return Triple(std::move(x), std::move(y), std::move(z)); }

template <typename Scalar>
bool is_pythagorean(const Vector3<Scalar>& t) {
  return t.x() * t.x() + t.y() * t.y() == t.z() * t.z();
}

/// Lexicographic order on triples, for sorting and deduplicating samples.
bool triple_less(const Triple& a, const Triple& b);

std::string to_string(const Triple& t);
std::string to_string(const ConicPoint& p);

template <typename Scalar>
bool is_integral(const Matrix3<Scalar>& m) {
  for (Eigen::Index i = 0; i < 9; ++i) {
    if (!is_integral_value(m(i))) return false;
  }
  return true;
}

/// Throws Error(NonIntegralResult) when some entry has a denominator.
Matrix3<Int> to_integral(const Mat3& m);
Triple to_integral(const Vector3<Rat>& v);

inline Mat3 to_rational(const Matrix3<Int>& m) { return m.cast<Rat>(); }
inline Vector3<Rat> to_rational(const Triple& t) { return t.cast<Rat>(); }

template <typename Scalar>
Matrix3<Scalar> mat_mul(const Matrix3<Scalar>& a, const Matrix3<Scalar>& b) {
  return a * b;
}

/// Exact product a.t; throws Error(NonIntegralResult) if a component is not an integer.
Triple mat_vec(const Mat3& a, const Triple& t);
inline Triple mat_vec(const Matrix3<Int>& a, const Triple& t) { return a * t; }

/// Row action t^T.a, returned as a triple.
Triple row_vec(const Triple& t, const Mat3& a);
inline Triple row_vec(const Triple& t, const Matrix3<Int>& a) { return a.transpose() * t; }

template <typename Scalar>
Scalar det(const Matrix3<Scalar>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// a^n by repeated squaring; a^0 is the identity.
template <typename Scalar>
Matrix3<Scalar> mat_pow(Matrix3<Scalar> a, unsigned long n) {
  Matrix3<Scalar> result = Matrix3<Scalar>::Identity();
  while (n > 0) {
    if (n & 1UL) result = result * a;
    n >>= 1;
    if (n > 0) a = a * a;
  }
  return result;
}

}  // namespace pyth
