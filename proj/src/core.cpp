#include "pyth/core.hpp"

#include <tuple>

namespace pyth {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegralResult: return "NonIntegralResult";
    case ErrorKind::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorKind::NotOnUnitConic: return "NotOnUnitConic";
    case ErrorKind::NotPositiveNonSquare: return "NotPositiveNonSquare";
    case ErrorKind::DegeneratePoint: return "DegeneratePoint";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

bool triple_less(const Triple& a, const Triple& b) {
  return std::tie(a.x(), a.y(), a.z()) < std::tie(b.x(), b.y(), b.z());
}

std::string to_string(const Triple& t) {
  return t.x().str() + "," + t.y().str() + "," + t.z().str();
}

std::string to_string(const ConicPoint& p) { return p.u.str() + "," + p.v.str(); }

Matrix3<Int> to_integral(const Mat3& m) {
  Matrix3<Int> out;
  for (Eigen::Index i = 0; i < 9; ++i) {
    if (!m(i).is_integer()) {
      throw Error(ErrorKind::NonIntegralResult, "matrix entry " + m(i).str() + " is not an integer");
    }
    out(i) = m(i).to_int();
  }
  return out;
}

Triple to_integral(const Vector3<Rat>& v) {
  Triple out;
  for (Eigen::Index i = 0; i < 3; ++i) {
    if (!v(i).is_integer()) {
      throw Error(ErrorKind::NonIntegralResult,
                  "component " + std::to_string(i + 1) + " is " + v(i).str());
    }
    out(i) = v(i).to_int();
  }
  return out;
}

Triple mat_vec(const Mat3& a, const Triple& t) { return to_integral(Vector3<Rat>(a * to_rational(t))); }

Triple row_vec(const Triple& t, const Mat3& a) {
  return to_integral(Vector3<Rat>(a.transpose() * to_rational(t)));
}

}  // namespace pyth
