#pragma once

// Linear injections nu: Z^3 -> M_3, exact decision procedures for the three
// naturality axioms, and the three classified families of natural forms.
//
// Every injection handled here is linear in (x, y, z), so each axiom is a
// bilinear identity and holds everywhere iff it holds on the nine ordered
// pairs of basis triples.

#include <array>
#include <optional>
#include <utility>
#include <variant>

#include "pyth/core.hpp"

namespace pyth {

/// nu(x,y,z) = x*X + y*Y + z*Z for three constant matrices.
template <typename Scalar>
struct LinearForm {
  Matrix3<Scalar> x_coeff;
  Matrix3<Scalar> y_coeff;
  Matrix3<Scalar> z_coeff;
};

/// Entry i of nu(x,y,z) is A_i(x-z) + B_i y, with z added on the diagonal.
/// Coefficients are stored row-major, so A_1..A_9 are a(0,0), a(0,1), ... a(2,2).
template <typename Scalar>
struct StandardForm {
  Matrix3<Scalar> a = Matrix3<Scalar>::Zero();
  Matrix3<Scalar> b = Matrix3<Scalar>::Zero();

  LinearForm<Scalar> linear() const {
    return {a, b, Matrix3<Scalar>(Matrix3<Scalar>::Identity() - a)};
  }
  friend bool operator==(const StandardForm& l, const StandardForm& r) {
    return l.a == r.a && l.b == r.b;
  }
};

using StandardFormCoeffs = StandardForm<Rat>;

template <typename Scalar>
Matrix3<Scalar> eval_form(const LinearForm<Scalar>& f, const Vector3<Scalar>& t) {
  return t.x() * f.x_coeff + t.y() * f.y_coeff + t.z() * f.z_coeff;
}

template <typename Scalar>
Matrix3<Scalar> eval_form(const StandardForm<Scalar>& c, const Vector3<Scalar>& t) {
  return (t.x() - t.z()) * c.a + t.y() * c.b + t.z() * Matrix3<Scalar>::Identity();
}

inline Mat3 eval_form(const StandardFormCoeffs& c, const Triple& t) { return eval_form(c, to_rational(t)); }
inline Mat3 eval_form(const LinearForm<Rat>& f, const Triple& t) { return eval_form(f, to_rational(t)); }

LinearForm<Rat> to_rational(const LinearForm<Int>& f);
StandardFormCoeffs to_rational(const StandardForm<Int>& c);
/// Integer copy of the form when every coefficient is an integer.
std::optional<LinearForm<Int>> integral_form(const LinearForm<Rat>& f);

/// The nine free parameters left after imposing identity and commutativity.
struct GreekParams {
  Rat alpha, beta, gamma, delta, rho, sigma, theta, phi, lambda;
};

StandardFormCoeffs greek_to_form(const GreekParams& p);

/// Left-minus-right residuals of the five polynomial conditions equivalent to
/// nu(nu(a).b) = nu(a).nu(b) on the Greek-parameter form.
std::array<Rat, 5> system_residuals(const GreekParams& p);
bool satisfies_system(const GreekParams& p);

using TriplePair = std::pair<Triple, Triple>;

/// First basis pair (a, b) with nu(a).b != nu(b).a, if any.
std::optional<TriplePair> commutativity_witness(const LinearForm<Rat>& f);
inline bool is_commutative(const LinearForm<Rat>& f) { return !commutativity_witness(f); }
inline bool is_commutative(const StandardFormCoeffs& c) { return is_commutative(c.linear()); }

/// First basis pair (a, b) with nu(nu(a).b) != nu(a).nu(b), if any.
std::optional<TriplePair> homomorphism_witness(const LinearForm<Rat>& f);

struct NaturalReport {
  bool axiom1 = false;  // nu(nu(a).b) = nu(a).nu(b)
  bool axiom2 = false;  // nu(a).b = nu(b).a
  bool axiom3 = false;  // nu(1,0,1) = I
  std::optional<TriplePair> axiom1_witness;
  std::optional<TriplePair> axiom2_witness;

  bool all() const { return axiom1 && axiom2 && axiom3; }
};

NaturalReport is_natural(const LinearForm<Rat>& f);
inline NaturalReport is_natural(const StandardFormCoeffs& c) { return is_natural(c.linear()); }

/// gamma != 0, phi = lambda.
struct FamilyA {
  Rat gamma, delta, rho, sigma, theta;
};
/// gamma = theta = 0, phi = lambda.
struct FamilyB {
  Rat alpha, beta, delta, rho;
};
/// phi != lambda.
struct FamilyC {
  Rat beta, gamma, rho, theta, phi, lambda;
};

using FamilyTag = std::variant<FamilyA, FamilyB, FamilyC>;

/// Solves for the dependent parameters; throws Error(InvalidFamilyParams)
/// when gamma = 0 for A or phi = lambda for C.
GreekParams family_params(const FamilyTag& f);
StandardFormCoeffs family_form(const FamilyTag& f);
Mat3 family_matrix(const FamilyTag& f, const Triple& t);

}  // namespace pyth
