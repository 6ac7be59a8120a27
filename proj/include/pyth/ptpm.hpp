#pragma once

// Pythagorean-triple-preserving matrices: the two-parameter natural family
// M_{beta,gamma}, Tikoo's special matrices, the general four-parameter form,
// and brute-force preservation checks over parametrized triples.

#include <optional>
#include <string_view>
#include <utility>

#include "pyth/core.hpp"
#include "pyth/injections.hpp"

namespace pyth {

/// Standard-form coefficients of M_{beta,gamma}.
template <typename Scalar>
StandardForm<Scalar> beta_gamma_form(const Scalar& beta, const Scalar& gamma) {
  const Scalar b2 = beta * beta;
  const Scalar g2 = gamma * gamma;
  const Scalar one = 1;
  const Scalar sheared = beta * (one - gamma - gamma);  // -beta(2 gamma - 1)
  StandardForm<Scalar> c;
  c.a << g2 - gamma + one - b2, beta, b2 - g2 + gamma,
         sheared, gamma, -sheared,
         b2 + g2 - gamma, -beta, -(b2 + g2 - gamma);
  c.b << beta, -gamma, -beta,
         gamma, beta, one - gamma,
         -beta, one - gamma, beta;
  return c;
}

inline StandardFormCoeffs beta_gamma_form(const BetaGamma& bg) { return beta_gamma_form(bg.beta, bg.gamma); }

template <typename Scalar>
Matrix3<Scalar> m_beta_gamma(const Scalar& beta, const Scalar& gamma, const Vector3<Scalar>& t) {
  return eval_form(beta_gamma_form(beta, gamma), t);
}

Mat3 m_beta_gamma(const BetaGamma& bg, const Triple& t);

enum class TikooKind { B1, B2, B3, B4, B5 };

std::string_view tikoo_name(TikooKind kind);
std::optional<TikooKind> parse_tikoo(std::string_view name);

/// Tikoo's matrices as linear injections (x, y, z) -> B_k.
LinearForm<Int> tikoo_form(TikooKind kind);
Matrix3<Int> tikoo(TikooKind kind, const Triple& t);

struct PalParams {
  Int r, s, t, u;

  /// Entries with a 1/2 are integers iff r + u and s + t have equal parity.
  bool parity_ok() const;
};

Mat3 pal_matrix(const PalParams& p);

/// B_1 = B_5 = B_9, B_7 = B_3, B_8 = B_6, B_4 = -B_2.
bool necessary_conditions(const StandardFormCoeffs& c);

struct PreservationWitness {
  std::optional<ConicPoint> mn;  // parameters of the triple fed to nu; empty for a constant matrix
  ConicPoint uv;
  Vector3<Rat> image;
};

struct PreservationReport {
  bool preserves = true;
  std::optional<PreservationWitness> counterexample;
  std::size_t checked = 0;
};

/// Checks nu(phi(m,n)).phi(u,v) in P for all m, n, u, v in [-bound, bound].
/// Throws std::invalid_argument if bound < 1.
PreservationReport preserves_pythagorean(const LinearForm<Rat>& f, int bound);
inline PreservationReport preserves_pythagorean(const StandardFormCoeffs& c, int bound) {
  return preserves_pythagorean(c.linear(), bound);
}

/// Checks A.phi(u,v) in P for all u, v in [-bound, bound].
PreservationReport preserves_pythagorean(const Mat3& a, int bound);

/// Closed forms of phi(m,n) . phi(u,v) under M_{beta,gamma} acting on the
/// column vector (first) and of the row action phi(u,v)^T . M(phi(m,n)) (second).
std::pair<Triple, Triple> closure_witness(const BetaGamma& bg, const ConicPoint& mn, const ConicPoint& uv);

}  // namespace pyth
