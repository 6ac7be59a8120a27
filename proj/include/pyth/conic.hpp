#pragma once

// The conic alpha_{beta,gamma}(z): x^2 + 2 beta x y - (1 - 2 gamma) y^2 = z, its
// point product, Pell fundamental solutions, and the parametrization phi that
// carries the unit-conic group onto a group of Pythagorean triples.
//
// Lattice-point operations require integral (beta, gamma) and throw
// Error(NonIntegralResult) otherwise.

#include <cstddef>
#include <optional>
#include <vector>

#include "pyth/core.hpp"

namespace pyth {

/// phi(u,v) = (u^2 - v^2, 2uv, u^2 + v^2).
Triple phi(const ConicPoint& p);

/// (u,v) * (s,t) = (su + tv(1 - 2 gamma), tu + sv + 2 beta t v).
ConicPoint star(const BetaGamma& bg, const ConicPoint& p, const ConicPoint& q);

/// n-th power under star; n = 0 gives (1,0).
ConicPoint star_power(const BetaGamma& bg, const ConicPoint& p, unsigned long n);

/// The conic level u^2 + 2 beta u v - (1 - 2 gamma) v^2 of p.
Int delta(const BetaGamma& bg, const ConicPoint& p);

/// (u + 2 beta v, -v); throws Error(NotOnUnitConic) unless delta(p) = 1.
ConicPoint inverse_point(const BetaGamma& bg, const ConicPoint& p);

struct PellSolution {
  Int x1;
  Int y1;
  Int d;
};

/// Fundamental solution of x^2 - d y^2 = 1 via the continued fraction of sqrt(d).
/// Throws Error(NotPositiveNonSquare) unless d >= 2 is not a perfect square.
PellSolution pell_minimal(const Int& d);

/// beta^2 - 2 gamma + 1.
Int pell_discriminant(const BetaGamma& bg);

/// (x1 - beta y1, y1) for the fundamental Pell solution of pell_discriminant(bg).
ConicPoint fundamental_unit_point(const BetaGamma& bg);

/// g^0, g^1, ..., g^(count-1) for the fundamental unit point g.
std::vector<ConicPoint> enumerate_unit_points(const BetaGamma& bg, std::size_t count);

/// Every point +-g^k (k in Z) with |u|, |v| <= bound, sorted.
std::vector<ConicPoint> unit_points_in_box(const BetaGamma& bg, const Int& bound);

/// Inverse of phi(p) under the beta,gamma product: phi(u + 2 beta v, -v).
Triple triple_inverse(const BetaGamma& bg, const ConicPoint& p);

/// A unit-conic point p with phi(p) = t and u >= 0, if one exists.
std::optional<ConicPoint> unit_preimage(const BetaGamma& bg, const Triple& t);

/// The gamma placing `point` on alpha_{beta,gamma}(1); throws Error(DegeneratePoint) if v = 0.
Rat conic_through(const ConicPoint& point, const Rat& beta);

/// M_{beta,gamma} evaluated at phi of the n-th star power of p.
Mat3 matrix_power_via_conic(const BetaGamma& bg, const ConicPoint& p, unsigned long n);

}  // namespace pyth
