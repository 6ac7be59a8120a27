#include "pyth/conic.hpp"

#include <algorithm>

#include "pyth/ptpm.hpp"

namespace pyth {

namespace {

struct LatticeLabel {
  Int beta;
  Int gamma;
};

LatticeLabel lattice_label(const BetaGamma& bg) {
  if (!bg.is_integral()) {
    throw Error(ErrorKind::NonIntegralResult,
                "lattice operations need integral beta, gamma (got " + bg.beta.str() + ", " + bg.gamma.str() + ")");
  }
  return {bg.beta.to_int(), bg.gamma.to_int()};
}

Int delta(const LatticeLabel& l, const ConicPoint& p) {
  return p.u * p.u + 2 * l.beta * p.u * p.v - (1 - 2 * l.gamma) * p.v * p.v;
}

ConicPoint star(const LatticeLabel& l, const ConicPoint& p, const ConicPoint& q) {
  return {q.u * p.u + q.v * p.v * (1 - 2 * l.gamma), q.v * p.u + q.u * p.v + 2 * l.beta * q.v * p.v};
}

void require_unit(const LatticeLabel& l, const ConicPoint& p) {
  const Int level = delta(l, p);
  if (level != 1) {
    throw Error(ErrorKind::NotOnUnitConic, "(" + to_string(p) + ") has level " + level.str());
  }
}

}  // namespace

Triple phi(const ConicPoint& p) {
  const Int u2 = p.u * p.u;
  const Int v2 = p.v * p.v;
  return triple(u2 - v2, 2 * p.u * p.v, u2 + v2);
}

ConicPoint star(const BetaGamma& bg, const ConicPoint& p, const ConicPoint& q) {
  return star(lattice_label(bg), p, q);
}

ConicPoint star_power(const BetaGamma& bg, const ConicPoint& p, unsigned long n) {
  const LatticeLabel l = lattice_label(bg);
  ConicPoint result{1, 0};
  ConicPoint base = p;
  while (n > 0) {
    if (n & 1UL) result = star(l, result, base);
    n >>= 1;
    if (n > 0) base = star(l, base, base);
  }
  return result;
}

Int delta(const BetaGamma& bg, const ConicPoint& p) { return delta(lattice_label(bg), p); }

ConicPoint inverse_point(const BetaGamma& bg, const ConicPoint& p) {
  const LatticeLabel l = lattice_label(bg);
  require_unit(l, p);
  return {p.u + 2 * l.beta * p.v, -p.v};
}

PellSolution pell_minimal(const Int& d) {
  if (d < 2 || is_square(d)) {
    throw Error(ErrorKind::NotPositiveNonSquare, "Pell discriminant " + d.str() + " must be a non-square >= 2");
  }
  // Convergents h/k of the continued fraction of sqrt(d); the first with
  // h^2 - d k^2 = 1 is the fundamental solution.
  const Int a0 = isqrt(d);
  Int m = 0, den = 1, a = a0;
  Int h_prev = 1, h = a0;
  Int k_prev = 0, k = 1;
  while (h * h - d * k * k != 1) {
    m = den * a - m;
    den = floor_div(d - m * m, den);
    a = floor_div(a0 + m, den);
    Int h_next = a * h + h_prev;
    Int k_next = a * k + k_prev;
    h_prev = std::move(h);
    k_prev = std::move(k);
    h = std::move(h_next);
    k = std::move(k_next);
  }
  return {h, k, d};
}

Int pell_discriminant(const BetaGamma& bg) {
  const LatticeLabel l = lattice_label(bg);
  return l.beta * l.beta - 2 * l.gamma + 1;
}

ConicPoint fundamental_unit_point(const BetaGamma& bg) {
  const LatticeLabel l = lattice_label(bg);
  const PellSolution pell = pell_minimal(pell_discriminant(bg));
  return {pell.x1 - l.beta * pell.y1, pell.y1};
}

std::vector<ConicPoint> enumerate_unit_points(const BetaGamma& bg, std::size_t count) {
  std::vector<ConicPoint> points;
  if (count == 0) return points;
  const LatticeLabel l = lattice_label(bg);
  const ConicPoint g = fundamental_unit_point(bg);
  points.reserve(count);
  points.push_back({1, 0});
  while (points.size() < count) points.push_back(star(l, points.back(), g));
  return points;
}

std::vector<ConicPoint> unit_points_in_box(const BetaGamma& bg, const Int& bound) {
  std::vector<ConicPoint> points;
  if (bound < 0) return points;
  const LatticeLabel l = lattice_label(bg);
  const ConicPoint g = fundamental_unit_point(bg);
  const ConicPoint g_inv = inverse_point(bg, g);
  auto inside = [&](const ConicPoint& p) { return abs(p.u) <= bound && abs(p.v) <= bound; };
  auto add_with_negation = [&](const ConicPoint& p) {
    if (!inside(p)) return;
    points.push_back(p);
    points.push_back({-p.u, -p.v});
  };
  add_with_negation({1, 0});
  // |v| grows strictly along both rays of the orbit, so each ray ends at the
  // first point whose v leaves the box.
  for (const ConicPoint& step : {g, g_inv}) {
    for (ConicPoint p = step; abs(p.v) <= bound; p = star(l, p, step)) add_with_negation(p);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

Triple triple_inverse(const BetaGamma& bg, const ConicPoint& p) { return phi(inverse_point(bg, p)); }

std::optional<ConicPoint> unit_preimage(const BetaGamma& bg, const Triple& t) {
  const LatticeLabel l = lattice_label(bg);
  const Int plus = t.z() + t.x();
  const Int minus = t.z() - t.x();
  if (plus < 0 || minus < 0) return std::nullopt;
  const Int two = 2;
  if (floor_div(plus, two) * two != plus || floor_div(minus, two) * two != minus) return std::nullopt;
  const Int u2 = floor_div(plus, two);
  const Int v2 = floor_div(minus, two);
  if (!is_square(u2) || !is_square(v2)) return std::nullopt;
  const Int u = isqrt(u2);
  const Int v = isqrt(v2);
  for (const ConicPoint& p : {ConicPoint{u, v}, ConicPoint{u, -v}}) {
    if (phi(p) == t && delta(l, p) == 1) return p;
  }
  return std::nullopt;
}

Rat conic_through(const ConicPoint& point, const Rat& beta) {
  if (point.v.is_zero()) {
    throw Error(ErrorKind::DegeneratePoint, "v = 0 fixes the level at u^2 for every gamma");
  }
  const Rat u = point.u, v = point.v;
  return (1 - u * u - 2 * beta * u * v + v * v) / (2 * v * v);
}

Mat3 matrix_power_via_conic(const BetaGamma& bg, const ConicPoint& p, unsigned long n) {
  return m_beta_gamma(bg, phi(star_power(bg, p, n)));
}

}  // namespace pyth
