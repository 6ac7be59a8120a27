#include "pyth/ptpm.hpp"

#include <array>
#include <stdexcept>

#include "pyth/conic.hpp"

namespace pyth {

Mat3 m_beta_gamma(const BetaGamma& bg, const Triple& t) {
  return m_beta_gamma(bg.beta, bg.gamma, to_rational(t));
}

std::string_view tikoo_name(TikooKind kind) {
  static constexpr std::array<std::string_view, 5> names = {"B1", "B2", "B3", "B4", "B5"};
  return names[static_cast<std::size_t>(kind)];
}

std::optional<TikooKind> parse_tikoo(std::string_view name) {
  for (TikooKind k : {TikooKind::B1, TikooKind::B2, TikooKind::B3, TikooKind::B4, TikooKind::B5}) {
    if (tikoo_name(k) == name) return k;
  }
  return std::nullopt;
}

LinearForm<Int> tikoo_form(TikooKind kind) {
  LinearForm<Int> f{Matrix3<Int>::Zero(), Matrix3<Int>::Zero(), Matrix3<Int>::Zero()};
  auto& x = f.x_coeff;
  auto& y = f.y_coeff;
  auto& z = f.z_coeff;
  switch (kind) {
    case TikooKind::B1:  // [[x,0,0],[0,z,y],[0,y,z]]
      x(0, 0) = 1;
      y(1, 2) = y(2, 1) = 1;
      z(1, 1) = z(2, 2) = 1;
      break;
    case TikooKind::B2:  // [[y,0,0],[0,z,x],[0,x,z]]
      y(0, 0) = 1;
      x(1, 2) = x(2, 1) = 1;
      z(1, 1) = z(2, 2) = 1;
      break;
    case TikooKind::B3:  // [[z,0,x],[0,y,0],[x,0,z]]
      z(0, 0) = z(2, 2) = 1;
      x(0, 2) = x(2, 0) = 1;
      y(1, 1) = 1;
      break;
    case TikooKind::B4:  // [[z,0,y],[0,x,0],[y,0,z]]
      z(0, 0) = z(2, 2) = 1;
      y(0, 2) = y(2, 0) = 1;
      x(1, 1) = 1;
      break;
    case TikooKind::B5:  // [[-x,y,0],[y,x,0],[0,0,z]]
      x(0, 0) = -1;
      x(1, 1) = 1;
      y(0, 1) = y(1, 0) = 1;
      z(2, 2) = 1;
      break;
  }
  return f;
}

Matrix3<Int> tikoo(TikooKind kind, const Triple& t) { return eval_form(tikoo_form(kind), t); }

bool PalParams::parity_ok() const { return mpz_even_p((r + u - s - t).mpz().get_mpz_t()) != 0; }

Mat3 pal_matrix(const PalParams& p) {
  const Rat r = p.r, s = p.s, t = p.t, u = p.u;
  const Rat half(1, 2);
  const Rat r2 = r * r, s2 = s * s, t2 = t * t, u2 = u * u;
  Mat3 m;
  m << half * (r2 - t2 - s2 + u2), r * s - t * u, half * (r2 - t2 + s2 - u2),
       r * t - s * u, r * u + s * t, r * t + s * u,
       half * (r2 + t2 - s2 - u2), r * s + t * u, half * (r2 + t2 + s2 + u2);
  return m;
}

bool necessary_conditions(const StandardFormCoeffs& c) {
  // B_k is c.b(k - 1) in row-major order.
  auto b = [&](int k) -> const Rat& { return c.b((k - 1) / 3, (k - 1) % 3); };
  return b(1) == b(5) && b(5) == b(9) && b(7) == b(3) && b(8) == b(6) && b(4) == -b(2);
}

namespace {

void require_bound(int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
}

template <typename Scalar>
PreservationReport scan_form(const LinearForm<Scalar>& f, int bound) {
  PreservationReport report;
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) {
      const ConicPoint mn{m, n};
      const Matrix3<Scalar> nu = eval_form(f, Vector3<Scalar>(phi(mn).cast<Scalar>()));
      for (int u = -bound; u <= bound; ++u) {
        for (int v = -bound; v <= bound; ++v) {
          const ConicPoint uv{u, v};
          const Vector3<Scalar> image = nu * phi(uv).cast<Scalar>();
          ++report.checked;
          if (!is_pythagorean(image)) {
            report.preserves = false;
            report.counterexample = PreservationWitness{mn, uv, image.template cast<Rat>()};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace

PreservationReport preserves_pythagorean(const LinearForm<Rat>& f, int bound) {
  require_bound(bound);
  if (auto integral = integral_form(f)) return scan_form(*integral, bound);
  return scan_form(f, bound);
}

PreservationReport preserves_pythagorean(const Mat3& a, int bound) {
  require_bound(bound);
  PreservationReport report;
  for (int u = -bound; u <= bound; ++u) {
    for (int v = -bound; v <= bound; ++v) {
      const ConicPoint uv{u, v};
      const Vector3<Rat> image = a * to_rational(phi(uv));
      ++report.checked;
      if (!is_pythagorean(image)) {
        report.preserves = false;
        report.counterexample = PreservationWitness{std::nullopt, uv, image};
        return report;
      }
    }
  }
  return report;
}

std::pair<Triple, Triple> closure_witness(const BetaGamma& bg, const ConicPoint& mn,
                                          const ConicPoint& uv) {
  const Rat m = mn.u, n = mn.v, u = uv.u, v = uv.v;
  const Rat& beta = bg.beta;
  const Rat& gamma = bg.gamma;
  auto square_triple = [](const Rat& p, const Rat& q) {
    return to_integral(Vector3<Rat>(p * p - q * q, 2 * p * q, p * p + q * q));
  };
  const Rat col_p = m * u + (1 - 2 * gamma) * n * v;
  const Rat col_q = m * v + n * (u + 2 * beta * v);
  const Rat row_p = m * u + n * v;
  const Rat row_q = m * v + n * (u - 2 * gamma * u + 2 * beta * v);
  return {square_triple(col_p, col_q), square_triple(row_p, row_q)};
}

}  // namespace pyth
