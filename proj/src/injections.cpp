#include "pyth/injections.hpp"

namespace pyth {

namespace {

const std::array<Vector3<Rat>, 3>& basis() {
  static const std::array<Vector3<Rat>, 3> e = {
      Vector3<Rat>(1, 0, 0), Vector3<Rat>(0, 1, 0), Vector3<Rat>(0, 0, 1)};
  return e;
}

Triple basis_triple(std::size_t i) { return to_integral(basis()[i]); }

template <typename Pred>
std::optional<TriplePair> first_failing_basis_pair(Pred&& holds) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (!holds(basis()[i], basis()[j])) return TriplePair{basis_triple(i), basis_triple(j)};
    }
  }
  return std::nullopt;
}

}  // namespace

LinearForm<Rat> to_rational(const LinearForm<Int>& f) {
  return {to_rational(f.x_coeff), to_rational(f.y_coeff), to_rational(f.z_coeff)};
}

StandardFormCoeffs to_rational(const StandardForm<Int>& c) { return {to_rational(c.a), to_rational(c.b)}; }

std::optional<LinearForm<Int>> integral_form(const LinearForm<Rat>& f) {
  if (!is_integral(f.x_coeff) || !is_integral(f.y_coeff) || !is_integral(f.z_coeff)) return std::nullopt;
  return LinearForm<Int>{to_integral(f.x_coeff), to_integral(f.y_coeff), to_integral(f.z_coeff)};
}

StandardFormCoeffs greek_to_form(const GreekParams& p) {
  StandardFormCoeffs c;
  c.a << p.alpha, p.beta, 1 - p.alpha,
         p.delta, p.gamma, -p.delta,
         p.sigma, p.theta, -p.sigma;
  c.b << p.beta, p.phi, -p.beta,
         p.gamma, p.rho, 1 - p.gamma,
         p.theta, p.lambda, -p.theta;
  return c;
}

std::array<Rat, 5> system_residuals(const GreekParams& p) {
  const Rat shift = p.rho + p.theta - p.beta;
  const Rat spread = p.phi - p.lambda;
  return {
      p.alpha * p.gamma + shift * p.delta + (1 - p.gamma) * p.sigma - p.gamma * p.gamma,
      -spread * p.alpha + p.phi * p.gamma - p.lambda - p.beta * shift,
      -p.sigma * spread + p.lambda * p.gamma - p.theta * shift,
      p.alpha * p.theta + p.delta * p.lambda - p.beta * p.sigma - p.theta * p.gamma,
      p.delta * spread - (p.beta * p.gamma - p.theta * p.gamma + p.theta),
  };
}

bool satisfies_system(const GreekParams& p) {
  for (const Rat& r : system_residuals(p)) {
    if (!r.is_zero()) return false;
  }
  return true;
}

std::optional<TriplePair> commutativity_witness(const LinearForm<Rat>& f) {
  return first_failing_basis_pair([&](const Vector3<Rat>& a, const Vector3<Rat>& b) {
    return Vector3<Rat>(eval_form(f, a) * b) == Vector3<Rat>(eval_form(f, b) * a);
  });
}

std::optional<TriplePair> homomorphism_witness(const LinearForm<Rat>& f) {
  return first_failing_basis_pair([&](const Vector3<Rat>& a, const Vector3<Rat>& b) {
    const Mat3 nu_a = eval_form(f, a);
    const Vector3<Rat> ab = nu_a * b;
    return eval_form(f, ab) == Mat3(nu_a * eval_form(f, b));
  });
}

NaturalReport is_natural(const LinearForm<Rat>& f) {
  NaturalReport report;
  report.axiom1_witness = homomorphism_witness(f);
  report.axiom2_witness = commutativity_witness(f);
  report.axiom1 = !report.axiom1_witness;
  report.axiom2 = !report.axiom2_witness;
  report.axiom3 = eval_form(f, Vector3<Rat>(1, 0, 1)) == Mat3::Identity();
  return report;
}

namespace {

struct FamilySolver {
  GreekParams operator()(const FamilyA& f) const {
    if (f.gamma.is_zero()) throw Error(ErrorKind::InvalidFamilyParams, "family A requires gamma != 0");
    const Rat& g = f.gamma;
    const Rat g2 = g * g;
    GreekParams p;
    p.gamma = g;
    p.delta = f.delta;
    p.rho = f.rho;
    p.sigma = f.sigma;
    p.theta = f.theta;
    p.alpha = (g2 * g + g2 * f.sigma - g * f.sigma - f.delta * (f.rho * g + f.theta)) / g2;
    p.beta = f.theta * (g - 1) / g;
    p.phi = f.theta * (f.rho * g + f.theta) / g2;
    p.lambda = p.phi;
    return p;
  }

  GreekParams operator()(const FamilyB& f) const {
    GreekParams p;
    p.alpha = f.alpha;
    p.beta = f.beta;
    p.delta = f.delta;
    p.rho = f.rho;
    p.gamma = 0;
    p.theta = 0;
    p.phi = -f.beta * (f.rho - f.beta);
    p.lambda = p.phi;
    p.sigma = -f.delta * (f.rho - f.beta);
    return p;
  }

  GreekParams operator()(const FamilyC& f) const {
    const Rat spread = f.phi - f.lambda;
    if (spread.is_zero()) throw Error(ErrorKind::InvalidFamilyParams, "family C requires phi != lambda");
    const Rat shift = f.rho + f.theta - f.beta;
    GreekParams p;
    p.beta = f.beta;
    p.gamma = f.gamma;
    p.rho = f.rho;
    p.theta = f.theta;
    p.phi = f.phi;
    p.lambda = f.lambda;
    p.alpha = (f.phi * f.gamma - f.lambda - f.beta * shift) / spread;
    p.delta = (f.beta * f.gamma - f.theta * f.gamma + f.theta) / spread;
    p.sigma = (f.lambda * f.gamma - f.theta * shift) / spread;
    return p;
  }
};

}  // namespace

GreekParams family_params(const FamilyTag& f) { return std::visit(FamilySolver{}, f); }

StandardFormCoeffs family_form(const FamilyTag& f) { return greek_to_form(family_params(f)); }

Mat3 family_matrix(const FamilyTag& f, const Triple& t) { return eval_form(family_form(f), t); }

}  // namespace pyth
