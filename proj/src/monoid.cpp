#include "pyth/monoid.hpp"

#include <algorithm>
#include <random>

#include "pyth/conic.hpp"
#include "pyth/ptpm.hpp"

namespace pyth {

namespace {

Triple taussky_eckert(const Triple& a, const Triple& b) {
  return triple(a.x() * b.x() - a.y() * b.y(), a.x() * b.y() + a.y() * b.x(), a.z() * b.z());
}

Triple beauregard_som(const Triple& a, const Triple& b) {
  return triple(a.x() * b.x(), a.y() * b.z() + b.y() * a.z(), a.y() * b.y() + a.z() * b.z());
}

// Evaluated over Int whenever the injection has integer coefficients.
Triple bullet(const LinearForm<Rat>& f, const Triple& a, const Triple& b) {
  if (auto fi = integral_form(f)) return mat_vec(eval_form(*fi, a), b);
  return mat_vec(eval_form(f, a), b);
}

Triple bullet_power(const LinearForm<Rat>& f, const Triple& a, unsigned long n) {
  if (auto fi = integral_form(f)) return mat_vec(mat_pow(eval_form(*fi, a), n - 1), a);
  return mat_vec(mat_pow(eval_form(f, a), n - 1), a);
}

}  // namespace

LinearForm<Rat> injection(const ProductKind& k) {
  struct Visitor {
    LinearForm<Rat> operator()(const Bullet& b) const { return b.form; }
    LinearForm<Rat> operator()(const BulletBetaGamma& b) const { return beta_gamma_form(b.bg).linear(); }
    LinearForm<Rat> operator()(const TausskyEckert&) const {
      LinearForm<Int> f{Matrix3<Int>::Zero(), Matrix3<Int>::Zero(), Matrix3<Int>::Zero()};
      f.x_coeff(0, 0) = f.x_coeff(1, 1) = 1;
      f.y_coeff(0, 1) = -1;
      f.y_coeff(1, 0) = 1;
      f.z_coeff(2, 2) = 1;
      return to_rational(f);
    }
    LinearForm<Rat> operator()(const BeauregardSom&) const { return to_rational(tikoo_form(TikooKind::B1)); }
  };
  return std::visit(Visitor{}, k);
}

Triple product(const ProductKind& k, const Triple& a, const Triple& b) {
  if (std::holds_alternative<TausskyEckert>(k)) return taussky_eckert(a, b);
  if (std::holds_alternative<BeauregardSom>(k)) return beauregard_som(a, b);
  return bullet(injection(k), a, b);
}

Triple power(const ProductKind& k, const Triple& a, unsigned long n) {
  if (n == 0) return identity_triple();
  if (std::holds_alternative<Bullet>(k) || std::holds_alternative<BulletBetaGamma>(k)) {
    return bullet_power(injection(k), a, n);
  }
  // Both classical products are associative, so binary exponentiation applies.
  Triple result = identity_triple();
  Triple base = a;
  while (n > 0) {
    if (n & 1UL) result = product(k, result, base);
    n >>= 1;
    if (n > 0) base = product(k, base, base);
  }
  return result;
}

TripleSet sample_triples(int bound) {
  TripleSet out;
  for (int m = -bound; m <= bound; ++m) {
    for (int n = -bound; n <= bound; ++n) out.push_back(phi({m, n}));
  }
  out.push_back(triple(1, 0, 0));
  out.push_back(triple(0, 1, 0));
  out.push_back(triple(0, 0, 1));
  out.push_back(identity_triple());
  out.push_back(triple(0, 0, 0));
  std::sort(out.begin(), out.end(), triple_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TripleSet seeded_samples(std::uint64_t seed, std::size_t count, int param_bound) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> param(-param_bound, param_bound);
  TripleSet out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int m = param(rng);
    const int n = param(rng);
    out.push_back(phi({m, n}));
  }
  return out;
}

namespace {

template <typename Scalar>
AxiomReport scan_axioms(const LinearForm<Scalar>& f, const TripleSet& samples) {
  using Vec = Vector3<Scalar>;
  using Mat = Matrix3<Scalar>;
  const std::size_t n = samples.size();
  std::vector<Vec> s(n);
  std::vector<Mat> nu(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = samples[i].cast<Scalar>();
    nu[i] = eval_form(f, s[i]);
  }
  std::vector<Vec> ab(n * n);
  std::vector<Mat> nu_ab(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ab[i * n + j] = nu[i] * s[j];
      nu_ab[i * n + j] = eval_form(f, ab[i * n + j]);
    }
  }

  AxiomReport r;
  const Vec e = identity_triple().cast<Scalar>();
  const Mat nu_e = eval_form(f, e);
  for (std::size_t i = 0; i < n && r.identity; ++i) {
    if (Vec(nu[i] * e) != s[i] || Vec(nu_e * s[i]) != s[i]) {
      r.identity = false;
      r.identity_witness = samples[i];
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.pairs_checked;
      const Vec& p = ab[i * n + j];
      if (r.commutative && j > i && p != ab[j * n + i]) {
        r.commutative = false;
        r.commutativity_witness = TriplePair{samples[i], samples[j]};
      }
      if (r.homomorphic && nu_ab[i * n + j] != Mat(nu[i] * nu[j])) {
        r.homomorphic = false;
        r.homomorphism_witness = TriplePair{samples[i], samples[j]};
      }
      if (r.closed_on_z3 && !(is_integral_value(p(0)) && is_integral_value(p(1)) && is_integral_value(p(2)))) {
        r.closed_on_z3 = false;
        r.integrality_witness = TriplePair{samples[i], samples[j]};
      }
      if (r.closed_on_p && is_pythagorean(samples[i]) && is_pythagorean(samples[j]) && !is_pythagorean(p)) {
        r.closed_on_p = false;
        r.closure_witness = TriplePair{samples[i], samples[j]};
      }
    }
  }

  for (std::size_t i = 0; i < n && r.associative; ++i) {
    for (std::size_t j = 0; j < n && r.associative; ++j) {
      const Mat& left = nu_ab[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        ++r.triples_checked;
        if (Vec(left * s[k]) != Vec(nu[i] * ab[j * n + k])) {
          r.associative = false;
          r.associativity_witness = std::array<Triple, 3>{samples[i], samples[j], samples[k]};
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace

AxiomReport verify_axioms(const ProductKind& k, const TripleSet& samples) {
  const LinearForm<Rat> f = injection(k);
  AxiomReport report;
  if (auto fi = integral_form(f)) {
    report = scan_axioms(*fi, samples);
  } else {
    report = scan_axioms(f, samples);
  }
  report.basis = is_natural(f);
  return report;
}

}  // namespace pyth
