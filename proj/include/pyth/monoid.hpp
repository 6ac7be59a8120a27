#pragma once

// Products on triples induced by linear injections, their powers, the two
// classical products, and sample-based verification of the monoid axioms.

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "pyth/core.hpp"
#include "pyth/injections.hpp"

namespace pyth {

/// a . b = nu(a).b for an arbitrary linear injection.
struct Bullet {
  LinearForm<Rat> form;
};
/// a . b = M_{beta,gamma}(a).b.
struct BulletBetaGamma {
  BetaGamma bg;
};
/// (x1 x2 - y1 y2, x1 y2 + y1 x2, z1 z2).
struct TausskyEckert {};
/// (x1 x2, y1 z2 + y2 z1, y1 y2 + z1 z2).
struct BeauregardSom {};

using ProductKind = std::variant<Bullet, BulletBetaGamma, TausskyEckert, BeauregardSom>;

inline Triple identity_triple() { return triple(1, 0, 1); }

/// The linear injection nu with a . b = nu(a).b for this kind.
LinearForm<Rat> injection(const ProductKind& k);

/// Throws Error(NonIntegralResult) when a rational form sends a, b off Z^3.
Triple product(const ProductKind& k, const Triple& a, const Triple& b);

/// a . (a . (... . a)), n factors; n = 0 gives (1,0,1). Bullet kinds use
/// nu(a)^(n-1).a by repeated squaring.
Triple power(const ProductKind& k, const Triple& a, unsigned long n);

using TripleSet = std::vector<Triple>;

/// Distinct phi(m,n) for m, n in [-bound, bound], the basis triples,
/// (1,0,1) and (0,0,0); sorted.
TripleSet sample_triples(int bound);

/// `count` triples phi(m,n) with m, n drawn uniformly from [-param_bound, param_bound].
TripleSet seeded_samples(std::uint64_t seed, std::size_t count, int param_bound);

struct AxiomReport {
  bool commutative = true;
  bool associative = true;
  bool identity = true;
  bool homomorphic = true;  // nu(a . b) = nu(a).nu(b) on sample pairs
  bool closed_on_z3 = true;
  bool closed_on_p = true;
  std::optional<TriplePair> commutativity_witness;
  std::optional<std::array<Triple, 3>> associativity_witness;
  std::optional<Triple> identity_witness;
  std::optional<TriplePair> homomorphism_witness;
  std::optional<TriplePair> integrality_witness;
  std::optional<TriplePair> closure_witness;
  NaturalReport basis;  // exact check of the injection on basis triples
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;

  bool monoid() const { return commutative && associative && identity; }
  bool all() const { return monoid() && homomorphic && closed_on_z3 && closed_on_p && basis.all(); }
};

AxiomReport verify_axioms(const ProductKind& k, const TripleSet& samples);

}  // namespace pyth
