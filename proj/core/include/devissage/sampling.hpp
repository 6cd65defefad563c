#pragma once

#include "devissage/auslander.hpp"
#include "devissage/instance.hpp"
#include "devissage/module.hpp"
#include "devissage/pair_category.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace devissage {

// Seeded sampling for the property suites. Determinism matters more than
// distribution quality, so derived draws go through rng() % n rather than
// std distributions (whose outputs are implementation-defined).
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }
    std::size_t pick(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
    Scalar scalar(Scalar p) { return static_cast<Scalar>(rng_() % p); }
    Vec vec(std::size_t dim, Scalar p);
    bool coin() { return (rng_() & 1) != 0; }

  private:
    std::mt19937_64 rng_;
};

// Random module: a quotient of A^k (k in 1..2) by the closure of a few random
// vectors, optionally passing to a random submodule.
ModuleRep random_module(Sampler& s, const AlgebraPtr& alg, std::size_t max_free_rank = 2);
// Random module over A/I.
ModuleRep random_b_module(Sampler& s, const Instance& inst, std::size_t max_free_rank = 2);

// Random invariant subspace, as the closure of random vectors.
Mat random_submodule_basis(Sampler& s, const ModuleRep& m);

// Random pair object on a random (or given) X: Y is drawn between X*I and
// the annihilator of I.
PairObject random_pair_object(Sampler& s, const Instance& inst);
PairObject random_pair_object_on(Sampler& s, const Instance& inst, const ModuleRep& x);

// Random element of the pair hom space (zero when the space is trivial).
PairHom random_pair_hom(Sampler& s, const PairObject& from, const PairObject& to);

// Random admissible subobject inclusion (X', X' n Y) -> (X, Y); always a
// strict mono.
PairHom random_strict_mono_into(Sampler& s, const Instance& inst, const PairObject& p);
// Random admissible quotient (X, Y) -> (X/X'', image of Y); always a strict epi.
PairHom random_strict_epi_from(Sampler& s, const Instance& inst, const PairObject& p);

// Random module morphism sampled from the hom space.
ModuleHom random_module_hom(Sampler& s, const ModuleRep& from, const ModuleRep& to);

// Random quadruple, drawn as a random module over D.
CObject random_c_object(Sampler& s, const Instance& inst);

} // namespace devissage
