#pragma once

#include "devissage/algebra.hpp"
#include "devissage/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace devissage {

// Finite-dimensional right module: elements are row vectors, m * b acts by
// m * action[k] for basis element b_k, hence action(b_i * b_j) =
// action(b_i) * action(b_j) and action(unit) = id.
struct ModuleRep {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Mat> action;

    Mat action_of(const Vec& a) const; // action of an arbitrary algebra element
};

ModuleRep make_module(AlgebraPtr alg, std::vector<Mat> action); // validates the axioms
ModuleRep zero_module(const AlgebraPtr& alg);
ModuleRep regular_module(const AlgebraPtr& alg);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep free_module(const AlgebraPtr& alg, std::size_t rank);

// Module morphism f(m) = m * matrix, with matrix of shape
// source.dim x target.dim and action_source(b) * matrix = matrix * action_target(b).
struct ModuleHom {
    ModuleRep source, target;
    Mat matrix;
};

ModuleHom make_hom(ModuleRep source, ModuleRep target, Mat matrix); // validates
ModuleHom identity_hom(const ModuleRep& m);
ModuleHom zero_hom(const ModuleRep& source, const ModuleRep& target);
ModuleHom compose(const ModuleHom& f, const ModuleHom& g); // f then g
bool is_module_hom(const ModuleRep& source, const ModuleRep& target, const Mat& matrix);

struct SubModule {
    ModuleRep mod;
    ModuleHom incl; // mod -> ambient, full row rank
};

struct QuotModule {
    ModuleRep mod;
    ModuleHom proj; // ambient -> mod, surjective
};

SubModule hom_kernel(const ModuleHom& f);
QuotModule hom_cokernel(const ModuleHom& f);

// Smallest submodule containing the given rows, as a canonical RREF basis.
Mat module_closure(const ModuleRep& m, const Mat& seed_rows);
bool is_invariant_subspace(const ModuleRep& m, const Mat& rref_rows);
SubModule submodule(const ModuleRep& m, const Mat& rows);  // rows spanning an invariant subspace
QuotModule quotient(const ModuleRep& m, const Mat& rows);  // quotient by an invariant subspace

// Every action-invariant subspace exactly once (canonical RREF bases),
// including 0 and the whole module. The guard compares the subspace count of
// the ambient space against cap before starting.
std::vector<Mat> submodule_enumerate(const ModuleRep& m, std::size_t cap);

// A simple submodule of a nonzero module, found by descending through cyclic
// submodules.
Mat minimal_submodule(const ModuleRep& m, std::size_t cap);
Mat maximal_submodule(const ModuleRep& m, std::size_t cap);

// Composition factors along a bottom-up (socle-seeking) chain.
std::vector<ModuleRep> composition_series_factors(const ModuleRep& m, std::size_t cap);
// Same multiset along a top-down chain; used to exercise Jordan-Hoelder.
std::vector<ModuleRep> composition_series_factors_topdown(const ModuleRep& m, std::size_t cap);

// Complete irredundant list of simple right modules, as composition factors
// of the regular module, in order of first appearance.
std::vector<ModuleRep> simple_modules(const AlgebraPtr& alg, std::size_t cap);

// Multiplicity vector over the given simple list; throws UnrecognizedFactor
// if a factor matches no list entry.
std::vector<long long> composition_factors(const ModuleRep& m, const std::vector<ModuleRep>& simples,
                                           std::size_t cap);

// Basis of Hom(m, n) as matrices.
std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n);
std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n);

// Searches the hom space for an invertible element; the budget caps the
// number of candidate combinations tried.
std::optional<Mat> find_isomorphism(const ModuleRep& m, const ModuleRep& n, std::size_t cap);
bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::size_t cap);

// M (x)_A N for a two-sided ideal N, presented as the quotient of the
// F_p-tensor space M (x) N by the balancing relations m*a (x) x - m (x) a*x.
// proj/section translate between ambient coordinates (index r * dim(N) + s)
// and the quotient module.
struct TensorModule {
    ModuleRep mod; // right A-module, killed by N when N^2 = 0
    Mat proj;      // ambient -> quotient coordinates
    Mat section;   // quotient -> ambient representatives
};

TensorModule tensor_over_algebra(const ModuleRep& m, const Ideal& ideal);
// Induced map j~(f): requires the tensor data of source and target.
Mat tensor_hom_matrix(const TensorModule& tsrc, const TensorModule& ttgt, const ModuleHom& f,
                      const Ideal& ideal);

// Row basis of M*I inside M.
Mat module_times_ideal(const ModuleRep& m, const Ideal& ideal);
// {x in M : x*I = 0}, the largest submodule killed by the ideal.
Mat ideal_annihilator(const ModuleRep& m, const Ideal& ideal);

// Number of subspaces of F_p^dim (Galois number) saturated at `limit`:
// returns limit + 1 once the count provably exceeds it.
std::size_t subspace_count_capped(std::size_t dim, Scalar p, std::size_t limit);

// Greedy small generating set: repeatedly adds the vector whose cyclic
// closure grows the span the most.
std::vector<Vec> generating_set(const ModuleRep& m, std::size_t cap);

} // namespace devissage
