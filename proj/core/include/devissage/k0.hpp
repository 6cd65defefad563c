#pragma once

#include "devissage/auslander.hpp"
#include "devissage/instance.hpp"
#include "devissage/module.hpp"
#include "devissage/pair_category.hpp"
#include "devissage/snf.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace devissage {

// K0 classes are composition-factor multiplicity vectors over a pinned,
// ordered simple list. Maps between K0 lattices are integer matrices acting
// on column vectors: a map K0(cat1) -> K0(cat2) is (r2 x r1) with the image
// of the j-th simple in column j.
std::vector<long long> k0_class_module(const ModuleRep& m, const std::vector<ModuleRep>& simples,
                                       std::size_t cap);
std::vector<long long> k0_class_a(const Instance& inst, const ModuleRep& over_a);
std::vector<long long> k0_class_b(const Instance& inst, const ModuleRep& over_b);
// Class of a quadruple in K0(C) = K0(mod-D), via the packed D-module.
std::vector<long long> k0_class_c(const Instance& inst, const CObject& c);
// Class of a pair object, taken in the envelope through alpha.
std::vector<long long> k0_class_pair(const Instance& inst, const PairObject& p);

ZMat column_vector(const std::vector<long long>& v);

// gamma([X]) = [Y] + [X/Y] in K0(B), with the default witness Y = X*I.
std::vector<long long> gamma_class(const Instance& inst, const ModuleRep& m);
std::vector<long long> gamma_class_with(const Instance& inst, const ModuleRep& m, const Mat& y_rows);

// Subobjects Y <= M with Y*I = 0 and M*I <= Y, i.e. the valid gamma choices
// (equivalently the pair structures on M).
std::vector<Mat> valid_subobject_poset(const Instance& inst, const ModuleRep& m);

// Isomorphism classes of modules of dimension <= dim_bound, enumerated as
// quotients of A^dim_bound through the codimension-bounded submodule tree.
std::vector<ModuleRep> enumerate_module_classes(const AlgebraPtr& alg, std::size_t dim_bound,
                                                std::size_t cap);

// Locate m in a class list (up to isomorphism); throws UnrecognizedFactor
// when absent.
std::size_t class_index_of(const ModuleRep& m, const std::vector<ModuleRep>& classes,
                           const std::vector<ModuleRep>& simples, std::size_t cap);

// Generators-and-relations presentation of K0: one relation row
// [middle] - [sub] - [quotient] per short exact sequence, with an SNF
// certificate. free_coords maps a generator to its coordinates in the free
// part of the cokernel.
struct K0Presentation {
    std::vector<std::string> generator_labels;
    ZMat relations; // n_rel x n_gen
    Snf snf;        // of relations^T
    std::size_t free_rank = 0;
    std::vector<Int> torsion; // invariant factors != 1
    ZMat free_coords;         // free_rank x n_gen
};

K0Presentation k0_presentation_from_relations(std::vector<std::string> labels,
                                              const std::vector<std::vector<long long>>& rows);

struct ModuleCategoryOracle {
    std::vector<ModuleRep> classes;
    K0Presentation presentation;
};
ModuleCategoryOracle k0_presentation_module_category(const AlgebraPtr& alg, std::size_t dim_bound,
                                                     std::size_t cap);

// Relation oracle over the pair category: generators are pair-isomorphism
// classes with dim X <= dim_bound, relations come from the admissible
// subobjects (X', X' n Y).
struct PairCategoryOracle {
    std::vector<PairObject> classes;
    K0Presentation presentation;
};
PairCategoryOracle k0_presentation_pair_category(const Instance& inst, std::size_t dim_bound,
                                                 std::size_t cap);

// The cokernel is free of the expected rank and the free-part coordinates
// agree with composition-factor counting up to a unimodular change of basis.
bool presentation_matches_simples(const K0Presentation& pres, const ZMat& cf_matrix,
                                  std::string* witness);

// Semi-orthogonal decomposition data at K0: phi_in has columns
// [alpha(T,0)], [alpha(T,T)] over the C-simples; phi_out is assembled from
// the adjoint formulas through the torsion decomposition of each C-simple
// and the certified exchange sequence 0 -> alpha(T,0) -> alpha(T,T) -> beta(T) -> 0.
struct SodMatrices {
    ZMat phi_in;  // rc x 2r
    ZMat phi_out; // 2r x rc
    bool exchange_certified = false;
};
SodMatrices sod_matrices(const Instance& inst);

// 0 -> alpha(N,0) -> alpha(N,N) -> beta(N) -> 0 in C, with exactness checked
// on both components.
struct ExchangeSes {
    CObject sub, mid, quot;
    CHom incl, proj;
    bool exact = false;
};
ExchangeSes exchange_ses(const Instance& inst, const ModuleRep& over_b);
bool is_exact_c_sequence(const CHom& incl, const CHom& proj);

struct DevissageReport {
    ZMat i_star;     // r_A x r_B
    ZMat gamma_star; // r_B x r_A
    bool mutually_inverse = false;
    bool gamma_well_defined = false; // all subobject choices agree, incl. the intersection chain
    bool gamma_additive = false;     // on every enumerated SES
    std::size_t modules_checked = 0, choice_pairs_checked = 0, ses_checked = 0;
    std::string witness;
    bool pass() const { return mutually_inverse && gamma_well_defined && gamma_additive; }
};
DevissageReport check_devissage_k0(const Instance& inst, std::size_t dim_bound);

struct SodReport {
    SodMatrices matrices;
    bool composite_identity = false;
    bool rank_doubles = false;
    bool p_unimodular = false;
    bool adjoint_formulas_hold = false;
    std::size_t pairs_checked = 0;
    std::string witness;
    bool pass() const {
        return composite_identity && rank_doubles && p_unimodular && adjoint_formulas_hold &&
               matrices.exchange_certified;
    }
};
SodReport check_sod_k0(const Instance& inst, std::size_t dim_bound);

struct LocalizationReport {
    ZMat beta_star; // rc x r_B
    ZMat pi_star;   // r_A x rc
    bool composes_to_zero = false;
    bool pi_surjective = false;
    bool kernel_equals_image = false;
    ZMat kernel_basis;        // columns span ker pi_star
    ZMat coefficient_witness; // beta_star = kernel_basis * coefficient_witness
    ZMat kernel_in_phi_coords;
    std::vector<Int> pi_snf_diagonal;
    std::string witness;
    bool pass() const { return composes_to_zero && pi_surjective && kernel_equals_image; }
};
LocalizationReport check_localization_k0(const Instance& inst);

struct ThetaReport {
    ZMat theta_matrix; // 2 r_B x r_B, expected (-id; id)
    bool simples_ok = false;
    bool exchange_class_ok = false; // [beta(N)] = [alpha(N,N)] - [alpha(N,0)] on samples
    bool samples_ok = false;
    std::size_t samples_checked = 0;
    std::string witness;
    bool pass() const { return simples_ok && exchange_class_ok && samples_ok; }
};
ThetaReport check_theta_composition(const Instance& inst, std::size_t dim_bound);

struct OracleReport {
    std::size_t rank_mod_a = 0, rank_mod_d = 0, rank_pairs = 0;
    std::vector<Int> torsion_a, torsion_d, torsion_pairs;
    bool mod_a_ok = false, mod_d_ok = false, pairs_ok = false;
    bool basis_change_a_ok = false, basis_change_d_ok = false;
    std::string witness;
    bool pass() const {
        return mod_a_ok && mod_d_ok && pairs_ok && basis_change_a_ok && basis_change_d_ok;
    }
};
OracleReport check_oracle_crosscheck(const Instance& inst, std::size_t dim_bound,
                                     std::size_t pair_dim_bound);

} // namespace devissage
