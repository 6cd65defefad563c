#pragma once

#include "devissage/instance.hpp"
#include "devissage/module.hpp"
#include "devissage/pair_category.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace devissage {

// The block-matrix algebra
//     D = ( A    I   )
//         ( A/I  A/I )
// for a square-zero two-sided ideal. Basis layout: the A block first, then
// the I block, then the (2,1) and (2,2) copies of A/I on the chosen coset
// representatives. (1,2)*(2,1) lands in the A block through I*(A/I) <= I,
// which is well defined because I^2 = 0; (2,1)*(1,2) = 0.
struct AuslanderAlgebra {
    AlgebraPtr alg;
    std::size_t na = 0, ni = 0, nb = 0; // dim A, dim I, dim A/I

    std::size_t dim() const { return na + ni + 2 * nb; }
    std::size_t a11(std::size_t k) const { return k; }
    std::size_t i12(std::size_t s) const { return na + s; }
    std::size_t b21(std::size_t j) const { return na + ni + j; }
    std::size_t b22(std::size_t j) const { return na + ni + nb + j; }
};

std::shared_ptr<const AuslanderAlgebra> build_auslander_algebra(const AlgebraPtr& a, const Ideal& ideal,
                                                                const QuotientAlgebra& b);

// i^L(M) = M/MI with the canonical surjection M -> i(i^L M).
struct LeftAdjointResult {
    ModuleRep mod; // over A/I
    ModuleHom unit; // M -> M/MI, as A-modules
};
LeftAdjointResult i_left_adjoint(const Instance& inst, const ModuleRep& m);

// j(M) = MI as a submodule of M, with its A/I-structure.
struct JResult {
    ModuleRep mod;  // over A/I
    Mat basis;      // rows of MI inside M
    ModuleHom incl; // i(j M) -> M, as A-modules
};
JResult j_functor(const Instance& inst, const ModuleRep& m);

// j~(M) = M (x)_A I with its A/I-structure (the right action factors through
// A/I since I^2 = 0).
struct JTildeResult {
    ModuleRep mod; // over A/I
    TensorModule tensor;
};
JTildeResult j_tilde(const Instance& inst, const ModuleRep& m);
// Induced map j~(f) in quotient coordinates.
Mat j_tilde_hom(const Instance& inst, const JTildeResult& tsrc, const JTildeResult& ttgt,
                const ModuleHom& f);

// The multiplication-induced natural map j~(M) -> j(M), m (x) a |-> m*a;
// an epimorphism for every M.
ModuleHom jtilde_to_j(const Instance& inst, const ModuleRep& m);

// Object of C_{A,B}: a quadruple (X, Y, u, v) with u : i(Y) -> X and
// v : j~(X) -> Y subject to
//   (i)  v o j~(u) = 0,
//   (ii) u(v(x (x) a)) = x*a  for all a in I.
struct CObject {
    ModuleRep X; // over A
    ModuleRep Y; // over A/I
    Mat u;       // Y.dim x X.dim
    Mat v;       // dim j~(X) x Y.dim
};

CObject make_c_object(const Instance& inst, ModuleRep x, ModuleRep y, Mat u, Mat v);
bool c_objects_equal(const CObject& a, const CObject& b);
CObject c_zero_object(const Instance& inst);
CObject c_direct_sum(const Instance& inst, const CObject& a, const CObject& b);

// Morphism of quadruples: fx o u' = u o i(fy)-square and fy o v' = v o j~(fx)-square.
struct CHom {
    CObject source, target;
    Mat fx; // source.X.dim x target.X.dim
    Mat fy; // source.Y.dim x target.Y.dim
};

bool is_c_hom(const Instance& inst, const CObject& source, const CObject& target, const Mat& fx,
              const Mat& fy);
CHom make_c_hom(const Instance& inst, CObject source, CObject target, Mat fx, Mat fy);
std::vector<CHom> c_hom_space(const Instance& inst, const CObject& a, const CObject& b);

// alpha(X, Y) = (X, Y, inclusion, canonical v); fully faithful, image = {u mono}.
CObject alpha(const Instance& inst, const PairObject& p);
// The unique v making (X, Y, inclusion, v) a valid quadruple (Prop-level
// uniqueness is exercised in the tests via the linear solution space).
Mat canonical_v(const Instance& inst, const ModuleRep& x, const Mat& y_basis);

// beta(N) = (0, N, 0, 0); fully faithful with essential image the torsion class.
CObject beta(const Instance& inst, const ModuleRep& over_b);

// Torsion decomposition 0 -> beta(ker u) -> c -> alpha(X, im u) -> 0.
struct TorsionDecomposition {
    ModuleRep torsion_module; // over A/I, = ker u
    CObject torsion;          // beta(ker u)
    CHom incl;
    PairObject quotient_pair; // (X, im u)
    CObject quotient;         // alpha of it
    CHom proj;
};
TorsionDecomposition torsion_decompose(const Instance& inst, const CObject& c);

// pi(X, Y, u, v) = X; exact, kills exactly beta(B).
ModuleRep serre_project(const CObject& c);

// Hom in the Serre quotient C/beta(B) between alpha-images, computed as the
// stabilizing colimit over Y1' <= Y1 with X1/Y1' over A/I, plus the
// comparison with Hom_A(X1, X2).
struct QuotientHomResult {
    std::size_t dim = 0;            // dim of the colimit
    std::size_t hom_a_dim = 0;      // dim Hom_A(X1, X2)
    bool stabilizes_at_minimum = false;
    bool matches_hom_a = false;
    bool witness_ok = false; // every f admits Y1' = Y1 n f^{-1}(Y2)
};
QuotientHomResult quotient_hom_space(const Instance& inst, const PairObject& p1, const PairObject& p2);

// Prop 3.8-style cover: alpha(F, FI) (+) alpha(Y, Y) ->> c with F a free
// cover of X.
struct CoverResult {
    PairObject free_pair; // (F, FI)
    PairObject y_pair;    // (i(Y), Y)
    CObject cover;        // alpha(free) (+) alpha(y)
    CHom epi;
    bool surjective_x = false;
    bool surjective_y = false;
};
CoverResult cover_by_pairs(const Instance& inst, const CObject& c);

// Equivalence with mod-D: pack a quadruple into a right D-module of
// dimension dim X + dim Y and back.
ModuleRep to_d_module(const Instance& inst, const CObject& c);
CObject from_d_module(const Instance& inst, const ModuleRep& m);

} // namespace devissage
