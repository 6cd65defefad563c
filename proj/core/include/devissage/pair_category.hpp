#pragma once

#include "devissage/instance.hpp"
#include "devissage/module.hpp"

#include <vector>

namespace devissage {

// Object of the quasi-abelian pair category: an A-module X together with a
// submodule Y (canonical RREF basis in X's coordinates) such that Y*I = 0
// and X*I <= Y, i.e. both Y and X/Y live over A/I.
struct PairObject {
    ModuleRep X;
    Mat Y; // RREF rows, Y.rows() x X.dim
};

// Morphism: a module map on the X components carrying Y into Y'.
struct PairHom {
    PairObject source, target;
    Mat f; // source.X.dim x target.X.dim
};

PairObject make_pair_object(const Instance& inst, const ModuleRep& x, const Mat& y_rows);
bool pair_objects_equal(const PairObject& a, const PairObject& b);

PairHom make_pair_hom(const PairObject& source, const PairObject& target, const Mat& f);
bool is_pair_hom(const PairObject& source, const PairObject& target, const Mat& f);
PairHom pair_identity(const PairObject& p);
PairHom pair_zero_hom(const PairObject& source, const PairObject& target);
PairHom pair_compose(const PairHom& f, const PairHom& g);

// Basis of the space of pair morphisms.
std::vector<Mat> pair_hom_space(const PairObject& a, const PairObject& b);

struct PairKernel {
    PairObject obj;
    PairHom incl;
};

struct PairCokernel {
    PairObject obj;
    PairHom proj;
};

// Kernel (ker f, ker f n Y) and cokernel (X'/f(X), (Y' + f(X))/f(X)).
PairKernel pair_kernel(const Instance& inst, const PairHom& h);
PairCokernel pair_cokernel(const Instance& inst, const PairHom& h);

enum class Strictness { iso, strict_mono, nonstrict_mono, strict_epi, nonstrict_epi, neither };
const char* strictness_name(Strictness s);

// Mono/epi are decided through the kernel/cokernel formulas; strictness by
// comparing with ker(coker) resp. coker(ker).
Strictness strictness(const Instance& inst, const PairHom& h);

PairObject pair_direct_sum(const PairObject& a, const PairObject& b);

struct PairPushout {
    PairObject obj;
    PairHom from_first;  // X1 -> P
    PairHom from_second; // X2 -> P
};

struct PairPullback {
    PairObject obj;
    PairHom to_first;  // P -> X1
    PairHom to_second; // P -> X2
};

// Pushout of f : Z -> X1, g : Z -> X2 as the cokernel of (f, -g);
// the pullback of maps into a common target is the dual kernel.
PairPushout pair_pushout(const Instance& inst, const PairHom& f, const PairHom& g);
PairPullback pair_pullback(const Instance& inst, const PairHom& f, const PairHom& g);

// Phi_1(N) = (N, 0) and Phi_2(N) = (N, N) for N over A/I.
PairObject phi1(const Instance& inst, const ModuleRep& over_b);
PairObject phi2(const Instance& inst, const ModuleRep& over_b);
// Phi_1^L(X, Y) = X/Y and Phi_2^R(X, Y) = Y, as modules over A/I.
ModuleRep phi1_left_adjoint(const Instance& inst, const PairObject& p);
ModuleRep phi2_right_adjoint(const Instance& inst, const PairObject& p);

// The functorial admissible short exact sequence
// 0 -> Phi_2(Y) -> (X, Y) -> Phi_1(X/Y) -> 0.
struct PairSes {
    PairObject sub, mid, quot;
    PairHom incl, proj;
};

PairSes canonical_ses(const Instance& inst, const PairObject& p);

// Kernel-cokernel pair test: incl = ker(proj) and proj = coker(incl).
bool is_admissible_ses(const Instance& inst, const PairSes& ses);

} // namespace devissage
