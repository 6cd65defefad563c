#include "devissage/instance.hpp"

#include "devissage/auslander.hpp"
#include "devissage/errors.hpp"

namespace devissage {

ModuleRep Instance::inflate(const ModuleRep& over_b) const {
    if (!same_algebra(*over_b.alg, *B.alg)) fail(Errc::bad_argument, "inflate expects a module over A/I");
    ModuleRep out;
    out.alg = A;
    out.dim = over_b.dim;
    out.action.reserve(A->dim);
    for (std::size_t k = 0; k < A->dim; ++k)
        out.action.push_back(over_b.action_of(B.proj.row(k)));
    return out;
}

ModuleRep Instance::restrict_to_b(const ModuleRep& over_a) const {
    if (!same_algebra(*over_a.alg, *A)) fail(Errc::bad_argument, "restrict expects a module over A");
    if (module_times_ideal(over_a, I).rows() != 0)
        fail(Errc::not_in_b, "module is not killed by the ideal");
    ModuleRep out;
    out.alg = B.alg;
    out.dim = over_a.dim;
    out.action.reserve(B.alg->dim);
    for (std::size_t j = 0; j < B.alg->dim; ++j)
        out.action.push_back(over_a.action_of(B.lift.row(j)));
    return out;
}

ModuleHom Instance::inflate_hom(const ModuleHom& f) const {
    return ModuleHom{inflate(f.source), inflate(f.target), f.matrix};
}

ModuleHom Instance::restrict_hom_to_b(const ModuleHom& f) const {
    return ModuleHom{restrict_to_b(f.source), restrict_to_b(f.target), f.matrix};
}

Instance make_instance(AlgebraPtr a, const Mat& ideal_rows, std::size_t cap) {
    Instance inst;
    inst.A = std::move(a);
    inst.I = validate_ideal(inst.A, ideal_rows, /*require_square_zero=*/true);
    inst.B = make_quotient_algebra(inst.A, inst.I);
    inst.cap = cap;
    inst.simples_A = simple_modules(inst.A, cap);
    inst.simples_B = simple_modules(inst.B.alg, cap);
    inst.D = build_auslander_algebra(inst.A, inst.I, inst.B);
    inst.simples_D = simple_modules(inst.D->alg, cap);
    return inst;
}

} // namespace devissage
