#pragma once

#include "devissage/algebra.hpp"
#include "devissage/module.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace devissage {

struct AuslanderAlgebra;

// One dévissage instance pins the whole tower: the ambient algebra A, a
// square-zero two-sided ideal I, the quotient B = A/I whose module category
// plays the role of the subcategory, the Auslander algebra D, and the
// pinned simple lists that index every K0 lattice.
struct Instance {
    AlgebraPtr A;
    Ideal I;
    QuotientAlgebra B;
    std::vector<ModuleRep> simples_A;
    std::vector<ModuleRep> simples_B; // over B.alg
    std::shared_ptr<const AuslanderAlgebra> D;
    std::vector<ModuleRep> simples_D;
    std::size_t cap = 1'000'000;

    // i : mod-B -> mod-A, same underlying space with I acting by zero.
    ModuleRep inflate(const ModuleRep& over_b) const;
    // Inverse direction on modules killed by I.
    ModuleRep restrict_to_b(const ModuleRep& over_a) const;
    ModuleHom inflate_hom(const ModuleHom& f) const;
    ModuleHom restrict_hom_to_b(const ModuleHom& f) const;
};

Instance make_instance(AlgebraPtr a, const Mat& ideal_rows, std::size_t cap = 1'000'000);

} // namespace devissage
