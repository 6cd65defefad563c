#pragma once

#include "devissage/linalg.hpp"

#include <memory>
#include <string>
#include <vector>

namespace devissage {

// Finite-dimensional associative unital algebra over F_p, given by structure
// constants: table[i][j] is the coefficient vector of b_i * b_j.
struct Algebra {
    Scalar p = 2;
    std::size_t dim = 0;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Vec>> table;
    Vec unit;

    Vec multiply(const Vec& a, const Vec& b) const;
    // Matrix of x |-> x * a (row convention), so right_mult(b_i) * right_mult(b_j)
    // equals right_mult(b_i * b_j).
    Mat right_mult(const Vec& a) const;
    Mat left_mult(const Vec& a) const; // x |-> a * x
    Vec basis_vector(std::size_t k) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

struct RawAlgebra {
    Scalar p = 2;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<Vec>> table;
    Vec unit;
};

// Checks primality of p, table shape, associativity on all basis triples and
// the two-sided unit; throws NotPrimeCharacteristic / NotAssociative / NoUnit.
AlgebraPtr validate_algebra(const RawAlgebra& raw);

bool same_algebra(const Algebra& a, const Algebra& b);

// Two-sided ideal, stored as an RREF row basis inside the algebra's
// coordinates. square_zero is a certificate that I*I = 0 on basis pairs.
struct Ideal {
    AlgebraPtr alg;
    Mat basis;
    bool square_zero = false;

    std::size_t dim() const { return basis.rows(); }
};

// Validates closure under left/right multiplication (NotTwoSided) and, when
// required, I*I = 0 (IdealNotSquareZero).
Ideal validate_ideal(const AlgebraPtr& alg, const Mat& span_rows, bool require_square_zero);

// A/I together with the linear data identifying it inside A: proj maps an
// element of A to its coset coordinates, lift picks the echelon-complement
// coset representatives (proj * lift = id is not expected; lift then proj is).
struct QuotientAlgebra {
    AlgebraPtr alg;
    Mat proj; // dim(A) x dim(A/I)
    Mat lift; // dim(A/I) x dim(A)
};

QuotientAlgebra make_quotient_algebra(const AlgebraPtr& a, const Ideal& ideal);

} // namespace devissage
