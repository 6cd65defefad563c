#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace devissage {

using Int = boost::multiprecision::cpp_int;

// Dense integer matrix with exact arithmetic, row major.
class ZMat {
  public:
    ZMat() = default;
    ZMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static ZMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const ZMat& other) const = default;
    bool is_zero() const;
    ZMat operator*(const ZMat& rhs) const;
    ZMat operator-(const ZMat& rhs) const;
    ZMat transpose() const;
    ZMat hstack(const ZMat& right) const;
    ZMat vstack(const ZMat& below) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

// U * M * V = D with U, V unimodular and D diagonal with the divisibility
// chain d1 | d2 | ... All arithmetic is exact.
struct Snf {
    ZMat d, u, v;
    std::vector<Int> diagonal; // nonzero entries, in chain order
    std::size_t rank() const { return diagonal.size(); }
};

Snf smith_normal_form(const ZMat& m);

Int zmat_determinant(const ZMat& m); // via SNF, square only

std::size_t zmat_rank(const ZMat& m);

// Basis of the integer kernel {x : m * x = 0} as columns of the result.
ZMat integer_kernel(const ZMat& m);

// Solves m * x = b over the integers for each column of b; returns x or
// nothing when some column has no integral solution.
bool integer_solve(const ZMat& m, const ZMat& b, ZMat& x);

// True when the columns of `gens` generate exactly the lattice generated by
// the columns of `lattice` (used with lattice = a kernel basis, so the
// question is full-rank equality of a sublattice).
bool lattice_equal(const ZMat& gens, const ZMat& lattice);

} // namespace devissage
