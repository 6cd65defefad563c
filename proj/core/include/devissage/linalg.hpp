#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace devissage {

// Scalars are residues in [0, p). All matrices carry their prime so that
// mixed-characteristic arithmetic is caught immediately.
using Scalar = std::uint32_t;
using Vec = std::vector<Scalar>;

bool is_prime(std::uint64_t n);

Scalar fp_add(Scalar a, Scalar b, Scalar p);
Scalar fp_sub(Scalar a, Scalar b, Scalar p);
Scalar fp_mul(Scalar a, Scalar b, Scalar p);
Scalar fp_neg(Scalar a, Scalar p);
Scalar fp_inv(Scalar a, Scalar p);

Vec vec_add(const Vec& a, const Vec& b, Scalar p);
Vec vec_sub(const Vec& a, const Vec& b, Scalar p);
Vec vec_scale(Scalar c, const Vec& a, Scalar p);
bool vec_is_zero(const Vec& a);

// Dense row-major matrix over F_p. Vectors are rows throughout the library:
// a linear map acts by right multiplication, row * Mat.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, Scalar p);

    static Mat identity(std::size_t n, Scalar p);
    static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols, Scalar p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar prime() const { return p_; }

    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Scalar at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const Mat& other) const = default;
    bool is_zero() const;

    Mat operator*(const Mat& rhs) const;
    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat scaled(Scalar c) const;
    Mat transpose() const;

    Vec row(std::size_t i) const;
    void set_row(std::size_t i, const Vec& v);
    Mat take_rows(const std::vector<std::size_t>& idx) const;
    Mat vstack(const Mat& below) const;
    Mat hstack(const Mat& right) const;

    // Byte string identifying (rows, cols, entries); used as a hash key when
    // deduplicating subspaces. Requires p < 256, which holds at desk scale.
    std::string key() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    Scalar p_ = 2;
    std::vector<Scalar> a_;
};

Vec row_times_mat(const Vec& v, const Mat& m);

// Reduced row echelon basis with zero rows dropped. `basis` rows are the
// canonical generators of the row space; `pivots[i]` is the pivot column of
// row i, strictly increasing.
struct Echelon {
    Mat basis;
    std::vector<std::size_t> pivots;
};

Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
Mat row_space(const Mat& m); // canonical RREF basis of the row space

Vec reduce_row(const Echelon& e, Vec v);
bool row_space_contains(const Echelon& e, const Vec& v);
bool row_space_contains_all(const Echelon& e, const Mat& rows);
// Coordinates x with x * e.basis = v; throws bad_argument when v is outside.
Vec coords_in_basis(const Echelon& e, const Vec& v);
// Insert v into the echelon basis, keeping it reduced; returns true if the
// space grew.
bool rref_extend(Echelon& e, Vec v);

// Solutions x (as rows, length m.cols()) of m * x^T = 0.
Mat right_nullspace(const Mat& m);
// Solutions v (as rows, length m.rows()) of v * m = 0.
Mat left_nullspace(const Mat& m);
// Any X with X * a = b; throws bad_argument when the system is inconsistent.
Mat solve_left(const Mat& a, const Mat& b);
Mat inverse(const Mat& m); // throws bad_argument when singular

Mat row_space_sum(const Mat& a, const Mat& b);
Mat row_space_intersection(const Mat& a, const Mat& b);
bool same_row_space(const Mat& a, const Mat& b);

std::vector<std::size_t> nonpivot_columns(const Echelon& e, std::size_t ncols);

// Enumerates all vectors of F_p^dim in a fixed order, 0 first.
class VectorEnumerator {
  public:
    VectorEnumerator(std::size_t dim, Scalar p);
    bool next(Vec& out); // false once exhausted

  private:
    std::size_t dim_;
    Scalar p_;
    Vec cur_;
    bool started_ = false, done_ = false;
};

} // namespace devissage
