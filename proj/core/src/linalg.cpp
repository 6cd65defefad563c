#include "devissage/linalg.hpp"

#include "devissage/errors.hpp"

#include <algorithm>
#include <cstdint>

namespace devissage {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Scalar fp_add(Scalar a, Scalar b, Scalar p) { return (a + b) % p; }
Scalar fp_sub(Scalar a, Scalar b, Scalar p) { return (a + p - b) % p; }
Scalar fp_mul(Scalar a, Scalar b, Scalar p) {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}
Scalar fp_neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }

Scalar fp_inv(Scalar a, Scalar p) {
    if (a == 0) fail(Errc::bad_argument, "inverse of zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<Scalar>(t);
}

Vec vec_add(const Vec& a, const Vec& b, Scalar p) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = fp_add(a[i], b[i], p);
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b, Scalar p) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = fp_sub(a[i], b[i], p);
    return out;
}

Vec vec_scale(Scalar c, const Vec& a, Scalar p) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = fp_mul(c, a[i], p);
    return out;
}

bool vec_is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Scalar x) { return x == 0; });
}

Mat::Mat(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

Mat Mat::identity(std::size_t n, Scalar p) {
    Mat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, std::size_t cols, Scalar p) {
    Mat m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) fail(Errc::bad_argument, "row length mismatch");
        m.set_row(i, rows[i]);
    }
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](Scalar x) { return x == 0; });
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) fail(Errc::bad_argument, "matrix product shape/prime mismatch");
    Mat out(rows_, rhs.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar c = at(i, k);
            if (c == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out.at(i, j) = fp_add(out.at(i, j), fp_mul(c, rhs.at(k, j), p_), p_);
        }
    return out;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        fail(Errc::bad_argument, "matrix sum shape/prime mismatch");
    Mat out(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fp_add(a_[i], rhs.a_[i], p_);
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || p_ != rhs.p_)
        fail(Errc::bad_argument, "matrix difference shape/prime mismatch");
    Mat out(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fp_sub(a_[i], rhs.a_[i], p_);
    return out;
}

Mat Mat::scaled(Scalar c) const {
    Mat out(rows_, cols_, p_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = fp_mul(c, a_[i], p_);
    return out;
}

Mat Mat::transpose() const {
    Mat out(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vec Mat::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Mat::set_row(std::size_t i, const Vec& v) {
    std::copy(v.begin(), v.end(), a_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

Mat Mat::take_rows(const std::vector<std::size_t>& idx) const {
    Mat out(idx.size(), cols_, p_);
    for (std::size_t i = 0; i < idx.size(); ++i) out.set_row(i, row(idx[i]));
    return out;
}

Mat Mat::vstack(const Mat& below) const {
    if (cols_ != below.cols_ || p_ != below.p_) fail(Errc::bad_argument, "vstack mismatch");
    Mat out(rows_ + below.rows_, cols_, p_);
    std::copy(a_.begin(), a_.end(), out.a_.begin());
    std::copy(below.a_.begin(), below.a_.end(), out.a_.begin() + static_cast<std::ptrdiff_t>(a_.size()));
    return out;
}

Mat Mat::hstack(const Mat& right) const {
    if (rows_ != right.rows_ || p_ != right.p_) fail(Errc::bad_argument, "hstack mismatch");
    Mat out(rows_, cols_ + right.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out.at(i, cols_ + j) = right.at(i, j);
    }
    return out;
}

std::string Mat::key() const {
    std::string s;
    s.reserve(a_.size() + 8);
    s.push_back(static_cast<char>(rows_ & 0xff));
    s.push_back(static_cast<char>((rows_ >> 8) & 0xff));
    s.push_back(static_cast<char>(cols_ & 0xff));
    s.push_back(static_cast<char>((cols_ >> 8) & 0xff));
    for (Scalar x : a_) s.push_back(static_cast<char>(x & 0xff));
    return s;
}

Vec row_times_mat(const Vec& v, const Mat& m) {
    if (v.size() != m.rows()) fail(Errc::bad_argument, "row*mat shape mismatch");
    Vec out(m.cols(), 0);
    Scalar p = m.prime();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] = fp_add(out[j], fp_mul(v[i], m.at(i, j), p), p);
    }
    return out;
}

Echelon rref(const Mat& m) {
    Scalar p = m.prime();
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));

    std::vector<Vec> basis;
    std::vector<std::size_t> pivots;
    for (auto& r : rows) {
        // reduce against current basis
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Scalar c = r[pivots[b]];
            if (c != 0) r = vec_sub(r, vec_scale(c, basis[b], p), p);
        }
        std::size_t lead = r.size();
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j] != 0) {
                lead = j;
                break;
            }
        if (lead == r.size()) continue;
        r = vec_scale(fp_inv(r[lead], p), r, p);
        // back-eliminate the new pivot from existing rows
        for (std::size_t b = 0; b < basis.size(); ++b) {
            Scalar c = basis[b][lead];
            if (c != 0) basis[b] = vec_sub(basis[b], vec_scale(c, r, p), p);
        }
        // insert keeping pivots increasing
        std::size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < lead) ++pos;
        basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), r);
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    }
    Echelon e;
    e.basis = Mat::from_rows(basis, m.cols(), p);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t rank(const Mat& m) { return rref(m).basis.rows(); }

Mat row_space(const Mat& m) { return rref(m).basis; }

Vec reduce_row(const Echelon& e, Vec v) {
    Scalar p = e.basis.prime();
    for (std::size_t b = 0; b < e.pivots.size(); ++b) {
        Scalar c = v[e.pivots[b]];
        if (c != 0) v = vec_sub(v, vec_scale(c, e.basis.row(b), p), p);
    }
    return v;
}

bool row_space_contains(const Echelon& e, const Vec& v) { return vec_is_zero(reduce_row(e, v)); }

bool row_space_contains_all(const Echelon& e, const Mat& rows) {
    for (std::size_t i = 0; i < rows.rows(); ++i)
        if (!row_space_contains(e, rows.row(i))) return false;
    return true;
}

Vec coords_in_basis(const Echelon& e, const Vec& v) {
    // For an RREF basis the coordinates are the pivot-column entries.
    Vec coords(e.basis.rows(), 0);
    for (std::size_t b = 0; b < e.pivots.size(); ++b) coords[b] = v[e.pivots[b]];
    if (!vec_is_zero(vec_sub(v, row_times_mat(coords, e.basis), e.basis.prime())))
        fail(Errc::bad_argument, "vector outside span");
    return coords;
}

bool rref_extend(Echelon& e, Vec v) {
    Scalar p = e.basis.prime();
    v = reduce_row(e, v);
    std::size_t lead = v.size();
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) {
            lead = j;
            break;
        }
    if (lead == v.size()) return false;
    v = vec_scale(fp_inv(v[lead], p), v, p);
    std::vector<Vec> basis;
    basis.reserve(e.basis.rows() + 1);
    for (std::size_t b = 0; b < e.basis.rows(); ++b) {
        Vec r = e.basis.row(b);
        Scalar c = r[lead];
        if (c != 0) r = vec_sub(r, vec_scale(c, v, p), p);
        basis.push_back(std::move(r));
    }
    std::size_t pos = 0;
    while (pos < e.pivots.size() && e.pivots[pos] < lead) ++pos;
    basis.insert(basis.begin() + static_cast<std::ptrdiff_t>(pos), v);
    e.pivots.insert(e.pivots.begin() + static_cast<std::ptrdiff_t>(pos), lead);
    e.basis = Mat::from_rows(basis, v.size(), p);
    return true;
}

Mat right_nullspace(const Mat& m) {
    Scalar p = m.prime();
    Echelon e = rref(m);
    std::vector<std::size_t> free_cols = nonpivot_columns(e, m.cols());
    std::vector<Vec> sols;
    sols.reserve(free_cols.size());
    for (std::size_t f : free_cols) {
        Vec x(m.cols(), 0);
        x[f] = 1;
        for (std::size_t b = 0; b < e.pivots.size(); ++b)
            x[e.pivots[b]] = fp_neg(e.basis.at(b, f), p);
        sols.push_back(std::move(x));
    }
    return row_space(Mat::from_rows(sols, m.cols(), p));
}

Mat left_nullspace(const Mat& m) { return right_nullspace(m.transpose()); }

Mat solve_left(const Mat& a, const Mat& b) {
    // X * a = b  <=>  a^T * X^T = b^T. One joint RREF of [a^T | b^T] solves
    // all right-hand sides: a pivot landing in the b block certifies an
    // inconsistent column.
    if (a.cols() != b.cols() || a.prime() != b.prime()) fail(Errc::bad_argument, "solve_left shape mismatch");
    Echelon e = rref(a.transpose().hstack(b.transpose()));
    for (std::size_t piv : e.pivots)
        if (piv >= a.rows()) fail(Errc::bad_argument, "solve_left: inconsistent system");
    Mat x(b.rows(), a.rows(), a.prime());
    for (std::size_t r = 0; r < e.basis.rows(); ++r)
        for (std::size_t j = 0; j < b.rows(); ++j)
            x.at(j, e.pivots[r]) = e.basis.at(r, a.rows() + j);
    return x;
}

Mat inverse(const Mat& m) {
    if (m.rows() != m.cols()) fail(Errc::bad_argument, "inverse of non-square matrix");
    std::size_t n = m.rows();
    Echelon e = rref(m.hstack(Mat::identity(n, m.prime())));
    if (e.basis.rows() != n) fail(Errc::bad_argument, "inverse of singular matrix");
    for (std::size_t i = 0; i < n; ++i)
        if (e.pivots[i] != i) fail(Errc::bad_argument, "inverse of singular matrix");
    Mat out(n, n, m.prime());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.at(i, j) = e.basis.at(i, n + j);
    return out;
}

Mat row_space_sum(const Mat& a, const Mat& b) { return row_space(a.vstack(b)); }

Mat row_space_intersection(const Mat& a, const Mat& b) {
    // x*a = y*b  <=>  (x, y) in the left nullspace of [a; -b].
    if (a.cols() != b.cols() || a.prime() != b.prime())
        fail(Errc::bad_argument, "intersection shape mismatch");
    Scalar p = a.prime();
    Mat stacked = a.vstack(b.scaled(fp_neg(1, p)));
    Mat null = left_nullspace(stacked);
    std::vector<Vec> gens;
    gens.reserve(null.rows());
    for (std::size_t i = 0; i < null.rows(); ++i) {
        Vec xy = null.row(i);
        Vec x(xy.begin(), xy.begin() + static_cast<std::ptrdiff_t>(a.rows()));
        gens.push_back(row_times_mat(x, a));
    }
    return row_space(Mat::from_rows(gens, a.cols(), p));
}

bool same_row_space(const Mat& a, const Mat& b) { return row_space(a) == row_space(b); }

std::vector<std::size_t> nonpivot_columns(const Echelon& e, std::size_t ncols) {
    std::vector<std::size_t> out;
    std::size_t next = 0;
    for (std::size_t j = 0; j < ncols; ++j) {
        if (next < e.pivots.size() && e.pivots[next] == j)
            ++next;
        else
            out.push_back(j);
    }
    return out;
}

VectorEnumerator::VectorEnumerator(std::size_t dim, Scalar p) : dim_(dim), p_(p), cur_(dim, 0) {}

bool VectorEnumerator::next(Vec& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        out = cur_;
        return true;
    }
    std::size_t i = 0;
    while (i < dim_) {
        if (++cur_[i] < p_) break;
        cur_[i] = 0;
        ++i;
    }
    if (i == dim_) {
        done_ = true;
        return false;
    }
    out = cur_;
    return true;
}

} // namespace devissage
