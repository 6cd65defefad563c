#include "devissage/algebra.hpp"

#include "devissage/errors.hpp"

#include <sstream>

namespace devissage {

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    Vec out(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b[j] == 0) continue;
            Scalar c = fp_mul(a[i], b[j], p);
            const Vec& prod = table[i][j];
            for (std::size_t k = 0; k < dim; ++k)
                out[k] = fp_add(out[k], fp_mul(c, prod[k], p), p);
        }
    }
    return out;
}

Mat Algebra::right_mult(const Vec& a) const {
    Mat m(dim, dim, p);
    for (std::size_t i = 0; i < dim; ++i) {
        Vec row(dim, 0);
        for (std::size_t j = 0; j < dim; ++j) {
            if (a[j] == 0) continue;
            for (std::size_t k = 0; k < dim; ++k)
                row[k] = fp_add(row[k], fp_mul(a[j], table[i][j][k], p), p);
        }
        m.set_row(i, row);
    }
    return m;
}

Mat Algebra::left_mult(const Vec& a) const {
    Mat m(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j) {
        Vec row(dim, 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t k = 0; k < dim; ++k)
                row[k] = fp_add(row[k], fp_mul(a[i], table[i][j][k], p), p);
        }
        m.set_row(j, row);
    }
    return m;
}

Vec Algebra::basis_vector(std::size_t k) const {
    Vec v(dim, 0);
    v[k] = 1;
    return v;
}

AlgebraPtr validate_algebra(const RawAlgebra& raw) {
    if (!is_prime(raw.p)) fail(Errc::not_prime_characteristic, "p = " + std::to_string(raw.p));
    std::size_t n = raw.basis_labels.size();
    if (n == 0) fail(Errc::bad_argument, "algebra must have positive dimension");
    if (raw.table.size() != n || raw.unit.size() != n)
        fail(Errc::bad_argument, "structure-constant table shape inconsistent");
    for (const auto& row : raw.table) {
        if (row.size() != n) fail(Errc::bad_argument, "structure-constant table shape inconsistent");
        for (const auto& entry : row)
            if (entry.size() != n) fail(Errc::bad_argument, "structure-constant table shape inconsistent");
    }

    auto alg = std::make_shared<Algebra>();
    alg->p = raw.p;
    alg->dim = n;
    alg->basis_labels = raw.basis_labels;
    alg->table = raw.table;
    alg->unit = raw.unit;
    // reduce entries mod p
    for (auto& row : alg->table)
        for (auto& entry : row)
            for (auto& c : entry) c %= raw.p;
    for (auto& c : alg->unit) c %= raw.p;

    // associativity on every basis triple
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec lhs = alg->multiply(alg->table[i][j], alg->basis_vector(k));
                Vec rhs = alg->multiply(alg->basis_vector(i), alg->table[j][k]);
                if (lhs != rhs) {
                    std::ostringstream msg;
                    msg << "(" << alg->basis_labels[i] << "*" << alg->basis_labels[j] << ")*"
                        << alg->basis_labels[k] << " != " << alg->basis_labels[i] << "*("
                        << alg->basis_labels[j] << "*" << alg->basis_labels[k] << ")"
                        << " at triple (" << i << "," << j << "," << k << ")";
                    fail(Errc::not_associative, msg.str());
                }
            }

    // two-sided unit on every basis element
    for (std::size_t i = 0; i < n; ++i) {
        Vec e = alg->basis_vector(i);
        if (alg->multiply(alg->unit, e) != e || alg->multiply(e, alg->unit) != e)
            fail(Errc::no_unit, "unit fails on basis element " + alg->basis_labels[i]);
    }
    return alg;
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    return a.p == b.p && a.dim == b.dim && a.table == b.table && a.unit == b.unit;
}

Ideal validate_ideal(const AlgebraPtr& alg, const Mat& span_rows, bool require_square_zero) {
    if (span_rows.rows() > 0 && span_rows.cols() != alg->dim)
        fail(Errc::bad_argument, "ideal basis has wrong ambient dimension");
    Mat basis = row_space(span_rows.rows() ? span_rows : Mat(0, alg->dim, alg->p));
    Echelon span = rref(basis);

    for (std::size_t s = 0; s < basis.rows(); ++s) {
        Vec x = basis.row(s);
        for (std::size_t k = 0; k < alg->dim; ++k) {
            Vec e = alg->basis_vector(k);
            if (!row_space_contains(span, alg->multiply(x, e)))
                fail(Errc::not_two_sided, "x*b escapes the span at ideal row " + std::to_string(s));
            if (!row_space_contains(span, alg->multiply(e, x)))
                fail(Errc::not_two_sided, "b*x escapes the span at ideal row " + std::to_string(s));
        }
    }

    bool square_zero = true;
    for (std::size_t s = 0; s < basis.rows() && square_zero; ++s)
        for (std::size_t t = 0; t < basis.rows() && square_zero; ++t)
            if (!vec_is_zero(alg->multiply(basis.row(s), basis.row(t)))) square_zero = false;
    if (require_square_zero && !square_zero)
        fail(Errc::ideal_not_square_zero, "I*I != 0 on ideal basis pairs");

    Ideal ideal;
    ideal.alg = alg;
    ideal.basis = std::move(basis);
    ideal.square_zero = square_zero;
    return ideal;
}

QuotientAlgebra make_quotient_algebra(const AlgebraPtr& a, const Ideal& ideal) {
    Scalar p = a->p;
    std::size_t n = a->dim;
    Echelon span = rref(ideal.basis);
    std::vector<std::size_t> comp = nonpivot_columns(span, n);
    std::size_t q = comp.size();

    // lift: coset representatives are the unit vectors at non-pivot columns
    Mat lift(q, n, p);
    for (std::size_t j = 0; j < q; ++j) lift.at(j, comp[j]) = 1;

    // proj: reduce each basis vector of A modulo I, then read off the
    // complement coordinates.
    Mat proj(n, q, p);
    for (std::size_t i = 0; i < n; ++i) {
        Vec r = reduce_row(span, a->basis_vector(i));
        for (std::size_t j = 0; j < q; ++j) proj.at(i, j) = r[comp[j]];
    }

    RawAlgebra raw;
    raw.p = p;
    for (std::size_t j = 0; j < q; ++j) raw.basis_labels.push_back(a->basis_labels[comp[j]] + "~");
    raw.table.assign(q, std::vector<Vec>(q));
    for (std::size_t j1 = 0; j1 < q; ++j1)
        for (std::size_t j2 = 0; j2 < q; ++j2)
            raw.table[j1][j2] = row_times_mat(a->multiply(lift.row(j1), lift.row(j2)), proj);
    raw.unit = row_times_mat(a->unit, proj);

    QuotientAlgebra out;
    out.alg = validate_algebra(raw);
    out.proj = std::move(proj);
    out.lift = std::move(lift);
    return out;
}

} // namespace devissage
