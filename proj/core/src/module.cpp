#include "devissage/module.hpp"

#include "devissage/errors.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace devissage {

Mat ModuleRep::action_of(const Vec& a) const {
    Mat out(dim, dim, alg->p);
    for (std::size_t k = 0; k < alg->dim; ++k) {
        if (a[k] == 0) continue;
        out = out + action[k].scaled(a[k]);
    }
    return out;
}

ModuleRep make_module(AlgebraPtr alg, std::vector<Mat> action) {
    if (action.size() != alg->dim) fail(Errc::bad_argument, "one action matrix per algebra basis element");
    std::size_t d = action.empty() ? 0 : action[0].rows();
    for (const Mat& m : action)
        if (m.rows() != d || m.cols() != d || m.prime() != alg->p)
            fail(Errc::bad_argument, "action matrices must be square of equal size over F_p");
    ModuleRep mod;
    mod.alg = std::move(alg);
    mod.dim = d;
    mod.action = std::move(action);

    // unit acts as identity
    if (mod.action_of(mod.alg->unit) != Mat::identity(d, mod.alg->p))
        fail(Errc::bad_argument, "unit does not act as identity");
    // right-module axiom: action(b_i) * action(b_j) = action(b_i * b_j)
    for (std::size_t i = 0; i < mod.alg->dim; ++i)
        for (std::size_t j = 0; j < mod.alg->dim; ++j)
            if (mod.action[i] * mod.action[j] != mod.action_of(mod.alg->table[i][j]))
                fail(Errc::bad_argument,
                     "action violates the right-module axiom at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    return mod;
}

ModuleRep zero_module(const AlgebraPtr& alg) {
    ModuleRep mod;
    mod.alg = alg;
    mod.dim = 0;
    mod.action.assign(alg->dim, Mat(0, 0, alg->p));
    return mod;
}

ModuleRep regular_module(const AlgebraPtr& alg) {
    std::vector<Mat> action;
    action.reserve(alg->dim);
    for (std::size_t k = 0; k < alg->dim; ++k) action.push_back(alg->right_mult(alg->basis_vector(k)));
    return make_module(alg, std::move(action));
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    if (!same_algebra(*a.alg, *b.alg)) fail(Errc::bad_argument, "direct sum over different algebras");
    ModuleRep mod;
    mod.alg = a.alg;
    mod.dim = a.dim + b.dim;
    for (std::size_t k = 0; k < a.alg->dim; ++k) {
        Mat m(mod.dim, mod.dim, a.alg->p);
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) m.at(i, j) = a.action[k].at(i, j);
        for (std::size_t i = 0; i < b.dim; ++i)
            for (std::size_t j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.action[k].at(i, j);
        mod.action.push_back(std::move(m));
    }
    return mod;
}

ModuleRep free_module(const AlgebraPtr& alg, std::size_t rank) {
    ModuleRep out = zero_module(alg);
    ModuleRep reg = regular_module(alg);
    for (std::size_t i = 0; i < rank; ++i) out = direct_sum(out, reg);
    return out;
}

bool is_module_hom(const ModuleRep& source, const ModuleRep& target, const Mat& matrix) {
    if (matrix.rows() != source.dim || matrix.cols() != target.dim) return false;
    for (std::size_t k = 0; k < source.alg->dim; ++k)
        if (source.action[k] * matrix != matrix * target.action[k]) return false;
    return true;
}

ModuleHom make_hom(ModuleRep source, ModuleRep target, Mat matrix) {
    if (!same_algebra(*source.alg, *target.alg)) fail(Errc::bad_argument, "hom between different algebras");
    if (!is_module_hom(source, target, matrix)) fail(Errc::bad_argument, "matrix is not a module morphism");
    return ModuleHom{std::move(source), std::move(target), std::move(matrix)};
}

ModuleHom identity_hom(const ModuleRep& m) { return ModuleHom{m, m, Mat::identity(m.dim, m.alg->p)}; }

ModuleHom zero_hom(const ModuleRep& source, const ModuleRep& target) {
    return ModuleHom{source, target, Mat(source.dim, target.dim, source.alg->p)};
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g) {
    if (f.target.dim != g.source.dim) fail(Errc::bad_argument, "composition shape mismatch");
    return ModuleHom{f.source, g.target, f.matrix * g.matrix};
}

SubModule hom_kernel(const ModuleHom& f) {
    Mat ker = left_nullspace(f.matrix); // {m : m * f = 0}, canonical RREF
    return submodule(f.source, ker);
}

QuotModule hom_cokernel(const ModuleHom& f) {
    Mat image = row_space(f.matrix);
    return quotient(f.target, image);
}

Mat module_closure(const ModuleRep& m, const Mat& seed_rows) {
    Echelon e = rref(seed_rows);
    // saturate under the action; each pass multiplies current basis rows by
    // all algebra generators
    bool grew = true;
    while (grew) {
        grew = false;
        Mat basis = e.basis;
        for (std::size_t i = 0; i < basis.rows(); ++i)
            for (std::size_t k = 0; k < m.alg->dim; ++k)
                if (rref_extend(e, row_times_mat(basis.row(i), m.action[k]))) grew = true;
    }
    return e.basis;
}

bool is_invariant_subspace(const ModuleRep& m, const Mat& rref_rows) {
    Echelon e = rref(rref_rows);
    for (std::size_t i = 0; i < e.basis.rows(); ++i)
        for (std::size_t k = 0; k < m.alg->dim; ++k)
            if (!row_space_contains(e, row_times_mat(e.basis.row(i), m.action[k]))) return false;
    return true;
}

SubModule submodule(const ModuleRep& m, const Mat& rows) {
    Mat basis = row_space(rows.rows() ? rows : Mat(0, m.dim, m.alg->p));
    if (!is_invariant_subspace(m, basis)) fail(Errc::not_submodule, "subspace is not action-invariant");
    Echelon e = rref(basis);
    ModuleRep sub;
    sub.alg = m.alg;
    sub.dim = basis.rows();
    for (std::size_t k = 0; k < m.alg->dim; ++k) {
        Mat act(sub.dim, sub.dim, m.alg->p);
        for (std::size_t i = 0; i < sub.dim; ++i)
            act.set_row(i, coords_in_basis(e, row_times_mat(basis.row(i), m.action[k])));
        sub.action.push_back(std::move(act));
    }
    return SubModule{sub, ModuleHom{sub, m, basis}};
}

QuotModule quotient(const ModuleRep& m, const Mat& rows) {
    Mat basis = row_space(rows.rows() ? rows : Mat(0, m.dim, m.alg->p));
    if (!is_invariant_subspace(m, basis)) fail(Errc::not_submodule, "subspace is not action-invariant");
    Echelon e = rref(basis);
    std::vector<std::size_t> comp = nonpivot_columns(e, m.dim);
    std::size_t qdim = comp.size();
    Scalar p = m.alg->p;

    // projection: reduce mod the subspace, read complement coordinates
    Mat proj(m.dim, qdim, p);
    for (std::size_t i = 0; i < m.dim; ++i) {
        Vec unit(m.dim, 0);
        unit[i] = 1;
        Vec r = reduce_row(e, unit);
        for (std::size_t j = 0; j < qdim; ++j) proj.at(i, j) = r[comp[j]];
    }

    ModuleRep quo;
    quo.alg = m.alg;
    quo.dim = qdim;
    for (std::size_t k = 0; k < m.alg->dim; ++k) {
        Mat act(qdim, qdim, p);
        for (std::size_t j = 0; j < qdim; ++j) {
            Vec rep(m.dim, 0);
            rep[comp[j]] = 1;
            act.set_row(j, row_times_mat(row_times_mat(rep, m.action[k]), proj));
        }
        quo.action.push_back(std::move(act));
    }
    return QuotModule{quo, ModuleHom{m, quo, proj}};
}

std::size_t subspace_count_capped(std::size_t dim, Scalar p, std::size_t limit) {
    // Galois number via the recurrence G_{n+1} = 2 G_n + (p^n - 1) G_{n-1},
    // clamped at limit + 1 to avoid overflow.
    if (dim == 0) return 1;
    unsigned long long g0 = 1, g1 = 2; // G_0, G_1
    unsigned long long pn = 1;         // p^{n-1} while computing G_n
    const unsigned long long bound = static_cast<unsigned long long>(limit) + 1;
    for (std::size_t n = 1; n < dim; ++n) {
        pn *= p;
        unsigned long long next = 2 * g1 + (pn - 1) * g0;
        if (next > bound || next < g1) next = bound;
        g0 = g1;
        g1 = next;
        if (g1 >= bound) return limit + 1;
    }
    return static_cast<std::size_t>(std::min(g1, bound));
}

std::vector<Mat> submodule_enumerate(const ModuleRep& m, std::size_t cap) {
    if (subspace_count_capped(m.dim, m.alg->p, cap) > cap)
        fail(Errc::enumeration_budget_exceeded,
             "subspace count of F_p^" + std::to_string(m.dim) + " exceeds cap " + std::to_string(cap));

    Scalar p = m.alg->p;
    Mat zero(0, m.dim, p);

    // distinct cyclic submodules
    std::vector<Mat> cyclic;
    std::unordered_set<std::string> seen;
    VectorEnumerator en(m.dim, p);
    Vec v;
    while (en.next(v)) {
        if (vec_is_zero(v)) continue;
        Mat c = module_closure(m, Mat::from_rows({v}, m.dim, p));
        if (seen.insert(c.key()).second) cyclic.push_back(std::move(c));
    }

    std::vector<Mat> found = {row_space(zero)};
    std::unordered_set<std::string> found_keys = {found[0].key()};
    std::vector<Mat> frontier = found;
    while (!frontier.empty()) {
        std::vector<Mat> next;
        for (const Mat& n : frontier)
            for (const Mat& c : cyclic) {
                Mat s = row_space_sum(n, c); // sums of submodules are submodules
                if (found_keys.insert(s.key()).second) {
                    if (found.size() + next.size() + 1 > cap)
                        fail(Errc::enumeration_budget_exceeded, "submodule count exceeds cap");
                    next.push_back(s);
                }
            }
        for (auto& s : next) found.push_back(s);
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const Mat& a, const Mat& b) {
        if (a.rows() != b.rows()) return a.rows() < b.rows();
        return a.key() < b.key();
    });
    return found;
}

Mat minimal_submodule(const ModuleRep& m, std::size_t cap) {
    if (m.dim == 0) fail(Errc::bad_argument, "minimal submodule of the zero module");
    Scalar p = m.alg->p;
    // descend through cyclic submodules until none of the candidate's vectors
    // generates a proper nonzero submodule
    Vec seed(m.dim, 0);
    seed[0] = 1;
    Mat cur = module_closure(m, Mat::from_rows({seed}, m.dim, p));
    std::size_t budget = cap;
    for (;;) {
        bool descended = false;
        std::size_t cdim = cur.rows();
        if (cdim == 1) break;
        VectorEnumerator en(cdim, p);
        Vec coeff;
        while (en.next(coeff)) {
            if (vec_is_zero(coeff)) continue;
            if (budget-- == 0) fail(Errc::enumeration_budget_exceeded, "minimal submodule search budget");
            Vec w = row_times_mat(coeff, cur);
            Mat c = module_closure(m, Mat::from_rows({w}, m.dim, p));
            if (c.rows() < cdim) {
                cur = std::move(c);
                descended = true;
                break;
            }
        }
        if (!descended) break;
    }
    return cur;
}

namespace {

// Kernel of some nonzero map to a simple module, i.e. a maximal submodule.
Mat maximal_submodule_impl(const ModuleRep& m, const std::vector<ModuleRep>& simples, std::size_t cap) {
    for (const ModuleRep& s : simples) {
        std::vector<Mat> homs = hom_space(m, s);
        if (homs.empty()) continue;
        Mat h = homs[0];
        return left_nullspace(h);
    }
    fail(Errc::unrecognized_factor, "no surjection onto any simple; simple list incomplete");
}

} // namespace

Mat maximal_submodule(const ModuleRep& m, std::size_t cap) {
    if (m.dim == 0) fail(Errc::bad_argument, "maximal submodule of the zero module");
    return maximal_submodule_impl(m, simple_modules(m.alg, cap), cap);
}

std::vector<ModuleRep> composition_series_factors(const ModuleRep& m, std::size_t cap) {
    std::vector<ModuleRep> factors;
    ModuleRep cur = m;
    while (cur.dim > 0) {
        Mat soc = minimal_submodule(cur, cap);
        factors.push_back(submodule(cur, soc).mod);
        cur = quotient(cur, soc).mod;
    }
    return factors;
}

std::vector<ModuleRep> composition_series_factors_topdown(const ModuleRep& m, std::size_t cap) {
    std::vector<ModuleRep> simples = simple_modules(m.alg, cap);
    std::vector<ModuleRep> factors;
    ModuleRep cur = m;
    while (cur.dim > 0) {
        Mat maxsub = maximal_submodule_impl(cur, simples, cap);
        factors.push_back(quotient(cur, maxsub).mod);
        cur = submodule(cur, maxsub).mod;
    }
    return factors;
}

std::vector<ModuleRep> simple_modules(const AlgebraPtr& alg, std::size_t cap) {
    std::vector<ModuleRep> factors = composition_series_factors(regular_module(alg), cap);
    std::vector<ModuleRep> simples;
    for (const ModuleRep& f : factors) {
        bool known = false;
        for (const ModuleRep& s : simples)
            if (is_isomorphic(f, s, cap)) {
                known = true;
                break;
            }
        if (!known) simples.push_back(f);
    }
    return simples;
}

std::vector<long long> composition_factors(const ModuleRep& m, const std::vector<ModuleRep>& simples,
                                           std::size_t cap) {
    std::vector<long long> counts(simples.size(), 0);
    for (const ModuleRep& f : composition_series_factors(m, cap)) {
        bool matched = false;
        for (std::size_t i = 0; i < simples.size(); ++i)
            if (is_isomorphic(f, simples[i], cap)) {
                ++counts[i];
                matched = true;
                break;
            }
        if (!matched) fail(Errc::unrecognized_factor, "composition factor matches no known simple");
    }
    return counts;
}

std::vector<Mat> hom_space(const ModuleRep& m, const ModuleRep& n) {
    // Unknowns H[r][c] flattened as r * n.dim + c; one scalar equation per
    // (algebra basis element, i, j): (act_m(b) H - H act_n(b))[i][j] = 0.
    Scalar p = m.alg->p;
    std::size_t unknowns = m.dim * n.dim;
    if (unknowns == 0) return {};
    std::size_t neq = m.alg->dim * unknowns;
    Mat sys(neq, unknowns, p);
    std::size_t e = 0;
    for (std::size_t k = 0; k < m.alg->dim; ++k)
        for (std::size_t i = 0; i < m.dim; ++i)
            for (std::size_t j = 0; j < n.dim; ++j, ++e) {
                for (std::size_t r = 0; r < m.dim; ++r)
                    sys.at(e, r * n.dim + j) =
                        fp_add(sys.at(e, r * n.dim + j), m.action[k].at(i, r), p);
                for (std::size_t c = 0; c < n.dim; ++c)
                    sys.at(e, i * n.dim + c) =
                        fp_sub(sys.at(e, i * n.dim + c), n.action[k].at(c, j), p);
            }
    Mat sols = right_nullspace(sys);
    std::vector<Mat> basis;
    basis.reserve(sols.rows());
    for (std::size_t s = 0; s < sols.rows(); ++s) {
        Mat h(m.dim, n.dim, p);
        for (std::size_t r = 0; r < m.dim; ++r)
            for (std::size_t c = 0; c < n.dim; ++c) h.at(r, c) = sols.at(s, r * n.dim + c);
        basis.push_back(std::move(h));
    }
    return basis;
}

std::size_t hom_dim(const ModuleRep& m, const ModuleRep& n) { return hom_space(m, n).size(); }

std::optional<Mat> find_isomorphism(const ModuleRep& m, const ModuleRep& n, std::size_t cap) {
    if (m.dim != n.dim) return std::nullopt;
    if (m.dim == 0) return Mat(0, 0, m.alg->p);
    std::vector<Mat> homs = hom_space(m, n);
    if (homs.empty()) return std::nullopt;
    Scalar p = m.alg->p;
    VectorEnumerator en(homs.size(), p);
    Vec coeff;
    std::size_t budget = cap;
    while (en.next(coeff)) {
        if (vec_is_zero(coeff)) continue;
        if (budget-- == 0) fail(Errc::enumeration_budget_exceeded, "isomorphism search budget");
        Mat h(m.dim, n.dim, p);
        for (std::size_t s = 0; s < homs.size(); ++s)
            if (coeff[s] != 0) h = h + homs[s].scaled(coeff[s]);
        if (rank(h) == m.dim) return h;
    }
    return std::nullopt;
}

bool is_isomorphic(const ModuleRep& m, const ModuleRep& n, std::size_t cap) {
    return find_isomorphism(m, n, cap).has_value();
}

TensorModule tensor_over_algebra(const ModuleRep& m, const Ideal& ideal) {
    if (!same_algebra(*m.alg, *ideal.alg)) fail(Errc::not_bimodule, "ideal lives in a different algebra");
    const Algebra& alg = *m.alg;
    Scalar p = alg.p;
    std::size_t d = m.dim, mi = ideal.dim();
    std::size_t ambient = d * mi;
    Echelon ideal_span = rref(ideal.basis);

    // ambient action through the ideal factor: (m (x) x) * b = m (x) x*b
    ModuleRep amb;
    amb.alg = m.alg;
    amb.dim = ambient;
    for (std::size_t k = 0; k < alg.dim; ++k) {
        Mat act(ambient, ambient, p);
        for (std::size_t s = 0; s < mi; ++s) {
            Vec prod = alg.multiply(ideal.basis.row(s), alg.basis_vector(k));
            Vec coords = coords_in_basis(ideal_span, prod); // stays in I: two-sided
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t t = 0; t < mi; ++t) act.at(r * mi + s, r * mi + t) = coords[t];
        }
        amb.action.push_back(std::move(act));
    }

    // balancing relations: (m_r * b_k) (x) x_s - m_r (x) (b_k * x_s)
    std::vector<Vec> rel;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t k = 0; k < alg.dim; ++k)
            for (std::size_t s = 0; s < mi; ++s) {
                Vec row(ambient, 0);
                for (std::size_t r2 = 0; r2 < d; ++r2)
                    row[r2 * mi + s] = fp_add(row[r2 * mi + s], m.action[k].at(r, r2), p);
                Vec coords = coords_in_basis(ideal_span, alg.multiply(alg.basis_vector(k), ideal.basis.row(s)));
                for (std::size_t t = 0; t < mi; ++t)
                    row[r * mi + t] = fp_sub(row[r * mi + t], coords[t], p);
                if (!vec_is_zero(row)) rel.push_back(std::move(row));
            }
    Mat relations = row_space(Mat::from_rows(rel, ambient, p));

    QuotModule q = quotient(amb, relations);
    Echelon relspan = rref(relations);
    std::vector<std::size_t> comp = nonpivot_columns(relspan, ambient);
    Mat section(q.mod.dim, ambient, p);
    for (std::size_t j = 0; j < comp.size(); ++j) section.at(j, comp[j]) = 1;

    return TensorModule{q.mod, q.proj.matrix, section};
}

Mat tensor_hom_matrix(const TensorModule& tsrc, const TensorModule& ttgt, const ModuleHom& f,
                      const Ideal& ideal) {
    // quotient coords -> ambient reps -> (f (x) id) -> target quotient coords
    std::size_t mi = ideal.dim();
    Scalar p = f.source.alg->p;
    std::size_t amb_src = f.source.dim * mi, amb_tgt = f.target.dim * mi;
    Mat fxid(amb_src, amb_tgt, p);
    for (std::size_t r = 0; r < f.source.dim; ++r)
        for (std::size_t r2 = 0; r2 < f.target.dim; ++r2)
            for (std::size_t s = 0; s < mi; ++s) fxid.at(r * mi + s, r2 * mi + s) = f.matrix.at(r, r2);
    return tsrc.section * fxid * ttgt.proj;
}

Mat module_times_ideal(const ModuleRep& m, const Ideal& ideal) {
    std::vector<Vec> rows;
    for (std::size_t s = 0; s < ideal.dim(); ++s) {
        Mat act = m.action_of(ideal.basis.row(s));
        for (std::size_t r = 0; r < m.dim; ++r) rows.push_back(act.row(r));
    }
    return row_space(Mat::from_rows(rows, m.dim, m.alg->p));
}

Mat ideal_annihilator(const ModuleRep& m, const Ideal& ideal) {
    if (ideal.dim() == 0) return Mat::identity(m.dim, m.alg->p);
    Mat stacked(m.dim, 0, m.alg->p);
    for (std::size_t s = 0; s < ideal.dim(); ++s)
        stacked = stacked.hstack(m.action_of(ideal.basis.row(s)));
    return left_nullspace(stacked);
}

std::vector<Vec> generating_set(const ModuleRep& m, std::size_t cap) {
    Scalar p = m.alg->p;
    std::vector<Vec> gens;
    Echelon span = rref(Mat(0, m.dim, p));
    std::size_t budget = cap;
    while (span.basis.rows() < m.dim) {
        Vec best;
        std::size_t best_dim = span.basis.rows();
        VectorEnumerator en(m.dim, p);
        Vec v;
        while (en.next(v)) {
            if (budget-- == 0) fail(Errc::enumeration_budget_exceeded, "generating set search budget");
            if (row_space_contains(span, v)) continue;
            Mat grown = module_closure(m, span.basis.vstack(Mat::from_rows({v}, m.dim, p)));
            if (grown.rows() > best_dim) {
                best_dim = grown.rows();
                best = v;
                if (best_dim == m.dim) break;
            }
        }
        gens.push_back(best);
        span = rref(module_closure(m, span.basis.vstack(Mat::from_rows({best}, m.dim, p))));
    }
    return gens;
}

} // namespace devissage
