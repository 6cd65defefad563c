#include "devissage/sampling.hpp"

namespace devissage {

Vec Sampler::vec(std::size_t dim, Scalar p) {
    Vec v(dim);
    for (auto& x : v) x = scalar(p);
    return v;
}

namespace {

ModuleRep random_module_over(Sampler& s, const AlgebraPtr& alg, std::size_t max_free_rank) {
    std::size_t k = 1 + s.pick(max_free_rank);
    ModuleRep f = free_module(alg, k);
    // quotient by the closure of a few random vectors
    std::size_t nseeds = s.pick(k * alg->dim);
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < nseeds; ++i) seeds.push_back(s.vec(f.dim, alg->p));
    Mat sub = module_closure(f, Mat::from_rows(seeds, f.dim, alg->p));
    ModuleRep q = quotient(f, sub).mod;
    if (q.dim > 0 && s.coin()) {
        Mat inner = random_submodule_basis(s, q);
        return submodule(q, inner).mod;
    }
    return q;
}

} // namespace

ModuleRep random_module(Sampler& s, const AlgebraPtr& alg, std::size_t max_free_rank) {
    return random_module_over(s, alg, max_free_rank);
}

ModuleRep random_b_module(Sampler& s, const Instance& inst, std::size_t max_free_rank) {
    return random_module_over(s, inst.B.alg, max_free_rank);
}

Mat random_submodule_basis(Sampler& s, const ModuleRep& m) {
    std::size_t nseeds = s.pick(m.dim + 1);
    std::vector<Vec> seeds;
    for (std::size_t i = 0; i < nseeds; ++i) seeds.push_back(s.vec(m.dim, m.alg->p));
    return module_closure(m, Mat::from_rows(seeds, m.dim, m.alg->p));
}

PairObject random_pair_object(Sampler& s, const Instance& inst) {
    return random_pair_object_on(s, inst, random_module(s, inst.A));
}

PairObject random_pair_object_on(Sampler& s, const Instance& inst, const ModuleRep& x) {
    // Y must sit between X*I and the annihilator of I; both are submodules,
    // so the closure of X*I plus random annihilator vectors qualifies.
    Mat xi = module_times_ideal(x, inst.I);
    Mat ann = ideal_annihilator(x, inst.I);
    std::vector<Vec> seeds;
    for (std::size_t r = 0; r < xi.rows(); ++r) seeds.push_back(xi.row(r));
    std::size_t extra = s.pick(ann.rows() + 1);
    for (std::size_t i = 0; i < extra; ++i) {
        Vec coeff = s.vec(ann.rows(), x.alg->p);
        seeds.push_back(row_times_mat(coeff, ann));
    }
    Mat y = module_closure(x, Mat::from_rows(seeds, x.dim, x.alg->p));
    return make_pair_object(inst, x, y);
}

PairHom random_pair_hom(Sampler& s, const PairObject& from, const PairObject& to) {
    std::vector<Mat> basis = pair_hom_space(from, to);
    Scalar p = from.X.alg->p;
    Mat f(from.X.dim, to.X.dim, p);
    for (const Mat& h : basis) {
        Scalar c = s.scalar(p);
        if (c != 0) f = f + h.scaled(c);
    }
    return PairHom{from, to, f};
}

PairHom random_strict_mono_into(Sampler& s, const Instance& inst, const PairObject& p) {
    Mat xsub = random_submodule_basis(s, p.X);
    Mat ysub = row_space_intersection(xsub, p.Y);
    Echelon span = rref(xsub);
    std::vector<Vec> ycoords;
    for (std::size_t r = 0; r < ysub.rows(); ++r) ycoords.push_back(coords_in_basis(span, ysub.row(r)));
    PairObject sub = make_pair_object(inst, submodule(p.X, xsub).mod,
                                      Mat::from_rows(ycoords, xsub.rows(), p.X.alg->p));
    return PairHom{sub, p, xsub};
}

PairHom random_strict_epi_from(Sampler& s, const Instance& inst, const PairObject& p) {
    Mat xsub = random_submodule_basis(s, p.X);
    QuotModule q = quotient(p.X, xsub);
    Mat yq = row_space(p.Y.rows() ? p.Y * q.proj.matrix : Mat(0, q.mod.dim, p.X.alg->p));
    PairObject target = make_pair_object(inst, q.mod, yq);
    return PairHom{p, target, q.proj.matrix};
}

ModuleHom random_module_hom(Sampler& s, const ModuleRep& from, const ModuleRep& to) {
    std::vector<Mat> basis = hom_space(from, to);
    Scalar p = from.alg->p;
    Mat f(from.dim, to.dim, p);
    for (const Mat& h : basis) {
        Scalar c = s.scalar(p);
        if (c != 0) f = f + h.scaled(c);
    }
    return ModuleHom{from, to, f};
}

CObject random_c_object(Sampler& s, const Instance& inst) {
    ModuleRep m = random_module_over(s, inst.D->alg, 1);
    return from_d_module(inst, m);
}

} // namespace devissage
