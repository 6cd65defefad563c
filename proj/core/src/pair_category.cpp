#include "devissage/pair_category.hpp"

#include "devissage/errors.hpp"

namespace devissage {

PairObject make_pair_object(const Instance& inst, const ModuleRep& x, const Mat& y_rows) {
    if (!same_algebra(*x.alg, *inst.A)) fail(Errc::bad_argument, "pair object needs a module over A");
    Mat y = row_space(y_rows.rows() ? y_rows : Mat(0, x.dim, x.alg->p));
    if (!is_invariant_subspace(x, y)) fail(Errc::not_submodule, "Y is not action-invariant");
    for (std::size_t r = 0; r < y.rows(); ++r)
        for (std::size_t s = 0; s < inst.I.dim(); ++s)
            if (!vec_is_zero(row_times_mat(y.row(r), x.action_of(inst.I.basis.row(s)))))
                fail(Errc::not_killed_by_ideal, "Y*I != 0, so Y does not lie over A/I");
    Echelon yspan = rref(y);
    if (!row_space_contains_all(yspan, module_times_ideal(x, inst.I)))
        fail(Errc::quotient_not_in_b, "X*I not contained in Y, so X/Y does not lie over A/I");
    return PairObject{x, std::move(y)};
}

bool pair_objects_equal(const PairObject& a, const PairObject& b) {
    return a.X.dim == b.X.dim && a.X.action == b.X.action && a.Y == b.Y;
}

bool is_pair_hom(const PairObject& source, const PairObject& target, const Mat& f) {
    if (!is_module_hom(source.X, target.X, f)) return false;
    Echelon tspan = rref(target.Y);
    for (std::size_t r = 0; r < source.Y.rows(); ++r)
        if (!row_space_contains(tspan, row_times_mat(source.Y.row(r), f))) return false;
    return true;
}

PairHom make_pair_hom(const PairObject& source, const PairObject& target, const Mat& f) {
    if (!is_pair_hom(source, target, f)) fail(Errc::bad_argument, "matrix is not a pair morphism");
    return PairHom{source, target, f};
}

PairHom pair_identity(const PairObject& p) {
    return PairHom{p, p, Mat::identity(p.X.dim, p.X.alg->p)};
}

PairHom pair_zero_hom(const PairObject& source, const PairObject& target) {
    return PairHom{source, target, Mat(source.X.dim, target.X.dim, source.X.alg->p)};
}

PairHom pair_compose(const PairHom& f, const PairHom& g) {
    return PairHom{f.source, g.target, f.f * g.f};
}

std::vector<Mat> pair_hom_space(const PairObject& a, const PairObject& b) {
    // module homs X_a -> X_b, filtered by the linear condition f(Y_a) <= Y_b
    Scalar p = a.X.alg->p;
    std::size_t unknowns = a.X.dim * b.X.dim;
    if (unknowns == 0) return {};
    std::vector<Mat> module_homs = hom_space(a.X, b.X);
    if (module_homs.empty()) return {};

    QuotModule modY = quotient(b.X, b.Y);
    const Mat& q = modY.proj.matrix; // X_b -> X_b/Y_b
    // rows: one equation per (Y_a row, quotient coordinate); columns:
    // coefficients of the module-hom basis
    Mat sys(a.Y.rows() * q.cols(), module_homs.size(), p);
    for (std::size_t h = 0; h < module_homs.size(); ++h) {
        Mat yfq = a.Y * module_homs[h] * q;
        for (std::size_t t = 0; t < a.Y.rows(); ++t)
            for (std::size_t c = 0; c < q.cols(); ++c) sys.at(t * q.cols() + c, h) = yfq.at(t, c);
    }
    Mat coeffs = sys.rows() == 0 ? Mat::identity(module_homs.size(), p) : right_nullspace(sys);
    std::vector<Mat> out;
    out.reserve(coeffs.rows());
    for (std::size_t s = 0; s < coeffs.rows(); ++s) {
        Mat f(a.X.dim, b.X.dim, p);
        for (std::size_t h = 0; h < module_homs.size(); ++h)
            if (coeffs.at(s, h) != 0) f = f + module_homs[h].scaled(coeffs.at(s, h));
        out.push_back(std::move(f));
    }
    return out;
}

PairKernel pair_kernel(const Instance& inst, const PairHom& h) {
    Mat kbasis = left_nullspace(h.f);
    SubModule sub = submodule(h.source.X, kbasis);
    Echelon kspan = rref(kbasis);
    Mat ky = row_space_intersection(kbasis, h.source.Y);
    std::vector<Vec> ycoords;
    for (std::size_t r = 0; r < ky.rows(); ++r) ycoords.push_back(coords_in_basis(kspan, ky.row(r)));
    PairObject obj = make_pair_object(inst, sub.mod, Mat::from_rows(ycoords, sub.mod.dim, h.f.prime()));
    PairHom incl{obj, h.source, kbasis};
    return PairKernel{obj, incl};
}

PairCokernel pair_cokernel(const Instance& inst, const PairHom& h) {
    Mat image = row_space(h.f);
    QuotModule quo = quotient(h.target.X, image);
    Mat yq = row_space(h.target.Y.rows() ? h.target.Y * quo.proj.matrix
                                         : Mat(0, quo.mod.dim, h.f.prime()));
    PairObject obj = make_pair_object(inst, quo.mod, yq);
    PairHom proj{h.target, obj, quo.proj.matrix};
    return PairCokernel{obj, proj};
}

const char* strictness_name(Strictness s) {
    switch (s) {
        case Strictness::iso: return "iso";
        case Strictness::strict_mono: return "strict_mono";
        case Strictness::nonstrict_mono: return "nonstrict_mono";
        case Strictness::strict_epi: return "strict_epi";
        case Strictness::nonstrict_epi: return "nonstrict_epi";
        case Strictness::neither: return "neither";
    }
    return "?";
}

Strictness strictness(const Instance& inst, const PairHom& h) {
    std::size_t r = rank(h.f);
    bool mono = r == h.source.X.dim;
    bool epi = r == h.target.X.dim;
    Mat fy = row_space(h.source.Y.rows() ? h.source.Y * h.f : Mat(0, h.target.X.dim, h.f.prime()));
    if (mono && epi && fy == h.target.Y) return Strictness::iso;
    if (mono) {
        // compare the image subobject with ker(coker h)
        PairCokernel co = pair_cokernel(inst, h);
        PairKernel ke = pair_kernel(inst, co.proj);
        Mat key = row_space(ke.obj.Y.rows() ? ke.obj.Y * ke.incl.f : Mat(0, h.target.X.dim, h.f.prime()));
        bool strict = same_row_space(ke.incl.f, h.f) && key == fy;
        return strict ? Strictness::strict_mono : Strictness::nonstrict_mono;
    }
    if (epi) return fy == h.target.Y ? Strictness::strict_epi : Strictness::nonstrict_epi;
    return Strictness::neither;
}

PairObject pair_direct_sum(const PairObject& a, const PairObject& b) {
    ModuleRep x = direct_sum(a.X, b.X);
    Scalar p = a.X.alg->p;
    std::vector<Vec> yrows;
    for (std::size_t r = 0; r < a.Y.rows(); ++r) {
        Vec v(x.dim, 0);
        Vec ya = a.Y.row(r);
        std::copy(ya.begin(), ya.end(), v.begin());
        yrows.push_back(std::move(v));
    }
    for (std::size_t r = 0; r < b.Y.rows(); ++r) {
        Vec v(x.dim, 0);
        Vec yb = b.Y.row(r);
        std::copy(yb.begin(), yb.end(), v.begin() + static_cast<std::ptrdiff_t>(a.X.dim));
        yrows.push_back(std::move(v));
    }
    return PairObject{std::move(x), row_space(Mat::from_rows(yrows, a.X.dim + b.X.dim, p))};
}

PairPushout pair_pushout(const Instance& inst, const PairHom& f, const PairHom& g) {
    if (f.source.X.dim != g.source.X.dim || !pair_objects_equal(f.source, g.source))
        fail(Errc::bad_argument, "pushout needs a common source");
    Scalar p = f.f.prime();
    PairObject ds = pair_direct_sum(f.target, g.target);
    Mat h = f.f.hstack(g.f.scaled(fp_neg(1, p)));
    PairHom into{f.source, ds, h};
    PairCokernel co = pair_cokernel(inst, into);
    std::size_t d1 = f.target.X.dim, d2 = g.target.X.dim;
    Mat leg1(d1, co.obj.X.dim, p), leg2(d2, co.obj.X.dim, p);
    for (std::size_t i = 0; i < d1; ++i) leg1.set_row(i, co.proj.f.row(i));
    for (std::size_t i = 0; i < d2; ++i) leg2.set_row(i, co.proj.f.row(d1 + i));
    return PairPushout{co.obj, PairHom{f.target, co.obj, leg1}, PairHom{g.target, co.obj, leg2}};
}

PairPullback pair_pullback(const Instance& inst, const PairHom& f, const PairHom& g) {
    if (f.target.X.dim != g.target.X.dim || !pair_objects_equal(f.target, g.target))
        fail(Errc::bad_argument, "pullback needs a common target");
    Scalar p = f.f.prime();
    PairObject ds = pair_direct_sum(f.source, g.source);
    Mat h = f.f.vstack(g.f.scaled(fp_neg(1, p)));
    PairHom from{ds, f.target, h};
    PairKernel ke = pair_kernel(inst, from);
    std::size_t d1 = f.source.X.dim;
    Mat leg1(ke.obj.X.dim, d1, p), leg2(ke.obj.X.dim, g.source.X.dim, p);
    for (std::size_t i = 0; i < ke.obj.X.dim; ++i) {
        Vec full = ke.incl.f.row(i);
        Vec v1(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(d1));
        Vec v2(full.begin() + static_cast<std::ptrdiff_t>(d1), full.end());
        leg1.set_row(i, v1);
        leg2.set_row(i, v2);
    }
    return PairPullback{ke.obj, PairHom{ke.obj, f.source, leg1}, PairHom{ke.obj, g.source, leg2}};
}

namespace {

ModuleRep coerce_to_b(const Instance& inst, const ModuleRep& m) {
    if (same_algebra(*m.alg, *inst.B.alg)) return m;
    if (same_algebra(*m.alg, *inst.A)) return inst.restrict_to_b(m); // throws NotInB if M*I != 0
    fail(Errc::bad_argument, "module belongs to neither A nor A/I");
}

} // namespace

PairObject phi1(const Instance& inst, const ModuleRep& over_b) {
    ModuleRep n = coerce_to_b(inst, over_b);
    ModuleRep x = inst.inflate(n);
    return make_pair_object(inst, x, Mat(0, x.dim, x.alg->p));
}

PairObject phi2(const Instance& inst, const ModuleRep& over_b) {
    ModuleRep n = coerce_to_b(inst, over_b);
    ModuleRep x = inst.inflate(n);
    return make_pair_object(inst, x, Mat::identity(x.dim, x.alg->p));
}

ModuleRep phi1_left_adjoint(const Instance& inst, const PairObject& p) {
    return inst.restrict_to_b(quotient(p.X, p.Y).mod);
}

ModuleRep phi2_right_adjoint(const Instance& inst, const PairObject& p) {
    return inst.restrict_to_b(submodule(p.X, p.Y).mod);
}

PairSes canonical_ses(const Instance& inst, const PairObject& p) {
    PairObject sub = phi2(inst, phi2_right_adjoint(inst, p));
    PairObject quot = phi1(inst, phi1_left_adjoint(inst, p));
    PairHom incl{sub, p, p.Y};
    PairHom proj{p, quot, quotient(p.X, p.Y).proj.matrix};
    return PairSes{sub, p, quot, incl, proj};
}

bool is_admissible_ses(const Instance& inst, const PairSes& ses) {
    if (!is_pair_hom(ses.incl.source, ses.incl.target, ses.incl.f)) return false;
    if (!is_pair_hom(ses.proj.source, ses.proj.target, ses.proj.f)) return false;
    if (!(ses.incl.f * ses.proj.f).is_zero()) return false;
    Strictness si = strictness(inst, ses.incl);
    if (si != Strictness::strict_mono && si != Strictness::iso) return false;
    Strictness sp = strictness(inst, ses.proj);
    if (sp != Strictness::strict_epi && sp != Strictness::iso) return false;
    // first = ker(second): compare subobjects of the middle term
    PairKernel ke = pair_kernel(inst, ses.proj);
    Scalar p = ses.incl.f.prime();
    Mat im_x = row_space(ses.incl.f);
    Mat im_y = row_space(ses.incl.source.Y.rows() ? ses.incl.source.Y * ses.incl.f
                                                  : Mat(0, ses.mid.X.dim, p));
    Mat ke_x = row_space(ke.incl.f);
    Mat ke_y = row_space(ke.obj.Y.rows() ? ke.obj.Y * ke.incl.f : Mat(0, ses.mid.X.dim, p));
    return im_x == ke_x && im_y == ke_y;
}

} // namespace devissage
