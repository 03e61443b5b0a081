#include "dualcx/newton.hpp"

#include <algorithm>
#include <numeric>

#include "dualcx/error.hpp"

namespace dualcx {

Support::Support(std::size_t n_vars, std::vector<IntVector> points,
                 std::optional<std::vector<Rational>> coefficients)
    : n_vars_(n_vars) {
    if (n_vars == 0) throw InvalidArgument("support needs at least one variable");
    if (points.empty()) throw InvalidArgument("support is empty");
    for (const auto& p : points) {
        if (p.size() != n_vars)
            throw InvalidArgument("exponent " + to_string(p) + " does not have " +
                                  std::to_string(n_vars) + " entries");
        for (const auto& e : p)
            if (e < 0) throw InvalidArgument("exponent " + to_string(p) + " has a negative entry");
    }
    if (coefficients) {
        if (coefficients->size() != points.size())
            throw InvalidArgument("coefficient count does not match support size");
        for (const auto& c : *coefficients)
            if (c == 0) throw InvalidArgument("zero coefficient in support");
    }

    std::vector<std::size_t> perm(points.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    for (std::size_t i = 0; i < perm.size(); ++i) {
        points_.push_back(points[perm[i]]);
        if (i > 0 && points_[i] == points_[i - 1])
            throw InvalidArgument("duplicate exponent " + to_string(points_[i]));
    }
    if (coefficients) {
        std::vector<Rational> sorted;
        for (auto i : perm) sorted.push_back((*coefficients)[i]);
        coefficients_ = std::move(sorted);
    }
}

std::optional<Rational> Support::coefficient_of(const IntVector& point) const {
    if (!coefficients_) return std::nullopt;
    auto it = std::lower_bound(points_.begin(), points_.end(), point);
    if (it == points_.end() || *it != point) return std::nullopt;
    return (*coefficients_)[static_cast<std::size_t>(it - points_.begin())];
}

namespace {

std::size_t affine_dim(const std::vector<IntVector>& pts, std::size_t n) {
    if (pts.size() < 2) return 0;
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        IntVector d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    return rank_of_rows(diffs, n);
}

}  // namespace

std::size_t NewtonFace::full_dim(std::size_t n_vars) const {
    if (support_points.empty()) return 0;
    std::vector<IntVector> dirs;
    for (std::size_t i = 1; i < support_points.size(); ++i) {
        IntVector d(n_vars);
        for (std::size_t j = 0; j < n_vars; ++j) d[j] = support_points[i][j] - support_points[0][j];
        dirs.push_back(std::move(d));
    }
    for (auto j : recession) {
        IntVector e(n_vars, 0);
        e[j] = 1;
        dirs.push_back(std::move(e));
    }
    return dirs.empty() ? 0 : rank_of_rows(dirs, n_vars);
}

FaceCut mu_and_face(const Support& s, const IntVector& w) {
    if (w.size() != s.n_vars())
        throw InvalidArgument("weight " + to_string(w) + " has the wrong length");
    for (const auto& e : w)
        if (e < 0) throw InvalidArgument("weight " + to_string(w) + " is outside the orthant");
    if (is_zero(w)) throw InvalidArgument("zero weight vector");

    FaceCut cut;
    bool first = true;
    for (const auto& m : s.points()) {
        Integer v = dot(w, m);
        if (first || v < cut.mu) {
            cut.mu = v;
            cut.face.support_points.clear();
            first = false;
        }
        if (v == cut.mu) cut.face.support_points.push_back(m);
    }
    for (std::size_t j = 0; j < w.size(); ++j)
        if (w[j] == 0) cut.face.recession.push_back(j);
    cut.face.compact = cut.face.recession.empty();
    cut.face.dim = affine_dim(cut.face.support_points, s.n_vars());
    cut.face.normal_witness = w;
    return cut;
}

std::vector<NewtonFacet> newton_facets(const Support& s) {
    const std::size_t n = s.n_vars();
    // Cone over the polyhedron: (m, 1) for support points, (e_i, 0) for recession.
    std::vector<IntVector> gens;
    for (const auto& m : s.points()) {
        IntVector g = m;
        g.emplace_back(1);
        gens.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < n; ++i) {
        IntVector g(n + 1, 0);
        g[i] = 1;
        gens.push_back(std::move(g));
    }
    const HRep h = dualize_cone(n + 1, gens);

    std::vector<NewtonFacet> facets;
    for (const auto& ineq : h.inequalities) {
        IntVector w(ineq.begin(), ineq.begin() + static_cast<std::ptrdiff_t>(n));
        if (is_zero(w)) continue;  // the facet at infinity
        w = primitive_vector(w);
        facets.push_back({w, mu_and_face(s, w).mu});
    }
    std::sort(facets.begin(), facets.end(),
              [](const NewtonFacet& a, const NewtonFacet& b) { return a.normal < b.normal; });
    return facets;
}

namespace {

std::vector<IntVector> normals_through(const std::vector<NewtonFacet>& facets, const IntVector& m) {
    std::vector<IntVector> out;
    for (const auto& f : facets)
        if (dot(f.normal, m) == f.mu) out.push_back(f.normal);
    return out;
}

}  // namespace

std::vector<IntVector> newton_vertices(const Support& s) {
    const auto facets = newton_facets(s);
    std::vector<IntVector> out;
    for (const auto& m : s.points()) {
        const auto normals = normals_through(facets, m);
        if (!normals.empty() && rank_of_rows(normals, s.n_vars()) == s.n_vars()) out.push_back(m);
    }
    return out;
}

const NewtonFace& VarchenkoFan::face(const Cone& c) const {
    auto idx = fan.find(c);
    if (!idx) throw InvalidArgument("cone is not part of the Varchenko fan");
    return face_of[*idx];
}

VarchenkoFan first_varchenko_subdivision(const Support& s) {
    const std::size_t n = s.n_vars();
    const auto facets = newton_facets(s);
    const Cone orthant = Cone::orthant(n);

    std::vector<Cone> normal_cones;
    for (const auto& m : s.points()) {
        const auto normals = normals_through(facets, m);
        if (normals.empty() || rank_of_rows(normals, n) != n) continue;
        normal_cones.push_back(intersect_cones(Cone::from_generators(n, normals), orthant));
    }

    VarchenkoFan v;
    v.fan = Fan::from_cones(n, normal_cones, true);
    v.face_of.reserve(v.fan.cones().size());
    for (const auto& c : v.fan.cones()) {
        if (c.dim() == 0) {
            NewtonFace whole;
            whole.support_points = s.points();
            whole.recession.resize(n);
            std::iota(whole.recession.begin(), whole.recession.end(), std::size_t{0});
            whole.dim = affine_dim(whole.support_points, n);
            v.face_of.push_back(std::move(whole));
        } else {
            v.face_of.push_back(mu_and_face(s, relint_sample(c)).face);
        }
    }
    return v;
}

std::vector<NewtonFace> newton_diagram(const Support& s) { return newton_diagram(first_varchenko_subdivision(s)); }

std::vector<NewtonFace> newton_diagram(const VarchenkoFan& v) {
    std::vector<NewtonFace> out;
    for (std::size_t i = 0; i < v.fan.cones().size(); ++i)
        if (v.face_of[i].compact) out.push_back(v.face_of[i]);
    std::sort(out.begin(), out.end(), [](const NewtonFace& a, const NewtonFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.support_points < b.support_points;
    });
    return out;
}

bool is_coordinate_ray(const IntVector& ray) {
    std::size_t nonzero = 0;
    for (const auto& e : ray) {
        if (e < 0) return false;
        if (e != 0) ++nonzero;
    }
    return nonzero == 1;
}

bool is_strictly_positive(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& e) { return e > 0; });
}

PropertyRResult check_property_R(const Fan& f) {
    for (const auto& r : f.rays())
        if (!is_coordinate_ray(r) && !is_strictly_positive(r)) return {false, r};
    return {true, std::nullopt};
}

PropertyRResult check_property_R(const VarchenkoFan& v) { return check_property_R(v.fan); }

}  // namespace dualcx
