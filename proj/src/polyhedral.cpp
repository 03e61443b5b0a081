#include "dualcx/polyhedral.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "dualcx/error.hpp"

namespace dualcx {

namespace {

void check_lengths(std::size_t ambient, const std::vector<IntVector>& vs) {
    for (const auto& v : vs)
        if (v.size() != ambient)
            throw InvalidArgument("vector " + to_string(v) + " does not have length " +
                                  std::to_string(ambient));
}

void sort_unique(std::vector<IntVector>& vs) {
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

std::vector<IntVector> unit_vectors(std::size_t n) {
    std::vector<IntVector> out(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

using Incidence = std::vector<bool>;

struct DDRay {
    IntVector coords;  // coordinates in the subspace basis
    Incidence tight;   // rows (in processing order) vanishing on the ray
};

}  // namespace

std::vector<IntVector> extreme_rays(std::size_t ambient, const std::vector<IntVector>& inequalities,
                                    const std::vector<IntVector>& equations) {
    check_lengths(ambient, inequalities);
    check_lengths(ambient, equations);

    // Work inside ker(E), expressed in an integer basis.
    std::vector<IntVector> basis =
        equations.empty() ? unit_vectors(ambient)
                          : integer_nullspace(IntMatrix::from_rows(equations, ambient));
    const std::size_t k = basis.size();
    if (k == 0) return {};

    std::vector<IntVector> rows;
    for (const auto& a : inequalities) {
        IntVector projected(k);
        for (std::size_t j = 0; j < k; ++j) projected[j] = dot(a, basis[j]);
        if (!is_zero(projected)) rows.push_back(std::move(projected));
    }

    // Seed with k independent rows; their cone is simplicial with rays B^{-1} e_j.
    std::vector<std::size_t> order;
    std::vector<IntVector> chosen;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t i = 0; i < rows.size() && chosen.size() < k; ++i) {
        chosen.push_back(rows[i]);
        if (rank_of_rows(chosen, k) == chosen.size()) {
            order.push_back(i);
            used[i] = true;
        } else {
            chosen.pop_back();
        }
    }
    if (chosen.size() < k) throw NotPointed();
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (!used[i]) order.push_back(i);

    const std::size_t m = order.size();
    std::vector<IntVector> processed;
    processed.reserve(m);
    for (auto i : order) processed.push_back(rows[i]);

    const auto inv = rational_inverse(IntMatrix::from_rows(chosen, k));
    std::vector<DDRay> rays;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rational> col(k);
        for (std::size_t r = 0; r < k; ++r) col[r] = inv[r][j];
        DDRay ray{primitive_from_rational(col), Incidence(m, false)};
        for (std::size_t r = 0; r < k; ++r) ray.tight[r] = (r != j);
        rays.push_back(std::move(ray));
    }

    for (std::size_t step = k; step < m; ++step) {
        const IntVector& a = processed[step];
        std::vector<Integer> values(rays.size());
        std::vector<std::size_t> plus, minus;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            values[r] = dot(a, rays[r].coords);
            if (values[r] > 0) plus.push_back(r);
            else if (values[r] < 0) minus.push_back(r);
        }
        if (minus.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (values[r] == 0) rays[r].tight[step] = true;
            continue;
        }

        std::vector<DDRay> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (values[r] < 0) continue;
            DDRay kept = rays[r];
            if (values[r] == 0) kept.tight[step] = true;
            next.push_back(std::move(kept));
        }
        for (auto p : plus)
            for (auto n : minus) {
                std::vector<IntVector> common;
                Incidence tight(m, false);
                for (std::size_t i = 0; i < step; ++i)
                    if (rays[p].tight[i] && rays[n].tight[i]) {
                        tight[i] = true;
                        common.push_back(processed[i]);
                    }
                if (k >= 2 && common.size() + 2 < k) continue;
                const std::size_t rk = common.empty() ? 0 : rank_of_rows(common, k);
                if (k < 2 || rk != k - 2) continue;
                IntVector combo(k);
                for (std::size_t j = 0; j < k; ++j)
                    combo[j] = values[p] * rays[n].coords[j] - values[n] * rays[p].coords[j];
                tight[step] = true;
                next.push_back(DDRay{primitive_vector(combo), std::move(tight)});
            }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (const auto& ray : rays) {
        IntVector x(ambient, 0);
        for (std::size_t j = 0; j < k; ++j)
            if (ray.coords[j] != 0)
                for (std::size_t i = 0; i < ambient; ++i) x[i] += ray.coords[j] * basis[j][i];
        out.push_back(primitive_vector(x));
    }
    sort_unique(out);
    return out;
}

HRep dualize_cone(std::size_t ambient, const std::vector<IntVector>& generators) {
    check_lengths(ambient, generators);
    std::vector<IntVector> gens;
    for (const auto& g : generators)
        if (!is_zero(g)) gens.push_back(g);
    HRep h;
    if (gens.empty()) {
        h.equations = unit_vectors(ambient);
        return h;
    }
    h.equations = integer_nullspace(IntMatrix::from_rows(gens, ambient));
    h.inequalities = extreme_rays(ambient, gens, h.equations);
    const std::size_t span = ambient - h.equations.size();
    if (h.inequalities.empty() || rank_of_rows(h.inequalities, ambient) != span) throw NotPointed();
    return h;
}

Cone Cone::from_generators(std::size_t ambient, const std::vector<IntVector>& generators) {
    Cone c;
    c.ambient_ = ambient;
    c.hrep_ = dualize_cone(ambient, generators);
    c.dim_ = ambient - c.hrep_.equations.size();
    for (const auto& g : generators) {
        if (is_zero(g)) continue;
        std::vector<IntVector> tight;
        for (const auto& h : c.hrep_.inequalities)
            if (dot(h, g) == 0) tight.push_back(h);
        const std::size_t rk = tight.empty() ? 0 : rank_of_rows(tight, ambient);
        if (rk + 1 == c.dim_) c.generators_.push_back(primitive_vector(g));
    }
    sort_unique(c.generators_);
    return c;
}

Cone Cone::from_inequalities(std::size_t ambient, const std::vector<IntVector>& inequalities,
                             const std::vector<IntVector>& equations) {
    return from_generators(ambient, extreme_rays(ambient, inequalities, equations));
}

Cone Cone::orthant(std::size_t ambient) { return from_generators(ambient, unit_vectors(ambient)); }

bool Cone::contains(const IntVector& p) const {
    for (const auto& e : hrep_.equations)
        if (dot(e, p) != 0) return false;
    for (const auto& h : hrep_.inequalities)
        if (dot(h, p) < 0) return false;
    return true;
}

bool Cone::contains_in_relint(const IntVector& p) const {
    for (const auto& e : hrep_.equations)
        if (dot(e, p) != 0) return false;
    for (const auto& h : hrep_.inequalities)
        if (dot(h, p) <= 0) return false;
    return true;
}

bool Cone::has_generator(const IntVector& ray) const {
    return std::binary_search(generators_.begin(), generators_.end(), ray);
}

std::vector<Cone> cone_facets(const Cone& c) {
    std::vector<Cone> out;
    for (const auto& h : c.inequalities()) {
        std::vector<IntVector> gens;
        for (const auto& g : c.generators())
            if (dot(h, g) == 0) gens.push_back(g);
        out.push_back(Cone::from_generators(c.ambient_dim(), gens));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Cone> cone_faces(const Cone& c) {
    const auto& gens = c.generators();
    std::vector<Incidence> zero_sets;
    for (const auto& h : c.inequalities()) {
        Incidence z(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) z[i] = dot(h, gens[i]) == 0;
        zero_sets.push_back(std::move(z));
    }
    std::set<Incidence> seen{Incidence(gens.size(), true)};
    std::deque<Incidence> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        Incidence cur = queue.front();
        queue.pop_front();
        for (const auto& z : zero_sets) {
            Incidence next(gens.size());
            for (std::size_t i = 0; i < gens.size(); ++i) next[i] = cur[i] && z[i];
            if (next != cur && seen.insert(next).second) queue.push_back(next);
        }
    }
    std::vector<Cone> out;
    for (const auto& s : seen) {
        std::vector<IntVector> sub;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (s[i]) sub.push_back(gens[i]);
        out.push_back(Cone::from_generators(c.ambient_dim(), sub));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Cone intersect_cones(const Cone& a, const Cone& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw InvalidArgument("intersecting cones of different ambient dimension");
    std::vector<IntVector> ineqs = a.inequalities();
    ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
    std::vector<IntVector> eqs = a.equations();
    eqs.insert(eqs.end(), b.equations().begin(), b.equations().end());
    return Cone::from_inequalities(a.ambient_dim(), ineqs, eqs);
}

IntVector relint_sample(const Cone& c) {
    if (c.generators().empty()) throw InvalidArgument("the zero cone has no relative interior sample");
    IntVector s(c.ambient_dim(), 0);
    for (const auto& g : c.generators())
        for (std::size_t i = 0; i < s.size(); ++i) s[i] += g[i];
    return s;
}

Cone minimal_face_containing(const Cone& c, const IntVector& p) {
    std::vector<IntVector> tight;
    for (const auto& h : c.inequalities())
        if (dot(h, p) == 0) tight.push_back(h);
    std::vector<IntVector> gens;
    for (const auto& g : c.generators()) {
        bool on_all = std::all_of(tight.begin(), tight.end(),
                                  [&](const IntVector& h) { return dot(h, g) == 0; });
        if (on_all) gens.push_back(g);
    }
    return Cone::from_generators(c.ambient_dim(), gens);
}

bool is_face_of(const Cone& candidate, const Cone& c) {
    for (const auto& g : candidate.generators())
        if (!c.contains(g)) return false;
    if (candidate.dim() == 0) return true;
    return minimal_face_containing(c, relint_sample(candidate)) == candidate;
}

// ---------------------------------------------------------------------------

Fan Fan::from_cones(std::size_t ambient, const std::vector<Cone>& cones, bool support_is_orthant) {
    Fan f(ambient, support_is_orthant);
    std::set<Cone> all;
    std::set<std::vector<IntVector>> expanded;
    for (const auto& c : cones) {
        if (c.ambient_dim() != ambient) throw InvalidArgument("cone ambient dimension mismatch");
        if (!expanded.insert(c.generators()).second) continue;
        if (c.is_simplicial()) {
            // Faces of a simplicial cone are exactly the subsets of its rays.
            const auto& g = c.generators();
            const std::size_t full = (std::size_t{1} << g.size()) - 1;
            all.insert(c);
            for (std::size_t mask = 0; mask < full; ++mask) {
                std::vector<IntVector> sub;
                for (std::size_t i = 0; i < g.size(); ++i)
                    if (mask & (std::size_t{1} << i)) sub.push_back(g[i]);
                if (!expanded.insert(sub).second) continue;
                all.insert(Cone::from_generators(ambient, sub));
            }
        } else {
            for (auto& face : cone_faces(c)) {
                expanded.insert(face.generators());
                all.insert(std::move(face));
            }
        }
    }
    f.cones_.assign(all.begin(), all.end());
    f.reindex();
    return f;
}

bool Fan::insert(const Cone& c) {
    if (c.ambient_dim() != ambient_) throw InvalidArgument("cone ambient dimension mismatch");
    if (index_.count(c.generators())) return false;
    cones_.insert(std::upper_bound(cones_.begin(), cones_.end(), c), c);
    reindex();
    return true;
}

void Fan::reindex() {
    index_.clear();
    for (std::size_t i = 0; i < cones_.size(); ++i) index_.emplace(cones_[i].generators(), i);
}

std::optional<std::size_t> Fan::find(const std::vector<IntVector>& generators) const {
    auto it = index_.find(generators);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> Fan::find(const Cone& c) const { return find(c.generators()); }

std::vector<IntVector> Fan::rays() const {
    std::vector<IntVector> out;
    for (const auto& c : cones_)
        if (c.dim() == 1) out.push_back(c.generators().front());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cone> Fan::maximal_cones() const {
    std::vector<Cone> out;
    for (std::size_t i = 0; i < cones_.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < cones_.size() && maximal; ++j) {
            if (cones_[j].dim() <= cones_[i].dim()) continue;
            const auto& gi = cones_[i].generators();
            maximal = !std::all_of(gi.begin(), gi.end(),
                                   [&](const IntVector& g) { return cones_[j].has_generator(g); });
        }
        if (maximal) out.push_back(cones_[i]);
    }
    return out;
}

std::size_t Fan::dim() const {
    std::size_t d = 0;
    for (const auto& c : cones_) d = std::max(d, c.dim());
    return d;
}

const Cone& carrier_cone(const Fan& f, const Cone& c) {
    const IntVector p = c.dim() == 0 ? IntVector(c.ambient_dim(), 0) : relint_sample(c);
    for (const auto& candidate : f.cones())
        if (candidate.contains_in_relint(p)) return candidate;
    throw InvalidArgument("cone outside fan support");
}

FanReport validate_fan(const Fan& f) {
    FanReport report;
    auto fail = [&](std::string msg) {
        report.valid = false;
        report.violations.push_back(std::move(msg));
    };

    for (const auto& c : f.cones())
        if (c.ambient_dim() != f.ambient_dim()) fail("cone of wrong ambient dimension");

    std::vector<std::size_t> maximal;
    for (const auto& c : f.maximal_cones()) maximal.push_back(*f.find(c));
    for (std::size_t a = 0; a < maximal.size(); ++a)
        for (std::size_t b = a + 1; b < maximal.size(); ++b) {
            const Cone& ca = f.cones()[maximal[a]];
            const Cone& cb = f.cones()[maximal[b]];
            const Cone meet = intersect_cones(ca, cb);
            if (!is_face_of(meet, ca) || !is_face_of(meet, cb)) {
                std::ostringstream os;
                os << "cones " << maximal[a] << " and " << maximal[b]
                   << " intersect in a cone of dimension " << meet.dim() << " that is not a common face";
                fail(os.str());
                if (!report.witness) report.witness = std::make_pair(maximal[a], maximal[b]);
            }
        }

    for (std::size_t i = 0; i < f.cones().size(); ++i)
        for (const auto& facet : cone_facets(f.cones()[i]))
            if (!f.find(facet)) {
                fail("face closure violated: a facet of cone " + std::to_string(i) + " is missing");
                break;
            }
    if (!f.cones().empty() && !f.find(Cone::zero(f.ambient_dim())))
        fail("face closure violated: zero cone missing");

    if (f.support_is_orthant()) {
        for (const auto& r : f.rays())
            for (const auto& e : r)
                if (e < 0) {
                    fail("ray " + to_string(r) + " leaves the non-negative orthant");
                    break;
                }
        if (f.dim() != f.ambient_dim()) fail("no full-dimensional cone");
        const auto maxcones = f.maximal_cones();
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<long> entry(1, 997);
        std::bernoulli_distribution zero(0.25);
        for (int trial = 0; trial < 256; ++trial) {
            IntVector p(f.ambient_dim());
            for (auto& x : p) x = (trial >= 128 && zero(rng)) ? 0 : entry(rng);
            if (is_zero(p)) continue;
            bool covered = std::any_of(maxcones.begin(), maxcones.end(),
                                       [&](const Cone& c) { return c.contains(p); });
            if (!covered) {
                fail("orthant point " + to_string(p) + " not covered by the fan");
                break;
            }
        }
    }
    return report;
}

std::vector<IntVector> ordered_rays(const Fan& f, RayOrder order) {
    auto rays = f.rays();
    if (order == RayOrder::reverse) std::reverse(rays.begin(), rays.end());
    return rays;
}

namespace {

using Simplices = std::vector<std::vector<IntVector>>;

class Puller {
public:
    explicit Puller(const std::vector<IntVector>& order) {
        for (std::size_t i = 0; i < order.size(); ++i) rank_.emplace(order[i], i);
    }

    const Simplices& pull(const Cone& c) {
        if (auto it = memo_.find(c.generators()); it != memo_.end()) return it->second;
        Simplices out;
        if (c.is_simplicial()) {
            out.push_back(c.generators());
        } else {
            const IntVector& apex = *std::min_element(
                c.generators().begin(), c.generators().end(),
                [&](const IntVector& a, const IntVector& b) { return rank_of(a) < rank_of(b); });
            for (const auto& facet : cone_facets(c)) {
                if (facet.has_generator(apex)) continue;
                for (auto simplex : pull(facet)) {
                    simplex.push_back(apex);
                    std::sort(simplex.begin(), simplex.end());
                    out.push_back(std::move(simplex));
                }
            }
        }
        return memo_.emplace(c.generators(), std::move(out)).first->second;
    }

private:
    std::size_t rank_of(const IntVector& ray) const {
        auto it = rank_.find(ray);
        if (it == rank_.end()) throw InvalidArgument("ray order does not cover ray " + to_string(ray));
        return it->second;
    }

    std::map<IntVector, std::size_t> rank_;
    std::map<std::vector<IntVector>, Simplices> memo_;
};

}  // namespace

Fan triangulate_fan(const Fan& f, const std::vector<IntVector>& ray_order) {
    Puller puller(ray_order);
    std::set<std::vector<IntVector>> simplices;
    for (const auto& c : f.cones())
        for (const auto& s : puller.pull(c)) simplices.insert(s);
    std::vector<Cone> cones;
    cones.reserve(simplices.size());
    for (const auto& s : simplices) cones.push_back(Cone::from_generators(f.ambient_dim(), s));
    return Fan::from_cones(f.ambient_dim(), cones, f.support_is_orthant());
}

Fan triangulate_fan(const Fan& f, RayOrder order) { return triangulate_fan(f, ordered_rays(f, order)); }

bool refines(const Fan& fine, const Fan& coarse) {
    for (const auto& c : fine.cones()) {
        if (c.dim() == 0) continue;
        const Cone* host = nullptr;
        try {
            host = &carrier_cone(coarse, c);
        } catch (const InvalidArgument&) {
            return false;
        }
        for (const auto& g : c.generators())
            if (!host->contains(g)) return false;
    }
    return true;
}

}  // namespace dualcx
