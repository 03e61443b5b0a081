#include "dualcx/dual_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "dualcx/error.hpp"

namespace dualcx {

int DualComplex::dim() const {
    int d = -1;
    for (const auto& c : cells) d = std::max(d, c.dim);
    return d;
}

std::vector<std::size_t> DualComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 1), 0);
    for (const auto& c : cells) ++f[static_cast<std::size_t>(c.dim)];
    return f;
}

const DualCell* DualComplex::find_cell(int id) const {
    for (const auto& c : cells)
        if (c.id == id) return &c;
    return nullptr;
}

const DualVertex* DualComplex::find_vertex(int id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

namespace {

std::vector<int> drop(const std::vector<int>& verts, std::size_t i) {
    std::vector<int> out;
    out.reserve(verts.size() - 1);
    for (std::size_t j = 0; j < verts.size(); ++j)
        if (j != i) out.push_back(verts[j]);
    return out;
}

bool strictly_increasing(const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), [](int a, int b) { return a >= b; }) == v.end();
}

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

DualComplex assemble_complex(std::vector<DualVertex> vertices, std::vector<CellSpec> cells) {
    std::sort(vertices.begin(), vertices.end(),
              [](const DualVertex& a, const DualVertex& b) { return a.id < b.id; });
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i].id == vertices[i - 1].id)
            throw InvalidArgument("duplicate vertex id " + std::to_string(vertices[i].id));
    std::set<int> known;
    for (const auto& v : vertices) {
        known.insert(v.id);
        cells.push_back({{v.id}, 1});
    }

    for (const auto& c : cells) {
        if (c.verts.empty()) throw InvalidArgument("cell without vertices");
        if (!strictly_increasing(c.verts)) throw InvalidArgument("cell vertex tuple not strictly increasing");
        if (c.copy < 1) throw InvalidArgument("copy index must be positive");
        for (int v : c.verts)
            if (!known.count(v)) throw InvalidArgument("cell references unknown vertex " + std::to_string(v));
    }
    std::sort(cells.begin(), cells.end(), [](const CellSpec& a, const CellSpec& b) {
        return std::make_tuple(a.verts.size(), a.verts, a.copy) <
               std::make_tuple(b.verts.size(), b.verts, b.copy);
    });
    cells.erase(std::unique(cells.begin(), cells.end(),
                            [](const CellSpec& a, const CellSpec& b) {
                                return a.verts == b.verts && a.copy == b.copy;
                            }),
                cells.end());

    DualComplex out;
    out.vertices = std::move(vertices);
    std::map<std::pair<std::vector<int>, int>, int> ids;
    for (const auto& spec : cells) {
        DualCell cell;
        cell.id = static_cast<int>(out.cells.size());
        cell.dim = static_cast<int>(spec.verts.size()) - 1;
        cell.verts = spec.verts;
        cell.copy = spec.copy;
        if (cell.dim > 0)
            for (std::size_t i = 0; i < spec.verts.size(); ++i) {
                auto it = ids.find({drop(spec.verts, i), 1});
                if (it == ids.end()) throw InvalidArgument("face closure violated");
                cell.boundary.push_back(it->second);
            }
        if (cell.copy != 1) out.simplicial = false;
        ids.emplace(std::make_pair(cell.verts, cell.copy), cell.id);
        out.cells.push_back(std::move(cell));
    }
    return out;
}

DualComplex simplicial_closure(std::vector<DualVertex> vertices,
                               const std::vector<std::vector<int>>& simplices) {
    std::set<std::vector<int>> all;
    for (auto s : simplices) {
        std::sort(s.begin(), s.end());
        const std::size_t full = std::size_t{1} << s.size();
        for (std::size_t mask = 1; mask < full; ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
            all.insert(std::move(sub));
        }
    }
    std::vector<CellSpec> specs;
    for (const auto& s : all) specs.push_back({s, 1});
    return assemble_complex(std::move(vertices), std::move(specs));
}

ComplexReport validate_complex(const DualComplex& c) {
    ComplexReport r;
    auto fail = [&](std::string msg) {
        r.valid = false;
        r.violations.push_back(std::move(msg));
    };

    std::set<int> vertex_ids;
    for (const auto& v : c.vertices)
        if (!vertex_ids.insert(v.id).second) fail("duplicate vertex id " + std::to_string(v.id));

    std::map<int, const DualCell*> by_id;
    std::map<std::pair<std::vector<int>, int>, int> by_key;
    std::set<std::vector<int>> tuples;
    bool well_formed = true;
    for (const auto& cell : c.cells) {
        if (!by_id.emplace(cell.id, &cell).second) fail("duplicate cell id " + std::to_string(cell.id));
        if (cell.verts.empty() || static_cast<int>(cell.verts.size()) != cell.dim + 1) {
            fail("cell " + std::to_string(cell.id) + " has a vertex tuple of the wrong length");
            well_formed = false;
            continue;
        }
        if (!strictly_increasing(cell.verts)) {
            fail("cell " + std::to_string(cell.id) + " has a tuple that is not strictly increasing");
            well_formed = false;
        }
        for (int v : cell.verts)
            if (!vertex_ids.count(v))
                fail("cell " + std::to_string(cell.id) + " references unknown vertex " + std::to_string(v));
        if (cell.copy < 1) fail("cell " + std::to_string(cell.id) + " has a non-positive copy index");
        if (!by_key.emplace(std::make_pair(cell.verts, cell.copy), cell.id).second)
            fail("duplicate (tuple, copy) for cell " + std::to_string(cell.id));
        tuples.insert(cell.verts);
    }
    for (const auto& v : c.vertices)
        if (!tuples.count({v.id})) fail("vertex " + std::to_string(v.id) + " has no 0-cell");
    if (!well_formed) return r;

    for (const auto& cell : c.cells)
        if (cell.dim > 0)
            for (std::size_t i = 0; i < cell.verts.size(); ++i)
                if (!tuples.count(drop(cell.verts, i))) {
                    fail("face closure violated at cell " + std::to_string(cell.id));
                    break;
                }

    for (const auto& cell : c.cells) {
        if (cell.boundary.size() != static_cast<std::size_t>(cell.dim == 0 ? 0 : cell.dim + 1)) {
            fail("cell " + std::to_string(cell.id) + " has a boundary of the wrong length");
            continue;
        }
        for (std::size_t i = 0; i < cell.boundary.size(); ++i) {
            auto it = by_id.find(cell.boundary[i]);
            if (it == by_id.end() || it->second->verts != drop(cell.verts, i)) {
                fail("boundary of cell " + std::to_string(cell.id) + " is inconsistent with its tuple");
                break;
            }
        }
    }

    bool simplicial = true;
    for (const auto& cell : c.cells)
        if (cell.copy != 1) simplicial = false;
    if (simplicial != c.simplicial) fail("simplicial flag is incorrect");
    return r;
}

// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<Rational>;  // coefficient of t^i at index i

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        const Rational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace

EdgeMultiplicity edge_multiplicity(const Support& s, const Cone& tau, bool coefficient_aware) {
    const std::size_t n = s.n_vars() - 1;
    if (tau.dim() != n) throw InvalidArgument("cone is not dual to a diagram edge");
    const FaceCut cut = mu_and_face(s, relint_sample(tau));
    if (!cut.face.compact || cut.face.dim != 1) throw InvalidArgument("cone is not dual to a diagram edge");

    // Collinear points sorted lexicographically run from one endpoint to the other.
    const auto& pts = cut.face.support_points;
    const IntVector& a = pts.front();
    IntVector diff(s.n_vars());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = pts.back()[j] - a[j];
    const Integer length = content(diff);

    EdgeMultiplicity out;
    out.lattice_length = static_cast<int>(length.get_si());
    out.value = out.lattice_length;
    if (!coefficient_aware || !s.coefficients()) return out;

    const IntVector step = primitive_vector(diff);
    std::size_t axis = 0;
    while (step[axis] == 0) ++axis;
    Poly g(static_cast<std::size_t>(out.lattice_length) + 1);
    for (const auto& m : pts) {
        const Integer k = (m[axis] - a[axis]) / step[axis];
        g[k.get_ui()] = *s.coefficient_of(m);
    }
    trim(g);
    const Poly common = poly_gcd(g, derivative(g));
    out.value = static_cast<int>(g.size() - common.size());
    out.degenerate = out.value < out.lattice_length;
    return out;
}

DualComplex build_dual_complex(const Fan& sigma2, const VarchenkoFan& sigma1, const Support& s,
                               const BuildOptions& options, std::vector<std::string>* warnings) {
    if (s.n_vars() < 3) throw InvalidArgument("dual complex needs at least three variables");
    const std::size_t n = s.n_vars() - 1;
    if (sigma2.ambient_dim() != s.n_vars() || sigma1.fan.ambient_dim() != s.n_vars())
        throw InvalidArgument("fan and support dimensions differ");
    for (const auto& c : sigma2.cones())
        if (!c.is_simplicial()) throw InvalidArgument("fan is not simplicial");
    if (auto r = check_property_R(sigma2); !r.holds) throw PropertyRViolation(*r.witness);

    std::map<IntVector, int> vertex_id;
    std::vector<DualVertex> vertices;
    for (const auto& ray : sigma2.rays()) {
        if (is_coordinate_ray(ray)) continue;
        const Cone rc = Cone::from_generators(s.n_vars(), {ray});
        if (carrier_cone(sigma1.fan, rc).dim() > n) continue;
        const int id = static_cast<int>(vertices.size());
        vertex_id.emplace(ray, id);
        vertices.push_back({id, ray});
    }

    std::vector<CellSpec> specs;
    for (const auto& tau : sigma2.cones()) {
        if (tau.dim() < 2 || tau.dim() > n) continue;
        std::vector<int> verts;
        for (const auto& g : tau.generators()) {
            auto it = vertex_id.find(g);
            if (it == vertex_id.end()) break;
            verts.push_back(it->second);
        }
        if (verts.size() != tau.generators().size()) continue;
        if (carrier_cone(sigma1.fan, tau).dim() > n) continue;
        std::sort(verts.begin(), verts.end());
        int copies = 1;
        if (tau.dim() == n) {
            const EdgeMultiplicity m = edge_multiplicity(s, tau, options.coefficient_aware);
            copies = m.value;
            if (m.degenerate && warnings)
                warnings->push_back("degeneracy detected: edge dual to cone " + to_string(relint_sample(tau)) +
                                    " has lattice length " + std::to_string(m.lattice_length) + " but " +
                                    std::to_string(m.value) + " distinct roots");
        }
        for (int copy = 1; copy <= copies; ++copy) specs.push_back({verts, copy});
    }
    return assemble_complex(std::move(vertices), std::move(specs));
}

// ---------------------------------------------------------------------------

namespace {

std::set<std::vector<int>> simplex_set(const DualComplex& c) {
    if (!c.simplicial) throw InvalidArgument("operation requires a simplicial complex");
    std::set<std::vector<int>> out;
    for (const auto& cell : c.cells) out.insert(cell.verts);
    return out;
}

int fresh_vertex_id(const DualComplex& c) {
    int id = 0;
    for (const auto& v : c.vertices) id = std::max(id, v.id + 1);
    return id;
}

void require_valid(const DualComplex& c) {
    const auto report = validate_complex(c);
    if (!report.valid) throw InvalidArgument("invalid complex: " + report.violations.front());
}

}  // namespace

DualComplex blowup_case1(const DualComplex& c, const BlowupCenterSpec& spec) {
    require_valid(c);
    const DualCell* target = c.find_cell(spec.target_cell);
    if (!target) throw InvalidArgument("dangling target id " + std::to_string(spec.target_cell));
    const auto simplices = simplex_set(c);
    if (target->dim == 0) return c;

    const std::vector<int>& center = target->verts;
    const int f = fresh_vertex_id(c);
    std::vector<std::vector<int>> out;
    for (const auto& s : simplices) {
        if (!contains_all(s, center)) {
            out.push_back(s);
            continue;
        }
        // Join F with every face of s that does not contain the center.
        const std::size_t full = std::size_t{1} << s.size();
        for (std::size_t mask = 0; mask < full; ++mask) {
            std::vector<int> face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
            if (contains_all(face, center)) continue;
            face.push_back(f);
            out.push_back(std::move(face));
        }
    }
    auto vertices = c.vertices;
    vertices.push_back({f, std::nullopt});
    return simplicial_closure(std::move(vertices), out);
}

DualComplex blowup_case2(const DualComplex& c, const BlowupCenterSpec& spec) {
    require_valid(c);
    const DualCell* base = c.find_cell(spec.base_cell);
    if (!base) throw InvalidArgument("dangling base id " + std::to_string(spec.base_cell));
    if (spec.touched_cells.empty()) throw InvalidArgument("case-2 blow-up needs at least one touched cell");
    const auto simplices = simplex_set(c);

    const int f = fresh_vertex_id(c);
    std::vector<std::vector<int>> out(simplices.begin(), simplices.end());
    for (int id : spec.touched_cells) {
        const DualCell* touched = c.find_cell(id);
        if (!touched) throw InvalidArgument("dangling touched cell id " + std::to_string(id));
        if (!contains_all(touched->verts, base->verts)) throw InvalidArgument("center not contained in stratum");
        auto cone = touched->verts;
        cone.push_back(f);
        out.push_back(std::move(cone));
    }
    auto vertices = c.vertices;
    vertices.push_back({f, std::nullopt});
    return simplicial_closure(std::move(vertices), out);
}

DualComplex full_complex(int n_vertices, int max_dim) {
    if (n_vertices < 0 || max_dim < 0) throw InvalidArgument("negative size for the full complex");
    std::vector<DualVertex> vertices;
    for (int v = 1; v <= n_vertices; ++v) vertices.push_back({v, std::nullopt});
    std::vector<CellSpec> specs;
    const std::size_t full = std::size_t{1} << n_vertices;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n_vertices; ++v)
            if (mask & (std::size_t{1} << v)) s.push_back(v + 1);
        if (static_cast<int>(s.size()) <= max_dim + 1) specs.push_back({s, 1});
    }
    return assemble_complex(std::move(vertices), std::move(specs));
}

DeletionScript realize_complex(const DualComplex& k, int n_vertices, int max_dim) {
    require_valid(k);
    const auto target = simplex_set(k);
    for (const auto& v : k.vertices)
        if (v.id < 1 || v.id > n_vertices)
            throw InvalidArgument("complex not embeddable: vertex id " + std::to_string(v.id) +
                                  " outside 1.." + std::to_string(n_vertices));
    if (k.dim() > max_dim) throw InvalidArgument("complex not embeddable: dimension exceeds " + std::to_string(max_dim));

    std::vector<std::vector<int>> missing;
    for (const auto& cell : full_complex(n_vertices, max_dim).cells)
        if (!target.count(cell.verts)) missing.push_back(cell.verts);
    std::sort(missing.begin(), missing.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return {std::move(missing)};
}

DualComplex apply_deletions(const DualComplex& c, const DeletionScript& script) {
    auto simplices = simplex_set(c);
    for (auto victim : script.deletions) {
        std::sort(victim.begin(), victim.end());
        if (!simplices.count(victim)) throw InvalidArgument("deleted cell is absent");
        for (auto it = simplices.begin(); it != simplices.end();)
            it = contains_all(*it, victim) ? simplices.erase(it) : std::next(it);
    }
    std::vector<DualVertex> vertices;
    for (const auto& v : c.vertices)
        if (simplices.count({v.id})) vertices.push_back(v);
    std::vector<CellSpec> specs;
    for (const auto& s : simplices) specs.push_back({s, 1});
    return assemble_complex(std::move(vertices), std::move(specs));
}

std::vector<std::pair<std::vector<int>, int>> cell_keys(const DualComplex& c) {
    std::vector<std::pair<std::vector<int>, int>> out;
    for (const auto& cell : c.cells) out.emplace_back(cell.verts, cell.copy);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dualcx
