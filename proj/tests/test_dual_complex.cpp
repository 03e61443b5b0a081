#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dualcx/dual_complex.hpp"
#include "dualcx/error.hpp"
#include "dualcx/topology.hpp"
#include "test_support.hpp"

using namespace dualcx;
using dualcx::testing::uniform;

namespace {

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVector> out;
    for (auto r : rows) out.push_back(make_vector(r));
    return out;
}

std::vector<DualVertex> plain_vertices(std::initializer_list<int> ids) {
    std::vector<DualVertex> out;
    for (int id : ids) out.push_back({id, std::nullopt});
    return out;
}

int id_of(const DualComplex& c, const std::vector<int>& verts, int copy = 1) {
    for (const auto& cell : c.cells)
        if (cell.verts == verts && cell.copy == copy) return cell.id;
    FAIL("no cell with the requested tuple");
    return -1;
}

std::set<std::vector<int>> tuples_of_dim(const DualComplex& c, int d) {
    std::set<std::vector<int>> out;
    for (const auto& cell : c.cells)
        if (cell.dim == d) out.insert(cell.verts);
    return out;
}

DualComplex built(const Support& s, RayOrder order = RayOrder::lex, bool coeff = false,
                  std::vector<std::string>* warnings = nullptr) {
    const VarchenkoFan v = first_varchenko_subdivision(s);
    return build_dual_complex(triangulate_fan(v.fan, order), v, s, BuildOptions{coeff}, warnings);
}

const Support& malgrange() {
    static const Support s(3, vecs({{8, 0, 0}, {0, 8, 0}, {0, 0, 8}, {2, 2, 2}}));
    return s;
}

const Support& quintic() {
    static const Support s(4, vecs({{5, 0, 0, 0}, {0, 5, 0, 0}, {0, 0, 5, 0}, {0, 0, 0, 5}, {1, 1, 1, 1}}));
    return s;
}

BlowupCenterSpec case1(int target) {
    BlowupCenterSpec b;
    b.mode = BlowupMode::case1;
    b.target_cell = target;
    return b;
}

BlowupCenterSpec case2(int base, std::vector<int> touched) {
    BlowupCenterSpec b;
    b.mode = BlowupMode::case2;
    b.base_cell = base;
    b.touched_cells = std::move(touched);
    return b;
}

}  // namespace

TEST_CASE("build_dual_complex on the Malgrange example") {
    const DualComplex c = built(malgrange());
    CHECK(validate_complex(c).valid);
    REQUIRE(c.vertices.size() == 3);
    std::vector<IntVector> labels;
    for (const auto& v : c.vertices) labels.push_back(*v.ray);
    CHECK(labels == vecs({{1, 1, 2}, {1, 2, 1}, {2, 1, 1}}));
    CHECK(c.f_vector() == std::vector<std::size_t>{3, 6});
    CHECK_FALSE(c.simplicial);
    std::map<std::vector<int>, std::set<int>> copies;
    for (const auto& cell : c.cells)
        if (cell.dim == 1) copies[cell.verts].insert(cell.copy);
    CHECK(copies.size() == 3);
    for (const auto& [verts, cs] : copies) CHECK(cs == std::set<int>{1, 2});
}

TEST_CASE("build_dual_complex on Brieskorn and quintic") {
    for (const auto& pts : {vecs({{2, 0, 0}, {0, 3, 0}, {0, 0, 6}}), vecs({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}),
                            vecs({{3, 0, 0}, {0, 4, 0}, {0, 0, 5}})}) {
        const DualComplex c = built(Support(3, pts));
        CHECK(c.f_vector() == std::vector<std::size_t>{1});
        CHECK(validate_complex(c).valid);
    }
    const DualComplex q = built(quintic());
    CHECK(validate_complex(q).valid);
    CHECK(q.f_vector() == std::vector<std::size_t>{4, 6, 4});
    CHECK(q.simplicial);
    std::vector<IntVector> labels;
    for (const auto& v : q.vertices) labels.push_back(*v.ray);
    CHECK(labels == vecs({{1, 1, 1, 2}, {1, 1, 2, 1}, {1, 2, 1, 1}, {2, 1, 1, 1}}));
}

TEST_CASE("build_dual_complex preconditions") {
    const Support bad(3, vecs({{4, 0, 0}, {0, 4, 0}, {1, 0, 1}, {0, 1, 1}}));
    try {
        built(bad);
        FAIL("expected a property (R) violation");
    } catch (const PropertyRViolation& e) {
        CHECK(e.witness() == make_vector({1, 1, 0}));
    }
    const VarchenkoFan v = first_varchenko_subdivision(malgrange());
    CHECK_THROWS_AS(build_dual_complex(v.fan, v, malgrange()), InvalidArgument);  // not simplicial
    const Support curve(2, vecs({{2, 0}, {0, 3}}));
    const VarchenkoFan vc = first_varchenko_subdivision(curve);
    CHECK_THROWS_AS(build_dual_complex(triangulate_fan(vc.fan), vc, curve), InvalidArgument);
}

TEST_CASE("edge_multiplicity") {
    auto cone = [](std::initializer_list<std::initializer_list<long>> g) {
        auto v = vecs(g);
        return Cone::from_generators(v.front().size(), v);
    };
    CHECK(edge_multiplicity(malgrange(), cone({{2, 1, 1}, {1, 2, 1}})).value == 2);
    CHECK(edge_multiplicity(malgrange(), cone({{1, 2, 1}, {1, 1, 2}})).lattice_length == 2);
    CHECK(edge_multiplicity(quintic(), cone({{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}})).value == 1);
    CHECK_THROWS_WITH(edge_multiplicity(malgrange(), cone({{2, 1, 1}})), "cone is not dual to a diagram edge");
    CHECK_THROWS_WITH(edge_multiplicity(malgrange(), cone({{1, 0, 0}, {0, 1, 0}})),
                      "cone is not dual to a diagram edge");

    // Edge polynomial 1 + 2t + t^2 on the edge from (2,0,0) to (0,2,0).
    const auto pts = vecs({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 3}});
    const Cone tau = cone({{3, 3, 2}, {1, 1, 1}});
    const Support square(3, pts, std::vector<Rational>{1, 2, 1, 1});
    const EdgeMultiplicity d = edge_multiplicity(square, tau, true);
    CHECK(d.value == 1);
    CHECK(d.lattice_length == 2);
    CHECK(d.degenerate);
    CHECK(edge_multiplicity(square, tau, false).value == 2);
    const Support generic(3, pts, std::vector<Rational>{1, 3, 1, 1});
    const EdgeMultiplicity g = edge_multiplicity(generic, tau, true);
    CHECK(g.value == 2);
    CHECK_FALSE(g.degenerate);
    // Coefficient-aware mode without coefficients falls back to the lattice length.
    CHECK(edge_multiplicity(Support(3, pts), tau, true).value == 2);
}

TEST_CASE("coefficient-aware build") {
    std::vector<std::string> warnings;
    const Support with(3, malgrange().points(), std::vector<Rational>{1, 1, 1, 1});
    CHECK(built(with, RayOrder::lex, true, &warnings) == built(malgrange()));
    CHECK(warnings.empty());

    // (1,1,5) is the midpoint of the diagram edge (2,2,2)-(0,0,8); coefficient 2 makes the
    // edge polynomial (1+t)^2, so the edge between (2,1,1) and (1,2,1) loses its second copy.
    const Support degenerate(3, vecs({{8, 0, 0}, {0, 8, 0}, {0, 0, 8}, {2, 2, 2}, {1, 1, 5}}),
                             std::vector<Rational>{1, 1, 1, 1, 2});
    const DualComplex c = built(degenerate, RayOrder::lex, true, &warnings);
    CHECK(c.f_vector() == std::vector<std::size_t>{3, 5});
    REQUIRE(warnings.size() == 1);
    CHECK(warnings.front().rfind("degeneracy detected", 0) == 0);
    CHECK(built(degenerate).f_vector() == std::vector<std::size_t>{3, 6});
}

TEST_CASE("low-dimensional cells are never doubled") {
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n1 = static_cast<std::size_t>(uniform(3, 4));
        const Support s = testing::random_convenient_support(n1, 7, n1 == 3 ? 9 : 6);
        const DualComplex c = built(s);
        CHECK(validate_complex(c).valid);
        const int n = static_cast<int>(n1) - 1;
        CHECK(c.dim() <= n - 1);
        for (const auto& cell : c.cells)
            if (cell.dim <= n - 2) CHECK(cell.copy == 1);
    }
}

TEST_CASE("assemble and validate") {
    const DualComplex doubled = assemble_complex(plain_vertices({1, 2}), {{{1, 2}, 1}, {{1, 2}, 2}});
    CHECK(validate_complex(doubled).valid);
    CHECK_FALSE(doubled.simplicial);
    CHECK(doubled.f_vector() == std::vector<std::size_t>{2, 2});

    CHECK_THROWS_WITH(assemble_complex(plain_vertices({1, 2, 3}), {{{1, 2, 3}, 1}}), "face closure violated");

    DualComplex missing_edge = simplicial_closure(plain_vertices({1, 2, 3}), {{1, 2, 3}});
    missing_edge.cells.erase(std::find_if(missing_edge.cells.begin(), missing_edge.cells.end(),
                                          [](const DualCell& c) { return c.verts == std::vector<int>{1, 3}; }));
    const ComplexReport r1 = validate_complex(missing_edge);
    CHECK_FALSE(r1.valid);
    CHECK(r1.violations.front().rfind("face closure violated", 0) == 0);

    DualComplex dup = doubled;
    for (auto& cell : dup.cells) cell.copy = 1;
    const ComplexReport r2 = validate_complex(dup);
    CHECK_FALSE(r2.valid);
    CHECK(r2.violations.front().rfind("duplicate (tuple, copy)", 0) == 0);

    DualComplex flag = simplicial_closure(plain_vertices({1, 2}), {{1, 2}});
    flag.simplicial = false;
    CHECK_FALSE(validate_complex(flag).valid);

    DualComplex wrong_boundary = simplicial_closure(plain_vertices({1, 2, 3}), {{1, 2}, {2, 3}});
    std::swap(wrong_boundary.cells.back().boundary[0], wrong_boundary.cells.back().boundary[1]);
    CHECK_FALSE(validate_complex(wrong_boundary).valid);
}

TEST_CASE("blowup_case1 examples") {
    const DualComplex triangle = simplicial_closure(plain_vertices({1, 2, 3}), {{1, 2, 3}});
    const DualComplex t = blowup_case1(triangle, case1(id_of(triangle, {1, 2, 3})));
    CHECK(t.f_vector() == std::vector<std::size_t>{4, 6, 3});
    CHECK(tuples_of_dim(t, 2) == std::set<std::vector<int>>{{1, 2, 4}, {1, 3, 4}, {2, 3, 4}});

    const DualComplex edge = simplicial_closure(plain_vertices({1, 2}), {{1, 2}});
    const DualComplex path = blowup_case1(edge, case1(id_of(edge, {1, 2})));
    CHECK(tuples_of_dim(path, 1) == std::set<std::vector<int>>{{1, 3}, {2, 3}});

    CHECK(blowup_case1(triangle, case1(id_of(triangle, {2}))) == triangle);
    CHECK_THROWS_WITH(blowup_case1(triangle, case1(99)), doctest::Contains("dangling target id"));

    // Subdividing an edge of the triangle splits both the edge and the 2-cell.
    const DualComplex e = blowup_case1(triangle, case1(id_of(triangle, {1, 2})));
    CHECK(e.f_vector() == std::vector<std::size_t>{4, 5, 2});
}

TEST_CASE("blowup_case2 examples") {
    const DualComplex star = simplicial_closure(plain_vertices({1, 2, 3, 4}), {{1, 2}, {1, 3}, {1, 4}});
    const DualComplex out =
        blowup_case2(star, case2(id_of(star, {1}), {id_of(star, {1, 2}), id_of(star, {1, 3}), id_of(star, {1, 4})}));
    CHECK(tuples_of_dim(out, 0) == std::set<std::vector<int>>{{1}, {2}, {3}, {4}, {5}});
    CHECK(tuples_of_dim(out, 1) ==
          std::set<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(tuples_of_dim(out, 2) == std::set<std::vector<int>>{{1, 2, 5}, {1, 3, 5}, {1, 4, 5}});
    CHECK(same_homology(homology(star, true), homology(out, true)));
    CHECK(homology(out, true).betti == std::vector<long>{0, 0, 0});

    const DualComplex point = simplicial_closure(plain_vertices({1}), {{1}});
    const DualComplex segment = blowup_case2(point, case2(0, {0}));
    CHECK(tuples_of_dim(segment, 1) == std::set<std::vector<int>>{{1, 2}});

    CHECK_THROWS_WITH(blowup_case2(star, case2(id_of(star, {2}), {id_of(star, {1, 3})})),
                      "center not contained in stratum");
    CHECK_THROWS_WITH(blowup_case2(star, case2(77, {id_of(star, {1, 3})})), doctest::Contains("dangling base id"));
    CHECK_THROWS_AS(blowup_case2(star, case2(id_of(star, {1}), {})), InvalidArgument);

    const DualComplex doubled = assemble_complex(plain_vertices({1, 2}), {{{1, 2}, 1}, {{1, 2}, 2}});
    CHECK_THROWS_AS(blowup_case1(doubled, case1(2)), InvalidArgument);
}

TEST_CASE("blow-ups preserve homology on random complexes") {
    int applied = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const DualComplex c = testing::random_simplicial_complex(static_cast<int>(uniform(2, 7)), 2,
                                                                 static_cast<int>(uniform(1, 6)));
        const HomologyProfile before = homology(c, true);
        const DualCell& target = c.cells[static_cast<std::size_t>(uniform(0, static_cast<long>(c.cells.size()) - 1))];
        const DualComplex one = blowup_case1(c, case1(target.id));
        CHECK(validate_complex(one).valid);
        CHECK(homology(one, true) == before);
        CHECK(euler_characteristic(one) == euler_characteristic(c));

        std::vector<int> cofaces;
        for (const auto& cell : c.cells)
            if (std::includes(cell.verts.begin(), cell.verts.end(), target.verts.begin(), target.verts.end()))
                cofaces.push_back(cell.id);
        std::shuffle(cofaces.begin(), cofaces.end(), testing::rng());
        cofaces.resize(static_cast<std::size_t>(uniform(1, static_cast<long>(cofaces.size()))));
        const DualComplex two = blowup_case2(c, case2(target.id, cofaces));
        CHECK(validate_complex(two).valid);
        CHECK(same_homology(homology(two, true), before));
        ++applied;
    }
    CHECK(applied == 120);
}

TEST_CASE("realize_complex examples") {
    const DualComplex two_points = simplicial_closure(plain_vertices({1, 2}), {{1}, {2}});
    CHECK(realize_complex(two_points, 2, 1).deletions == std::vector<std::vector<int>>{{1, 2}});

    const DualComplex boundary = simplicial_closure(plain_vertices({1, 2, 3}), {{1, 2}, {1, 3}, {2, 3}});
    CHECK(realize_complex(boundary, 3, 2).deletions == std::vector<std::vector<int>>{{1, 2, 3}});

    CHECK(realize_complex(full_complex(4, 2), 4, 2).deletions.empty());
    CHECK(full_complex(4, 2).f_vector() == std::vector<std::size_t>{4, 6, 4});

    CHECK_THROWS_WITH(realize_complex(boundary, 2, 2), doctest::Contains("complex not embeddable"));
    CHECK_THROWS_WITH(realize_complex(boundary, 3, 0), doctest::Contains("complex not embeddable"));
    CHECK_THROWS_WITH(apply_deletions(boundary, {{{1, 2, 3}}}), "deleted cell is absent");
}

TEST_CASE("realize_complex scripts replay exactly and respect coface order") {
    for (int trial = 0; trial < 60; ++trial) {
        const int n = static_cast<int>(uniform(1, 6));
        const int d = static_cast<int>(uniform(0, 2));
        const DualComplex k = testing::random_simplicial_complex(n, d, static_cast<int>(uniform(1, 6)));
        const DeletionScript script = realize_complex(k, n, d);
        const DualComplex replay = apply_deletions(full_complex(n, d), script);
        CHECK(cell_keys(replay) == cell_keys(k));

        // Each deletion names a present cell whose proper cofaces are already gone.
        std::set<std::vector<int>> present;
        for (const auto& cell : full_complex(n, d).cells) present.insert(cell.verts);
        for (const auto& victim : script.deletions) {
            REQUIRE(present.count(victim) == 1);
            for (const auto& other : present)
                if (other != victim)
                    CHECK_FALSE(std::includes(other.begin(), other.end(), victim.begin(), victim.end()));
            present.erase(victim);
        }
    }
}
