#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dualcx/lattice.hpp"
#include "dualcx/newton.hpp"
#include "dualcx/polyhedral.hpp"

namespace dualcx {

struct DualVertex {
    int id = 0;
    std::optional<IntVector> ray;

    friend bool operator==(const DualVertex&, const DualVertex&) = default;
};

/**
 * A k-cell spans k+1 vertices (ascending ids). Several cells may share a
 * vertex tuple; they are told apart by `copy` (1, 2, ...). `boundary[i]` is the
 * id of the (k-1)-cell spanned by the tuple with its i-th vertex removed.
 */
struct DualCell {
    int id = 0;
    int dim = 0;
    std::vector<int> verts;
    int copy = 1;
    std::vector<int> boundary;

    friend bool operator==(const DualCell&, const DualCell&) = default;
};

/**
 * Dual (incidence) complex of a divisor. Vertices are also present as
 * 0-cells. Multicells are allowed, so this is a Delta-complex in general;
 * `simplicial` records whether every tuple occurs at most once.
 */
struct DualComplex {
    std::vector<DualVertex> vertices;
    std::vector<DualCell> cells;
    bool simplicial = true;

    int dim() const;
    std::vector<std::size_t> f_vector() const;  // cell counts per dimension, copies included
    const DualCell* find_cell(int id) const;
    const DualVertex* find_vertex(int id) const;

    friend bool operator==(const DualComplex&, const DualComplex&) = default;
};

/** A cell to be created by assemble_complex: vertex tuple plus copy index. */
struct CellSpec {
    std::vector<int> verts;
    int copy = 1;
};

/**
 * Builds a complex with canonical ids: cells ordered by (dim, tuple, copy)
 * and numbered from 0, boundaries filled in. Facets of multicells resolve to
 * copy 1 of the facet tuple. Throws InvalidArgument if a facet is missing or
 * a vertex is unknown.
 */
DualComplex assemble_complex(std::vector<DualVertex> vertices, std::vector<CellSpec> cells);

/** Simplicial complex on the given vertices from its simplices (closed under faces by this call). */
DualComplex simplicial_closure(std::vector<DualVertex> vertices,
                               const std::vector<std::vector<int>>& simplices);

struct ComplexReport {
    bool valid = true;
    std::vector<std::string> violations;
};

ComplexReport validate_complex(const DualComplex& c);

struct BuildOptions {
    bool coefficient_aware = false;
};

struct EdgeMultiplicity {
    int value = 0;
    int lattice_length = 0;
    bool degenerate = false;  // coefficient-aware value fell below the lattice length
};

/**
 * Number of points in which the one-dimensional stratum of the n-dimensional
 * cone `tau` meets the strict transform. Without coefficients this is the
 * lattice length of the Newton diagram edge cut by tau; with coefficients it
 * is the number of distinct roots in C* of the edge polynomial.
 */
EdgeMultiplicity edge_multiplicity(const Support& s, const Cone& tau, bool coefficient_aware = false);

/**
 * Dual complex of the exceptional divisor of the partial resolution given by
 * the simplicial fan `sigma2`, which refines `sigma1.fan` with the same rays.
 * A cone made of non-coordinate rays contributes a cell iff its carrier in the
 * Varchenko fan has dimension <= n; top cells (dimension n-1) are repeated by
 * their edge multiplicity. Throws PropertyRViolation or InvalidArgument.
 */
DualComplex build_dual_complex(const Fan& sigma2, const VarchenkoFan& sigma1, const Support& s,
                               const BuildOptions& options = {},
                               std::vector<std::string>* warnings = nullptr);

// ---------------------------------------------------------------------------
// Blow-up transformations.

enum class BlowupMode { case1, case2 };

struct BlowupCenterSpec {
    BlowupMode mode = BlowupMode::case1;
    int target_cell = 0;              // case1: cell to subdivide
    int base_cell = 0;                // case2: cell whose stratum contains the center
    std::vector<int> touched_cells;   // case2: cells whose strata meet the center
};

/** Stellar subdivision of the target cell at a new vertex. A vertex target is a no-op. */
DualComplex blowup_case1(const DualComplex& c, const BlowupCenterSpec& spec);

/** Cones from a new vertex over every touched cell; each touched cell must contain the base cell. */
DualComplex blowup_case2(const DualComplex& c, const BlowupCenterSpec& spec);

// ---------------------------------------------------------------------------
// Realization by deletions from the full complex.

struct DeletionScript {
    std::vector<std::vector<int>> deletions;
};

/** All simplices of dimension <= d on vertices 1..N. */
DualComplex full_complex(int n_vertices, int max_dim);

/**
 * Deletions turning full_complex(N, d) into K, in strictly decreasing
 * dimension with ties broken lexicographically. K's vertex ids must lie in 1..N.
 */
DeletionScript realize_complex(const DualComplex& k, int n_vertices, int max_dim);

/** Removes each named simplex together with its cofaces, in order. Throws if a named simplex is absent. */
DualComplex apply_deletions(const DualComplex& c, const DeletionScript& script);

/** Sorted vertex tuples of all cells, with copies; a canonical form for comparisons. */
std::vector<std::pair<std::vector<int>, int>> cell_keys(const DualComplex& c);

}  // namespace dualcx
