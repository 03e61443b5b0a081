#pragma once

#include <vector>

#include "dualcx/dual_complex.hpp"
#include "dualcx/lattice.hpp"

namespace dualcx {

/**
 * Integral homology per degree 0..dim. In reduced mode degree 0 is taken
 * relative to the augmentation. `euler` is always the alternating count of
 * cells, so for a non-empty complex the alternating Betti sum equals
 * euler - 1 in reduced mode and euler otherwise.
 */
struct HomologyProfile {
    bool reduced = false;
    std::vector<long> betti;
    std::vector<std::vector<Integer>> torsion;
    long euler = 0;

    friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

/**
 * Boundary maps d_1 .. d_dim. d_k has one row per (k-1)-cell and one column
 * per k-cell, both in the order the cells appear in the complex; the i-th
 * face of a cell enters with sign (-1)^i. Throws InvalidArgument for an
 * invalid complex.
 */
std::vector<IntMatrix> boundary_matrices(const DualComplex& c);

HomologyProfile homology(const DualComplex& c, bool reduced);

long euler_characteristic(const DualComplex& c);

/** Same groups in every degree; degrees beyond either profile's length count as zero. */
bool same_homology(const HomologyProfile& a, const HomologyProfile& b);

}  // namespace dualcx
