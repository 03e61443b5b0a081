#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dualcx/lattice.hpp"
#include "dualcx/polyhedral.hpp"

namespace dualcx {

/**
 * Exponent vectors of a power series f = sum a_m x^m, optionally with the
 * coefficients a_m. Points are stored sorted; coefficients follow them.
 */
class Support {
public:
    /** Validates and sorts. Throws InvalidArgument on empty, negative, duplicate or zero-coefficient input. */
    Support(std::size_t n_vars, std::vector<IntVector> points,
            std::optional<std::vector<Rational>> coefficients = std::nullopt);

    std::size_t n_vars() const { return n_vars_; }
    const std::vector<IntVector>& points() const { return points_; }
    const std::optional<std::vector<Rational>>& coefficients() const { return coefficients_; }
    std::optional<Rational> coefficient_of(const IntVector& point) const;

private:
    std::size_t n_vars_;
    std::vector<IntVector> points_;
    std::optional<std::vector<Rational>> coefficients_;
};

/**
 * A face of the Newton polyhedron, recorded by the support points on it.
 * `recession` lists the coordinates j with e_j in the face's recession cone;
 * it is empty exactly for compact faces. `dim` is the affine dimension of the
 * support points on the face.
 */
struct NewtonFace {
    std::vector<IntVector> support_points;
    std::vector<std::size_t> recession;
    std::size_t dim = 0;
    bool compact = false;
    std::optional<IntVector> normal_witness;

    /** Dimension of the face itself, recession directions included. */
    std::size_t full_dim(std::size_t n_vars) const;

    friend bool operator==(const NewtonFace& a, const NewtonFace& b) {
        return a.support_points == b.support_points && a.recession == b.recession;
    }
};

struct FaceCut {
    Integer mu;
    NewtonFace face;
};

/**
 * mu(w) = min over the support of <w, m> and the face where it is attained.
 * The minimum over the whole polyhedron is attained at support points since
 * w >= 0. Throws InvalidArgument for negative or zero w.
 */
FaceCut mu_and_face(const Support& s, const IntVector& w);

/** Every compact face of the Newton polyhedron, sorted by (dim, points). */
std::vector<NewtonFace> newton_diagram(const Support& s);

/** A facet of the Newton polyhedron: <normal, m> >= mu with equality on the facet. */
struct NewtonFacet {
    IntVector normal;
    Integer mu;
};

/** Facets obtained by dualizing the cone over the polyhedron in one dimension higher. */
std::vector<NewtonFacet> newton_facets(const Support& s);

/** Support points that are vertices of the Newton polyhedron. */
std::vector<IntVector> newton_vertices(const Support& s);

/** First Varchenko subdivision: the normal fan of the Newton polyhedron inside the orthant. */
struct VarchenkoFan {
    Fan fan;
    std::vector<NewtonFace> face_of;  // parallel to fan.cones()

    const NewtonFace& face(const Cone& c) const;
};

VarchenkoFan first_varchenko_subdivision(const Support& s);

/** Compact faces read off an already computed Varchenko fan. */
std::vector<NewtonFace> newton_diagram(const VarchenkoFan& v);

struct PropertyRResult {
    bool holds = true;
    std::optional<IntVector> witness;
};

bool is_coordinate_ray(const IntVector& ray);
bool is_strictly_positive(const IntVector& v);

/** Every ray must be a coordinate ray or lie in the open orthant. */
PropertyRResult check_property_R(const Fan& f);
PropertyRResult check_property_R(const VarchenkoFan& v);

}  // namespace dualcx
