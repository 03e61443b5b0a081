#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dualcx/lattice.hpp"

namespace dualcx {

/**
 * H-representation of a cone: x with <h, x> >= 0 for every inequality h and
 * <e, x> = 0 for every equation e. For a cone that is not full-dimensional
 * the inequalities are its facet normals taken inside the cone's linear span.
 */
struct HRep {
    std::vector<IntVector> inequalities;
    std::vector<IntVector> equations;
};

/**
 * Extreme rays of the pointed cone {x : A x >= 0, E x = 0} by the double
 * description method. Throws NotPointed if the cone contains a line.
 * Rays are primitive and sorted.
 */
std::vector<IntVector> extreme_rays(std::size_t ambient,
                                    const std::vector<IntVector>& inequalities,
                                    const std::vector<IntVector>& equations = {});

/**
 * Facet normals of the pointed cone spanned by `generators`, plus a basis of
 * the orthogonal complement of its span as equations. Throws NotPointed.
 */
HRep dualize_cone(std::size_t ambient, const std::vector<IntVector>& generators);

/**
 * Rational polyhedral pointed cone holding both representations.
 * Two cones are equal when their sorted primitive extreme rays agree.
 */
class Cone {
public:
    Cone() = default;

    static Cone from_generators(std::size_t ambient, const std::vector<IntVector>& generators);
    static Cone from_inequalities(std::size_t ambient, const std::vector<IntVector>& inequalities,
                                  const std::vector<IntVector>& equations = {});
    static Cone zero(std::size_t ambient) { return from_generators(ambient, {}); }
    static Cone orthant(std::size_t ambient);

    const std::vector<IntVector>& generators() const { return generators_; }
    const std::vector<IntVector>& inequalities() const { return hrep_.inequalities; }
    const std::vector<IntVector>& equations() const { return hrep_.equations; }
    std::size_t dim() const { return dim_; }
    std::size_t ambient_dim() const { return ambient_; }

    bool is_simplicial() const { return generators_.size() == dim_; }
    bool contains(const IntVector& p) const;
    bool contains_in_relint(const IntVector& p) const;
    bool has_generator(const IntVector& ray) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_ == b.ambient_ && a.generators_ == b.generators_;
    }
    friend bool operator<(const Cone& a, const Cone& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
        return a.generators_ < b.generators_;
    }

private:
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
    std::vector<IntVector> generators_;
    HRep hrep_;
};

/** All faces of `c`, from the zero cone up to `c` itself, sorted and without duplicates. */
std::vector<Cone> cone_faces(const Cone& c);

/** Facets of `c` (faces of codimension one). */
std::vector<Cone> cone_facets(const Cone& c);

Cone intersect_cones(const Cone& a, const Cone& b);

/** Sum of the generators; lies in the relative interior. Throws for the zero cone. */
IntVector relint_sample(const Cone& c);

/** Smallest face of `c` containing the point `p` (which must lie in `c`). */
Cone minimal_face_containing(const Cone& c, const IntVector& p);

bool is_face_of(const Cone& candidate, const Cone& c);

/**
 * A finite set of cones closed under faces. Cones are kept sorted by
 * (dimension, generators).
 */
class Fan {
public:
    Fan() = default;
    explicit Fan(std::size_t ambient, bool support_is_orthant = false)
        : ambient_(ambient), support_is_orthant_(support_is_orthant) {}

    /** Closes the given cones under faces. */
    static Fan from_cones(std::size_t ambient, const std::vector<Cone>& cones,
                          bool support_is_orthant = false);

    /** Inserts `c` without adding its faces; returns false if already present. */
    bool insert(const Cone& c);

    std::size_t ambient_dim() const { return ambient_; }
    bool support_is_orthant() const { return support_is_orthant_; }
    const std::vector<Cone>& cones() const { return cones_; }
    std::optional<std::size_t> find(const Cone& c) const;
    std::optional<std::size_t> find(const std::vector<IntVector>& generators) const;

    std::vector<IntVector> rays() const;
    std::vector<Cone> maximal_cones() const;
    std::size_t dim() const;

private:
    std::size_t ambient_ = 0;
    bool support_is_orthant_ = false;
    std::vector<Cone> cones_;
    std::map<std::vector<IntVector>, std::size_t> index_;

    void reindex();
};

/** The cone of `f` whose relative interior contains relint_sample(c). */
const Cone& carrier_cone(const Fan& f, const Cone& c);

struct FanReport {
    bool valid = true;
    std::vector<std::string> violations;
    /** Indices into Fan::cones() of the first offending pair, when the intersection axiom fails. */
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/**
 * Checks the intersection axiom on maximal cones, then closure under facets,
 * then (when flagged) that the support is the non-negative orthant.
 * Orthant coverage is sampled with a fixed seed so reports are reproducible.
 */
FanReport validate_fan(const Fan& f);

enum class RayOrder { lex, reverse };

std::vector<IntVector> ordered_rays(const Fan& f, RayOrder order);

/**
 * Pulling triangulation: a non-simplicial cone is split into the joins of its
 * first ray (in `ray_order`) with the triangulated facets not containing it.
 * Restricting to a face uses the same order, so the pieces still form a fan.
 * No rays are added.
 */
Fan triangulate_fan(const Fan& f, const std::vector<IntVector>& ray_order);
Fan triangulate_fan(const Fan& f, RayOrder order = RayOrder::lex);

/** True iff every cone of `fine` lies inside some cone of `coarse`. */
bool refines(const Fan& fine, const Fan& coarse);

}  // namespace dualcx
