#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualcx/dual_complex.hpp"
#include "dualcx/io.hpp"
#include "dualcx/newton.hpp"
#include "dualcx/polyhedral.hpp"
#include "dualcx/topology.hpp"

namespace dualcx {

struct PipelineOptions {
    bool coefficient_aware = false;
    RayOrder ray_order = RayOrder::lex;
};

/** Process exit codes shared by the CLI and the acceptance suite. */
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_property_r = 2,
    exit_invariant = 3,
};

/**
 * Every stage of the Newton polyhedron -> dual complex pipeline. When
 * property (R) fails the later stages stay empty.
 */
struct PipelineReport {
    Support input;
    std::vector<NewtonFace> diagram;
    VarchenkoFan sigma1;
    PropertyRResult property_r;
    std::optional<Fan> sigma2;
    std::optional<DualComplex> complex;
    std::optional<HomologyProfile> reduced;
    std::optional<HomologyProfile> unreduced;
    std::vector<std::string> warnings;

    int exit_code() const { return property_r.holds ? exit_ok : exit_property_r; }
};

/**
 * parse -> diagram -> first Varchenko subdivision -> (R) gate -> pulling
 * triangulation -> dual complex -> homology. Each stage is validated before
 * the next runs; a failed check throws InvariantViolation.
 */
PipelineReport run_pipeline(const Support& s, const PipelineOptions& options = {});

io::Json to_json(const PipelineReport& r);

struct TransformResult {
    DualComplex before;
    DualComplex after;
    HomologyProfile before_homology;
    HomologyProfile after_homology;
    bool homology_preserved = false;
};

/**
 * Applies a transform spec to a complex:
 *   {"mode":"case1","target":id}
 *   {"mode":"case2","base":id,"touched":[id,...]}
 *   {"mode":"delete","deletions":[[v,...],...]}
 * Homology is compared in reduced form.
 */
TransformResult run_transform(const DualComplex& c, const io::Json& spec);

io::Json to_json(const TransformResult& t);

}  // namespace dualcx
