#include "dualcx/pipeline.hpp"

#include "dualcx/error.hpp"

namespace dualcx {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InvariantViolation(what);
}

void require_fan(const Fan& f, const std::string& stage) {
    const FanReport r = validate_fan(f);
    require(r.valid, stage + ": " + (r.violations.empty() ? std::string("invalid fan") : r.violations.front()));
}

void require_profile(const HomologyProfile& p, const DualComplex& c) {
    long alternating = 0;
    for (std::size_t k = 0; k < p.betti.size(); ++k) alternating += (k % 2 == 0 ? 1 : -1) * p.betti[k];
    const long expected = (p.reduced && !c.cells.empty()) ? p.euler - 1 : p.euler;
    require(alternating == expected, "Euler characteristic disagrees with Betti numbers");
}

}  // namespace

PipelineReport run_pipeline(const Support& s, const PipelineOptions& options) {
    PipelineReport r{s, {}, {}, {}, {}, {}, {}, {}, {}};
    if (!s.coefficients()) r.warnings.push_back("coefficients absent: genericity assumed");

    r.sigma1 = first_varchenko_subdivision(s);
    require_fan(r.sigma1.fan, "first Varchenko subdivision");
    r.diagram = newton_diagram(r.sigma1);
    r.property_r = check_property_R(r.sigma1);
    if (!r.property_r.holds) return r;

    Fan sigma2 = triangulate_fan(r.sigma1.fan, ordered_rays(r.sigma1.fan, options.ray_order));
    require_fan(sigma2, "simplicial refinement");
    for (const auto& c : sigma2.cones()) require(c.is_simplicial(), "simplicial refinement has a non-simplicial cone");
    require(sigma2.rays() == r.sigma1.fan.rays(), "simplicial refinement changed the rays");
    require(refines(sigma2, r.sigma1.fan), "simplicial refinement does not refine the Varchenko fan");

    DualComplex complex =
        build_dual_complex(sigma2, r.sigma1, s, BuildOptions{options.coefficient_aware}, &r.warnings);
    const ComplexReport cr = validate_complex(complex);
    require(cr.valid, "dual complex: " + (cr.violations.empty() ? std::string() : cr.violations.front()));

    r.reduced = homology(complex, true);
    r.unreduced = homology(complex, false);
    require_profile(*r.reduced, complex);
    require_profile(*r.unreduced, complex);
    r.sigma2 = std::move(sigma2);
    r.complex = std::move(complex);
    return r;
}

io::Json to_json(const PipelineReport& r) {
    using io::Json;
    Json j;
    j["input"] = io::to_json(r.input);

    Json diagram;
    std::vector<std::size_t> by_dim;
    Json faces = Json::array();
    for (const auto& f : r.diagram) {
        if (by_dim.size() <= f.dim) by_dim.resize(f.dim + 1, 0);
        ++by_dim[f.dim];
        faces.push_back(io::to_json(f));
    }
    diagram["faces_by_dim"] = by_dim;
    diagram["faces"] = faces;
    j["newton_diagram"] = diagram;

    auto summary = [](const Fan& f) {
        Json s;
        Json rays = Json::array();
        for (const auto& ray : f.rays()) rays.push_back(io::to_json(ray));
        s["rays"] = rays;
        s["cones"] = f.cones().size();
        s["maximal_cones"] = f.maximal_cones().size();
        return s;
    };
    j["sigma1"] = summary(r.sigma1.fan);
    j["property_r"] = {{"holds", r.property_r.holds},
                       {"witness", r.property_r.witness ? io::to_json(*r.property_r.witness) : Json(nullptr)}};
    if (r.sigma2) j["sigma2"] = summary(*r.sigma2);
    if (r.complex) {
        j["complex"] = io::to_json(*r.complex);
        j["f_vector"] = r.complex->f_vector();
    }
    if (r.reduced && r.unreduced)
        j["homology"] = {{"reduced", io::to_json(*r.reduced)}, {"unreduced", io::to_json(*r.unreduced)}};
    j["warnings"] = r.warnings;
    return j;
}

TransformResult run_transform(const DualComplex& c, const io::Json& spec) {
    if (!spec.is_object() || !spec.contains("mode") || !spec["mode"].is_string())
        throw InvalidArgument("transform spec needs a string field 'mode'");
    const std::string mode = spec["mode"].get<std::string>();
    auto int_of = [&](const char* name) {
        if (!spec.contains(name) || !spec[name].is_number_integer())
            throw InvalidArgument(std::string("transform spec needs an integer field '") + name + "'");
        return spec[name].get<int>();
    };

    TransformResult t{c, {}, {}, {}, false};
    if (mode == "case1") {
        BlowupCenterSpec b;
        b.mode = BlowupMode::case1;
        b.target_cell = int_of("target");
        t.after = blowup_case1(c, b);
    } else if (mode == "case2") {
        BlowupCenterSpec b;
        b.mode = BlowupMode::case2;
        b.base_cell = int_of("base");
        if (!spec.contains("touched") || !spec["touched"].is_array())
            throw InvalidArgument("transform spec needs an array field 'touched'");
        for (const auto& id : spec["touched"]) {
            if (!id.is_number_integer()) throw InvalidArgument("field 'touched': expected integers");
            b.touched_cells.push_back(id.get<int>());
        }
        t.after = blowup_case2(c, b);
    } else if (mode == "delete") {
        t.after = apply_deletions(c, io::script_from_json(spec));
    } else {
        throw InvalidArgument("unknown transform mode '" + mode + "'");
    }
    t.before_homology = homology(t.before, true);
    t.after_homology = homology(t.after, true);
    t.homology_preserved = same_homology(t.before_homology, t.after_homology);
    return t;
}

io::Json to_json(const TransformResult& t) {
    io::Json j;
    j["before"] = {{"complex", io::to_json(t.before)}, {"homology", io::to_json(t.before_homology)}};
    j["after"] = {{"complex", io::to_json(t.after)}, {"homology", io::to_json(t.after_homology)}};
    j["homology_preserved"] = t.homology_preserved;
    j["verdict"] = t.homology_preserved ? "homology preserved" : "homology changed";
    return j;
}

}  // namespace dualcx
