#include "dualcx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include <CLI11.hpp>

#include "dualcx/error.hpp"
#include "dualcx/io.hpp"
#include "dualcx/pipeline.hpp"

namespace dualcx {

namespace {

struct Flags {
    std::string input;
    std::string output;
    std::string spec;
    std::string emit = "json";
    std::string ray_order = "lex";
    bool reduced = false;
    bool coeff_aware = false;
    int vertices = 0;
    int max_dim = 0;
};

RayOrder parse_order(const std::string& s) { return s == "reverse" ? RayOrder::reverse : RayOrder::lex; }

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw InvalidArgument("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void write_json(Output& o, const io::Json& j) { o.stream() << j.dump(2) << "\n"; }

io::Json r_failure_json(const PropertyRResult& r) {
    return {{"error", "property (R) violated"},
            {"holds", false},
            {"witness", r.witness ? io::to_json(*r.witness) : io::Json(nullptr)}};
}

int cmd_newton(const Flags& f, Output& o) {
    const Support s = io::parse_support(io::read_file(f.input));
    io::Json faces = io::Json::array();
    std::vector<std::size_t> by_dim;
    for (const auto& face : newton_diagram(s)) {
        if (by_dim.size() <= face.dim) by_dim.resize(face.dim + 1, 0);
        ++by_dim[face.dim];
        faces.push_back(io::to_json(face));
    }
    write_json(o, {{"faces", faces}, {"faces_by_dim", by_dim}});
    return exit_ok;
}

int cmd_fan(const Flags& f, Output& o) {
    const Support s = io::parse_support(io::read_file(f.input));
    const VarchenkoFan v = first_varchenko_subdivision(s);
    io::Json j = io::to_json(v);
    j["valid"] = validate_fan(v.fan).valid;
    write_json(o, j);
    return exit_ok;
}

int cmd_check_r(const Flags& f, Output& o) {
    const Support s = io::parse_support(io::read_file(f.input));
    const PropertyRResult r = check_property_R(first_varchenko_subdivision(s));
    if (!r.holds) {
        write_json(o, r_failure_json(r));
        return exit_property_r;
    }
    write_json(o, {{"holds", true}, {"witness", nullptr}});
    return exit_ok;
}

int cmd_triangulate(const Flags& f, Output& o) {
    const Support s = io::parse_support(io::read_file(f.input));
    const VarchenkoFan v = first_varchenko_subdivision(s);
    const Fan t = triangulate_fan(v.fan, parse_order(f.ray_order));
    io::Json j = io::to_json(t);
    j["valid"] = validate_fan(t).valid;
    write_json(o, j);
    return exit_ok;
}

int cmd_complex(const Flags& f, Output& o) {
    const Support s = io::parse_support(io::read_file(f.input));
    const PipelineReport r = run_pipeline(s, {f.coeff_aware, parse_order(f.ray_order)});
    if (!r.property_r.holds) {
        write_json(o, r_failure_json(r.property_r));
        return exit_property_r;
    }
    if (f.emit == "dot") o.stream() << io::emit_dot(*r.complex);
    else o.stream() << io::emit_json(*r.complex) << "\n";
    return exit_ok;
}

int cmd_homology(const Flags& f, Output& o) {
    const DualComplex c = io::parse_complex(io::read_file(f.input));
    write_json(o, io::to_json(homology(c, f.reduced)));
    return exit_ok;
}

int cmd_pipeline(const Flags& f, Output& o) {
    const Support s = io::parse_support(io::read_file(f.input));
    const PipelineReport r = run_pipeline(s, {f.coeff_aware, parse_order(f.ray_order)});
    write_json(o, to_json(r));
    return r.exit_code();
}

int cmd_transform(const Flags& f, Output& o) {
    const DualComplex c = io::parse_complex(io::read_file(f.input));
    const io::Json spec = io::parse_document(io::read_file(f.spec));
    write_json(o, to_json(run_transform(c, spec)));
    return exit_ok;
}

int cmd_realize(const Flags& f, Output& o) {
    const DualComplex k = io::parse_complex(io::read_file(f.input));
    const DeletionScript script = realize_complex(k, f.vertices, f.max_dim);
    const DualComplex replay = apply_deletions(full_complex(f.vertices, f.max_dim), script);
    io::Json j = io::to_json(script);
    j["replay_matches"] = cell_keys(replay) == cell_keys(k);
    write_json(o, j);
    return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dual complexes of toric partial resolutions of hypersurface singularities", "dualcx"};
    app.require_subcommand(1);
    Flags flags;

    const std::map<std::string, std::function<int(const Flags&, Output&)>> handlers{
        {"newton", cmd_newton},       {"fan", cmd_fan},
        {"check-r", cmd_check_r},     {"triangulate", cmd_triangulate},
        {"complex", cmd_complex},     {"homology", cmd_homology},
        {"pipeline", cmd_pipeline},   {"transform", cmd_transform},
        {"realize", cmd_realize},
    };
    const std::map<std::string, std::string> help{
        {"newton", "compact faces of the Newton polyhedron"},
        {"fan", "first Varchenko subdivision"},
        {"check-r", "test property (R); exit 2 with a witness ray on failure"},
        {"triangulate", "pulling triangulation of the Varchenko fan"},
        {"complex", "dual complex of the partial resolution"},
        {"homology", "integral homology of a complex file"},
        {"pipeline", "full report from support to homology"},
        {"transform", "apply a blow-up or deletion spec to a complex"},
        {"realize", "deletion script producing a complex from the full complex"},
    };

    for (const auto& [name, description] : help) {
        CLI::App* sub = app.add_subcommand(name, description);
        sub->add_option("--input,-i", flags.input, "input JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--output,-o", flags.output, "write output here instead of stdout");
        sub->add_flag("--reduced", flags.reduced, "reduced homology");
        sub->add_flag("--coeff-aware", flags.coeff_aware, "count edge roots from the coefficients");
        sub->add_option("--emit", flags.emit, "complex output format")->check(CLI::IsMember({"json", "dot"}));
        sub->add_option("--ray-order", flags.ray_order, "triangulation ray order")
            ->check(CLI::IsMember({"lex", "reverse"}));
        if (name == "transform") sub->add_option("--spec", flags.spec, "transform spec JSON")->required();
        if (name == "realize") {
            sub->add_option("--vertices,-N", flags.vertices, "number of vertices of the full complex")->required();
            sub->add_option("--max-dim,-d", flags.max_dim, "dimension bound of the full complex")->required();
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    try {
        Output o(flags.output, out);
        return handlers.at(name)(flags, o);
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return exit_invariant;
    } catch (const PropertyRViolation& e) {
        err << e.what() << ": witness " << to_string(e.witness()) << "\n";
        return exit_property_r;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace dualcx
