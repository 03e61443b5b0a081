#include "dualcx/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "dualcx/error.hpp"

namespace dualcx::io {

Json to_json(const Integer& x) {
    if (x.fits_slong_p()) return Json(x.get_si());
    return Json(x.get_str());
}

Json to_json(const IntVector& v) {
    Json arr = Json::array();
    for (const auto& x : v) arr.push_back(to_json(x));
    return arr;
}

Integer integer_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) == 0) return x;
    }
    throw InvalidArgument("field '" + field + "': expected an integer");
}

IntVector vector_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InvalidArgument("field '" + field + "': expected an array of integers");
    IntVector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(integer_from_json(j[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

Json parse_document(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object()) throw InvalidArgument("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end()) throw InvalidArgument(std::string("missing field '") + name + "'");
    return *it;
}

int int_field(const Json& j, const char* name, const std::string& where) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) throw InvalidArgument("field '" + where + name + "': expected an integer");
    return v.get<int>();
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw InvalidArgument("field '" + where + "': expected a rational string \"p/q\"");
    Rational q;
    const std::string text = j.get<std::string>();
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0)
        throw InvalidArgument("field '" + where + "': cannot parse rational \"" + text + "\"");
    q.canonicalize();
    return q;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

}  // namespace

Support support_from_json(const Json& j) {
    const Json& nv = field(j, "n_vars");
    if (!nv.is_number_integer() || nv.get<long>() < 1)
        throw InvalidArgument("field 'n_vars': expected a positive integer");
    const auto n = static_cast<std::size_t>(nv.get<long>());
    const Json& sup = field(j, "support");
    if (!sup.is_array()) throw InvalidArgument("field 'support': expected an array");
    std::vector<IntVector> points;
    for (std::size_t i = 0; i < sup.size(); ++i)
        points.push_back(vector_from_json(sup[i], "support[" + std::to_string(i) + "]"));
    std::optional<std::vector<Rational>> coeffs;
    if (auto it = j.find("coefficients"); it != j.end() && !it->is_null()) {
        if (!it->is_array()) throw InvalidArgument("field 'coefficients': expected an array");
        coeffs.emplace();
        for (std::size_t i = 0; i < it->size(); ++i)
            coeffs->push_back(rational_from_json((*it)[i], "coefficients[" + std::to_string(i) + "]"));
    }
    return Support(n, std::move(points), std::move(coeffs));
}

Support parse_support(const std::string& text) { return support_from_json(parse_document(text)); }

Json to_json(const Support& s) {
    Json j;
    j["n_vars"] = s.n_vars();
    Json pts = Json::array();
    for (const auto& p : s.points()) pts.push_back(to_json(p));
    j["support"] = pts;
    if (s.coefficients()) {
        Json cs = Json::array();
        for (const auto& c : *s.coefficients()) cs.push_back(rational_text(c));
        j["coefficients"] = cs;
    }
    return j;
}

Json to_json(const NewtonFace& f) {
    Json j;
    j["dim"] = f.dim;
    j["compact"] = f.compact;
    Json pts = Json::array();
    for (const auto& p : f.support_points) pts.push_back(to_json(p));
    j["points"] = pts;
    j["recession"] = f.recession;
    if (f.normal_witness) j["normal"] = to_json(*f.normal_witness);
    return j;
}

Json to_json(const Fan& f) {
    const auto rays = f.rays();
    std::map<IntVector, std::size_t> idx;
    for (std::size_t i = 0; i < rays.size(); ++i) idx.emplace(rays[i], i);
    Json j;
    j["ambient_dim"] = f.ambient_dim();
    Json rs = Json::array();
    for (const auto& r : rays) rs.push_back(to_json(r));
    j["rays"] = rs;
    Json cones = Json::array();
    for (const auto& c : f.cones()) {
        std::vector<std::size_t> members;
        for (const auto& g : c.generators()) members.push_back(idx.at(g));
        std::sort(members.begin(), members.end());
        cones.push_back({{"dim", c.dim()}, {"rays", members}});
    }
    j["cones"] = cones;
    j["maximal_cones"] = f.maximal_cones().size();
    return j;
}

Json to_json(const VarchenkoFan& v) {
    Json j = to_json(v.fan);
    for (std::size_t i = 0; i < v.fan.cones().size(); ++i) j["cones"][i]["face"] = to_json(v.face_of[i]);
    return j;
}

Json to_json(const HomologyProfile& p) {
    Json j;
    j["reduced"] = p.reduced;
    j["betti"] = p.betti;
    Json t = Json::array();
    for (const auto& degree : p.torsion) {
        Json d = Json::array();
        for (const auto& x : degree) d.push_back(to_json(x));
        t.push_back(d);
    }
    j["torsion"] = t;
    j["euler"] = p.euler;
    return j;
}

Json to_json(const DualComplex& c) {
    std::vector<const DualVertex*> vs;
    for (const auto& v : c.vertices) vs.push_back(&v);
    std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::vector<const DualCell*> cs;
    for (const auto& cell : c.cells) cs.push_back(&cell);
    std::sort(cs.begin(), cs.end(), [](auto* a, auto* b) {
        return std::tie(a->dim, a->verts, a->copy) < std::tie(b->dim, b->verts, b->copy);
    });

    Json vertices = Json::array();
    for (const auto* v : vs) {
        Json jv;
        jv["id"] = v->id;
        if (v->ray) jv["ray"] = to_json(*v->ray);
        vertices.push_back(jv);
    }
    Json cells = Json::array();
    for (const auto* cell : cs)
        cells.push_back({{"id", cell->id}, {"dim", cell->dim}, {"verts", cell->verts}, {"copy", cell->copy}});
    Json j;
    j["vertices"] = vertices;
    j["cells"] = cells;
    return j;
}

std::string emit_json(const DualComplex& c) { return to_json(c).dump(); }

std::string emit_dot(const DualComplex& c) {
    std::vector<const DualVertex*> vs;
    for (const auto& v : c.vertices) vs.push_back(&v);
    std::sort(vs.begin(), vs.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::vector<const DualCell*> cs;
    for (const auto& cell : c.cells) cs.push_back(&cell);
    std::sort(cs.begin(), cs.end(), [](auto* a, auto* b) {
        return std::tie(a->dim, a->verts, a->copy) < std::tie(b->dim, b->verts, b->copy);
    });

    std::ostringstream os;
    os << "graph dual_complex {\n";
    for (const auto* v : vs) {
        os << "  v" << v->id;
        if (v->ray) os << " [label=\"" << to_string(*v->ray) << "\"]";
        os << ";\n";
    }
    for (const auto* cell : cs)
        if (cell->dim == 1) os << "  v" << cell->verts[0] << " -- v" << cell->verts[1] << ";\n";
    for (const auto* cell : cs) {
        if (cell->dim < 2) continue;
        os << "  // " << cell->dim << "-cell";
        for (int v : cell->verts) os << " v" << v;
        os << " copy " << cell->copy << "\n";
    }
    os << "}\n";
    return os.str();
}

DualComplex complex_from_json(const Json& j) {
    const Json& jv = field(j, "vertices");
    const Json& jc = field(j, "cells");
    if (!jv.is_array() || !jc.is_array()) throw InvalidArgument("'vertices' and 'cells' must be arrays");

    DualComplex c;
    for (std::size_t i = 0; i < jv.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "].";
        DualVertex v;
        v.id = int_field(jv[i], "id", where);
        if (auto it = jv[i].find("ray"); it != jv[i].end() && !it->is_null())
            v.ray = vector_from_json(*it, where + "ray");
        c.vertices.push_back(std::move(v));
    }
    std::sort(c.vertices.begin(), c.vertices.end(),
              [](const DualVertex& a, const DualVertex& b) { return a.id < b.id; });

    int next_id = 0;
    for (std::size_t i = 0; i < jc.size(); ++i) {
        const std::string where = "cells[" + std::to_string(i) + "].";
        DualCell cell;
        cell.id = int_field(jc[i], "id", where);
        cell.dim = int_field(jc[i], "dim", where);
        const Json& verts = field(jc[i], "verts");
        if (!verts.is_array()) throw InvalidArgument("field '" + where + "verts': expected an array");
        for (const auto& v : verts) {
            if (!v.is_number_integer()) throw InvalidArgument("field '" + where + "verts': expected integers");
            cell.verts.push_back(v.get<int>());
        }
        cell.copy = jc[i].contains("copy") ? int_field(jc[i], "copy", where) : 1;
        next_id = std::max(next_id, cell.id + 1);
        c.cells.push_back(std::move(cell));
    }

    std::set<std::vector<int>> tuples;
    for (const auto& cell : c.cells) tuples.insert(cell.verts);
    for (const auto& v : c.vertices)
        if (!tuples.count({v.id})) c.cells.push_back({next_id++, 0, {v.id}, 1, {}});

    std::map<std::pair<std::vector<int>, int>, int> ids;
    for (const auto& cell : c.cells) ids.emplace(std::make_pair(cell.verts, cell.copy), cell.id);
    c.simplicial = true;
    for (auto& cell : c.cells) {
        if (cell.copy != 1) c.simplicial = false;
        if (cell.dim < 1 || cell.verts.size() != static_cast<std::size_t>(cell.dim + 1)) continue;
        for (std::size_t i = 0; i < cell.verts.size(); ++i) {
            std::vector<int> facet;
            for (std::size_t k = 0; k < cell.verts.size(); ++k)
                if (k != i) facet.push_back(cell.verts[k]);
            auto it = ids.find({facet, 1});
            cell.boundary.push_back(it == ids.end() ? -1 : it->second);
        }
    }
    const auto report = validate_complex(c);
    if (!report.valid) throw InvalidArgument("invalid complex: " + report.violations.front());
    return c;
}

DualComplex parse_complex(const std::string& text) { return complex_from_json(parse_document(text)); }

Json to_json(const DeletionScript& s) { return Json{{"deletions", s.deletions}}; }

DeletionScript script_from_json(const Json& j) {
    const Json& d = field(j, "deletions");
    if (!d.is_array()) throw InvalidArgument("field 'deletions': expected an array");
    DeletionScript s;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!d[i].is_array()) throw InvalidArgument("field 'deletions[" + std::to_string(i) + "]': expected an array");
        std::vector<int> tuple;
        for (const auto& v : d[i]) {
            if (!v.is_number_integer())
                throw InvalidArgument("field 'deletions[" + std::to_string(i) + "]': expected integers");
            tuple.push_back(v.get<int>());
        }
        s.deletions.push_back(std::move(tuple));
    }
    return s;
}

}  // namespace dualcx::io
