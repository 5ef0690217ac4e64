#include "dtop/serialization.hpp"

#include <fstream>
#include <sstream>

#include "dtop/error.hpp"

namespace dtop::io {

namespace {

std::uint32_t parse_dimension(const std::string& key) {
    if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("dimension key '" + key + "' is not a decimal number");
    return static_cast<std::uint32_t>(std::stoul(key));
}

std::pair<unsigned, unsigned> parse_face_key(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 2 != key.size() || (key.back() != '0' && key.back() != '1') ||
        key.substr(0, comma).find_first_not_of("0123456789") != std::string::npos || comma > 6)
        throw InputError("face key '" + key + "' is not of the form \"<i>,<0|1>\"");
    return {static_cast<unsigned>(std::stoul(key.substr(0, comma))), static_cast<unsigned>(key.back() - '0')};
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
    return j.at(name);
}

std::string as_string(const Json& j, const std::string& what) {
    if (!j.is_string()) throw InputError(what + " must be a string");
    return j.get<std::string>();
}

Json path_json(const PrecubicalSet& x, const EdgePath& p) {
    Json edges = Json::array();
    for (const Cell e : p.edges) edges.push_back(x.name(e));
    return Json{{"start", x.name(p.start)}, {"edges", std::move(edges)}};
}

}  // namespace

Json to_json(const PrecubicalSet& x) {
    Json cells = Json::object();
    Json faces = Json::object();
    for (std::uint32_t d = 0; d < x.levels(); ++d) {
        Json ids = Json::array();
        for (const Cell c : x.cells(d)) {
            ids.push_back(x.name(c));
            if (d == 0) continue;
            Json f = Json::object();
            for (unsigned i = 1; i <= d; ++i)
                for (unsigned a = 0; a < 2; ++a)
                    if (auto t = x.try_face(c, i, a))
                        f[std::to_string(i) + "," + std::to_string(a)] = x.name(*t);
            faces[x.name(c)] = std::move(f);
        }
        cells[std::to_string(d)] = std::move(ids);
    }
    return Json{{"cells", std::move(cells)}, {"faces", std::move(faces)}};
}

PrecubicalSet complex_from_json_unchecked(const Json& j) {
    const Json& cells = field(j, "cells");
    if (!cells.is_object()) throw InputError("'cells' must be an object");
    PrecubicalSet::Builder b;
    for (const auto& [key, ids] : cells.items()) {
        const std::uint32_t dim = parse_dimension(key);
        if (!ids.is_array()) throw InputError("'cells." + key + "' must be an array");
        for (const auto& id : ids) b.add_cell(dim, as_string(id, "cell id"));
    }
    if (j.contains("faces")) {
        const Json& faces = j.at("faces");
        if (!faces.is_object()) throw InputError("'faces' must be an object");
        for (const auto& [id, entries] : faces.items()) {
            if (!entries.is_object()) throw InputError("faces of '" + id + "' must be an object");
            for (const auto& [key, target] : entries.items()) {
                const auto [i, a] = parse_face_key(key);
                b.set_face(id, i, a, as_string(target, "face target"));
            }
        }
    }
    return b.build();
}

PrecubicalSet complex_from_json(const Json& j) {
    PrecubicalSet x = complex_from_json_unchecked(j);
    const auto report = validate(x);
    if (!report.empty()) {
        std::ostringstream msg;
        msg << "invalid precubical set (" << report.size() << " violations); first: " << report.front().cell << ": "
            << report.front().message;
        throw InputError(msg.str());
    }
    return x;
}

Json to_json(const PcMorphism& f) {
    Json map = Json::object();
    for (const Cell c : f.source().all_cells())
        if (auto t = f.try_apply(c)) map[f.source().name(c)] = f.target().name(*t);
    return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"map", std::move(map)}};
}

PcMorphism morphism_from_json(const Json& j, const std::filesystem::path& base_dir) {
    auto load = [&](const char* name) {
        const Json& side = field(j, name);
        if (side.is_string()) return share(complex_from_json(read_json_file(base_dir / side.get<std::string>())));
        return share(complex_from_json(side));
    };
    ComplexPtr source = load("source");
    ComplexPtr target = load("target");
    const Json& map = field(j, "map");
    if (!map.is_object()) throw InputError("'map' must be an object");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [from, to] : map.items()) pairs.emplace_back(from, as_string(to, "map target"));
    PcMorphism f = morphism_from_names(source, target, pairs);
    const auto problems = f.check();
    if (!problems.empty()) throw InputError("invalid morphism: " + problems.front());
    return f;
}

Json to_json(const PrecubicalSet& x, const EdgePath& p) { return path_json(x, p); }

EdgePath path_from_json(const PrecubicalSet& x, const Json& j) {
    EdgePath p{x.at(as_string(field(j, "start"), "'start'")), {}};
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) throw InputError("'edges' must be an array");
    for (const auto& e : edges) p.edges.push_back(x.at(as_string(e, "edge id")));
    try {
        check_path(x, p);
    } catch (const InvalidPath& e) {
        throw InputError(e.what());
    }
    return p;
}

Json violations_to_json(const std::vector<Violation>& report) {
    Json out = Json::array();
    for (const auto& v : report) {
        Json item{{"kind", std::string(to_string(v.kind))}, {"cell", v.cell}, {"message", v.message}};
        if (v.kind == ViolationKind::kCubicalIdentity) {
            item["i"] = v.i;
            item["j"] = v.j;
            item["alpha"] = v.alpha;
            item["beta"] = v.beta;
        } else {
            item["direction"] = v.i;
            item["sign"] = v.alpha;
        }
        out.push_back(std::move(item));
    }
    return out;
}

Json classes_to_json(const PrecubicalSet& x, Cell a, Cell b, const std::vector<DihomotopyClass>& found) {
    Json list = Json::array();
    for (const auto& c : found) list.push_back(Json{{"canonical", path_json(x, c.canonical)}, {"size", c.size()}});
    return Json{{"endpoints", Json::array({x.name(a), x.name(b)})}, {"count", found.size()}, {"classes", std::move(list)}};
}

Json to_json(const PcMorphism& p, const DicoveringVerdict& verdict) {
    Json out{{"dicovering", verdict.is_dicovering}};
    if (verdict.witness) {
        const auto& w = *verdict.witness;
        if (w.kind == LiftWitness::Kind::kEdge)
            out["witness"] = Json{{"kind", "edge"},
                                  {"edge", p.target().name(w.base)},
                                  {"vertex", p.source().name(w.corner)},
                                  {"lifts", w.lifts}};
        else
            out["witness"] = Json{{"kind", "cell"},
                                  {"cell", p.target().name(w.base)},
                                  {"dimension", w.base.dim},
                                  {"corner", p.source().name(w.corner)},
                                  {"lifts", w.lifts}};
    }
    return out;
}

Json to_json(const Unfolding& u) {
    Json out = to_json(*u.total);
    out["projection"] = to_json(u.projection);
    Json states = Json::object();
    for (const Cell v : u.total->vertices()) {
        const auto& s = u.states[v.index];
        states[u.total->name(v)] = Json{{"class_canonical", path_json(u.projection.target(), s.canonical)},
                                        {"class_size", s.class_size},
                                        {"length", s.level}};
    }
    out["states"] = std::move(states);
    out["complete"] = u.complete;
    out["depth"] = u.depth;
    return out;
}

Json to_json(const UniversalityReport& report, std::span<const PcMorphism> catalog) {
    Json entries = Json::array();
    for (std::size_t k = 0; k < report.entries.size(); ++k) {
        const auto& e = report.entries[k];
        const PcMorphism& p = catalog[k];
        Json item{{"label", e.label}, {"verdict", to_json(p, e.verdict)}, {"skipped", e.skipped}, {"pass", e.pass}};
        Json outcomes = Json::array();
        for (const auto& o : e.outcomes) {
            static const char* names[] = {"unique", "none", "ambiguous", "resource-limit"};
            Json oj{{"basepoint_lift", p.source().name(o.basepoint_lift)},
                    {"result", names[static_cast<int>(o.result)]}};
            if (o.phi) {
                Json map = Json::object();
                for (const Cell c : o.phi->source().all_cells())
                    map[o.phi->source().name(c)] = o.phi->target().name((*o.phi)(c));
                oj["phi"] = std::move(map);
            }
            if (!o.detail.empty()) oj["detail"] = o.detail;
            outcomes.push_back(std::move(oj));
        }
        item["outcomes"] = std::move(outcomes);
        entries.push_back(std::move(item));
    }
    return Json{{"depth", report.depth},
                {"unfolding_complete", report.unfolding_complete},
                {"entries", std::move(entries)},
                {"pass", report.pass}};
}

Json read_json_file(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw InputError("cannot open '" + file.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("'" + file.string() + "': " + e.what());
    }
}

}  // namespace dtop::io
