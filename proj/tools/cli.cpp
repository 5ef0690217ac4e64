#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "dtop/constructions.hpp"
#include "dtop/dicovering.hpp"
#include "dtop/dihomotopy.hpp"
#include "dtop/dipath.hpp"
#include "dtop/error.hpp"
#include "dtop/pvlang.hpp"
#include "dtop/serialization.hpp"
#include "dtop/unfolding.hpp"

namespace dtop::cli {

namespace {

using io::Json;

constexpr std::size_t kDefaultDepth = 16;
constexpr std::size_t kDefaultBudget = 1'000'000;

ComplexPtr load_complex(const std::string& file) { return share(io::complex_from_json(io::read_json_file(file))); }

Cell vertex(const PrecubicalSet& x, const std::string& name) {
    const Cell c = x.at(name);
    if (c.dim != 0) throw InputError("'" + name + "' is not a vertex");
    return c;
}

// Morphism file, or an unfolding file whose "projection" is used.
PcMorphism load_morphism(const std::string& file) {
    const Json j = io::read_json_file(file);
    const auto dir = std::filesystem::path(file).parent_path();
    if (j.is_object() && j.contains("projection") && !j.contains("map")) return io::morphism_from_json(j.at("projection"), dir);
    return io::morphism_from_json(j, dir);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

struct Options {
    std::string file;
    std::string from;
    std::string to;
    std::size_t max_len = 0;
    std::string base;
    std::size_t depth = kDefaultDepth;
    std::size_t budget = kDefaultBudget;
    std::string out_file;
    std::vector<std::string> against;
    bool deadlocks = false;
    std::string final_vertex;
};

int cmd_validate(const Options& o, std::ostream& out) {
    const PrecubicalSet x = io::complex_from_json_unchecked(io::read_json_file(o.file));
    const auto report = validate(x);
    emit(out, Json{{"valid", report.empty()}, {"violations", io::violations_to_json(report)}});
    return report.empty() ? kOk : kNegative;
}

int cmd_paths(const Options& o, std::ostream& out) {
    const auto x = load_complex(o.file);
    const Cell a = vertex(*x, o.from);
    const Cell b = vertex(*x, o.to);
    const auto paths = enumerate_paths(*x, a, b, o.max_len);
    Json list = Json::array();
    for (const auto& p : paths) list.push_back(io::to_json(*x, p));
    emit(out, Json{{"from", o.from},
                   {"to", o.to},
                   {"max_len", o.max_len},
                   {"saturated", length_bound_saturated(*x, a, b, o.max_len)},
                   {"count", paths.size()},
                   {"paths", std::move(list)}});
    return kOk;
}

int cmd_classes(const Options& o, std::ostream& out) {
    const auto x = load_complex(o.file);
    const Cell a = vertex(*x, o.from);
    const Cell b = vertex(*x, o.to);
    const auto found = classes(*x, a, b, o.max_len, o.budget);
    Json j = io::classes_to_json(*x, a, b, found);
    j["max_len"] = o.max_len;
    j["saturated"] = length_bound_saturated(*x, a, b, o.max_len);
    j["budget"] = o.budget;
    emit(out, j);
    return kOk;
}

int cmd_preorder(const Options& o, std::ostream& out) {
    const auto x = load_complex(o.file);
    const Preorder order = reachability_preorder(*x);
    Json carrier = Json::array();
    Json relation = Json::array();
    for (const Cell v : x->vertices()) carrier.push_back(x->name(v));
    for (const Cell v : x->vertices())
        for (const Cell w : x->vertices())
            if (order.related(v.index, w.index)) relation.push_back(Json::array({x->name(v), x->name(w)}));
    emit(out, Json{{"carrier", std::move(carrier)},
                   {"relation", std::move(relation)},
                   {"antisymmetric", order.is_antisymmetric()}});
    return kOk;
}

int cmd_unfold(const Options& o, std::ostream& out) {
    const auto x = load_complex(o.file);
    const Unfolding u = unfold(x, vertex(*x, o.base), o.depth, o.budget);
    Json j = io::to_json(u);
    j["budget"] = o.budget;
    if (o.out_file.empty()) {
        emit(out, j);
        return kOk;
    }
    std::ofstream file(o.out_file);
    if (!file) throw InputError("cannot write '" + o.out_file + "'");
    file << j.dump(2) << '\n';
    emit(out, Json{{"out", o.out_file},
                   {"vertices", u.total->size(0)},
                   {"cells", u.total->total_size()},
                   {"complete", u.complete},
                   {"depth", u.depth},
                   {"budget", o.budget}});
    return kOk;
}

int cmd_check_cover(const Options& o, std::ostream& out) {
    const PcMorphism p = load_morphism(o.file);
    CoverCheckOptions options;
    if (!o.base.empty()) options.basepoint = vertex(p.target(), o.base);
    const auto verdict = check_dicovering(p, options);
    emit(out, io::to_json(p, verdict));
    return verdict.is_dicovering ? kOk : kNegative;
}

int cmd_universal(const Options& o, std::ostream& out) {
    const auto x = load_complex(o.file);
    std::vector<PcMorphism> catalog;
    for (const auto& file : o.against) {
        PcMorphism p = load_morphism(file);
        if (!(p.target() == *x)) throw InputError("'" + file + "' does not project onto '" + o.file + "'");
        // Re-anchor on the loaded base so every entry shares one target object.
        catalog.emplace_back(p.source_ptr(), x, p.table());
    }
    const auto report = universal_property_suite(x, vertex(*x, o.base), o.depth, catalog, o.against, o.budget);
    Json j = io::to_json(report, catalog);
    j["budget"] = o.budget;
    emit(out, j);
    return report.pass ? kOk : kNegative;
}

int cmd_pv_compile(const Options& o, std::ostream& out) {
    std::ifstream in(o.file);
    if (!in) throw InputError("cannot open '" + o.file + "'");
    std::stringstream text;
    text << in.rdbuf();
    const pv::Program program = pv::parse(text.str());
    const pv::Compiled compiled = pv::build_complex(program);
    Json forbidden = Json::array();
    for (const auto& cell : compiled.forbidden.cells) forbidden.push_back(grid_cell_name(cell));
    Json j{{"program", pv::serialize(program)},
           {"complex", io::to_json(compiled.complex)},
           {"forbidden", std::move(forbidden)}};
    if (o.deadlocks) {
        const std::string final_name = o.final_vertex.empty() ? pv::final_vertex_name(program) : o.final_vertex;
        Json list = Json::array();
        for (const Cell v : pv::deadlocks(compiled.complex, vertex(compiled.complex, final_name)))
            list.push_back(compiled.complex.name(v));
        j["final"] = final_name;
        j["deadlocks"] = std::move(list);
    }
    emit(out, j);
    return kOk;
}

int cmd_factor_initial(const Options& o, std::ostream& out) {
    const auto x = load_complex(o.file);
    const auto f = factor_initial(x);
    emit(out, Json{{"middle", io::to_json(f.right.source())},
                   {"middle_empty", f.middle_empty},
                   {"left", io::to_json(f.left)},
                   {"right", io::to_json(f.right)}});
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Directed topology of finite precubical sets", "dtop"};
    app.require_subcommand(1);
    Options o;
    int (*handler)(const Options&, std::ostream&) = nullptr;

    auto* validate_cmd = app.add_subcommand("validate", "Check the cubical identities of a complex");
    validate_cmd->add_option("file", o.file, "Complex JSON")->required();
    validate_cmd->callback([&] { handler = cmd_validate; });

    auto* paths_cmd = app.add_subcommand("paths", "Enumerate dipaths between two vertices");
    auto* classes_cmd = app.add_subcommand("classes", "Dihomotopy classes of dipaths between two vertices");
    for (auto* sub : {paths_cmd, classes_cmd}) {
        sub->add_option("file", o.file, "Complex JSON")->required();
        sub->add_option("--from", o.from, "Start vertex")->required();
        sub->add_option("--to", o.to, "End vertex")->required();
        sub->add_option("--max-len", o.max_len, "Maximum number of edges")->required();
    }
    classes_cmd->add_option("--budget", o.budget, "Path budget")->capture_default_str();
    paths_cmd->callback([&] { handler = cmd_paths; });
    classes_cmd->callback([&] { handler = cmd_classes; });

    auto* preorder_cmd = app.add_subcommand("preorder", "Reachability preorder on vertices");
    preorder_cmd->add_option("file", o.file, "Complex JSON")->required();
    preorder_cmd->callback([&] { handler = cmd_preorder; });

    auto* unfold_cmd = app.add_subcommand("unfold", "Universal dicovering truncated at a depth");
    unfold_cmd->add_option("file", o.file, "Complex JSON")->required();
    unfold_cmd->add_option("--base", o.base, "Basepoint vertex")->required();
    unfold_cmd->add_option("--depth", o.depth, "Maximum path length")->capture_default_str();
    unfold_cmd->add_option("--budget", o.budget, "Class size budget")->capture_default_str();
    unfold_cmd->add_option("--out", o.out_file, "Write the unfolding here and print a summary");
    unfold_cmd->callback([&] { handler = cmd_unfold; });

    auto* cover_cmd = app.add_subcommand("check-cover", "Decide whether a projection is a dicovering");
    cover_cmd->add_option("file", o.file, "Morphism JSON (or unfolding JSON)")->required();
    cover_cmd->add_option("--base", o.base, "Only check lifts starting over this vertex");
    cover_cmd->callback([&] { handler = cmd_check_cover; });

    auto* universal_cmd = app.add_subcommand("universal", "Check the unfolding against dicoverings of the base");
    universal_cmd->add_option("file", o.file, "Complex JSON")->required();
    universal_cmd->add_option("--base", o.base, "Basepoint vertex")->required();
    universal_cmd->add_option("--depth", o.depth, "Maximum path length")->capture_default_str();
    universal_cmd->add_option("--against", o.against, "Morphism JSON files")->required();
    universal_cmd->add_option("--budget", o.budget, "Search node budget")->capture_default_str();
    universal_cmd->callback([&] { handler = cmd_universal; });

    auto* pv_cmd = app.add_subcommand("pv", "PV programs");
    pv_cmd->require_subcommand(1);
    auto* compile_cmd = pv_cmd->add_subcommand("compile", "Compile a PV program to a precubical set");
    compile_cmd->add_option("file", o.file, "PV program")->required();
    compile_cmd->add_flag("--deadlocks", o.deadlocks, "Report deadlock vertices");
    compile_cmd->add_option("--final", o.final_vertex, "Final vertex (default: all processes finished)");
    compile_cmd->callback([&] { handler = cmd_pv_compile; });

    auto* factor_cmd = app.add_subcommand("factor-initial", "Factor the empty morphism into a complex");
    factor_cmd->add_option("file", o.file, "Complex JSON")->required();
    factor_cmd->callback([&] { handler = cmd_factor_initial; });

    std::vector<const char*> argv{"dtop"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "dtop: " << e.what() << '\n';
        return kInputError;
    }

    try {
        return handler(o, out);
    } catch (const ResourceLimit& e) {
        err << "dtop: resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const InputError& e) {
        err << "dtop: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "dtop: " << e.what() << '\n';
        return kInputError;
    } catch (const nlohmann::json::exception& e) {
        err << "dtop: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace dtop::cli
