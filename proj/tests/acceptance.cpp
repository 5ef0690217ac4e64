// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "dtop/constructions.hpp"
#include "dtop/dicovering.hpp"
#include "dtop/dihomotopy.hpp"
#include "dtop/error.hpp"
#include "dtop/pvlang.hpp"
#include "dtop/unfolding.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "support/pushouts.hpp"

using namespace dtop;

namespace {

// Pinned thresholds. Every count is compared exactly.
constexpr double kSecondsPerCriterion = 60.0;
constexpr std::size_t kMinMutations = 100;
constexpr double kRequiredDetectionRate = 1.0;
constexpr std::size_t kMaxLiftProblems = 10'000;
constexpr std::size_t kMaxPushoutCells = 50;

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

EdgePath from_names(const PrecubicalSet& x, const std::string& start, const oracle::NamePath& edges) {
    EdgePath p{x.at(start), {}};
    for (const auto& e : edges) p.edges.push_back(x.at(e));
    return p;
}

oracle::NamePath names(const PrecubicalSet& x, const EdgePath& p) {
    oracle::NamePath out;
    for (const Cell e : p.edges) out.push_back(x.name(e));
    return out;
}

std::vector<Cell> fibre(const PcMorphism& p, Cell v) {
    std::vector<Cell> out;
    for (const Cell y : p.source().vertices())
        if (p(y) == v) out.push_back(y);
    return out;
}

void ac1(Outcome& o) {
    std::vector<std::pair<std::string, PrecubicalSet>> generated;
    for (unsigned n = 0; n <= 4; ++n) generated.emplace_back("cube" + std::to_string(n), standard_cube(n));
    for (unsigned a = 1; a <= 4; ++a)
        for (unsigned b = 1; b <= 4; ++b) generated.emplace_back("grid", grid2d(a, b));
    generated.emplace_back("swiss", swiss_flag_grid());
    const std::vector<std::pair<unsigned, unsigned>> diagonal{{1, 1}, {2, 2}};
    generated.emplace_back("holes", grid2d(4, 4, diagonal));
    generated.emplace_back("circle", directed_circle());
    generated.emplace_back("tensor", tensor(directed_circle(), standard_cube(2)));
    generated.emplace_back("tensor2", tensor(directed_path(2), directed_path(3)));
    generated.emplace_back("pushout", *corpus::glued_squares());
    generated.emplace_back("wedge", *corpus::wedge());
    for (const char* text : {corpus::kSwissProgram, corpus::kSwissProgramDoubled, corpus::kThreeWayProgram})
        generated.emplace_back("pv", pv::build_complex(pv::parse(text)).complex);
    for (const auto& [label, x] : generated) o.require(validate(x).empty(), label + " fails validate");

    // Corrupt one face of a cell of dimension >= 2 (edge faces carry no
    // identity, so redirecting one is still a precubical set).
    std::mt19937 rng(1234);
    std::size_t mutations = 0, detected = 0;
    while (mutations < 2 * kMinMutations) {
        const auto& x = generated[rng() % generated.size()].second;
        if (x.levels() < 3) continue;
        const auto cells = x.all_cells();
        const Cell c = cells[rng() % cells.size()];
        if (c.dim < 2) continue;
        const unsigned i = 1 + static_cast<unsigned>(rng() % c.dim);
        const unsigned a = static_cast<unsigned>(rng() % 2);
        const auto pool = x.cells(c.dim - 1);
        const Cell t = pool[rng() % pool.size()];
        if (t == x.face(c, i, a)) continue;
        ++mutations;
        detected += !validate(x.with_face(c, i, a, t)).empty();
    }
    const double rate = static_cast<double>(detected) / static_cast<double>(mutations);
    o.require(mutations >= kMinMutations, "too few mutations");
    o.require(rate >= kRequiredDetectionRate, "undetected mutation");
    o.note << generated.size() << " complexes valid; " << detected << "/" << mutations << " mutations detected";
}

void ac2(Outcome& o) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto c = standard_cube(n);
        const std::string bottom(n, '0'), top(n, '1');
        const auto got = enumerate_paths(c, c.at(bottom), c.at(top), n).size();
        const auto dfs = oracle::raw_paths(c, bottom, top, n).size();
        o.require(got == oracle::factorial(n) && dfs == got, "cube" + std::to_string(n));
        o.note << "cube" << n << "=" << got << " ";
    }
    const auto circle = directed_circle();
    for (std::size_t k = 0; k <= 10; ++k)
        o.require(enumerate_paths(circle, circle.at("v"), circle.at("v"), k).size() == k + 1,
                  "circle k=" + std::to_string(k));
    o.note << "circle k+1 for k=0..10";
}

void ac3(Outcome& o) {
    for (unsigned m = 2; m <= 4; ++m) {
        const auto g = grid2d(m - 1, m - 1);
        const std::size_t len = 2 * (m - 1);
        const auto cs = classes(g, g.at("c00"), g.vertices().back(), len);
        const auto want = oracle::move_graph_classes(g, oracle::raw_paths(g, "c00", g.name(g.vertices().back()), len));
        const bool ok = cs.size() == 1 && cs[0].size() == oracle::binomial(2 * m - 2, m - 1) && want.size() == 1 &&
                        want[0].size() == cs[0].size();
        o.require(ok, "full grid m=" + std::to_string(m));
        o.note << m << "x" << m << ": 1 class of " << (cs.empty() ? 0 : cs[0].size()) << "; ";
    }
    const auto s = swiss_flag_grid();
    const auto swiss = classes(s, s.at("c00"), s.at("c33"), 6);
    o.require(swiss.size() == 2, "swiss class count");
    o.note << "swiss: " << swiss.size() << " classes; ";

    const std::vector<std::pair<unsigned, unsigned>> diagonal{{1, 1}, {2, 2}};
    const auto h = grid2d(4, 4, diagonal);
    const auto tool = classes(h, h.at("c00"), h.at("c44"), 8);
    const auto brute = oracle::move_graph_classes(h, oracle::raw_paths(h, "c00", "c44", 8));
    bool equal = tool.size() == brute.size();
    for (std::size_t k = 0; equal && k < tool.size(); ++k) {
        equal = tool[k].size() == brute[k].size();
        for (std::size_t m = 0; equal && m < brute[k].size(); ++m) equal = names(h, tool[k].members[m]) == brute[k][m];
    }
    o.require(tool.size() >= 3, "diagonal holes give fewer than 3 classes");
    o.require(equal, "diagonal holes differ from the oracle");
    o.note << "diagonal holes: tool " << tool.size() << ", oracle " << brute.size() << " classes";
}

void ac4(Outcome& o) {
    const auto entries = corpus::all();
    std::vector<PcMorphism> passing;
    std::size_t checked = 0, witnesses = 0;
    for (const auto& e : entries) {
        for (unsigned k = 1; k <= 3; ++k) {
            const auto f = fold_map(e.x, k);
            const bool ok = check_dicovering(f).is_dicovering;
            o.require(ok, "fold_map(" + e.label + "," + std::to_string(k) + ")");
            if (ok) passing.push_back(f);
            ++checked;
        }
        const auto id = identity(e.x);
        o.require(check_dicovering(id).is_dicovering, "identity on " + e.label);
        ++checked;

        // The non-dicovering projection: X glued to itself at a point, folded back.
        const Cell base = e.x->at(e.base);
        if (e.x->out_edges(base).empty()) continue;
        const auto w = wedge_fold(e.x, base);
        const auto verdict = check_dicovering(w);
        const bool replayed = !verdict.is_dicovering && verdict.witness && verdict.witness->lifts != 1 &&
                              replay_witness(w, *verdict.witness) == verdict.witness->lifts;
        o.require(replayed, "wedge fold of " + e.label + " lacks a replayable witness");
        witnesses += replayed;
    }
    for (const auto& e : entries)
        if (e.acyclic && e.x->size(0) <= 30) passing.push_back(unfold(e.x, e.x->at(e.base), 12).projection);

    std::mt19937 rng(4242);
    std::size_t problems = 0, unique = 0;
    const std::size_t per_map = kMaxLiftProblems / passing.size();
    for (const auto& p : passing) {
        const auto& x = p.target();
        const auto verts = x.vertices();
        for (std::size_t round = 0; round < per_map; ++round) {
            const Cell v = verts[rng() % verts.size()];
            const auto over = fibre(p, v);
            if (over.empty()) continue;  // unfoldings only cover the part reachable from the basepoint
            const Cell y0 = over[rng() % over.size()];
            const auto base = oracle::random_walk(x, x.name(v), 1 + rng() % 6, rng);
            ++problems;
            try {
                const auto got = lift_path(p, from_names(x, x.name(v), base), y0);
                const auto brute = oracle::brute_lifts(p, base, p.source().name(y0));
                unique += brute.size() == 1 && names(p.source(), got) == brute.front();
            } catch (const LiftError&) {
            }
        }
    }
    o.require(problems <= kMaxLiftProblems && unique == problems, "a lift failed or was not unique");

    std::size_t pairs = 0, agree = 0;
    for (const auto& e : entries) {
        if (!e.acyclic || e.x->size(0) > 30) continue;
        const auto p = fold_map(e.x, 3);
        const Cell a = e.x->at(e.base);
        for (const Cell b : e.x->vertices())
            for (const auto& cls : classes(*e.x, a, b, 12))
                for (const Cell y0 : fibre(p, a)) {
                    const Cell end = path_end(p.source(), lift_path(p, cls.canonical, y0));
                    for (const auto& q : cls.members) {
                        ++pairs;
                        agree += path_end(p.source(), lift_path(p, q, y0)) == end;
                    }
                }
    }
    o.require(agree == pairs, "dihomotopic lifts end apart");
    o.note << checked << " dicovering checks; " << witnesses << " replayed witnesses; " << unique << "/" << problems
           << " unique lifts; " << agree << "/" << pairs << " dihomotopic lift ends agree";
}

void ac5(Outcome& o) {
    auto i = share(directed_path(1));
    for (std::size_t d : {1, 2, 4, 8}) {
        const auto u = unfold(i, i->at("0"), d);
        o.require(u.complete && is_isomorphic(u.total, i).has_value(), "interval at depth " + std::to_string(d));
    }
    auto circle = share(directed_circle());
    for (unsigned k = 1; k <= 8; ++k) {
        const auto u = unfold(circle, circle->at("v"), k);
        o.require(!u.complete && is_isomorphic(u.total, share(directed_path(k))).has_value(),
                  "circle at depth " + std::to_string(k));
    }
    auto s = share(swiss_flag_grid());
    const auto u = unfold(s, s->at("c00"), 12);
    o.require(u.complete, "swiss unfolding incomplete");
    o.require(check_dicovering(u.projection).is_dicovering, "swiss projection is not a dicovering");
    std::map<std::string, std::size_t> fibres;
    for (const Cell v : u.total->vertices()) ++fibres[s->name(u.projection(v))];
    bool fibres_match = true;
    for (const Cell b : s->vertices()) {
        const auto want = oracle::move_graph_classes(*s, oracle::raw_paths(*s, "c00", s->name(b), 12)).size();
        fibres_match = fibres_match && fibres[s->name(b)] == want;
    }
    o.require(fibres_match, "fibre sizes differ from class counts");
    o.require(reachability_preorder(*u.total).is_antisymmetric(), "unfolding has a directed loop");
    o.note << "interval ok; circle paths k=1..8; swiss: " << u.total->size(0) << " states, complete";
}

void ac6(Outcome& o) {
    std::size_t entries = 0, unique = 0, skipped = 0;
    for (const auto& e : corpus::all()) {
        if (!e.acyclic || e.x->size(0) > 30) continue;
        const Cell x0 = e.x->at(e.base);
        const auto longest = [&] {
            std::size_t best = 0;
            for (const Cell b : e.x->vertices())
                if (auto l = longest_path_length(*e.x, x0, b)) best = std::max(best, *l);
            return best;
        }();
        std::vector<PcMorphism> catalog{identity(e.x), fold_map(e.x, 2), fold_map(e.x, 3)};
        const bool with_wedge = !e.x->out_edges(x0).empty();
        if (with_wedge) catalog.push_back(wedge_fold(e.x, x0));
        const auto report = universal_property_suite(e.x, x0, longest, catalog);
        o.require(report.unfolding_complete, e.label + ": unfolding incomplete");
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& entry = report.entries[k];
            ++entries;
            bool all_unique = !entry.skipped && entry.pass && entry.outcomes.size() == k + 1;
            for (const auto& out : entry.outcomes)
                all_unique = all_unique && out.result == UniversalityOutcome::Result::kUnique;
            o.require(all_unique, e.label + ": catalog entry " + std::to_string(k));
            unique += all_unique;
        }
        if (with_wedge) {
            const auto& entry = report.entries[3];
            const bool ok = entry.skipped && entry.verdict.witness.has_value();
            o.require(ok, e.label + ": non-dicovering entry not skipped");
            skipped += ok;
        }
        o.require(report.pass, e.label + ": suite failed");
    }
    o.note << unique << "/" << entries << " entries with unique phi; " << skipped << " non-dicoverings skipped";
}

void ac7(Outcome& o) {
    std::size_t gadgets = 0;
    for (const auto& e : corpus::all()) {
        if (e.x->total_size() > 200) continue;
        for (const auto& f : {identity(e.x), vertex_inclusion(e.x, e.x->at(e.base)), from_empty(e.x),
                              fold_map(e.x, 2)}) {
            const auto g = codiagonal_gadget(f);
            const auto id = identity(f.target_ptr());
            o.require(compose(g.fstar, g.p1) == id && compose(g.fstar, g.p2) == id, "gadget on " + e.label);
            ++gadgets;
        }
    }
    std::size_t cocones = 0, unique = 0;
    for (const auto& inst : pushouts::instances())
        for (const auto& z : inst.targets) {
            const auto t = pushouts::check_universal_property(inst, z);
            o.require(t.cells <= kMaxPushoutCells, inst.label + " too large");
            cocones += t.cocones;
            unique += t.exactly_one;
        }
    o.require(cocones > 0 && unique == cocones, "a cocone without exactly one mediator");
    std::size_t empty_middles = 0, nonempty = 0;
    for (const auto& e : corpus::all()) {
        if (e.x->empty()) continue;
        ++nonempty;
        const auto f = factor_initial(e.x);
        const bool degenerate = f.middle_empty && f.right.source().empty();
        o.require(degenerate, "factor_initial on " + e.label + " has a nonempty middle");
        empty_middles += degenerate;
    }
    o.note << gadgets << " gadgets fold to id; " << unique << "/" << cocones << " cocones with one mediator; "
           << empty_middles << "/" << nonempty << " empty middles (asserted)";
}

void ac8(Outcome& o) {
    auto measure = [](const char* text) {
        const auto program = pv::parse(text);
        const auto x = pv::build_complex(program).complex;
        const Cell start = x.vertices().front();
        const Cell final = x.at(pv::final_vertex_name(program));
        const auto dead = pv::deadlocks(x, final).size();
        const auto bound = *longest_path_length(x, start, final);
        return std::pair{dead, classes(x, start, final, bound).size()};
    };
    const auto [dead, cls] = measure(corpus::kSwissProgram);
    const auto [dead2, cls2] = measure(corpus::kSwissProgramDoubled);
    o.require(dead == 1 && cls == 2, "swiss program");
    o.require(dead2 == 0 && cls2 == 1, "doubled capacities");
    o.note << "swiss: " << dead << " deadlock, " << cls << " classes; doubled: " << dead2 << " deadlocks, " << cls2
           << " class";
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
        {"AC1 cubical identities and mutation detection", ac1},
        {"AC2 path-count oracles", ac2},
        {"AC3 dihomotopy classification", ac3},
        {"AC4 dicovering characterization", ac4},
        {"AC5 unfolding correctness", ac5},
        {"AC6 universality", ac6},
        {"AC7 factorization demonstrators", ac7},
        {"AC8 PV pipeline", ac8},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            check(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.note << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > kSecondsPerCriterion) {
            o.ok = false;
            o.note << "; over time limit";
        }
        std::printf("%s %s (%.2fs): %s\n", o.ok ? "PASS" : "FAIL", name, secs, o.note.str().c_str());
        failures += !o.ok;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
