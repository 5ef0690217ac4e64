#include <doctest.h>

#include <map>
#include <random>

#include "dtop/constructions.hpp"
#include "dtop/dicovering.hpp"
#include "dtop/dihomotopy.hpp"
#include "dtop/unfolding.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace dtop;

namespace {

std::map<std::string, std::size_t> fibre_sizes(const Unfolding& u) {
    std::map<std::string, std::size_t> out;
    for (const Cell v : u.total->vertices()) ++out[u.projection.target().name(u.projection(v))];
    return out;
}

}  // namespace

TEST_CASE("unfolding the interval gives the interval") {
    auto i = share(directed_path(1));
    for (std::size_t d : {1, 2, 5}) {
        const auto u = unfold(i, i->at("0"), d);
        CHECK(u.complete);
        CHECK(is_isomorphic(u.total, i));
    }
    CHECK_FALSE(unfold(i, i->at("0"), 0).complete);
}

TEST_CASE("unfolding the directed circle gives directed paths") {
    auto c = share(directed_circle());
    for (std::size_t k = 1; k <= 8; ++k) {
        const auto u = unfold(c, c->at("v"), k);
        CHECK_FALSE(u.complete);
        CHECK(u.total->size(0) == k + 1);
        CHECK(is_isomorphic(u.total, share(directed_path(static_cast<unsigned>(k)))));
        for (const Cell v : u.total->vertices()) CHECK(u.states[v.index].class_size == 1);
    }
}

TEST_CASE("unfolding the swiss flag") {
    auto s = share(swiss_flag_grid());
    const auto u = unfold(s, s->at("c00"), 12);
    CHECK(u.complete);
    CHECK(u.total->size(0) == 20);
    CHECK(validate(*u.total).empty());
    CHECK(u.projection.is_valid());
    CHECK(check_dicovering(u.projection).is_dicovering);
    const auto sizes = fibre_sizes(u);
    CHECK(sizes.at("c33") == 2);
    CHECK(sizes.at("c00") == 1);
    CHECK(reachability_preorder(*u.total).is_antisymmetric());
    CHECK(u.total->name(u.roots.front()) == "c00#0");
}

TEST_CASE("fibres count dihomotopy classes") {
    for (const auto& e : corpus::all()) {
        if (e.x->size(0) > 30) continue;
        CAPTURE(e.label);
        const std::size_t depth = e.acyclic ? 12 : 5;
        const auto u = unfold(e.x, e.x->at(e.base), depth);
        CHECK(validate(*u.total).empty());
        CHECK(u.projection.is_valid());
        CHECK(u.complete == e.acyclic);
        CHECK(reachability_preorder(*u.total).is_antisymmetric());
        const auto sizes = fibre_sizes(u);
        for (const Cell b : e.x->vertices()) {
            const auto want = oracle::move_graph_classes(*e.x, oracle::raw_paths(*e.x, e.base, e.x->name(b), depth));
            const auto it = sizes.find(e.x->name(b));
            CHECK((it == sizes.end() ? 0 : it->second) == want.size());
        }
        // States are distinct classes and their canonical paths end where they project.
        for (const Cell v : u.total->vertices()) {
            const auto& st = u.states[v.index];
            CHECK(path_end(*e.x, st.canonical) == u.projection(v));
            CHECK(st.canonical.length() == st.level);
        }
    }
}

TEST_CASE("complete unfoldings lift every path from every state") {
    std::mt19937 rng(11);
    for (const auto& e : corpus::all()) {
        if (!e.acyclic || e.x->size(0) > 30) continue;
        const auto u = unfold(e.x, e.x->at(e.base), 12);
        REQUIRE(u.complete);
        CHECK(check_dicovering(u.projection, {e.x->at(e.base)}).is_dicovering);
        for (const Cell v : u.total->vertices()) {
            const Cell xv = u.projection(v);
            const auto walk = oracle::random_walk(*e.x, e.x->name(xv), 8, rng);
            EdgePath base{xv, {}};
            for (const auto& n : walk) base.edges.push_back(e.x->at(n));
            CHECK_NOTHROW(lift_path(u.projection, base, v));
        }
    }
}

TEST_CASE("unfolding is monotone in depth and stabilises once complete") {
    auto s = share(swiss_flag_grid());
    std::size_t previous = 0;
    for (std::size_t d = 0; d <= 8; ++d) {
        const auto u = unfold(s, s->at("c00"), d);
        CHECK(u.total->size(0) >= previous);
        previous = u.total->size(0);
        // States at depth d are those of depth d + 1 with level <= d.
        const auto next = unfold(s, s->at("c00"), d + 1);
        std::size_t low = 0;
        for (const Cell v : next.total->vertices()) low += next.states[v.index].level <= d;
        CHECK(low == u.total->size(0));
    }
    const auto at6 = unfold(s, s->at("c00"), 6);
    CHECK(at6.complete);
    for (std::size_t d : {7, 9, 16}) CHECK(*unfold(s, s->at("c00"), d).total == *at6.total);
}

TEST_CASE("unfolding a loop-free complex completes at its longest path") {
    auto g = share(grid2d(4, 4, std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {2, 2}}));
    CHECK(unfold(g, g->at("c00"), 8).complete);
    CHECK_FALSE(unfold(g, g->at("c00"), 7).complete);
}

TEST_CASE("unfolding unwinds loops") {
    auto cyl = share(tensor(directed_circle(), directed_path(1)));
    const auto u = unfold(cyl, cyl->at("(v,0)"), 6);
    CHECK_FALSE(u.complete);
    CHECK(reachability_preorder(*u.total).is_antisymmetric());
    CHECK(validate(*u.total).empty());
    CHECK(u.total->size(2) > 0);
}

TEST_CASE("factoring the empty morphism") {
    for (const auto& e : corpus::all()) {
        const auto f = factor_initial(e.x);
        CHECK(f.middle_empty);
        CHECK(f.right.source().empty());
        CHECK(f.left.source().empty());
        CHECK(f.right.is_valid());
        CHECK(check_dicovering(f.right).is_dicovering);
    }
    const auto none = factor_initial(share(PrecubicalSet{}));
    CHECK(none.middle_empty);
    CHECK(none.right.target().empty());
}

TEST_CASE("universal property suite") {
    auto s = share(swiss_flag_grid());
    const Cell x0 = s->at("c00");
    const std::vector<PcMorphism> catalog{identity(s), fold_map(s, 2), fold_map(s, 3), wedge_fold(s, x0)};
    const std::vector<std::string> labels{"id", "fold2", "fold3", "wedge"};
    const auto report = universal_property_suite(s, x0, 12, catalog, labels);
    CHECK(report.pass);
    CHECK(report.unfolding_complete);
    REQUIRE(report.entries.size() == 4);
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK_FALSE(report.entries[k].skipped);
        CHECK(report.entries[k].pass);
        CHECK(report.entries[k].outcomes.size() == k + 1);
        for (const auto& o : report.entries[k].outcomes) CHECK(o.result == UniversalityOutcome::Result::kUnique);
    }
    CHECK(report.entries[3].skipped);
    CHECK(report.entries[3].verdict.witness);
}
