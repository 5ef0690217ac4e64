#include "dtop/unfolding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "dtop/constructions.hpp"
#include "dtop/error.hpp"

namespace dtop {

namespace {

struct Growth {
    std::vector<UnfoldingState> states;
    std::vector<Cell> end;                                  // X-vertex of each state
    std::vector<std::map<std::uint32_t, std::size_t>> next;  // edge index -> state
    std::vector<std::size_t> seed_states;
    bool complete = true;
};

Growth grow(const PrecubicalSet& x, std::span<const Cell> seeds, std::size_t depth, std::size_t budget) {
    Growth g;
    const SquareIndex index(x);
    std::unordered_map<EdgePath, std::size_t, EdgePathHash> owner;
    std::vector<std::vector<std::size_t>> by_level(1);

    auto add_state = [&](std::vector<EdgePath> members, std::size_t level) {
        const std::size_t id = g.states.size();
        for (const auto& m : members) owner.emplace(m, id);
        g.end.push_back(path_end(x, members.front()));
        g.states.push_back({members.front(), members.size(), level});
        g.next.emplace_back();
        if (by_level.size() <= level) by_level.resize(level + 1);
        by_level[level].push_back(id);
        return id;
    };

    std::vector<Cell> roots(seeds.begin(), seeds.end());
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    for (const Cell r : roots) {
        if (r.dim != 0 || !x.contains(r)) throw InputError("unfold: seed is not a vertex");
        g.seed_states.push_back(add_state({constant_path(r)}, 0));
    }

    // Level by level: attach one edge per (state, outgoing edge), merging paths
    // that an elementary move relates into the same state.
    for (std::size_t level = 0; level < depth && level < by_level.size(); ++level) {
        const auto frontier = by_level[level];
        for (const std::size_t s : frontier)
            for (const Cell e : x.out_edges(g.end[s])) {
                EdgePath extended = g.states[s].canonical;
                extended.edges.push_back(e);
                std::size_t t;
                if (auto it = owner.find(extended); it != owner.end()) {
                    t = it->second;
                } else {
                    t = add_state(materialize_class(index, x, extended, budget), level + 1);
                }
                g.next[s][e.index] = t;
            }
    }
    if (depth < by_level.size())
        for (const std::size_t s : by_level[depth])
            if (!x.out_edges(g.end[s]).empty()) g.complete = false;
    return g;
}

}  // namespace

Unfolding unfold_from(const ComplexPtr& x, std::span<const Cell> seeds, std::size_t depth, std::size_t class_budget) {
    Growth g = grow(*x, seeds, depth, class_budget);

    // k-index of each state among the states ending at the same X-vertex.
    std::vector<std::size_t> ordinal(g.states.size());
    {
        std::vector<std::size_t> seen(x->size(0), 0);
        for (std::size_t s = 0; s < g.states.size(); ++s) ordinal[s] = seen[g.end[s].index]++;
    }
    std::vector<std::vector<Cell>> by_corner(x->size(0));
    for (const Cell c : x->all_cells()) by_corner[x->min_corner(c).index].push_back(c);

    auto lifted_name = [&](std::size_t s, Cell c) { return x->name(c) + "#" + std::to_string(ordinal[s]); };

    PrecubicalSet::Builder b;
    std::vector<std::pair<std::string, Cell>> lifted;  // name -> X-cell, for the projection
    for (std::size_t s = 0; s < g.states.size(); ++s)
        for (const Cell c : by_corner[g.end[s].index]) {
            if (g.states[s].level + c.dim > depth) continue;
            const std::string name = lifted_name(s, c);
            b.add_cell(c.dim, name);
            lifted.emplace_back(name, c);
            for (unsigned i = 1; i <= c.dim; ++i) {
                b.set_face(name, i, 0, lifted_name(s, x->face(c, i, 0)));
                const std::size_t far = g.next[s].at(x->edge_from_min_corner(c, i).index);
                b.set_face(name, i, 1, lifted_name(far, x->face(c, i, 1)));
            }
        }
    auto total = share(b.build());

    PcMorphism::Table table(total->levels());
    for (std::uint32_t d = 0; d < total->levels(); ++d) table[d].assign(total->size(d), PrecubicalSet::kNone);
    for (const auto& [name, c] : lifted) {
        const Cell t = total->at(name);
        table[t.dim][t.index] = c.index;
    }

    Unfolding u{total, PcMorphism(total, x, std::move(table)), {}, {}, g.complete, depth};
    u.states.resize(total->size(0));
    for (std::size_t s = 0; s < g.states.size(); ++s) u.states[total->at(lifted_name(s, g.end[s])).index] = g.states[s];
    for (const std::size_t s : g.seed_states) u.roots.push_back(total->at(lifted_name(s, g.end[s])));
    return u;
}

Unfolding unfold(const ComplexPtr& x, Cell x0, std::size_t depth, std::size_t class_budget) {
    const Cell seeds[] = {x0};
    return unfold_from(x, seeds, depth, class_budget);
}

InitialFactorization factor_initial(const ComplexPtr& x) {
    Unfolding u = unfold_from(x, {}, 0);
    return {identity(u.total), u.projection, u.total->empty()};
}

UniversalityReport universal_property_suite(const ComplexPtr& x, Cell x0, std::size_t depth,
                                            std::span<const PcMorphism> catalog, std::span<const std::string> labels,
                                            std::size_t budget) {
    const Unfolding u = unfold(x, x0, depth);
    UniversalityReport report;
    report.depth = depth;
    report.unfolding_complete = u.complete;
    report.pass = true;

    for (std::size_t k = 0; k < catalog.size(); ++k) {
        const PcMorphism& p = catalog[k];
        if (p.target_ptr() != x && !(p.target() == *x))
            throw std::invalid_argument("universal_property_suite: catalog entry does not target X");
        UniversalityEntry entry;
        entry.label = k < labels.size() ? labels[k] : "entry " + std::to_string(k);
        entry.verdict = check_dicovering(p, {x0});
        if (!entry.verdict.is_dicovering) {
            entry.skipped = true;
            report.entries.push_back(std::move(entry));
            continue;
        }
        entry.pass = true;
        for (const Cell y : p.source().vertices()) {
            if (p(y) != x0) continue;
            UniversalityOutcome outcome;
            outcome.basepoint_lift = y;
            try {
                outcome.phi = universality_check(u.projection, p, {u.roots.front(), y}, budget);
                outcome.result = outcome.phi ? UniversalityOutcome::Result::kUnique : UniversalityOutcome::Result::kNone;
            } catch (const AmbiguityError& e) {
                outcome.result = UniversalityOutcome::Result::kAmbiguous;
                outcome.detail = e.what();
            } catch (const ResourceLimit& e) {
                outcome.result = UniversalityOutcome::Result::kResourceLimit;
                outcome.detail = e.what();
            }
            if (outcome.result != UniversalityOutcome::Result::kUnique) entry.pass = false;
            entry.outcomes.push_back(std::move(outcome));
        }
        if (entry.outcomes.empty()) entry.pass = false;  // nothing over x0 to anchor phi
        report.pass = report.pass && entry.pass;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace dtop
