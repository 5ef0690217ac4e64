#include "dtop/dicovering.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "dtop/constructions.hpp"
#include "dtop/error.hpp"

namespace dtop {

EdgePath lift_path(const PcMorphism& p, const EdgePath& base_path, Cell start_lift) {
    const PrecubicalSet& x = p.target();
    const PrecubicalSet& y = p.source();
    check_path(x, base_path);
    if (start_lift.dim != 0 || !y.contains(start_lift) || p(start_lift) != base_path.start)
        throw std::invalid_argument("lift_path: start lift does not lie over the path start");
    EdgePath lifted{start_lift, {}};
    Cell at = start_lift;
    for (std::size_t k = 0; k < base_path.edges.size(); ++k) {
        const Cell e = base_path.edges[k];
        std::optional<Cell> choice;
        std::size_t candidates = 0;
        for (const Cell f : y.out_edges(at))
            if (p(f) == e) {
                ++candidates;
                if (!choice) choice = f;
            }
        if (candidates != 1)
            throw LiftError(candidates == 0 ? LiftError::Kind::kNoLift : LiftError::Kind::kAmbiguous, x.name(e),
                            y.name(at), k, candidates);
        lifted.edges.push_back(*choice);
        at = y.target(*choice);
    }
    return lifted;
}

EdgePath lift_path(const LiftProblem& problem) {
    return lift_path(problem.projection.get(), problem.base_path, problem.start_lift);
}

namespace {

std::vector<char> reachable_from(const PrecubicalSet& x, std::span<const Cell> roots) {
    std::vector<char> seen(x.size(0), 0);
    std::deque<Cell> queue;
    for (const Cell r : roots)
        if (!seen[r.index]) {
            seen[r.index] = 1;
            queue.push_back(r);
        }
    while (!queue.empty()) {
        const Cell v = queue.front();
        queue.pop_front();
        for (const Cell e : x.out_edges(v)) {
            const Cell w = x.target(e);
            if (!seen[w.index]) {
                seen[w.index] = 1;
                queue.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

DicoveringVerdict check_dicovering(const PcMorphism& p, const CoverCheckOptions& options) {
    const PrecubicalSet& x = p.target();
    const PrecubicalSet& y = p.source();

    std::vector<std::vector<Cell>> fibre(x.size(0));
    for (const Cell v : y.vertices()) fibre[p(v).index].push_back(v);

    std::vector<char> base_ok(x.size(0), 1);
    std::vector<char> total_ok(y.size(0), 1);
    if (options.basepoint) {
        const Cell x0 = *options.basepoint;
        const Cell roots[] = {x0};
        base_ok = reachable_from(x, roots);
        total_ok = reachable_from(y, fibre.at(x0.index));
    }

    DicoveringVerdict verdict;
    auto fail = [&](LiftWitness::Kind kind, Cell base, Cell corner, std::size_t lifts) {
        verdict.is_dicovering = false;
        verdict.witness = LiftWitness{kind, base, corner, lifts};
        return verdict;
    };

    // (a) unique edge lifts.
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> edge_lifts;  // (y, p(f)) -> count
    for (const Cell f : y.edges()) ++edge_lifts[{y.source(f).index, p(f).index}];
    for (const Cell e : x.edges()) {
        const Cell s = x.source(e);
        if (!base_ok[s.index]) continue;
        for (const Cell v : fibre[s.index]) {
            if (!total_ok[v.index]) continue;
            auto it = edge_lifts.find({v.index, e.index});
            const std::size_t n = it == edge_lifts.end() ? 0 : it->second;
            if (n != 1) return fail(LiftWitness::Kind::kEdge, e, v, n);
        }
    }

    // (b) unique lifts of higher cells at their minimal corner.
    for (std::uint32_t d = 2; d < x.levels(); ++d) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> cell_lifts;
        for (const Cell c : y.cells(d)) ++cell_lifts[{y.min_corner(c).index, p(c).index}];
        for (const Cell c : x.cells(d)) {
            const Cell corner = x.min_corner(c);
            if (!base_ok[corner.index]) continue;
            for (const Cell v : fibre[corner.index]) {
                if (!total_ok[v.index]) continue;
                auto it = cell_lifts.find({v.index, c.index});
                const std::size_t n = it == cell_lifts.end() ? 0 : it->second;
                if (n != 1) return fail(LiftWitness::Kind::kCell, c, v, n);
            }
        }
    }
    // Cells of Y in dimensions that X lacks have nowhere to go; the morphism
    // itself rules them out.
    return verdict;
}

std::size_t replay_witness(const PcMorphism& p, const LiftWitness& witness) {
    const PrecubicalSet& y = p.source();
    std::size_t n = 0;
    if (witness.kind == LiftWitness::Kind::kEdge) {
        for (const Cell f : y.out_edges(witness.corner))
            if (p(f) == witness.base) ++n;
        return n;
    }
    for (const Cell c : y.cells(witness.base.dim))
        if (p(c) == witness.base && y.min_corner(c) == witness.corner) ++n;
    return n;
}

PcMorphism fold_map(const ComplexPtr& x, unsigned k) {
    if (k == 0) throw std::invalid_argument("fold_map: k must be positive");
    if (k == 1) return identity(x);
    PrecubicalSet::Builder b;
    for (unsigned j = 1; j <= k; ++j) {
        const std::string prefix = std::to_string(j) + ":";
        for (const Cell c : x->all_cells()) b.add_cell(c.dim, prefix + x->name(c));
        for (const Cell c : x->all_cells())
            for (unsigned i = 1; i <= c.dim; ++i)
                for (unsigned a = 0; a < 2; ++a)
                    b.set_face(prefix + x->name(c), i, a, prefix + x->name(x->face(c, i, a)));
    }
    auto copies = share(b.build());
    PcMorphism::Table t(copies->levels());
    for (std::uint32_t d = 0; d < copies->levels(); ++d)
        for (const Cell c : copies->cells(d)) {
            const std::string& name = copies->name(c);
            t[d].push_back(x->at(name.substr(name.find(':') + 1)).index);
        }
    return PcMorphism(copies, x, std::move(t));
}

PcMorphism wedge_fold(const ComplexPtr& x, Cell basepoint) {
    return codiagonal_gadget(vertex_inclusion(x, basepoint)).fstar;
}

std::optional<PcMorphism> universality_check(const PcMorphism& pi, const PcMorphism& p,
                                             std::pair<Cell, Cell> basepoint_lifts, std::size_t budget) {
    if (pi.target_ptr() != p.target_ptr() && !(pi.target() == p.target()))
        throw std::invalid_argument("universality_check: morphisms have different targets");
    const auto [base_total, base_cover] = basepoint_lifts;
    if (pi(base_total) != p(base_cover))
        throw std::invalid_argument("universality_check: basepoint lifts lie over different vertices");

    auto over = [&](Cell from, Cell to) { return p(to) == pi(from); };
    const std::pair<Cell, Cell> fixed[] = {basepoint_lifts};
    SearchOptions options;
    options.max_solutions = 2;
    options.node_budget = budget;
    auto result = search_morphisms(pi.source_ptr(), p.source_ptr(), fixed, over, options);
    if (result.found.empty()) return std::nullopt;
    if (result.found.size() > 1)
        throw AmbiguityError("several morphisms commute with the projections; the basepoint does not determine phi");
    return std::move(result.found.front());
}

}  // namespace dtop
