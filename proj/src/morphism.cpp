#include "dtop/morphism.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "dtop/error.hpp"

namespace dtop {

PcMorphism::PcMorphism(ComplexPtr source, ComplexPtr target, Table map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    if (!source_ || !target_) throw std::invalid_argument("PcMorphism: null complex");
    map_.resize(source_->levels());
    for (std::uint32_t d = 0; d < source_->levels(); ++d) map_[d].resize(source_->size(d), PrecubicalSet::kNone);
}

std::optional<Cell> PcMorphism::try_apply(Cell c) const {
    if (!source_->contains(c)) return std::nullopt;
    const std::uint32_t t = map_[c.dim][c.index];
    if (t == PrecubicalSet::kNone) return std::nullopt;
    return Cell{c.dim, t};
}

Cell PcMorphism::operator()(Cell c) const {
    if (auto t = try_apply(c)) return *t;
    throw std::logic_error("morphism undefined on cell '" +
                           (source_->contains(c) ? source_->name(c) : std::string("?")) + "'");
}

std::vector<std::string> PcMorphism::check() const {
    std::vector<std::string> problems;
    for (const Cell c : source_->all_cells()) {
        auto image = try_apply(c);
        if (!image) {
            problems.push_back("cell '" + source_->name(c) + "' is unmapped");
            continue;
        }
        if (!target_->contains(*image)) {
            problems.push_back("cell '" + source_->name(c) + "' maps outside the target");
            continue;
        }
        for (unsigned i = 1; i <= c.dim; ++i)
            for (unsigned a = 0; a < 2; ++a) {
                auto f = source_->try_face(c, i, a);
                auto g = target_->try_face(*image, i, a);
                if (!f || !g) continue;
                auto fi = try_apply(*f);
                if (fi && *fi != *g)
                    problems.push_back("map(d^" + std::to_string(a) + "_" + std::to_string(i) + " '" +
                                       source_->name(c) + "') != d^" + std::to_string(a) + "_" +
                                       std::to_string(i) + " map('" + source_->name(c) + "')");
            }
    }
    return problems;
}

bool operator==(const PcMorphism& a, const PcMorphism& b) {
    return a.map_ == b.map_ && (a.source_ == b.source_ || *a.source_ == *b.source_) &&
           (a.target_ == b.target_ || *a.target_ == *b.target_);
}

PcMorphism identity(ComplexPtr x) {
    PcMorphism::Table t(x->levels());
    for (std::uint32_t d = 0; d < x->levels(); ++d) {
        t[d].resize(x->size(d));
        for (std::uint32_t k = 0; k < t[d].size(); ++k) t[d][k] = k;
    }
    return PcMorphism(x, x, std::move(t));
}

PcMorphism compose(const PcMorphism& g, const PcMorphism& f) {
    if (f.target_ptr() != g.source_ptr() && !(f.target() == g.source()))
        throw std::invalid_argument("compose: morphisms are not composable");
    PcMorphism::Table t(f.source().levels());
    for (std::uint32_t d = 0; d < f.source().levels(); ++d) {
        t[d].resize(f.source().size(d), PrecubicalSet::kNone);
        for (std::uint32_t k = 0; k < t[d].size(); ++k)
            if (auto mid = f.try_apply({d, k}))
                if (auto out = g.try_apply(*mid)) t[d][k] = out->index;
    }
    return PcMorphism(f.source_ptr(), g.target_ptr(), std::move(t));
}

PcMorphism morphism_from_names(ComplexPtr source, ComplexPtr target,
                               std::span<const std::pair<std::string, std::string>> pairs) {
    PcMorphism::Table t(source->levels());
    for (std::uint32_t d = 0; d < source->levels(); ++d) t[d].assign(source->size(d), PrecubicalSet::kNone);
    for (const auto& [from, to] : pairs) {
        const Cell a = source->at(from);
        const Cell b = target->at(to);
        if (a.dim != b.dim)
            throw InputError("map '" + from + "' -> '" + to + "' changes dimension");
        t[a.dim][a.index] = b.index;
    }
    return PcMorphism(std::move(source), std::move(target), std::move(t));
}

namespace {

class MorphismSearch {
public:
    MorphismSearch(const PrecubicalSet& src, const PrecubicalSet& dst,
                   const std::function<bool(Cell, Cell)>& allowed, const SearchOptions& options)
        : src_(src), dst_(dst), allowed_(allowed), options_(options) {
        assign_.resize(src.levels());
        for (std::uint32_t d = 0; d < src.levels(); ++d) assign_[d].assign(src.size(d), PrecubicalSet::kNone);
        used_.resize(dst.levels());
        for (std::uint32_t d = 0; d < dst.levels(); ++d) used_[d].assign(dst.size(d), 0);
    }

    bool pin(Cell from, Cell to) { return assign(from, to); }

    void run(const std::vector<Cell>& order) {
        order_ = &order;
        solve(0);
    }

    std::vector<PcMorphism::Table> solutions;
    std::size_t nodes = 0;

private:
    bool assign(Cell c, Cell d) {
        if (c.dim != d.dim || !dst_.contains(d)) return false;
        const std::uint32_t cur = assign_[c.dim][c.index];
        if (cur != PrecubicalSet::kNone) return cur == d.index;
        if (options_.injective && used_[d.dim][d.index]) return false;
        if (allowed_ && !allowed_(c, d)) return false;
        assign_[c.dim][c.index] = d.index;
        if (options_.injective) used_[d.dim][d.index] = 1;
        trail_.push_back(c);
        for (unsigned i = 1; i <= c.dim; ++i)
            for (unsigned a = 0; a < 2; ++a)
                if (!assign(src_.face(c, i, a), dst_.face(d, i, a))) return false;
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const Cell c = trail_.back();
            trail_.pop_back();
            if (options_.injective) used_[c.dim][assign_[c.dim][c.index]] = 0;
            assign_[c.dim][c.index] = PrecubicalSet::kNone;
        }
    }

    void solve(std::size_t pos) {
        if (solutions.size() >= options_.max_solutions) return;
        const auto& order = *order_;
        while (pos < order.size() && assign_[order[pos].dim][order[pos].index] != PrecubicalSet::kNone) ++pos;
        if (pos == order.size()) {
            solutions.push_back(assign_);
            return;
        }
        const Cell c = order[pos];
        for (const Cell d : dst_.cells(c.dim)) {
            if (++nodes > options_.node_budget)
                throw ResourceLimit("morphism search exceeded its node budget", options_.node_budget);
            const std::size_t mark = trail_.size();
            if (assign(c, d)) solve(pos + 1);
            undo(mark);
            if (solutions.size() >= options_.max_solutions) return;
        }
    }

    const PrecubicalSet& src_;
    const PrecubicalSet& dst_;
    const std::function<bool(Cell, Cell)>& allowed_;
    const SearchOptions& options_;
    PcMorphism::Table assign_;
    std::vector<std::vector<char>> used_;
    std::vector<Cell> trail_;
    const std::vector<Cell>* order_ = nullptr;
};

// Breadth-first order over the face/coface graph so that every decision cell
// touches an already-decided one whenever possible.
std::vector<Cell> decision_order(const PrecubicalSet& x, std::span<const std::pair<Cell, Cell>> fixed) {
    std::vector<std::vector<std::vector<Cell>>> cofaces(x.levels());
    for (std::uint32_t d = 0; d < x.levels(); ++d) cofaces[d].resize(x.size(d));
    for (std::uint32_t d = 1; d < x.levels(); ++d)
        for (const Cell c : x.cells(d))
            for (unsigned i = 1; i <= d; ++i)
                for (unsigned a = 0; a < 2; ++a) {
                    const Cell f = x.face(c, i, a);
                    cofaces[f.dim][f.index].push_back(c);
                }

    std::vector<std::vector<char>> seen(x.levels());
    for (std::uint32_t d = 0; d < x.levels(); ++d) seen[d].assign(x.size(d), 0);
    std::vector<Cell> order;
    order.reserve(x.total_size());
    std::deque<Cell> queue;
    auto visit = [&](Cell c) {
        if (seen[c.dim][c.index]) return;
        seen[c.dim][c.index] = 1;
        queue.push_back(c);
    };
    auto drain = [&] {
        while (!queue.empty()) {
            const Cell c = queue.front();
            queue.pop_front();
            order.push_back(c);
            for (const Cell up : cofaces[c.dim][c.index]) visit(up);
            for (unsigned i = 1; i <= c.dim; ++i)
                for (unsigned a = 0; a < 2; ++a) visit(x.face(c, i, a));
        }
    };
    for (const auto& [from, to] : fixed) visit(from);
    drain();
    for (std::uint32_t d = static_cast<std::uint32_t>(x.levels()); d-- > 0;)
        for (const Cell c : x.cells(d)) {
            visit(c);
            drain();
        }
    return order;
}

}  // namespace

SearchResult search_morphisms(const ComplexPtr& source, const ComplexPtr& target,
                              std::span<const std::pair<Cell, Cell>> fixed,
                              const std::function<bool(Cell, Cell)>& allowed, const SearchOptions& options) {
    SearchResult result;
    MorphismSearch search(*source, *target, allowed, options);
    for (const auto& [from, to] : fixed)
        if (!search.pin(from, to)) return result;
    search.run(decision_order(*source, fixed));
    result.nodes = search.nodes;
    for (auto& table : search.solutions) result.found.emplace_back(source, target, std::move(table));
    return result;
}

namespace {

// Per-cell count of cofaces in each (direction, sign) slot.
std::vector<std::vector<std::vector<std::uint32_t>>> coface_signature(const PrecubicalSet& x) {
    std::vector<std::vector<std::vector<std::uint32_t>>> sig(x.levels());
    for (std::uint32_t d = 0; d < x.levels(); ++d) sig[d].resize(x.size(d));
    for (std::uint32_t d = 1; d < x.levels(); ++d)
        for (const Cell c : x.cells(d))
            for (unsigned i = 1; i <= d; ++i)
                for (unsigned a = 0; a < 2; ++a) {
                    const Cell f = x.face(c, i, a);
                    auto& s = sig[f.dim][f.index];
                    const std::size_t slot = 2 * (i - 1) + a;
                    if (s.size() <= slot) s.resize(slot + 1, 0);
                    ++s[slot];
                }
    return sig;
}

}  // namespace

std::optional<PcMorphism> is_isomorphic(const ComplexPtr& x, const ComplexPtr& y, std::size_t node_budget) {
    if (x->levels() != y->levels()) return std::nullopt;
    for (std::uint32_t d = 0; d < x->levels(); ++d)
        if (x->size(d) != y->size(d)) return std::nullopt;

    const auto sx = coface_signature(*x);
    const auto sy = coface_signature(*y);
    auto same_shape = [&](Cell a, Cell b) { return sx[a.dim][a.index] == sy[b.dim][b.index]; };

    SearchOptions options;
    options.injective = true;
    options.max_solutions = 1;
    options.node_budget = node_budget;
    auto result = search_morphisms(x, y, {}, same_shape, options);
    if (result.found.empty()) return std::nullopt;
    return std::move(result.found.front());
}

}  // namespace dtop
