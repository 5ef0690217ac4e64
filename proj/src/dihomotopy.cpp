#include "dtop/dihomotopy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "dtop/error.hpp"

namespace dtop {

namespace {

std::uint64_t pair_key(Cell a, Cell b) { return (static_cast<std::uint64_t>(a.index) << 32) | b.index; }

Word other(Word w) { return w == Word::kBottomRight ? Word::kLeftTop : Word::kBottomRight; }

}  // namespace

ElementaryMove reverse(const ElementaryMove& move) { return {move.position, move.square, other(move.replaced)}; }

SquareIndex::SquareIndex(const PrecubicalSet& x) : x_(&x) {
    for (const Cell s : x.cells(2))
        for (Word w : {Word::kBottomRight, Word::kLeftTop}) {
            const auto [first, second] = word(s, w);
            by_pair_[pair_key(first, second)].push_back({s, w});
        }
}

std::pair<Cell, Cell> SquareIndex::word(Cell square, Word w) const {
    if (w == Word::kBottomRight) return {x_->face(square, 2, 0), x_->face(square, 1, 1)};
    return {x_->face(square, 1, 0), x_->face(square, 2, 1)};
}

std::span<const SquareIndex::Hit> SquareIndex::squares_with_word(Cell first, Cell second) const {
    auto it = by_pair_.find(pair_key(first, second));
    if (it == by_pair_.end()) return {};
    return it->second;
}

EdgePath apply_move(const PrecubicalSet& x, const EdgePath& p, const ElementaryMove& move) {
    if (move.square.dim != 2 || !x.contains(move.square)) throw std::invalid_argument("move square is not a 2-cell");
    if (move.position + 1 >= p.edges.size()) throw std::invalid_argument("move position out of range");
    SquareIndex index(x);
    const auto from = index.word(move.square, move.replaced);
    const auto to = index.word(move.square, other(move.replaced));
    if (p.edges[move.position] != from.first || p.edges[move.position + 1] != from.second)
        throw std::invalid_argument("move does not match the path");
    EdgePath out = p;
    out.edges[move.position] = to.first;
    out.edges[move.position + 1] = to.second;
    return out;
}

std::vector<std::pair<ElementaryMove, EdgePath>> elementary_moves(const SquareIndex& index, const PrecubicalSet&,
                                                                  const EdgePath& p) {
    std::vector<std::pair<ElementaryMove, EdgePath>> out;
    for (std::size_t k = 0; k + 1 < p.edges.size(); ++k) {
        const auto found = index.squares_with_word(p.edges[k], p.edges[k + 1]);
        std::vector<SquareIndex::Hit> hits(found.begin(), found.end());
        std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
            return std::pair(a.square, a.word) < std::pair(b.square, b.word);
        });
        for (const auto& hit : hits) {
            const auto to = index.word(hit.square, other(hit.word));
            if (to.first == p.edges[k] && to.second == p.edges[k + 1]) continue;
            EdgePath q = p;
            q.edges[k] = to.first;
            q.edges[k + 1] = to.second;
            out.emplace_back(ElementaryMove{k, hit.square, hit.word}, std::move(q));
        }
    }
    return out;
}

std::vector<std::pair<ElementaryMove, EdgePath>> elementary_moves(const PrecubicalSet& x, const EdgePath& p) {
    check_path(x, p);
    return elementary_moves(SquareIndex(x), x, p);
}

DihomotopyWitness dihomotopic(const PrecubicalSet& x, const EdgePath& p, const EdgePath& q, std::size_t budget) {
    check_path(x, p);
    check_path(x, q);
    DihomotopyWitness result;
    if (p.start != q.start || path_end(x, p) != path_end(x, q) || p.length() != q.length()) return result;
    if (p == q) {
        result.dihomotopic = true;
        return result;
    }
    const SquareIndex index(x);
    struct Visit {
        std::size_t parent;
        ElementaryMove move;
    };
    std::vector<EdgePath> nodes{p};
    std::vector<Visit> visits{{0, {}}};
    std::unordered_map<EdgePath, std::size_t, EdgePathHash> seen{{p, 0}};
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        for (auto& [move, next] : elementary_moves(index, x, nodes[head])) {
            if (seen.contains(next)) continue;
            if (nodes.size() >= budget) throw ResourceLimit("dihomotopy search exceeded its budget", budget);
            const bool found = next == q;
            seen.emplace(next, nodes.size());
            nodes.push_back(std::move(next));
            visits.push_back({head, move});
            if (found) {
                result.dihomotopic = true;
                for (std::size_t at = nodes.size() - 1; at != 0; at = visits[at].parent)
                    result.moves.push_back(visits[at].move);
                std::reverse(result.moves.begin(), result.moves.end());
                return result;
            }
        }
    }
    return result;
}

std::vector<EdgePath> materialize_class(const SquareIndex& index, const PrecubicalSet& x, const EdgePath& p,
                                        std::size_t budget) {
    std::vector<EdgePath> members{p};
    std::unordered_map<EdgePath, char, EdgePathHash> seen{{p, 1}};
    for (std::size_t head = 0; head < members.size(); ++head)
        for (auto& [move, next] : elementary_moves(index, x, members[head])) {
            if (seen.contains(next)) continue;
            if (members.size() >= budget) throw ResourceLimit("dihomotopy class exceeded its budget", budget);
            seen.emplace(next, 1);
            members.push_back(std::move(next));
        }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<DihomotopyClass> partition_into_classes(const PrecubicalSet& x, std::span<const EdgePath> paths) {
    const SquareIndex index(x);
    std::unordered_map<EdgePath, std::size_t, EdgePathHash> position;
    for (std::size_t k = 0; k < paths.size(); ++k) position.emplace(paths[k], k);

    std::vector<std::size_t> parent(paths.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (std::size_t k = 0; k < paths.size(); ++k)
        for (const auto& [move, next] : elementary_moves(index, x, paths[k])) {
            auto it = position.find(next);
            if (it == position.end()) continue;
            const std::size_t a = find(k);
            const std::size_t b = find(it->second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::unordered_map<std::size_t, std::size_t> slot;
    std::vector<DihomotopyClass> out;
    for (std::size_t k = 0; k < paths.size(); ++k) {
        const std::size_t root = find(k);
        auto [it, fresh] = slot.emplace(root, out.size());
        if (fresh) {
            const Cell start = paths[k].start;
            out.push_back({start, path_end(x, paths[k]), paths[k], {}});
        }
        out[it->second].members.push_back(paths[k]);
    }
    for (auto& c : out) {
        std::sort(c.members.begin(), c.members.end());
        c.canonical = c.members.front();
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.canonical < b.canonical; });
    return out;
}

std::vector<DihomotopyClass> classes(const PrecubicalSet& x, Cell a, Cell b, std::size_t max_len,
                                     std::size_t budget) {
    auto paths = enumerate_paths(x, a, b, max_len);
    if (paths.size() > budget) throw ResourceLimit("path enumeration exceeded its budget", budget);
    return partition_into_classes(x, paths);
}

bool length_bound_saturated(const PrecubicalSet& x, Cell a, Cell b, std::size_t max_len) {
    if (!reaches(x, a, b)) return true;
    auto longest = longest_path_length(x, a, b);
    return longest && *longest <= max_len;
}

}  // namespace dtop
