#include "dtop/dipath.hpp"

#include <deque>
#include <functional>

#include "dtop/error.hpp"

namespace dtop {

std::size_t EdgePathHash::operator()(const EdgePath& p) const noexcept {
    std::size_t h = CellHash{}(p.start);
    for (const Cell e : p.edges) h = h * 1000003u ^ e.index;
    return h;
}

EdgePath constant_path(Cell vertex) { return EdgePath{vertex, {}}; }

void check_path(const PrecubicalSet& x, const EdgePath& p) {
    if (p.start.dim != 0 || !x.contains(p.start)) throw InvalidPath("path start is not a vertex");
    Cell at = p.start;
    for (std::size_t k = 0; k < p.edges.size(); ++k) {
        const Cell e = p.edges[k];
        if (e.dim != 1 || !x.contains(e)) throw InvalidPath("path entry " + std::to_string(k) + " is not an edge");
        auto s = x.try_face(e, 1, 0);
        auto t = x.try_face(e, 1, 1);
        if (!s || !t) throw InvalidPath("edge '" + x.name(e) + "' lacks endpoints");
        if (*s != at)
            throw InvalidPath("edge '" + x.name(e) + "' at position " + std::to_string(k) + " does not start at '" +
                              x.name(at) + "'");
        at = *t;
    }
}

bool is_valid_path(const PrecubicalSet& x, const EdgePath& p) {
    try {
        check_path(x, p);
        return true;
    } catch (const InvalidPath&) {
        return false;
    }
}

Cell path_end(const PrecubicalSet& x, const EdgePath& p) {
    check_path(x, p);
    return p.edges.empty() ? p.start : x.target(p.edges.back());
}

EdgePath concat(const PrecubicalSet& x, const EdgePath& p, const EdgePath& q) {
    const Cell end = path_end(x, p);
    check_path(x, q);
    if (end != q.start)
        throw EndpointMismatch("cannot concatenate: first path ends at '" + x.name(end) + "', second starts at '" +
                               x.name(q.start) + "'");
    EdgePath out = p;
    out.edges.insert(out.edges.end(), q.edges.begin(), q.edges.end());
    return out;
}

namespace {

// Edge distance from each vertex to b (backwards BFS); -1 if b is unreachable.
std::vector<long> distance_to(const PrecubicalSet& x, Cell b) {
    std::vector<long> dist(x.size(0), -1);
    std::deque<Cell> queue{b};
    dist[b.index] = 0;
    while (!queue.empty()) {
        const Cell v = queue.front();
        queue.pop_front();
        for (const Cell e : x.in_edges(v)) {
            const Cell u = x.source(e);
            if (dist[u.index] < 0) {
                dist[u.index] = dist[v.index] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

std::vector<char> forward_reach(const PrecubicalSet& x, Cell a) {
    std::vector<char> seen(x.size(0), 0);
    std::deque<Cell> queue{a};
    seen[a.index] = 1;
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

std::vector<EdgePath> enumerate_paths(const PrecubicalSet& x, Cell a, Cell b, std::size_t max_len) {
    if (a.dim != 0 || b.dim != 0 || !x.contains(a) || !x.contains(b))
        throw InputError("enumerate_paths: endpoints must be vertices");
    const auto dist = distance_to(x, b);
    std::vector<EdgePath> out;
    EdgePath cur{a, {}};
    // Depth-first in sorted edge order emits paths in lexicographic order.
    std::function<void(Cell)> dfs = [&](Cell v) {
        if (v == b) out.push_back(cur);
        for (const Cell e : x.out_edges(v)) {
            const Cell w = x.target(e);
            if (dist[w.index] < 0) continue;
            if (cur.edges.size() + 1 + static_cast<std::size_t>(dist[w.index]) > max_len) continue;
            cur.edges.push_back(e);
            dfs(w);
            cur.edges.pop_back();
        }
    };
    if (dist[a.index] >= 0) dfs(a);
    return out;
}

bool reaches(const PrecubicalSet& x, Cell a, Cell b) { return forward_reach(x, a)[b.index] != 0; }

std::optional<std::size_t> longest_path_length(const PrecubicalSet& x, Cell a, Cell b) {
    const auto from_a = forward_reach(x, a);
    const auto to_b = distance_to(x, b);
    if (!from_a[b.index]) return std::nullopt;
    auto on_route = [&](Cell v) { return from_a[v.index] && to_b[v.index] >= 0; };

    // Longest path by memoized DFS; a grey vertex revisited means a cycle on a route.
    enum : char { kWhite, kGrey, kBlack };
    std::vector<char> colour(x.size(0), kWhite);
    std::vector<std::size_t> best(x.size(0), 0);
    bool cyclic = false;
    std::function<void(Cell)> visit = [&](Cell v) {
        colour[v.index] = kGrey;
        std::size_t longest = 0;
        for (const Cell e : x.out_edges(v)) {
            const Cell w = x.target(e);
            if (!on_route(w)) continue;
            if (colour[w.index] == kGrey) {
                cyclic = true;
                continue;
            }
            if (colour[w.index] == kWhite) visit(w);
            longest = std::max(longest, best[w.index] + 1);
        }
        best[v.index] = longest;
        colour[v.index] = kBlack;
    };
    visit(a);
    if (cyclic) return std::nullopt;
    return best[a.index];
}

bool Preorder::is_reflexive() const {
    for (std::size_t x = 0; x < n_; ++x)
        if (!related(x, x)) return false;
    return true;
}

bool Preorder::is_transitive() const {
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = 0; y < n_; ++y)
            if (related(x, y))
                for (std::size_t z = 0; z < n_; ++z)
                    if (related(y, z) && !related(x, z)) return false;
    return true;
}

bool Preorder::is_antisymmetric() const {
    for (std::size_t x = 0; x < n_; ++x)
        for (std::size_t y = x + 1; y < n_; ++y)
            if (related(x, y) && related(y, x)) return false;
    return true;
}

std::size_t Preorder::pair_count() const {
    std::size_t n = 0;
    for (char c : rel_) n += c ? 1 : 0;
    return n;
}

Preorder reachability_preorder(const PrecubicalSet& x) {
    Preorder order(x.size(0));
    for (const Cell v : x.vertices()) {
        const auto seen = forward_reach(x, v);
        for (std::size_t w = 0; w < seen.size(); ++w)
            if (seen[w]) order.set(v.index, w);
    }
    return order;
}

}  // namespace dtop
