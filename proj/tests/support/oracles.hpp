#pragma once

// Brute-force reference computations for the tests. They read only cell names
// and raw face entries, never the adjacency caches, square index or search
// code of the library, so agreement is meaningful.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dtop/morphism.hpp"
#include "dtop/precubical.hpp"

namespace oracle {

using dtop::Cell;
using dtop::PrecubicalSet;
using NamePath = std::vector<std::string>;

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::size_t factorial(std::size_t n) {
    std::size_t r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Number of k-cells of the n-cube.
inline std::size_t cube_cells(std::size_t n, std::size_t k) { return binomial(n, k) << (n - k); }

inline std::string src(const PrecubicalSet& x, Cell e) { return x.name(*x.try_face(e, 1, 0)); }
inline std::string tgt(const PrecubicalSet& x, Cell e) { return x.name(*x.try_face(e, 1, 1)); }

namespace detail {
inline void dfs(const PrecubicalSet& x, const std::string& at, const std::string& b, std::size_t left, NamePath& cur,
                std::vector<NamePath>& out) {
    if (at == b) out.push_back(cur);
    if (left == 0) return;
    for (const Cell e : x.edges()) {
        if (src(x, e) != at) continue;
        cur.push_back(x.name(e));
        dfs(x, tgt(x, e), b, left - 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// Every edge sequence a -> b with at most max_len edges, by scanning all edges at each step.
inline std::vector<NamePath> raw_paths(const PrecubicalSet& x, const std::string& a, const std::string& b,
                                       std::size_t max_len) {
    std::vector<NamePath> out;
    NamePath cur;
    detail::dfs(x, a, b, max_len, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// True when p and q differ by swapping the two boundary words of one square.
inline bool one_move_apart(const PrecubicalSet& x, const NamePath& p, const NamePath& q) {
    if (p.size() != q.size() || p == q) return false;
    std::size_t k = 0;
    while (p[k] == q[k]) ++k;
    if (k + 1 >= p.size() || !std::equal(p.begin() + k + 2, p.end(), q.begin() + k + 2)) return false;
    for (const Cell c : x.cells(2)) {
        auto nm = [&](unsigned i, unsigned a) { return x.name(*x.try_face(c, i, a)); };
        const NamePath br{nm(2, 0), nm(1, 1)};
        const NamePath lt{nm(1, 0), nm(2, 1)};
        const NamePath pw{p[k], p[k + 1]};
        const NamePath qw{q[k], q[k + 1]};
        if ((pw == br && qw == lt) || (pw == lt && qw == br)) return true;
    }
    return false;
}

/// Connected components of the pairwise move graph; each class sorted, classes
/// sorted by their least member.
inline std::vector<std::vector<NamePath>> move_graph_classes(const PrecubicalSet& x, const std::vector<NamePath>& paths) {
    std::vector<std::size_t> parent(paths.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            if (one_move_apart(x, paths[i], paths[j])) parent[root(i)] = root(j);
    std::map<std::size_t, std::vector<NamePath>> groups;
    for (std::size_t i = 0; i < paths.size(); ++i) groups[root(i)].push_back(paths[i]);
    std::vector<std::vector<NamePath>> out;
    for (auto& [r, g] : groups) {
        std::sort(g.begin(), g.end());
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Reflexive-transitive closure of the edge relation on vertex indices.
inline std::vector<std::vector<bool>> warshall(const PrecubicalSet& x) {
    const std::size_t n = x.size(0);
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (const Cell e : x.edges()) r[x.try_face(e, 1, 0)->index][x.try_face(e, 1, 1)->index] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

/// All paths of Y from y0 that map edge by edge onto `base` (names of X edges).
inline std::vector<NamePath> brute_lifts(const dtop::PcMorphism& p, const NamePath& base, const std::string& y0) {
    const PrecubicalSet& y = p.source();
    const PrecubicalSet& x = p.target();
    std::vector<NamePath> out;
    NamePath cur;
    auto go = [&](auto&& self, const std::string& at) -> void {
        if (cur.size() == base.size()) {
            out.push_back(cur);
            return;
        }
        for (const Cell e : y.edges()) {
            if (src(y, e) != at || x.name(p(e)) != base[cur.size()]) continue;
            cur.push_back(y.name(e));
            self(self, tgt(y, e));
            cur.pop_back();
        }
    };
    go(go, y0);
    return out;
}

/// Random walk of up to `len` edges from v; stops early at a sink.
inline NamePath random_walk(const PrecubicalSet& x, std::string v, std::size_t len, std::mt19937& rng) {
    NamePath out;
    for (std::size_t k = 0; k < len; ++k) {
        std::vector<Cell> next;
        for (const Cell e : x.edges())
            if (src(x, e) == v) next.push_back(e);
        if (next.empty()) break;
        const Cell e = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
        out.push_back(x.name(e));
        v = tgt(x, e);
    }
    return out;
}

}  // namespace oracle
