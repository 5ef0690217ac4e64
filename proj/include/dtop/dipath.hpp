#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "dtop/precubical.hpp"

namespace dtop {

/// A dipath up to reparametrization: start vertex plus composable edges.
/// The empty edge list is the constant path at `start`.
struct EdgePath {
    Cell start;
    std::vector<Cell> edges;

    std::size_t length() const noexcept { return edges.size(); }

    friend bool operator==(const EdgePath&, const EdgePath&) = default;
    /// Lexicographic by start, then edge sequence (a prefix sorts first).
    friend auto operator<=>(const EdgePath& a, const EdgePath& b) {
        if (auto c = a.start <=> b.start; c != 0) return c;
        return std::lexicographical_compare_three_way(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                                      b.edges.end());
    }
};

struct EdgePathHash {
    std::size_t operator()(const EdgePath& p) const noexcept;
};

EdgePath constant_path(Cell vertex);

/// Throws InvalidPath if `p` breaks the incidence invariant in X.
void check_path(const PrecubicalSet& x, const EdgePath& p);
bool is_valid_path(const PrecubicalSet& x, const EdgePath& p);

Cell path_end(const PrecubicalSet& x, const EdgePath& p);

/// Throws EndpointMismatch unless path_end(p) == q.start.
EdgePath concat(const PrecubicalSet& x, const EdgePath& p, const EdgePath& q);

/// All paths a -> b with at most max_len edges, in lexicographic order of
/// edge ids. Contains the constant path iff a == b.
std::vector<EdgePath> enumerate_paths(const PrecubicalSet& x, Cell a, Cell b, std::size_t max_len);

/// Longest a -> b path length, or nullopt when a directed cycle lies on some
/// a -> b route (unbounded) or b is unreachable from a.
std::optional<std::size_t> longest_path_length(const PrecubicalSet& x, Cell a, Cell b);
bool reaches(const PrecubicalSet& x, Cell a, Cell b);

/// Reflexive, transitive relation on vertices: x <= y iff a dipath runs x -> y.
class Preorder {
public:
    explicit Preorder(std::size_t n) : n_(n), rel_(n * n, 0) {}

    std::size_t size() const noexcept { return n_; }
    bool related(std::size_t x, std::size_t y) const { return rel_.at(x * n_ + y) != 0; }
    void set(std::size_t x, std::size_t y) { rel_.at(x * n_ + y) = 1; }

    bool is_reflexive() const;
    bool is_transitive() const;
    bool is_antisymmetric() const;
    std::size_t pair_count() const;

    friend bool operator==(const Preorder&, const Preorder&) = default;

private:
    std::size_t n_;
    std::vector<char> rel_;
};

Preorder reachability_preorder(const PrecubicalSet& x);

}  // namespace dtop
