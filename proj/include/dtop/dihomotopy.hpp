#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dtop/dipath.hpp"
#include "dtop/precubical.hpp"

namespace dtop {

/// The two monotone boundary words of a square c:
///   bottom-right = [d^0_2 c, d^1_1 c],  left-top = [d^0_1 c, d^1_2 c].
/// `replaced` names the word found in the path; the move swaps in the other one.
enum class Word { kBottomRight, kLeftTop };

struct ElementaryMove {
    std::size_t position = 0;
    Cell square;
    Word replaced = Word::kBottomRight;

    friend bool operator==(const ElementaryMove&, const ElementaryMove&) = default;
};

/// The same move seen from the other side.
ElementaryMove reverse(const ElementaryMove& move);

/// Lookup from consecutive edge pairs to the squares whose boundary words they form.
class SquareIndex {
public:
    explicit SquareIndex(const PrecubicalSet& x);

    struct Hit {
        Cell square;
        Word word;
    };
    std::span<const Hit> squares_with_word(Cell first, Cell second) const;

    std::pair<Cell, Cell> word(Cell square, Word w) const;

private:
    const PrecubicalSet* x_;
    std::unordered_map<std::uint64_t, std::vector<Hit>> by_pair_;
};

/// Throws std::invalid_argument if the move does not apply to p.
EdgePath apply_move(const PrecubicalSet& x, const EdgePath& p, const ElementaryMove& move);

/// All single-move neighbours of p (moves that change the path), ordered by
/// position, then square, then replaced word.
std::vector<std::pair<ElementaryMove, EdgePath>> elementary_moves(const PrecubicalSet& x, const EdgePath& p);
std::vector<std::pair<ElementaryMove, EdgePath>> elementary_moves(const SquareIndex& index, const PrecubicalSet& x,
                                                                  const EdgePath& p);

struct DihomotopyWitness {
    bool dihomotopic = false;
    /// Moves that turn p into q, in order; empty when p == q.
    std::vector<ElementaryMove> moves;
};

/// Breadth-first search over the move graph from p. Different endpoints give
/// false without searching. Throws ResourceLimit when more than `budget` paths
/// are visited.
DihomotopyWitness dihomotopic(const PrecubicalSet& x, const EdgePath& p, const EdgePath& q,
                              std::size_t budget = 1'000'000);

/// Every path move-connected to p, sorted; throws ResourceLimit past `budget`.
std::vector<EdgePath> materialize_class(const SquareIndex& index, const PrecubicalSet& x, const EdgePath& p,
                                        std::size_t budget = 1'000'000);

struct DihomotopyClass {
    Cell from;
    Cell to;
    EdgePath canonical;
    std::vector<EdgePath> members;

    std::size_t size() const noexcept { return members.size(); }
};

/// Partition of an arbitrary path list into move-connected components, with
/// canonical representatives (least member) and classes sorted by them.
std::vector<DihomotopyClass> partition_into_classes(const PrecubicalSet& x, std::span<const EdgePath> paths);

/// Classes of enumerate_paths(x, a, b, max_len). Throws ResourceLimit when
/// more than `budget` paths would be materialized.
std::vector<DihomotopyClass> classes(const PrecubicalSet& x, Cell a, Cell b, std::size_t max_len,
                                     std::size_t budget = 1'000'000);

/// True when no a -> b path is longer than max_len, i.e. classification at
/// this bound is exact.
bool length_bound_saturated(const PrecubicalSet& x, Cell a, Cell b, std::size_t max_len);

}  // namespace dtop
