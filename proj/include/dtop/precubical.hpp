#pragma once

// Finite precubical sets: graded cells with face maps d^alpha_i, no degeneracies.
//
// Conventions used everywhere in the library:
//   * directions are 1-based, signs are 0 or 1;
//   * a cell of dimension n has faces (i, alpha) for 1 <= i <= n;
//   * cubical identity: face(face(c, j, b), i, a) == face(face(c, i, a), j - 1, b) for i < j;
//   * cells inside one dimension are stored sorted by name, so comparing cell
//     indices orders cells exactly like comparing their serialized ids.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dtop {

struct Cell {
    std::uint32_t dim = 0;
    std::uint32_t index = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
        return (static_cast<std::size_t>(c.dim) << 32) ^ c.index;
    }
};

/// A face entry whose target could not be resolved when the set was built.
struct DanglingFace {
    Cell cell;
    unsigned direction;
    unsigned sign;
    std::string target;
    std::string reason;
};

class PrecubicalSet {
public:
    static constexpr std::uint32_t kNone = 0xffffffffu;

    class Builder;

    PrecubicalSet() = default;

    /// Number of populated dimensions (highest dimension + 1); 0 for the empty set.
    std::size_t levels() const noexcept { return names_.size(); }
    std::size_t size(std::uint32_t dim) const noexcept {
        return dim < names_.size() ? names_[dim].size() : 0;
    }
    std::size_t total_size() const noexcept;
    bool empty() const noexcept { return names_.empty(); }

    std::vector<Cell> cells(std::uint32_t dim) const;
    std::vector<Cell> all_cells() const;
    std::vector<Cell> vertices() const { return cells(0); }
    std::vector<Cell> edges() const { return cells(1); }

    const std::string& name(Cell c) const { return names_.at(c.dim).at(c.index); }
    std::optional<Cell> find(std::string_view name) const;
    /// Lookup that throws InputError for unknown names.
    Cell at(std::string_view name) const;
    bool contains(Cell c) const noexcept { return c.dim < names_.size() && c.index < names_[c.dim].size(); }

    std::optional<Cell> try_face(Cell c, unsigned direction, unsigned sign) const;
    /// Face lookup; throws std::logic_error on a missing entry (invalid sets only).
    Cell face(Cell c, unsigned direction, unsigned sign) const;

    Cell source(Cell edge) const { return face(edge, 1, 0); }
    Cell target(Cell edge) const { return face(edge, 1, 1); }

    /// Outgoing / incoming edges of a vertex, sorted by edge id.
    std::span<const Cell> out_edges(Cell vertex) const;
    std::span<const Cell> in_edges(Cell vertex) const;

    /// Corner reached by taking every face with sign 0 (resp. 1).
    Cell min_corner(Cell c) const;
    Cell max_corner(Cell c) const;

    /// The 1-dimensional face of c along `direction` that starts at min_corner(c).
    Cell edge_from_min_corner(Cell c, unsigned direction) const;

    std::span<const DanglingFace> dangling() const noexcept { return dangling_; }

    friend bool operator==(const PrecubicalSet& a, const PrecubicalSet& b) {
        return a.names_ == b.names_ && a.faces_ == b.faces_;
    }

    /// Copy with one face entry redirected (used to build corrupted inputs).
    PrecubicalSet with_face(Cell c, unsigned direction, unsigned sign, Cell target) const;

private:
    friend class Builder;

    std::size_t slot(Cell c, unsigned direction, unsigned sign) const noexcept {
        return static_cast<std::size_t>(c.index) * 2 * c.dim + 2 * (direction - 1) + sign;
    }
    void index_names();
    void index_adjacency();

    std::vector<std::vector<std::string>> names_;
    // faces_[n] holds 2n entries per n-cell; faces_[0] is unused.
    std::vector<std::vector<std::uint32_t>> faces_;
    std::unordered_map<std::string, Cell> lookup_;
    std::vector<DanglingFace> dangling_;
    std::vector<std::vector<Cell>> out_;
    std::vector<std::vector<Cell>> in_;
};

using ComplexPtr = std::shared_ptr<const PrecubicalSet>;

inline ComplexPtr share(PrecubicalSet x) { return std::make_shared<const PrecubicalSet>(std::move(x)); }

/// Name-based incremental construction. Faces may reference cells added later.
class PrecubicalSet::Builder {
public:
    /// Throws InputError on a duplicate name.
    void add_cell(std::uint32_t dim, std::string name);
    /// Throws InputError when the cell is unknown or the direction is out of range.
    void set_face(std::string_view cell, unsigned direction, unsigned sign, std::string target);

    bool has_cell(std::string_view name) const { return dims_.contains(std::string(name)); }

    /// Sorts cells by name and resolves face targets. Unresolvable targets are
    /// kept as dangling entries so that `validate` can report them.
    PrecubicalSet build() const;

private:
    std::map<std::string, std::uint32_t> dims_;
    std::map<std::pair<std::string, unsigned>, std::string> faces_;
};

enum class ViolationKind { kMissingFace, kDanglingFace, kCubicalIdentity };

struct Violation {
    ViolationKind kind;
    std::string cell;
    unsigned i = 0;
    unsigned j = 0;
    unsigned alpha = 0;
    unsigned beta = 0;
    std::string message;
};

std::string_view to_string(ViolationKind kind);

/// Every broken invariant of X; empty iff X is a valid precubical set.
std::vector<Violation> validate(const PrecubicalSet& x);

}  // namespace dtop
