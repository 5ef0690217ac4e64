#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dtop/precubical.hpp"

namespace dtop {

/// Dimension-preserving cell map commuting with every face map.
class PcMorphism {
public:
    using Table = std::vector<std::vector<std::uint32_t>>;

    PcMorphism(ComplexPtr source, ComplexPtr target, Table map);

    const PrecubicalSet& source() const noexcept { return *source_; }
    const PrecubicalSet& target() const noexcept { return *target_; }
    const ComplexPtr& source_ptr() const noexcept { return source_; }
    const ComplexPtr& target_ptr() const noexcept { return target_; }
    const Table& table() const noexcept { return map_; }

    /// Throws std::logic_error on an unmapped cell.
    Cell operator()(Cell c) const;
    std::optional<Cell> try_apply(Cell c) const;

    /// Human-readable description of every broken invariant; empty iff valid.
    std::vector<std::string> check() const;
    bool is_valid() const { return check().empty(); }

    friend bool operator==(const PcMorphism& a, const PcMorphism& b);

private:
    ComplexPtr source_;
    ComplexPtr target_;
    Table map_;
};

PcMorphism identity(ComplexPtr x);
/// g after f; requires f.target() == g.source() structurally.
PcMorphism compose(const PcMorphism& g, const PcMorphism& f);

/// Builds a morphism from name pairs; unmentioned cells stay unmapped.
PcMorphism morphism_from_names(ComplexPtr source, ComplexPtr target,
                               std::span<const std::pair<std::string, std::string>> pairs);

struct SearchOptions {
    bool injective = false;
    std::size_t max_solutions = static_cast<std::size_t>(-1);
    std::size_t node_budget = 1'000'000;
};

struct SearchResult {
    std::vector<PcMorphism> found;
    std::size_t nodes = 0;
};

/// Backtracking enumeration of morphisms source -> target.
///
/// `fixed` pins some assignments up front; `allowed(from, to)` prunes candidate
/// images. Assigning a cell forces all of its faces, so a conflict is found as
/// soon as two cofaces disagree on a shared face. Throws ResourceLimit when
/// more than `node_budget` candidate assignments are tried.
SearchResult search_morphisms(const ComplexPtr& source, const ComplexPtr& target,
                              std::span<const std::pair<Cell, Cell>> fixed,
                              const std::function<bool(Cell, Cell)>& allowed, const SearchOptions& options);

/// A face-preserving bijection X -> Y, if one exists.
std::optional<PcMorphism> is_isomorphic(const ComplexPtr& x, const ComplexPtr& y,
                                        std::size_t node_budget = 1'000'000);

}  // namespace dtop
