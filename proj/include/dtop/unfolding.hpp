#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dtop/dicovering.hpp"
#include "dtop/dihomotopy.hpp"
#include "dtop/morphism.hpp"

namespace dtop {

/// A vertex of the unfolding: one dihomotopy class of paths from the basepoint.
struct UnfoldingState {
    EdgePath canonical;
    std::size_t class_size = 0;
    std::size_t level = 0;  // common length of the member paths
};

struct Unfolding {
    ComplexPtr total;
    PcMorphism projection;
    /// Indexed by vertex index of `total`.
    std::vector<UnfoldingState> states;
    /// Vertex of `total` holding the constant path at each seed.
    std::vector<Cell> roots;
    bool complete = false;
    std::size_t depth = 0;
};

/// Universal dicovering of X at x0, truncated at `depth` edges.
///
/// Vertices are dihomotopy classes of paths from x0 with at most `depth`
/// edges; every cell c of X is lifted once per class ending at its minimal
/// corner, provided its maximal corner is still within the depth bound. A
/// lifted cell is named "<c>#<k>", k counting the classes at min_corner(c) in
/// order of discovery. `complete` is true iff no path of length depth + 1
/// leaves x0, in which case the projection is a dicovering.
Unfolding unfold(const ComplexPtr& x, Cell x0, std::size_t depth, std::size_t class_budget = 1'000'000);

/// The same construction seeded from any set of vertices (possibly none).
Unfolding unfold_from(const ComplexPtr& x, std::span<const Cell> seeds, std::size_t depth,
                      std::size_t class_budget = 1'000'000);

struct InitialFactorization {
    PcMorphism left;   // empty -> middle
    PcMorphism right;  // middle -> X
    bool middle_empty = true;
};

/// Factorization of the empty morphism into X by the same attachment loop,
/// seeded with nothing. No generator square has a point to start from, so the
/// loop attaches nothing and the middle object is empty.
InitialFactorization factor_initial(const ComplexPtr& x);

struct UniversalityOutcome {
    Cell basepoint_lift;  // vertex of the catalog entry's source over x0
    enum class Result { kUnique, kNone, kAmbiguous, kResourceLimit } result = Result::kNone;
    std::optional<PcMorphism> phi;
    std::string detail;
};

struct UniversalityEntry {
    std::string label;
    DicoveringVerdict verdict;
    bool skipped = false;  // not a dicovering at x0
    std::vector<UniversalityOutcome> outcomes;
    bool pass = false;
};

struct UniversalityReport {
    std::size_t depth = 0;
    bool unfolding_complete = false;
    std::vector<UniversalityEntry> entries;
    bool pass = false;  // every non-skipped entry passed
};

/// For every catalog morphism into X that is a dicovering at x0, checks that
/// the truncated unfolding factors through it uniquely for each lift of x0.
UniversalityReport universal_property_suite(const ComplexPtr& x, Cell x0, std::size_t depth,
                                            std::span<const PcMorphism> catalog,
                                            std::span<const std::string> labels = {},
                                            std::size_t budget = 1'000'000);

}  // namespace dtop
