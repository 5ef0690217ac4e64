#pragma once

// Dicoverings: morphisms p: Y -> X with unique lifting against the generators
// {0 -> I} (dipaths from a chosen start) and {* -> J} (one-parameter families
// of dipaths sharing a start point).
//
// In a precubical model both conditions reduce to local counts:
//   (a) for every edge e of X and every y over source(e) there is exactly one
//       edge of Y over e leaving y;
//   (b) for every cell c of X of dimension >= 2 and every y over the minimal
//       corner of c there is exactly one cell of Y over c with minimal corner y.
// Whole-path lifting follows from (a) by induction on the number of edges: the
// lift of e1...ek is the lift of e1...e(k-1) extended by the unique edge over
// ek at its end. (b) turns an elementary move of the base path into a square
// of Y, so lifts of dihomotopic paths are dihomotopic and share their end.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "dtop/dipath.hpp"
#include "dtop/morphism.hpp"

namespace dtop {

struct LiftProblem {
    std::reference_wrapper<const PcMorphism> projection;
    EdgePath base_path;
    Cell start_lift;
};

/// The lift of base_path starting at start_lift, edge by edge. Throws
/// LiftError naming the failing edge and vertex on zero or several candidates.
EdgePath lift_path(const LiftProblem& problem);
EdgePath lift_path(const PcMorphism& p, const EdgePath& base_path, Cell start_lift);

struct LiftWitness {
    enum class Kind { kEdge, kCell };
    Kind kind = Kind::kEdge;
    Cell base;    // edge or higher cell of X
    Cell corner;  // vertex of Y over the source / minimal corner of `base`
    std::size_t lifts = 0;
};

struct DicoveringVerdict {
    bool is_dicovering = true;
    std::optional<LiftWitness> witness;
};

struct CoverCheckOptions {
    /// When set, only cells reachable from this vertex of X and lifts starting
    /// over it are quantified over.
    std::optional<Cell> basepoint;
};

DicoveringVerdict check_dicovering(const PcMorphism& p, const CoverCheckOptions& options = {});

/// Recounts the lifts named by a witness directly from the morphism.
std::size_t replay_witness(const PcMorphism& p, const LiftWitness& witness);

/// The codiagonal k.X -> X; copy j has cells named "j:<id>". k == 1 gives the identity.
PcMorphism fold_map(const ComplexPtr& x, unsigned k);

/// Two copies of X glued at `basepoint`, folded onto X: the map f* of the
/// codiagonal gadget for the inclusion of the basepoint. Not a dicovering as
/// soon as the basepoint has an outgoing edge.
PcMorphism wedge_fold(const ComplexPtr& x, Cell basepoint);

/// The unique phi: Xt -> Y with p phi = pi and phi(lifts.first) = lifts.second.
/// Returns nullopt when none exists; throws AmbiguityError when several do and
/// ResourceLimit when the search budget runs out.
std::optional<PcMorphism> universality_check(const PcMorphism& pi, const PcMorphism& p,
                                             std::pair<Cell, Cell> basepoint_lifts,
                                             std::size_t budget = 1'000'000);

}  // namespace dtop
