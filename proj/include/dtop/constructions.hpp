#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dtop/morphism.hpp"
#include "dtop/precubical.hpp"

namespace dtop {

/// The precubical n-cube: cells are words over {0,1,*} of length n, the
/// dimension being the number of stars; d^a_i replaces the i-th star by a.
PrecubicalSet standard_cube(unsigned n);

/// One vertex "v" and one loop edge "e".
PrecubicalSet directed_circle();

/// Directed cycle on n >= 1 vertices "v0".."v{n-1}" with edges "e0".."e{n-1}".
PrecubicalSet directed_cycle(unsigned n);

/// Vertices "0".."n", edge "k+" from k to k+1.
PrecubicalSet directed_path(unsigned n);

/// Cells are pairs (a,b) named "(a,b)"; directions of a come first.
PrecubicalSet tensor(const PrecubicalSet& x, const PrecubicalSet& y);

/// Subcomplex of cells of dimension <= n.
PrecubicalSet skeleton(const PrecubicalSet& x, unsigned n);

/// Removes the given cells together with every cell that has one of them as
/// an iterated face, so the result stays a precubical set.
PrecubicalSet remove_upward(const PrecubicalSet& x, std::span<const Cell> doomed);

/// One coordinate of a grid cell: the vertex `start`, or the edge start -> start+1.
struct GridCoord {
    unsigned start = 0;
    bool spans = false;

    friend bool operator==(const GridCoord&, const GridCoord&) = default;
};
using GridCell = std::vector<GridCoord>;

/// Default grid naming: "(1,2+)" for a cell at vertex 1 along the first axis
/// and on edge 2->3 along the second.
std::string grid_cell_name(const GridCell& cell);

/// Subcomplex of the tensor product of directed paths with the given lengths,
/// keeping only cells for which `keep` holds (the caller guarantees the kept
/// set is closed under faces).
PrecubicalSet cubical_grid(std::span<const unsigned> lengths,
                           const std::function<bool(const GridCell&)>& keep = {},
                           const std::function<std::string(const GridCell&)>& namer = grid_cell_name);

/// Planar grid with nx x ny squares. Vertices "cXY", horizontal edges "hXY"
/// (from cXY to c(X+1)Y), vertical edges "vXY", squares "sXY". Direction 1 is
/// horizontal. Squares listed in `holes` (by their lower-left corner) are
/// left out. Requires nx, ny <= 9.
PrecubicalSet grid2d(unsigned nx, unsigned ny, std::span<const std::pair<unsigned, unsigned>> holes = {});

/// 3x3-square grid with the centre square removed.
PrecubicalSet swiss_flag_grid();

struct Coproduct {
    ComplexPtr sum;
    PcMorphism inj1;
    PcMorphism inj2;
};

/// Disjoint union; cells are renamed "1:<id>" and "2:<id>".
Coproduct coproduct(const ComplexPtr& x, const ComplexPtr& y);

struct Pushout {
    ComplexPtr object;
    PcMorphism q1;
    PcMorphism q2;
};

/// Dimension-wise pushout of f: A -> B1 and g: A -> B2, computed by union-find
/// over the disjoint union. Each class is named after its least member
/// ("1:<id>" or "2:<id>").
Pushout pushout(const PcMorphism& f, const PcMorphism& g);

struct CodiagonalGadget {
    ComplexPtr astar;
    PcMorphism p1;
    PcMorphism p2;
    PcMorphism fstar;
};

/// Pushout of f with itself and the fold map fstar with fstar p1 = fstar p2 = id.
CodiagonalGadget codiagonal_gadget(const PcMorphism& f);

struct ChainColimit {
    ComplexPtr object;
    std::vector<PcMorphism> cocone;
};

/// Colimit of K0 -> K1 -> ... -> Kn. Classes are named after their member in
/// the last stage, so the object coincides with Kn.
ChainColimit chain_colimit(std::span<const PcMorphism> chain);

/// Inclusion of the empty complex.
PcMorphism from_empty(const ComplexPtr& x);

/// Inclusion of a single vertex (as the 0-cube named after it).
PcMorphism vertex_inclusion(const ComplexPtr& x, Cell vertex);

}  // namespace dtop
