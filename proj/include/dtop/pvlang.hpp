#pragma once

// PV programs: processes that lock (P) and release (V) counting semaphores.
//
//   program := (decl ";")+
//   decl    := "res" name ":" nat | "proc" action ("." action)*
//   action  := "P" name | "V" name
//   name    := [a-zA-Z][a-zA-Z0-9_]*
//
// Whitespace is insignificant everywhere, so "Pa" and "P a" are the same action.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dtop/constructions.hpp"
#include "dtop/error.hpp"
#include "dtop/precubical.hpp"

namespace dtop::pv {

struct SourcePos {
    std::size_t line = 1;
    std::size_t column = 1;
};

struct Action {
    enum class Kind { kLock, kUnlock };
    Kind kind = Kind::kLock;
    std::string resource;
    SourcePos pos;

    /// Positions are diagnostics only.
    friend bool operator==(const Action& a, const Action& b) {
        return a.kind == b.kind && a.resource == b.resource;
    }
};

struct Process {
    std::vector<Action> actions;
    SourcePos pos;

    friend bool operator==(const Process& a, const Process& b) { return a.actions == b.actions; }
};

struct Program {
    std::map<std::string, unsigned> resources;  // name -> capacity
    std::vector<Process> processes;

    friend bool operator==(const Program&, const Program&) = default;
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& message, SourcePos pos)
        : InputError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}
    SourcePos pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

class SemanticError : public InputError {
public:
    SemanticError(const std::string& message, SourcePos pos)
        : InputError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message), pos_(pos) {}
    SourcePos pos() const noexcept { return pos_; }

private:
    SourcePos pos_;
};

/// Throws SyntaxError or SemanticError (undeclared resource, unbalanced P/V,
/// duplicate declaration, zero capacity).
Program parse(std::string_view text);

/// Canonical text: declarations first, one per line.
std::string serialize(const Program& program);

struct ForbiddenRegion {
    /// Grid cells (one coordinate per process) where some resource is over capacity.
    std::vector<GridCell> cells;
};

struct Compiled {
    PrecubicalSet complex;
    ForbiddenRegion forbidden;
};

/// Units of each resource held by a process after its first k actions.
std::vector<std::map<std::string, unsigned>> holdings(const Process& process);

/// Tensor grid of the process timelines with every cell removed whose span
/// lets some resource exceed its capacity. A cell spanning vertex interval
/// [k, k+1] along a process counts that process with the larger of its
/// holdings at k and k+1, so a cell is forbidden iff one of its corners is,
/// and the forbidden set is closed upward. Cells are named like "(1,2+)".
Compiled build_complex(const Program& program);

/// Vertex of the grid where every process has finished.
std::string final_vertex_name(const Program& program);

/// Vertices without outgoing edges other than `final`, sorted by id.
std::vector<Cell> deadlocks(const PrecubicalSet& x, Cell final);

}  // namespace dtop::pv
