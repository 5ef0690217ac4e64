#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dtop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad JSON shape, unknown cell names, syntax errors.
class InputError : public Error {
public:
    using Error::Error;
};

/// A search or materialization exceeded its configured budget.
class ResourceLimit : public Error {
public:
    ResourceLimit(const std::string& what, std::size_t budget)
        : Error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// Edge sequence violating the incidence invariant of a path.
class InvalidPath : public Error {
public:
    using Error::Error;
};

class EndpointMismatch : public Error {
public:
    using Error::Error;
};

/// Raised by path lifting when an edge has zero or several preimages at the
/// current vertex.
class LiftError : public Error {
public:
    enum class Kind { kNoLift, kAmbiguous };

    LiftError(Kind kind, std::string edge, std::string vertex, std::size_t position,
              std::size_t candidates)
        : Error(describe(kind, edge, vertex, position, candidates)),
          kind_(kind), edge_(std::move(edge)), vertex_(std::move(vertex)),
          position_(position), candidates_(candidates) {}

    Kind kind() const noexcept { return kind_; }
    const std::string& edge() const noexcept { return edge_; }
    const std::string& vertex() const noexcept { return vertex_; }
    std::size_t position() const noexcept { return position_; }
    std::size_t candidates() const noexcept { return candidates_; }

private:
    static std::string describe(Kind kind, const std::string& edge, const std::string& vertex,
                                std::size_t position, std::size_t candidates) {
        std::string head = kind == Kind::kNoLift ? "no lift" : "ambiguous lift";
        return head + " of edge '" + edge + "' at vertex '" + vertex + "' (position " +
               std::to_string(position) + ", " + std::to_string(candidates) + " candidates)";
    }

    Kind kind_;
    std::string edge_;
    std::string vertex_;
    std::size_t position_;
    std::size_t candidates_;
};

/// More than one morphism satisfies constraints that should determine it.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

}  // namespace dtop
