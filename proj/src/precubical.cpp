#include "dtop/precubical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dtop/error.hpp"

namespace dtop {

std::size_t PrecubicalSet::total_size() const noexcept {
    std::size_t n = 0;
    for (const auto& level : names_) n += level.size();
    return n;
}

std::vector<Cell> PrecubicalSet::cells(std::uint32_t dim) const {
    std::vector<Cell> out;
    const std::size_t n = size(dim);
    out.reserve(n);
    for (std::uint32_t k = 0; k < n; ++k) out.push_back({dim, k});
    return out;
}

std::vector<Cell> PrecubicalSet::all_cells() const {
    std::vector<Cell> out;
    out.reserve(total_size());
    for (std::uint32_t d = 0; d < names_.size(); ++d)
        for (std::uint32_t k = 0; k < names_[d].size(); ++k) out.push_back({d, k});
    return out;
}

std::optional<Cell> PrecubicalSet::find(std::string_view name) const {
    auto it = lookup_.find(std::string(name));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
}

Cell PrecubicalSet::at(std::string_view name) const {
    if (auto c = find(name)) return *c;
    throw InputError("unknown cell '" + std::string(name) + "'");
}

std::optional<Cell> PrecubicalSet::try_face(Cell c, unsigned direction, unsigned sign) const {
    if (c.dim == 0 || direction < 1 || direction > c.dim || sign > 1 || !contains(c)) return std::nullopt;
    const std::uint32_t target = faces_[c.dim][slot(c, direction, sign)];
    if (target == kNone) return std::nullopt;
    return Cell{c.dim - 1, target};
}

Cell PrecubicalSet::face(Cell c, unsigned direction, unsigned sign) const {
    if (auto f = try_face(c, direction, sign)) return *f;
    throw std::logic_error("missing face (" + std::to_string(direction) + "," + std::to_string(sign) +
                           ") of cell '" + (contains(c) ? name(c) : std::string("?")) + "'");
}

std::span<const Cell> PrecubicalSet::out_edges(Cell vertex) const {
    if (vertex.dim != 0 || vertex.index >= out_.size()) return {};
    return out_[vertex.index];
}

std::span<const Cell> PrecubicalSet::in_edges(Cell vertex) const {
    if (vertex.dim != 0 || vertex.index >= in_.size()) return {};
    return in_[vertex.index];
}

Cell PrecubicalSet::min_corner(Cell c) const {
    while (c.dim > 0) c = face(c, 1, 0);
    return c;
}

Cell PrecubicalSet::max_corner(Cell c) const {
    while (c.dim > 0) c = face(c, 1, 1);
    return c;
}

Cell PrecubicalSet::edge_from_min_corner(Cell c, unsigned direction) const {
    if (direction < 1 || direction > c.dim) throw std::logic_error("direction out of range");
    // Removing directions from the top down keeps every remaining index valid.
    for (unsigned j = c.dim; j >= 1; --j) {
        if (j == direction) continue;
        c = face(c, j, 0);
    }
    return c;
}

PrecubicalSet PrecubicalSet::with_face(Cell c, unsigned direction, unsigned sign, Cell target) const {
    if (c.dim == 0 || direction < 1 || direction > c.dim || sign > 1 || !contains(c))
        throw std::logic_error("with_face: no such face slot");
    if (target.dim + 1 != c.dim || !contains(target)) throw std::logic_error("with_face: bad target");
    PrecubicalSet copy = *this;
    copy.faces_[c.dim][slot(c, direction, sign)] = target.index;
    copy.index_adjacency();
    return copy;
}

void PrecubicalSet::index_names() {
    lookup_.clear();
    for (std::uint32_t d = 0; d < names_.size(); ++d)
        for (std::uint32_t k = 0; k < names_[d].size(); ++k) lookup_.emplace(names_[d][k], Cell{d, k});
}

void PrecubicalSet::index_adjacency() {
    const std::size_t nv = size(0);
    out_.assign(nv, {});
    in_.assign(nv, {});
    for (std::uint32_t k = 0; k < size(1); ++k) {
        const Cell e{1, k};
        auto s = try_face(e, 1, 0);
        auto t = try_face(e, 1, 1);
        if (s) out_[s->index].push_back(e);
        if (t) in_[t->index].push_back(e);
    }
}

void PrecubicalSet::Builder::add_cell(std::uint32_t dim, std::string name) {
    auto [it, inserted] = dims_.emplace(std::move(name), dim);
    if (!inserted) throw InputError("duplicate cell id '" + it->first + "'");
}

void PrecubicalSet::Builder::set_face(std::string_view cell, unsigned direction, unsigned sign,
                                      std::string target) {
    auto it = dims_.find(std::string(cell));
    if (it == dims_.end()) throw InputError("face declared for unknown cell '" + std::string(cell) + "'");
    if (direction < 1 || direction > it->second || sign > 1)
        throw InputError("face (" + std::to_string(direction) + "," + std::to_string(sign) +
                         ") out of range for cell '" + it->first + "' of dimension " +
                         std::to_string(it->second));
    faces_[{it->first, 2 * (direction - 1) + sign}] = std::move(target);
}

PrecubicalSet PrecubicalSet::Builder::build() const {
    PrecubicalSet x;
    std::uint32_t top = 0;
    bool any = false;
    for (const auto& [name, dim] : dims_) {
        top = std::max(top, dim);
        any = true;
    }
    if (!any) return x;
    x.names_.assign(top + 1, {});
    // dims_ iterates in name order, so each level ends up sorted.
    for (const auto& [name, dim] : dims_) x.names_[dim].push_back(name);
    x.index_names();

    x.faces_.assign(top + 1, {});
    for (std::uint32_t d = 1; d <= top; ++d) x.faces_[d].assign(x.names_[d].size() * 2 * d, kNone);

    for (const auto& [key, target] : faces_) {
        const Cell c = x.lookup_.at(key.first);
        const unsigned direction = key.second / 2 + 1;
        const unsigned sign = key.second % 2;
        auto t = x.find(target);
        if (!t) {
            x.dangling_.push_back({c, direction, sign, target, "unknown cell"});
            continue;
        }
        if (t->dim + 1 != c.dim) {
            x.dangling_.push_back({c, direction, sign, target,
                                   "target has dimension " + std::to_string(t->dim) + ", expected " +
                                       std::to_string(c.dim - 1)});
            continue;
        }
        x.faces_[c.dim][x.slot(c, direction, sign)] = t->index;
    }
    x.index_adjacency();
    return x;
}

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::kMissingFace: return "missing-face";
        case ViolationKind::kDanglingFace: return "dangling-face";
        case ViolationKind::kCubicalIdentity: return "cubical-identity";
    }
    return "unknown";
}

std::vector<Violation> validate(const PrecubicalSet& x) {
    std::vector<Violation> report;
    for (const auto& d : x.dangling()) {
        report.push_back({ViolationKind::kDanglingFace, x.name(d.cell), d.direction, 0, d.sign, 0,
                          "face (" + std::to_string(d.direction) + "," + std::to_string(d.sign) + ") -> '" +
                              d.target + "': " + d.reason});
    }
    for (std::uint32_t n = 1; n < x.levels(); ++n) {
        for (const Cell c : x.cells(n)) {
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned a = 0; a < 2; ++a)
                    if (!x.try_face(c, i, a)) {
                        const bool dangling = std::any_of(x.dangling().begin(), x.dangling().end(), [&](const auto& d) {
                            return d.cell == c && d.direction == i && d.sign == a;
                        });
                        if (!dangling)
                            report.push_back({ViolationKind::kMissingFace, x.name(c), i, 0, a, 0,
                                              "face (" + std::to_string(i) + "," + std::to_string(a) + ") undefined"});
                    }
        }
    }
    for (std::uint32_t n = 2; n < x.levels(); ++n) {
        for (const Cell c : x.cells(n)) {
            for (unsigned j = 2; j <= n; ++j)
                for (unsigned i = 1; i < j; ++i)
                    for (unsigned a = 0; a < 2; ++a)
                        for (unsigned b = 0; b < 2; ++b) {
                            auto fj = x.try_face(c, j, b);
                            auto fi = x.try_face(c, i, a);
                            if (!fj || !fi) continue;
                            auto lhs = x.try_face(*fj, i, a);
                            auto rhs = x.try_face(*fi, j - 1, b);
                            if (!lhs || !rhs || *lhs == *rhs) continue;
                            std::ostringstream msg;
                            msg << "d^" << a << "_" << i << " d^" << b << "_" << j << " = '" << x.name(*lhs)
                                << "' but d^" << b << "_" << (j - 1) << " d^" << a << "_" << i << " = '"
                                << x.name(*rhs) << "'";
                            report.push_back({ViolationKind::kCubicalIdentity, x.name(c), i, j, a, b, msg.str()});
                        }
        }
    }
    return report;
}

}  // namespace dtop
