#include "dtop/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "dtop/error.hpp"

namespace dtop {

namespace {

void copy_faces(PrecubicalSet::Builder& b, const PrecubicalSet& x, const std::string& prefix) {
    for (const Cell c : x.all_cells()) b.add_cell(c.dim, prefix + x.name(c));
    for (const Cell c : x.all_cells())
        for (unsigned i = 1; i <= c.dim; ++i)
            for (unsigned a = 0; a < 2; ++a) b.set_face(prefix + x.name(c), i, a, prefix + x.name(x.face(c, i, a)));
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }

    std::size_t find(std::size_t a) {
        while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
        return a;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Quotient of a family of complexes ("parts") by a relation generated per
// dimension. Each class gets a name from `namer(members)`; faces are induced
// from any member and checked for agreement across the class.
struct Quotient {
    ComplexPtr object;
    // class_of[part][dim][index] -> index of the class cell in `object`.
    std::vector<PcMorphism::Table> class_of;
};

Quotient quotient(std::span<const PrecubicalSet* const> parts,
                  const std::function<void(const std::function<void(std::size_t, Cell, std::size_t, Cell)>&)>& relate,
                  const std::function<std::string(const std::vector<std::pair<std::size_t, Cell>>&)>& namer) {
    std::size_t levels = 0;
    for (const auto* p : parts) levels = std::max(levels, p->levels());

    // Global numbering per dimension: offset[dim][part].
    std::vector<std::vector<std::size_t>> offset(levels, std::vector<std::size_t>(parts.size() + 1, 0));
    for (std::size_t d = 0; d < levels; ++d)
        for (std::size_t p = 0; p < parts.size(); ++p)
            offset[d][p + 1] = offset[d][p] + parts[p]->size(static_cast<std::uint32_t>(d));

    std::vector<UnionFind> uf;
    for (std::size_t d = 0; d < levels; ++d) uf.emplace_back(offset[d][parts.size()]);
    relate([&](std::size_t pa, Cell a, std::size_t pb, Cell b) {
        if (a.dim != b.dim) throw std::logic_error("quotient: relation mixes dimensions");
        uf[a.dim].unite(offset[a.dim][pa] + a.index, offset[b.dim][pb] + b.index);
    });

    auto locate = [&](std::size_t d, std::size_t global) {
        std::size_t p = 0;
        while (offset[d][p + 1] <= global) ++p;
        return std::pair<std::size_t, Cell>{p, Cell{static_cast<std::uint32_t>(d),
                                                    static_cast<std::uint32_t>(global - offset[d][p])}};
    };

    // Members of each class, keyed by root.
    std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, Cell>>>> members(levels);
    for (std::size_t d = 0; d < levels; ++d)
        for (std::size_t g = 0; g < offset[d][parts.size()]; ++g) members[d][uf[d].find(g)].push_back(locate(d, g));

    PrecubicalSet::Builder b;
    std::vector<std::map<std::size_t, std::string>> class_name(levels);
    for (std::size_t d = 0; d < levels; ++d)
        for (const auto& [root, list] : members[d]) {
            std::string name = namer(list);
            b.add_cell(static_cast<std::uint32_t>(d), name);
            class_name[d][root] = std::move(name);
        }
    for (std::size_t d = 1; d < levels; ++d)
        for (const auto& [root, list] : members[d])
            for (unsigned i = 1; i <= d; ++i)
                for (unsigned a = 0; a < 2; ++a) {
                    std::optional<std::size_t> induced;
                    for (const auto& [p, c] : list) {
                        const Cell f = parts[p]->face(c, i, a);
                        const std::size_t r = uf[d - 1].find(offset[d - 1][p] + f.index);
                        if (induced && *induced != r)
                            throw std::logic_error("quotient: induced face map is ill-defined at '" +
                                                   class_name[d][root] + "'");
                        induced = r;
                    }
                    b.set_face(class_name[d][root], i, a, class_name[d - 1][*induced]);
                }

    Quotient q;
    q.object = share(b.build());
    q.class_of.resize(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        auto& table = q.class_of[p];
        table.resize(parts[p]->levels());
        for (std::uint32_t d = 0; d < parts[p]->levels(); ++d) {
            table[d].resize(parts[p]->size(d));
            for (std::uint32_t k = 0; k < table[d].size(); ++k) {
                const std::size_t root = uf[d].find(offset[d][p] + k);
                table[d][k] = q.object->at(class_name[d][root]).index;
            }
        }
    }
    return q;
}

std::string prefixed_least(const std::vector<const PrecubicalSet*>& parts,
                           const std::vector<std::pair<std::size_t, Cell>>& list) {
    std::string best;
    bool first = true;
    for (const auto& [p, c] : list) {
        std::string candidate = std::to_string(p + 1) + ":" + parts[p]->name(c);
        if (first || candidate < best) best = std::move(candidate);
        first = false;
    }
    return best;
}

}  // namespace

PrecubicalSet standard_cube(unsigned n) {
    PrecubicalSet::Builder b;
    std::size_t total = 1;
    for (unsigned k = 0; k < n; ++k) total *= 3;
    const std::string alphabet = "01*";
    for (std::size_t code = 0; code < total; ++code) {
        std::string word(n, '0');
        std::size_t rest = code;
        unsigned stars = 0;
        for (unsigned k = 0; k < n; ++k) {
            word[k] = alphabet[rest % 3];
            rest /= 3;
            if (word[k] == '*') ++stars;
        }
        b.add_cell(stars, word);
    }
    for (std::size_t code = 0; code < total; ++code) {
        std::string word(n, '0');
        std::size_t rest = code;
        for (unsigned k = 0; k < n; ++k) {
            word[k] = alphabet[rest % 3];
            rest /= 3;
        }
        unsigned direction = 0;
        for (unsigned k = 0; k < n; ++k) {
            if (word[k] != '*') continue;
            ++direction;
            for (unsigned a = 0; a < 2; ++a) {
                std::string f = word;
                f[k] = static_cast<char>('0' + a);
                b.set_face(word, direction, a, f);
            }
        }
    }
    return b.build();
}

PrecubicalSet directed_circle() {
    PrecubicalSet::Builder b;
    b.add_cell(0, "v");
    b.add_cell(1, "e");
    b.set_face("e", 1, 0, "v");
    b.set_face("e", 1, 1, "v");
    return b.build();
}

PrecubicalSet directed_cycle(unsigned n) {
    if (n == 0) throw std::invalid_argument("directed_cycle: n must be positive");
    PrecubicalSet::Builder b;
    for (unsigned k = 0; k < n; ++k) b.add_cell(0, "v" + std::to_string(k));
    for (unsigned k = 0; k < n; ++k) {
        const std::string e = "e" + std::to_string(k);
        b.add_cell(1, e);
        b.set_face(e, 1, 0, "v" + std::to_string(k));
        b.set_face(e, 1, 1, "v" + std::to_string((k + 1) % n));
    }
    return b.build();
}

PrecubicalSet directed_path(unsigned n) {
    PrecubicalSet::Builder b;
    for (unsigned k = 0; k <= n; ++k) b.add_cell(0, std::to_string(k));
    for (unsigned k = 0; k < n; ++k) {
        const std::string e = std::to_string(k) + "+";
        b.add_cell(1, e);
        b.set_face(e, 1, 0, std::to_string(k));
        b.set_face(e, 1, 1, std::to_string(k + 1));
    }
    return b.build();
}

PrecubicalSet tensor(const PrecubicalSet& x, const PrecubicalSet& y) {
    PrecubicalSet::Builder b;
    auto pair_name = [&](Cell a, Cell c) { return "(" + x.name(a) + "," + y.name(c) + ")"; };
    const auto xs = x.all_cells();
    const auto ys = y.all_cells();
    for (const Cell a : xs)
        for (const Cell c : ys) b.add_cell(a.dim + c.dim, pair_name(a, c));
    for (const Cell a : xs)
        for (const Cell c : ys) {
            const std::string name = pair_name(a, c);
            for (unsigned i = 1; i <= a.dim + c.dim; ++i)
                for (unsigned s = 0; s < 2; ++s) {
                    if (i <= a.dim)
                        b.set_face(name, i, s, pair_name(x.face(a, i, s), c));
                    else
                        b.set_face(name, i, s, pair_name(a, y.face(c, i - a.dim, s)));
                }
        }
    return b.build();
}

PrecubicalSet skeleton(const PrecubicalSet& x, unsigned n) {
    PrecubicalSet::Builder b;
    for (const Cell c : x.all_cells())
        if (c.dim <= n) b.add_cell(c.dim, x.name(c));
    for (const Cell c : x.all_cells())
        if (c.dim <= n)
            for (unsigned i = 1; i <= c.dim; ++i)
                for (unsigned a = 0; a < 2; ++a) b.set_face(x.name(c), i, a, x.name(x.face(c, i, a)));
    return b.build();
}

PrecubicalSet remove_upward(const PrecubicalSet& x, std::span<const Cell> doomed) {
    std::vector<std::vector<char>> dead(x.levels());
    for (std::uint32_t d = 0; d < x.levels(); ++d) dead[d].assign(x.size(d), 0);
    for (const Cell c : doomed) dead.at(c.dim).at(c.index) = 1;
    for (std::uint32_t d = 1; d < x.levels(); ++d)
        for (const Cell c : x.cells(d))
            for (unsigned i = 1; i <= d && !dead[d][c.index]; ++i)
                for (unsigned a = 0; a < 2; ++a) {
                    const Cell f = x.face(c, i, a);
                    if (dead[f.dim][f.index]) dead[d][c.index] = 1;
                }
    PrecubicalSet::Builder b;
    for (const Cell c : x.all_cells())
        if (!dead[c.dim][c.index]) b.add_cell(c.dim, x.name(c));
    for (const Cell c : x.all_cells())
        if (!dead[c.dim][c.index])
            for (unsigned i = 1; i <= c.dim; ++i)
                for (unsigned a = 0; a < 2; ++a) b.set_face(x.name(c), i, a, x.name(x.face(c, i, a)));
    return b.build();
}

std::string grid_cell_name(const GridCell& cell) {
    std::string out = "(";
    for (std::size_t k = 0; k < cell.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(cell[k].start);
        if (cell[k].spans) out += '+';
    }
    out += ')';
    return out;
}

PrecubicalSet cubical_grid(std::span<const unsigned> lengths, const std::function<bool(const GridCell&)>& keep,
                           const std::function<std::string(const GridCell&)>& namer) {
    // Each coordinate ranges over 2*len+1 positions: vertices 0..len and edges 0..len-1.
    std::vector<GridCell> all;
    GridCell cur(lengths.size());
    std::function<void(std::size_t)> rec = [&](std::size_t axis) {
        if (axis == lengths.size()) {
            all.push_back(cur);
            return;
        }
        for (unsigned k = 0; k <= lengths[axis]; ++k) {
            cur[axis] = {k, false};
            rec(axis + 1);
            if (k < lengths[axis]) {
                cur[axis] = {k, true};
                rec(axis + 1);
            }
        }
    };
    rec(0);

    PrecubicalSet::Builder b;
    std::vector<GridCell> kept;
    for (const auto& cell : all)
        if (!keep || keep(cell)) kept.push_back(cell);
    for (const auto& cell : kept) {
        unsigned dim = 0;
        for (const auto& g : cell) dim += g.spans ? 1 : 0;
        b.add_cell(dim, namer(cell));
    }
    for (const auto& cell : kept) {
        const std::string name = namer(cell);
        unsigned direction = 0;
        for (std::size_t axis = 0; axis < cell.size(); ++axis) {
            if (!cell[axis].spans) continue;
            ++direction;
            for (unsigned a = 0; a < 2; ++a) {
                GridCell f = cell;
                f[axis] = {cell[axis].start + a, false};
                b.set_face(name, direction, a, namer(f));
            }
        }
    }
    return b.build();
}

PrecubicalSet grid2d(unsigned nx, unsigned ny, std::span<const std::pair<unsigned, unsigned>> holes) {
    if (nx > 9 || ny > 9) throw std::invalid_argument("grid2d: at most 9 squares per side");
    auto namer = [](const GridCell& c) {
        const char tag = c[0].spans ? (c[1].spans ? 's' : 'h') : (c[1].spans ? 'v' : 'c');
        return std::string{tag} + std::to_string(c[0].start) + std::to_string(c[1].start);
    };
    auto keep = [&](const GridCell& c) {
        if (!(c[0].spans && c[1].spans)) return true;
        return std::none_of(holes.begin(), holes.end(), [&](const auto& h) {
            return h.first == c[0].start && h.second == c[1].start;
        });
    };
    const unsigned lengths[] = {nx, ny};
    return cubical_grid(lengths, keep, namer);
}

PrecubicalSet swiss_flag_grid() {
    const std::pair<unsigned, unsigned> centre[] = {{1, 1}};
    return grid2d(3, 3, centre);
}

Coproduct coproduct(const ComplexPtr& x, const ComplexPtr& y) {
    PrecubicalSet::Builder b;
    copy_faces(b, *x, "1:");
    copy_faces(b, *y, "2:");
    auto sum = share(b.build());
    auto injection = [&](const ComplexPtr& part, const std::string& prefix) {
        PcMorphism::Table t(part->levels());
        for (std::uint32_t d = 0; d < part->levels(); ++d)
            for (const Cell c : part->cells(d)) t[d].push_back(sum->at(prefix + part->name(c)).index);
        return PcMorphism(part, sum, std::move(t));
    };
    return {sum, injection(x, "1:"), injection(y, "2:")};
}

Pushout pushout(const PcMorphism& f, const PcMorphism& g) {
    if (f.source_ptr() != g.source_ptr() && !(f.source() == g.source()))
        throw std::invalid_argument("pushout: morphisms do not share a source");
    const std::vector<const PrecubicalSet*> parts = {&f.target(), &g.target()};
    auto relate = [&](const std::function<void(std::size_t, Cell, std::size_t, Cell)>& unite) {
        for (const Cell a : f.source().all_cells()) unite(0, f(a), 1, g(a));
    };
    auto namer = [&](const std::vector<std::pair<std::size_t, Cell>>& list) { return prefixed_least(parts, list); };
    Quotient q = quotient(parts, relate, namer);
    return {q.object, PcMorphism(f.target_ptr(), q.object, std::move(q.class_of[0])),
            PcMorphism(g.target_ptr(), q.object, std::move(q.class_of[1]))};
}

CodiagonalGadget codiagonal_gadget(const PcMorphism& f) {
    Pushout po = pushout(f, f);
    const PrecubicalSet& b = f.target();
    PcMorphism::Table t(po.object->levels());
    for (std::uint32_t d = 0; d < po.object->levels(); ++d) t[d].assign(po.object->size(d), PrecubicalSet::kNone);
    // fstar is forced on the image of p1 and p2; both images cover A*.
    for (const PcMorphism* leg : {&po.q1, &po.q2})
        for (const Cell c : b.all_cells()) {
            const Cell image = (*leg)(c);
            auto& slot = t[image.dim][image.index];
            if (slot != PrecubicalSet::kNone && slot != c.index)
                throw std::logic_error("codiagonal_gadget: fold map is not well defined");
            slot = c.index;
        }
    PcMorphism fstar(po.object, f.target_ptr(), std::move(t));
    return {po.object, std::move(po.q1), std::move(po.q2), std::move(fstar)};
}

ChainColimit chain_colimit(std::span<const PcMorphism> chain) {
    if (chain.empty()) throw std::invalid_argument("chain_colimit: empty chain");
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (chain[k].target_ptr() != chain[k + 1].source_ptr() && !(chain[k].target() == chain[k + 1].source()))
            throw std::invalid_argument("chain_colimit: morphism " + std::to_string(k) + " is not composable");

    std::vector<const PrecubicalSet*> parts;
    for (const auto& m : chain) parts.push_back(&m.source());
    parts.push_back(&chain.back().target());
    const std::size_t last = parts.size() - 1;

    auto relate = [&](const std::function<void(std::size_t, Cell, std::size_t, Cell)>& unite) {
        for (std::size_t k = 0; k < chain.size(); ++k)
            for (const Cell c : chain[k].source().all_cells()) unite(k, c, k + 1, chain[k](c));
    };
    auto namer = [&](const std::vector<std::pair<std::size_t, Cell>>& list) {
        for (const auto& [p, c] : list)
            if (p == last) return parts[p]->name(c);
        throw std::logic_error("chain_colimit: class without a member in the last stage");
    };
    Quotient q = quotient(parts, relate, namer);

    ChainColimit result{q.object, {}};
    std::vector<ComplexPtr> sources;
    for (const auto& m : chain) sources.push_back(m.source_ptr());
    sources.push_back(chain.back().target_ptr());
    for (std::size_t p = 0; p < parts.size(); ++p)
        result.cocone.emplace_back(sources[p], q.object, std::move(q.class_of[p]));
    return result;
}

PcMorphism from_empty(const ComplexPtr& x) {
    return PcMorphism(share(PrecubicalSet{}), x, {});
}

PcMorphism vertex_inclusion(const ComplexPtr& x, Cell vertex) {
    if (vertex.dim != 0) throw std::invalid_argument("vertex_inclusion: not a vertex");
    PrecubicalSet::Builder b;
    b.add_cell(0, x->name(vertex));
    auto point = share(b.build());
    return PcMorphism(point, x, {{vertex.index}});
}

}  // namespace dtop
