#include "dtop/pvlang.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>
#include <set>

namespace dtop::pv {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Program run() {
        Program program;
        std::vector<std::pair<std::string, SourcePos>> declared;
        skip_ws();
        if (eof()) throw SyntaxError("expected a declaration", here());
        while (!eof()) {
            const SourcePos at = here();
            if (keyword("res")) {
                skip_ws();
                const SourcePos name_pos = here();
                std::string name = identifier();
                skip_ws();
                expect(':');
                skip_ws();
                const SourcePos cap_pos = here();
                const unsigned capacity = natural();
                if (program.resources.contains(name))
                    throw SemanticError("resource '" + name + "' declared twice", name_pos);
                if (capacity == 0) throw SemanticError("capacity of '" + name + "' must be at least 1", cap_pos);
                program.resources.emplace(name, capacity);
            } else if (keyword("proc")) {
                Process process;
                process.pos = at;
                skip_ws();
                process.actions.push_back(action());
                skip_ws();
                while (peek() == '.') {
                    advance();
                    skip_ws();
                    process.actions.push_back(action());
                    skip_ws();
                }
                program.processes.push_back(std::move(process));
            } else {
                throw SyntaxError("expected 'res' or 'proc'", at);
            }
            skip_ws();
            expect(';');
            skip_ws();
        }
        check(program);
        return program;
    }

private:
    static void check(const Program& program) {
        for (const auto& process : program.processes) {
            std::map<std::string, long> held;
            for (const auto& a : process.actions) {
                if (!program.resources.contains(a.resource))
                    throw SemanticError("undeclared resource '" + a.resource + "'", a.pos);
                long& n = held[a.resource];
                n += a.kind == Action::Kind::kLock ? 1 : -1;
                if (n < 0) throw SemanticError("V(" + a.resource + ") without a matching P", a.pos);
            }
            for (const auto& [name, n] : held)
                if (n != 0) throw SemanticError("process never releases '" + name + "'", process.pos);
        }
    }

    Action action() {
        Action a;
        a.pos = here();
        const char c = peek();
        if (c != 'P' && c != 'V') throw SyntaxError("expected an action 'P<name>' or 'V<name>'", here());
        a.kind = c == 'P' ? Action::Kind::kLock : Action::Kind::kUnlock;
        advance();
        skip_ws();
        a.resource = identifier();
        return a;
    }

    std::string identifier() {
        if (!std::isalpha(static_cast<unsigned char>(peek()))) throw SyntaxError("expected a name", here());
        std::string out;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += advance();
        return out;
    }

    unsigned natural() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw SyntaxError("expected a number", here());
        const SourcePos at = here();
        unsigned long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<unsigned>(advance() - '0');
            if (value > std::numeric_limits<unsigned>::max()) throw SyntaxError("number too large", at);
        }
        return static_cast<unsigned>(value);
    }

    bool keyword(std::string_view word) {
        if (text_.substr(offset_, word.size()) != word) return false;
        for (std::size_t k = 0; k < word.size(); ++k) advance();
        return true;
    }

    void expect(char c) {
        if (peek() != c) {
            std::string msg = "expected '";
            msg += c;
            msg += "'";
            throw SyntaxError(msg, here());
        }
        advance();
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool eof() const { return offset_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[offset_]; }
    char advance() {
        const char c = text_[offset_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }
    SourcePos here() const { return {line_, column_}; }

    std::string_view text_;
    std::size_t offset_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace

Program parse(std::string_view text) { return Parser(text).run(); }

std::string serialize(const Program& program) {
    std::string out;
    for (const auto& [name, capacity] : program.resources) out += "res " + name + ":" + std::to_string(capacity) + ";\n";
    for (const auto& process : program.processes) {
        out += "proc ";
        for (std::size_t k = 0; k < process.actions.size(); ++k) {
            if (k) out += '.';
            out += process.actions[k].kind == Action::Kind::kLock ? 'P' : 'V';
            out += process.actions[k].resource;
        }
        out += ";\n";
    }
    return out;
}

std::vector<std::map<std::string, unsigned>> holdings(const Process& process) {
    std::vector<std::map<std::string, unsigned>> out(process.actions.size() + 1);
    for (std::size_t k = 0; k < process.actions.size(); ++k) {
        out[k + 1] = out[k];
        const auto& a = process.actions[k];
        auto& n = out[k + 1][a.resource];
        n = a.kind == Action::Kind::kLock ? n + 1 : n - 1;
    }
    return out;
}

Compiled build_complex(const Program& program) {
    std::vector<unsigned> lengths;
    std::vector<std::vector<std::map<std::string, unsigned>>> held;
    for (const auto& process : program.processes) {
        lengths.push_back(static_cast<unsigned>(process.actions.size()));
        held.push_back(holdings(process));
    }
    auto units = [&](std::size_t p, unsigned k, const std::string& r) -> unsigned {
        auto it = held[p][k].find(r);
        return it == held[p][k].end() ? 0 : it->second;
    };

    Compiled result;
    auto keep = [&](const GridCell& cell) {
        for (const auto& [r, capacity] : program.resources) {
            unsigned total = 0;
            for (std::size_t p = 0; p < cell.size(); ++p) {
                unsigned here = units(p, cell[p].start, r);
                if (cell[p].spans) here = std::max(here, units(p, cell[p].start + 1, r));
                total += here;
            }
            if (total > capacity) {
                result.forbidden.cells.push_back(cell);
                return false;
            }
        }
        return true;
    };
    result.complex = cubical_grid(lengths, keep);
    std::sort(result.forbidden.cells.begin(), result.forbidden.cells.end(),
              [](const GridCell& a, const GridCell& b) { return grid_cell_name(a) < grid_cell_name(b); });
    return result;
}

std::string final_vertex_name(const Program& program) {
    GridCell end;
    for (const auto& process : program.processes)
        end.push_back({static_cast<unsigned>(process.actions.size()), false});
    return grid_cell_name(end);
}

std::vector<Cell> deadlocks(const PrecubicalSet& x, Cell final) {
    std::vector<Cell> out;
    for (const Cell v : x.vertices())
        if (v != final && x.out_edges(v).empty()) out.push_back(v);
    return out;
}

}  // namespace dtop::pv
