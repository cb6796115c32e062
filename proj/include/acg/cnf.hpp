#pragma once

// 3-CNF formulas and the DIMACS cnf format: `p cnf <vars> <clauses>`, then
// one line per clause holding exactly three nonzero literals terminated by 0.
// Repeated literals within a clause are permitted.

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "acg/graph.hpp"

namespace acg {

struct Literal {
    int var = 0;
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

struct Clause {
    std::array<Literal, 3> lits;

    bool operator==(const Clause&) const = default;
};

struct Cnf {
    int num_vars = 0;
    std::vector<Clause> clauses;

    bool operator==(const Cnf&) const = default;
};

inline void validate_cnf(const Cnf& f) {
    if (f.num_vars < 0) fail(Errc::bad_parameter, "negative variable count");
    for (const auto& cl : f.clauses)
        for (const auto& lit : cl.lits)
            if (lit.var < 1 || lit.var > f.num_vars)
                fail(Errc::bad_parameter,
                     "literal variable " + std::to_string(lit.var) + " outside 1.." +
                         std::to_string(f.num_vars));
}

// Convenience builder from signed DIMACS-style literals, three per clause.
inline Cnf make_cnf(int num_vars, const std::vector<std::array<int, 3>>& clauses) {
    Cnf f;
    f.num_vars = num_vars;
    for (const auto& cl : clauses) {
        Clause c;
        for (std::size_t i = 0; i < 3; ++i) {
            if (cl[i] == 0) fail(Errc::bad_parameter, "zero literal in clause");
            c.lits[i] = Literal{cl[i] < 0 ? -cl[i] : cl[i], cl[i] < 0};
        }
        f.clauses.push_back(c);
    }
    validate_cnf(f);
    return f;
}

// assignment[var] is the truth value; index 0 unused.
using Assignment = std::vector<bool>;

inline bool satisfies(const Cnf& f, const Assignment& a) {
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (const auto& lit : cl.lits)
            sat |= a[static_cast<std::size_t>(lit.var)] != lit.negated;
        if (!sat) return false;
    }
    return true;
}

inline Cnf parse_dimacs_cnf(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long vars = -1, clause_count = -1;
    std::vector<std::array<int, 3>> clauses;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos || line[i] == 'c' || line[i] == '#') continue;
        std::istringstream row(line);
        if (line[i] == 'p') {
            std::string tag, kind;
            if (!(row >> tag >> kind >> vars >> clause_count) || kind != "cnf" || vars < 0 ||
                clause_count < 0)
                fail(Errc::syntax_error,
                     "line " + std::to_string(lineno) + ": expected 'p cnf <vars> <clauses>'");
            continue;
        }
        if (vars < 0)
            fail(Errc::syntax_error, "line " + std::to_string(lineno) + ": clause before header");
        std::vector<int> lits;
        int lit = 0;
        while (row >> lit && lit != 0) lits.push_back(lit);
        if (lit != 0 || lits.size() != 3)
            fail(Errc::syntax_error, "line " + std::to_string(lineno) +
                                         ": expected exactly three nonzero literals ended by 0");
        clauses.push_back({lits[0], lits[1], lits[2]});
    }
    if (vars < 0) fail(Errc::syntax_error, "missing 'p cnf' header");
    if (static_cast<long long>(clauses.size()) != clause_count)
        fail(Errc::syntax_error, "header promises " + std::to_string(clause_count) +
                                     " clauses, file has " + std::to_string(clauses.size()));
    return make_cnf(static_cast<int>(vars), clauses);
}

inline Cnf parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

inline void write_dimacs_cnf(std::ostream& out, const Cnf& f) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (const auto& lit : cl.lits) out << (lit.negated ? -lit.var : lit.var) << ' ';
        out << "0\n";
    }
}

inline std::string cnf_to_string(const Cnf& f) {
    std::ostringstream out;
    write_dimacs_cnf(out, f);
    return out.str();
}

}  // namespace acg
