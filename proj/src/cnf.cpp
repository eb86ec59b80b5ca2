#include "rainbow/cnf.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace rainbow {

namespace {

bool tautological(const std::vector<Literal>& clause) {
    for (const auto& x : clause) {
        for (const auto& y : clause) {
            if (x.var == y.var && x.positive != y.positive) {
                return true;
            }
        }
    }
    return false;
}

bool clause_true(const Clause3& clause, const std::vector<bool>& assignment) {
    for (const auto& lit : clause) {
        if (assignment[static_cast<std::size_t>(lit.var)] == lit.positive) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool Cnf3::has_both_polarities() const {
    std::vector<char> pos(static_cast<std::size_t>(num_vars), 0);
    std::vector<char> neg(static_cast<std::size_t>(num_vars), 0);
    for (const auto& clause : clauses) {
        for (const auto& lit : clause) {
            (lit.positive ? pos : neg)[static_cast<std::size_t>(lit.var)] = 1;
        }
    }
    for (int v = 0; v < num_vars; ++v) {
        if (!pos[static_cast<std::size_t>(v)] || !neg[static_cast<std::size_t>(v)]) {
            return false;
        }
    }
    return true;
}

bool Cnf3::is_normalized() const {
    if (!has_both_polarities()) {
        return false;
    }
    for (const auto& clause : clauses) {
        if (tautological({clause.begin(), clause.end()})) {
            return false;
        }
    }
    return true;
}

Cnf3 parse_cnf(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long declared_clauses = 0;
    Cnf3 phi;
    std::vector<Literal> current;
    auto fail = [&](const std::string& what) -> void {
        throw CnfError("line " + std::to_string(lineno) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream is(line);
        std::string tok;
        if (!(is >> tok) || tok == "c" || tok[0] == 'c') {
            continue;
        }
        if (tok == "%") {
            break;  // some generators end files this way
        }
        if (tok == "p") {
            std::string fmt;
            long long nv = -1;
            long long nc = -1;
            if (have_header || !(is >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0 || nv > 1000000) {
                fail("malformed header, expected 'p cnf <vars> <clauses>'");
            }
            phi.num_vars = static_cast<int>(nv);
            declared_clauses = nc;
            have_header = true;
            continue;
        }
        if (!have_header) {
            fail("clause before 'p cnf' header");
        }
        do {
            long long x = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                fail("expected a literal, got '" + tok + "'");
            }
            if (x == 0) {
                if (current.size() != 3) {
                    fail("clause has " + std::to_string(current.size()) + " literals, expected 3");
                }
                phi.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
                continue;
            }
            long long var = x < 0 ? -x : x;
            if (var > phi.num_vars) {
                fail("variable " + std::to_string(var) + " out of range 1.." + std::to_string(phi.num_vars));
            }
            current.push_back(Literal{static_cast<int>(var - 1), x > 0});
        } while (is >> tok);
    }
    if (!have_header) {
        throw CnfError("missing 'p cnf' header");
    }
    if (!current.empty()) {
        throw CnfError("last clause is not terminated by 0");
    }
    if (static_cast<long long>(phi.clauses.size()) != declared_clauses) {
        throw CnfError("header declares " + std::to_string(declared_clauses) + " clauses, found " +
                       std::to_string(phi.clauses.size()));
    }
    return phi;
}

Cnf3 parse_cnf_text(const std::string& text) {
    std::istringstream is(text);
    return parse_cnf(is);
}

Cnf3 read_cnf_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw CnfError("cannot open '" + path + "'");
    }
    return parse_cnf(in);
}

void write_cnf(std::ostream& out, const Cnf3& phi) {
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& clause : phi.clauses) {
        for (const auto& lit : clause) {
            out << (lit.positive ? "" : "-") << lit.var + 1 << ' ';
        }
        out << "0\n";
    }
}

bool satisfies(const Cnf3& phi, const std::vector<bool>& assignment) {
    for (const auto& clause : phi.clauses) {
        if (!clause_true(clause, assignment)) {
            return false;
        }
    }
    return true;
}

std::optional<std::vector<bool>> sat_brute(const Cnf3& phi) {
    if (phi.num_vars > kSatBruteMaxVars) {
        throw CnfError("sat_brute: " + std::to_string(phi.num_vars) + " variables exceeds the limit of " +
                       std::to_string(kSatBruteMaxVars));
    }
    std::vector<bool> assignment(static_cast<std::size_t>(phi.num_vars));
    const std::uint64_t total = std::uint64_t{1} << phi.num_vars;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        for (int v = 0; v < phi.num_vars; ++v) {
            assignment[static_cast<std::size_t>(v)] = (bits >> v) & 1U;
        }
        if (satisfies(phi, assignment)) {
            return assignment;
        }
    }
    return std::nullopt;
}

NormalizedCnf normalize_cnf(const Cnf3& phi) {
    std::vector<std::vector<Literal>> clauses;
    for (const auto& c : phi.clauses) {
        clauses.emplace_back(c.begin(), c.end());
    }

    NormalizedCnf out;
    while (true) {
        std::erase_if(clauses, tautological);

        std::vector<int> pos(static_cast<std::size_t>(phi.num_vars), 0);
        std::vector<int> neg(static_cast<std::size_t>(phi.num_vars), 0);
        for (const auto& c : clauses) {
            for (const auto& lit : c) {
                ++(lit.positive ? pos : neg)[static_cast<std::size_t>(lit.var)];
            }
        }
        int pure = -1;
        for (int v = 0; v < phi.num_vars && pure < 0; ++v) {
            if ((pos[static_cast<std::size_t>(v)] > 0) != (neg[static_cast<std::size_t>(v)] > 0)) {
                pure = v;
            }
        }
        if (pure < 0) {
            break;
        }

        const bool value = pos[static_cast<std::size_t>(pure)] > 0;
        std::vector<std::vector<Literal>> kept;
        for (auto& c : clauses) {
            bool satisfied = false;
            std::vector<Literal> rest;
            for (const auto& lit : c) {
                if (lit.var == pure) {
                    satisfied = satisfied || lit.positive == value;
                } else {
                    rest.push_back(lit);
                }
            }
            if (satisfied) {
                continue;
            }
            if (rest.empty()) {
                out.status = CnfStatus::TriviallyUnsat;
                return out;
            }
            while (rest.size() < 3) {
                rest.push_back(rest.front());
            }
            kept.push_back(std::move(rest));
        }
        clauses = std::move(kept);
    }

    if (clauses.empty()) {
        out.status = CnfStatus::TriviallySat;
        return out;
    }

    std::vector<int> renumber(static_cast<std::size_t>(phi.num_vars), -1);
    for (const auto& c : clauses) {
        for (const auto& lit : c) {
            renumber[static_cast<std::size_t>(lit.var)] = 0;
        }
    }
    for (int v = 0; v < phi.num_vars; ++v) {
        if (renumber[static_cast<std::size_t>(v)] == 0) {
            renumber[static_cast<std::size_t>(v)] = static_cast<int>(out.original_var.size());
            out.original_var.push_back(v);
        }
    }
    out.formula.num_vars = static_cast<int>(out.original_var.size());
    for (const auto& c : clauses) {
        Clause3 clause;
        for (std::size_t i = 0; i < 3; ++i) {
            clause[i] = Literal{renumber[static_cast<std::size_t>(c[i].var)], c[i].positive};
        }
        out.formula.clauses.push_back(clause);
    }
    return out;
}

}  // namespace rainbow
