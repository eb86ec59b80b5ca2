#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

class CnfError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Literal {
    int var = 0;  // 0-based
    bool positive = true;

    friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause3 = std::array<Literal, 3>;

/// 3-CNF formula: every clause has exactly three literals. Repeated literals
/// inside a clause are allowed.
struct Cnf3 {
    int num_vars = 0;
    std::vector<Clause3> clauses;

    /// Every variable occurs both positively and negatively, and no clause
    /// holds a variable together with its negation.
    bool is_normalized() const;
    /// Every variable occurs both positively and negatively.
    bool has_both_polarities() const;

    friend bool operator==(const Cnf3&, const Cnf3&) = default;
};

/// DIMACS: optional "c" comment lines, header "p cnf <vars> <clauses>", then
/// 0-terminated clauses of exactly three literals.
Cnf3 parse_cnf(std::istream& in);
Cnf3 parse_cnf_text(const std::string& text);
Cnf3 read_cnf_file(const std::string& path);
void write_cnf(std::ostream& out, const Cnf3& phi);

bool satisfies(const Cnf3& phi, const std::vector<bool>& assignment);

inline constexpr int kSatBruteMaxVars = 24;

/// Least satisfying assignment when assignments are read as binary numbers
/// with variable 0 as the lowest bit. Throws CnfError above kSatBruteMaxVars.
std::optional<std::vector<bool>> sat_brute(const Cnf3& phi);

enum class CnfStatus { Normal, TriviallySat, TriviallyUnsat };

struct NormalizedCnf {
    Cnf3 formula;
    CnfStatus status = CnfStatus::Normal;
    /// original_var[i] is the input variable that became variable i.
    std::vector<int> original_var;
};

/// Drops clauses holding complementary literals, then repeatedly fixes any
/// variable seen in one polarity only and deletes the clauses it satisfies.
/// Unused variables are removed and the rest renumbered in order. A clause
/// that loses literals is padded by repeating its first literal. The output
/// is equisatisfiable with the input.
NormalizedCnf normalize_cnf(const Cnf3& phi);

}  // namespace rainbow
