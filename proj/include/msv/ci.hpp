#ifndef MSV_CI_HPP
#define MSV_CI_HPP

#include <optional>
#include <string>
#include <vector>

#include "msv/permutation.hpp"
#include "msv/schubert.hpp"

namespace msv {

// A _||_ B | C on a Gaussian vector indexed by [1, n]; semantics:
// rank Sigma_{A u C, B u C} <= #C.
struct CIStatement {
    std::vector<int> A, B, C; // sorted, pairwise disjoint; A, B nonempty
    int n = 0;

    CIStatement() = default;
    CIStatement(std::vector<int> a, std::vector<int> b, std::vector<int> c, int ground);

    bool operator==(const CIStatement& rhs) const {
        return A == rhs.A && B == rhs.B && C == rhs.C && n == rhs.n;
    }
    bool operator<(const CIStatement& rhs) const;

    std::string to_string() const; // e.g. "{1,2} _||_ {5,6} | {3,4}"
};

// The defining rank condition: (#C+1)-minors of Sigma_{A u C, B u C}.
MinorSpec rank_condition(const CIStatement& s);

// True iff the CI ideal is a symmetric Schubert determinantal ideal:
// A = [1,i], B = [j,n] with C empty (i < j) or C = [i+1,j-1] (i < j-1).
bool is_schubert_ci(const CIStatement& s);

// The permutation w with J_sym(w) equal to the CI ideal (Schubert input only).
Permutation ci_to_perm(const CIStatement& s);

// Inverse direction: present iff w is defined by inclusions with a single
// essential box of the CI shapes.
std::optional<CIStatement> perm_to_ci(const Permutation& w);

struct CIComponent {
    Permutation w;
    IdealSpec spec;
    bool ci_renderable = false;
    std::vector<CIStatement> statements; // the CI sum when renderable
};

// Maps each statement to its permutation, intersects via the sym-flavor
// decomposition, and renders every component back into CI language when
// the component permutation is defined by inclusions.
std::vector<CIComponent> decompose_ci(const std::vector<CIStatement>& statements);

// When the family fails the Schubert shape, look for a relabeling of [n]
// that fixes it; lexicographically first if any (n <= 8).
std::optional<Permutation> suggest_relabeling(const std::vector<CIStatement>& statements);

// Grammar: statements separated by ';', each "A _||_ B" or "A _||_ B | C";
// sets are comma lists with ranges ("1-3"), braces optional.
std::vector<CIStatement> parse_ci_statements(const std::string& text, int n);

} // namespace msv

#endif
