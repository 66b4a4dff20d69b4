#ifndef MSV_SCHUBERT_HPP
#define MSV_SCHUBERT_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "msv/permutation.hpp"
#include "msv/rank_array.hpp"

namespace msv {

enum class Flavor { full, sym, up };

std::string flavor_name(Flavor f);
Flavor parse_flavor(const std::string& name);

// "All size x size minors of the submatrix on the given rows and columns
// vanish."  rows/cols are sorted 1-indexed subsets of [n].
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;
    int size = 0;

    bool operator==(const MinorSpec& rhs) const {
        return rows == rhs.rows && cols == rhs.cols && size == rhs.size;
    }
    bool operator<(const MinorSpec& rhs) const {
        if (rows != rhs.rows) return rows < rhs.rows;
        if (cols != rhs.cols) return cols < rhs.cols;
        return size < rhs.size;
    }
};

// Generator list of one determinantal ideal, on a generic (full),
// symmetric (sym) or upper-triangular (up) n x n matrix of variables.
struct IdealSpec {
    Flavor flavor = Flavor::full;
    int n = 0;
    Permutation w;
    std::vector<MinorSpec> generators;
};

using Box = std::pair<int, int>;

// Boxes (i,j) of the grid with no 1 of P(w) weakly north in column j and
// none weakly east in row i; |diagram(w)| = length(w).
std::set<Box> diagram(const Permutation& w);

// South-west corners of the diagram: neither (i+1,j) nor (i,j-1) present.
std::set<Box> essential_set(const Permutation& w);

// One MinorSpec per essential box (i,j): rows [1,i], cols [j,n],
// size R(w)_{ij}+1.  full_family emits every constraining box instead.
IdealSpec ideal_spec(Flavor flavor, const Permutation& w, bool full_family = false);

// Extensions of S_n into S_2n backing the three flavors.
Permutation extend_full(const Permutation& w); // fixes n+1..2n
Permutation extend_up(const Permutation& w);   // tail 2n, 2n-1, ..., n+1
Permutation extend_sym(const Permutation& w);  // type-C completion

// w_up = 1..n, 2n..n+1 and w_square = n+1..2n, 1..n in S_2n.
Permutation w_up_element(int n);
Permutation w_square_element(int n);

// True iff w is in C_n: w(i) + w(2n+1-i) = 2n+1.
bool commutes_with_w0(const Permutation& w);

// Pattern-avoidance test (1324, 31524, 24153, 426153).
bool defined_by_inclusions(const Permutation& w);

// Same class through the essential-set criterion: every essential box has
// no 1 weakly north-east, or none strictly south-west.  Kept separate so
// the two characterizations can be compared exhaustively.
bool defined_by_inclusions_essential(const Permutation& w);

enum class BoxType { type1, type2 };

// type1: no 1 of P(w) weakly north-east of the box; type2: not type1 and
// no 1 strictly south-west.  Requires w defined by inclusions and an
// essential box.
BoxType essential_box_type(const Permutation& w, const Box& box);

// The unique minimal-length permutation in S_n whose essential set is the
// single box (i,j) of the given type.
Permutation min_perm_with_box(int n, int i, int j, BoxType type);

// For w defined by inclusions: one single-box permutation per essential
// box; their ideal sum regenerates ideal_spec(w).
std::vector<Permutation> split_by_essential_boxes(const Permutation& w);

// Components of J(w_1) + ... + J(w_k) as a reduced intersection, one
// permutation per component.  full/up: joins in S_n via the rank-array
// calculus; sym: joins through the type-C calculus on extensions.
std::vector<Permutation> decompose_sum(Flavor flavor, const std::vector<Permutation>& ws);

// Slow cross-check for the sym flavor: S_2n joins of the extensions with
// iterated replacement of non-type-C elements by joins with w0*u*w0.
// Feasible for n <= 3.
std::vector<Permutation> decompose_sum_sym_oracle(const std::vector<Permutation>& ws);

// Codimension of the stratum of J_flavor(w) inside its matrix space.
// All three routes evaluate to length(w); each is computed through its
// own extension so the bookkeeping stays honest.
int codimension(Flavor flavor, const Permutation& w);

} // namespace msv

#endif
