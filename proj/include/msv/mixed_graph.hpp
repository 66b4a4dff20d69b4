#ifndef MSV_MIXED_GRAPH_HPP
#define MSV_MIXED_GRAPH_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "msv/permutation.hpp"
#include "msv/rank_array.hpp"
#include "msv/schubert.hpp"

namespace msv {

/*
 * Mixed graphs on [m] with directed edges i -> j (required: i < j, so the
 * directed part is acyclic in the vertex order) and bidirected edges i <-> j.
 */
struct MixedGraph {
    int m = 0;
    std::set<std::pair<int, int>> directed;   // (i, j) with i -> j
    std::set<std::pair<int, int>> bidirected; // stored with i < j

    MixedGraph() = default;
    MixedGraph(int vertices, std::vector<std::pair<int, int>> dir,
               std::vector<std::pair<int, int>> bidir);

    bool has_bidirected(int a, int b) const {
        return bidirected.count({std::min(a, b), std::max(a, b)}) > 0;
    }
};

// Invariant check (ordering, ranges, self-loops); throws input_error.
void validate(const MixedGraph& g);

// A trek between a1 and a2: two directed paths, the left one ending at a1,
// the right one ending at a2, whose sources coincide or are joined by a
// bidirected edge.  Paths are vertex sequences from the source down.
struct Trek {
    std::vector<int> left;
    std::vector<int> right;
    bool bidirected_top = false;

    bool operator<(const Trek& rhs) const {
        if (left != rhs.left) return left < rhs.left;
        if (right != rhs.right) return right < rhs.right;
        return bidirected_top < rhs.bidirected_top;
    }
};

// Complete enumeration of the treks between a1 and a2 (finite by acyclicity).
std::vector<Trek> treks(const MixedGraph& g, int a1, int a2);

// Literal definition: every trek between A1 and A2 meets C1 on its left
// side or C2 on its right side.  Enumerates treks; moderate graphs only.
bool t_separates(const MixedGraph& g, const std::vector<int>& A1, const std::vector<int>& A2,
                 const std::vector<int>& C1, const std::vector<int>& C2);

// Same predicate through reverse reachability: an unblocked trek exists iff
// some vertex (or bidirected pair) reaches A1 avoiding C1 on one side and
// A2 avoiding C2 on the other.  Used inside the subset searches.
bool t_separates_reachability(const MixedGraph& g, const std::vector<int>& A1,
                              const std::vector<int>& A2, const std::vector<int>& C1,
                              const std::vector<int>& C2);

// min #C1 + #C2 over t-separating pairs, capped at min(#A1, #A2).
// Exhaustive subset search; guarded at m <= 10.
int min_tsep_rank(const MixedGraph& g, const std::vector<int>& A1, const std::vector<int>& A2);

// Conditions (2) and (3) of the generalized-Markov-chain definition:
// directed and bidirected edge sets are closed under sub-intervals.
bool is_generalized_markov_chain(const MixedGraph& g);

struct VanishingIdeal {
    RankArray rank_array; // r(i,j) = min_tsep_rank([1,i], [j,m]), capped
    Permutation w;
    IdealSpec spec;       // sym flavor
};

// Rank array of the model, decomposed through the type-C calculus; a
// generalized Markov chain must yield a single component.
VanishingIdeal vanishing_ideal(const MixedGraph& g);

} // namespace msv

#endif
