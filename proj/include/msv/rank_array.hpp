#ifndef MSV_RANK_ARRAY_HPP
#define MSV_RANK_ARRAY_HPP

#include <optional>
#include <string>
#include <vector>

#include "msv/permutation.hpp"

namespace msv {

/*
 * North-East rank arrays and the replacement calculus that computes
 * combinatorial primary decompositions.
 *
 * An s x s array R bounds, for every (i, j), the rank of the submatrix on
 * rows 1..i and columns j..s.  Boundary convention: R_{i,1} = i and
 * R_{s,j} = s+1-j.  Out-of-range accesses follow R_{0,j} = R_{i,s+1} = 0;
 * cells below row s or left of column 1 impose nothing.
 *
 * Two regimes share the same replacement rules:
 *   - plain s x s arrays of S_s permutations (sums of J_full-style ideals);
 *   - hexagonal 2n x 2n arrays, where entries outside the central hexagon
 *     are pinned to their forced values (i for i+j <= n+1, 2n+1-j for
 *     i+j >= 3n+1).  Type-C arrays (R_{i,j} - R_{2n-i,2n+2-j} = i-j+1)
 *     additionally keep replacements in mirrored pairs, so every leaf
 *     commutes with the longest element.
 */
struct RankArray {
    int size = 0;
    std::vector<int> cells; // row-major, 1-indexed semantics via at()

    RankArray() = default;
    RankArray(int s, std::vector<int> c);

    // Build from explicit rows (convenience for tests and JSON input).
    static RankArray from_rows(const std::vector<std::vector<int>>& rows);

    int at(int i, int j) const;       // conventions applied out of range
    int& cell(int i, int j);          // in-range access only

    bool operator==(const RankArray& rhs) const {
        return size == rhs.size && cells == rhs.cells;
    }
    bool operator<(const RankArray& rhs) const {
        return cells < rhs.cells;
    }

    // this <= rhs entrywise (sizes must agree).
    bool leq(const RankArray& rhs) const;

    std::string to_string() const;
};

struct DecompositionResult {
    bool unit_ideal = false;
    std::vector<Permutation> components;   // Bruhat-minimal leaves, sorted
    std::vector<Permutation> leaves;       // all leaves before minimality
    std::vector<std::string> trace;        // replacement log when requested
};

struct DecomposeOptions {
    bool type_c = false;          // mirrored replacements; implies hexagonal
    bool hexagonal = false;       // treat as 2n x 2n with forced outer values
    bool want_trace = false;
    bool scan_from_bottom = false; // pick split blocks in reverse scan order;
                                   // the minimal set must not depend on this
};

// Rank array of a permutation: R_{ij} = NE count of the matrix of w0*w.
RankArray ne_rank_array(const Permutation& w);

// Boundary convention check; throws input_error when violated.
void validate_boundary(const RankArray& r);

// R_{i,j} - R_{2n-i,2n+2-j} = i - j + 1 for all cells (size must be even).
bool is_type_c(const RankArray& r);

// Lower every entry violating
//   R_{ij} <= min(R_{i+1,j}, R_{i,j-1}, R_{i-1,j}+1, R_{i,j+1}+1)
// to the displayed minimum, to the unique fixpoint.  Ideal-preserving.
RankArray canonicalize(const RankArray& r);

// Entrywise minimum; the array of the ideal sum.
RankArray sum(const RankArray& r, const RankArray& s);

// If the second differences of R form a permutation matrix whose rank
// array reproduces R, return that permutation; absent signals a
// non-prime (or non-canonical) array.
std::optional<Permutation> extract_permutation(const RankArray& r);

// Worklist decomposition: canonicalize, split every block
//   R_{i,j} = R_{i-1,j} = R_{i,j+1} = R_{i-1,j+1}+1
// both ways until all leaves are permutation arrays, then keep the
// Bruhat-minimal ones.
DecompositionResult primary_decomposition(const RankArray& r, const DecomposeOptions& opts = {});

// Convenience: type-C decomposition with hexagonal handling.
DecompositionResult primary_decomposition_type_c(const RankArray& r);

// canonicalize(r) <= canonicalize(s) entrywise; for permutation arrays this
// mirrors Bruhat order (true iff the variety of r sits inside that of s).
bool ideal_leq(const RankArray& r, const RankArray& s);

// |w(i) - i| <= n for all i, for w of even size 2n; membership in [1, w_square].
bool in_square_interval(const Permutation& w);

// Embed an n x n symmetric-side rank array into its 2n x 2n hexagonal
// type-C array: the NE quadrant carries r, the SW quadrant mirrors it,
// the remaining quadrants are unconstraining.
RankArray embed_type_c(const RankArray& r);

} // namespace msv

#endif
