#ifndef MSV_PERMUTATION_HPP
#define MSV_PERMUTATION_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace msv {

/*
 * Permutations of [n] in one-line notation, 1-indexed at every interface.
 *
 * Bruhat order is computed through North-East rank dominance: with
 * P(w) the permutation matrix of w0*w (a 1 in row i, column n+1-w(i)),
 * and R(w)_{ij} the number of 1s of P(w) weakly north-east of (i,j),
 * we have v <= w iff R(v) >= R(w) entrywise.  bruhat_leq_oracle gives
 * the independent ground truth via transitive closure of
 * length-increasing transpositions.
 */
class Permutation {
public:
    Permutation() = default;

    // One-line notation; values must be a bijection of [1, n].
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }

    // Value at position i, 1-indexed.
    int operator()(int i) const { return entries_[static_cast<size_t>(i - 1)]; }

    const std::vector<int>& entries() const { return entries_; }

    Permutation inverse() const;

    // Function composition: (*this * rhs)(i) = (*this)(rhs(i)).
    Permutation operator*(const Permutation& rhs) const;

    bool operator==(const Permutation& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const Permutation& rhs) const { return !(*this == rhs); }

    // Lexicographic on one-line notation; the deterministic set order.
    bool operator<(const Permutation& rhs) const { return entries_ < rhs.entries_; }

    // Compact digit string for n <= 9, comma separated otherwise.
    std::string to_string() const;

private:
    std::vector<int> entries_;
};

// Accepts "213" (digits, n <= 9) or "3,5,1,6,2,4".
Permutation parse_one_line(const std::string& text);

// Inversion count #{i < j : w(i) > w(j)}.
int length(const Permutation& w);

// w0 = n, n-1, ..., 1.
Permutation longest_element(int n);

// v <= w in Bruhat order, via NE rank-array dominance.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Ground truth by closure of length-increasing transpositions; n <= 8.
bool bruhat_leq_oracle(const Permutation& v, const Permutation& w);

// Every u >= v reachable in the transposition closure; n <= 8.  Test helper
// for exhaustive order comparisons.
std::vector<Permutation> bruhat_upper_set(const Permutation& v);

// Minimal elements of { u in S_n : u >= all of ws, restrict(u) }, by
// exhaustive scan (n <= 8).  Result sorted lexicographically; may be empty.
std::vector<Permutation> minimal_upper_bounds(
    const std::vector<Permutation>& ws,
    const std::function<bool(const Permutation&)>& restrict = nullptr);

// True iff some subsequence of w is order-isomorphic to p.
bool contains_pattern(const Permutation& w, const Permutation& p);

// Word (i_1, ..., i_k) with w = s_{i_1} ∘ ... ∘ s_{i_k} and k = length(w).
// Deterministic: bubbles the largest misplaced value into place.
std::vector<int> reduced_word(const Permutation& w);

// Adjacent transposition s_i in S_n.
Permutation adjacent_transposition(int i, int n);

// NE rank counts of P(w): R_{ij} = #{k <= i : n+1-w(k) >= j}, row-major,
// flattened; shared with the rank_array module.
std::vector<int> ne_rank_counts(const Permutation& w);

} // namespace msv

#endif
