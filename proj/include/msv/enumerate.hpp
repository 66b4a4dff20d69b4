#ifndef MSV_ENUMERATE_HPP
#define MSV_ENUMERATE_HPP

#include <vector>

#include "msv/bigint.hpp"
#include "msv/schubert.hpp"

namespace msv {

/*
 * Closed-form stratum counts and their brute-force oracles.
 *
 *   x(n)     — strata of the generic stratification; Stirling formula.
 *   sigma(n) — symmetric strata; the same formula without the square.
 *   y(n)     — upper-triangular strata; median Genocchi numbers via the
 *              Seidel triangle.
 *
 * brute_count enumerates the permutations directly: |w(i) - i| <= n for
 * the generic interval, plus w(i) + w(2n+1-i) = 2n+1 for the symmetric
 * one, plus w(i) + i <= 3n+1 (and no symmetry) for the upper-triangular
 * rook board.  gn_count enumerates ordered lists of disjoint chains in
 * the 2 x n grid poset, each chain holding both barred and unbarred
 * elements.
 */

// Stirling number of the second kind, S(n, k).
BigInt stirling2(int n, int k);

// sum_k ((k-1)! S(n+1,k))^2.
BigInt x_count(int n);

// sum_k (k-1)! S(n+1,k).
BigInt sigma_count(int n);

// Median Genocchi number, read off the Seidel triangle at s_{2n,1}.
BigInt y_count(int n);

struct SeidelTriangle {
    std::vector<std::vector<BigInt>> rows; // rows[k][i-1] = s_{k,i}
    const BigInt& at(int k, int i) const;  // zero when out of range
};

// Triangle through column k_max, seeded from the tabulated s_{0,1} = 1.
SeidelTriangle seidel(int k_max);

// Direct interval / rook-board counts; guarded (full, up: n <= 4; sym: n <= 5).
BigInt brute_count(Flavor space, int n);

// |G(n)| with at least the unbarred elements 1..require_covered all lying
// in chains; require_covered = 0 counts everything.  Guarded at n <= 5.
BigInt gn_count(int n, int require_covered = 0);

} // namespace msv

#endif
