#ifndef MSV_PARAM_HPP
#define MSV_PARAM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "msv/bigint.hpp"
#include "msv/mixed_graph.hpp"
#include "msv/permutation.hpp"
#include "msv/rank_array.hpp"
#include "msv/schubert.hpp"

namespace msv {

/*
 * Exact-rational matrices and the parametrizations of the determinantal
 * varieties: Chevalley products for the upper-triangular strata, Gram
 * transforms for the symmetric ones, and the covariance map of a mixed
 * graph.  No floating point anywhere here; every rank statement is exact.
 */
struct RationalMatrix {
    int rows = 0, cols = 0;
    std::vector<Rational> entries; // row-major

    RationalMatrix() = default;
    RationalMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

    static RationalMatrix identity(int n);

    Rational& at(int i, int j) { return entries[static_cast<size_t>((i - 1) * cols + (j - 1))]; }
    const Rational& at(int i, int j) const {
        return entries[static_cast<size_t>((i - 1) * cols + (j - 1))];
    }

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix transpose() const;
    RationalMatrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    bool operator==(const RationalMatrix& rhs) const {
        return rows == rhs.rows && cols == rhs.cols && entries == rhs.entries;
    }
    std::string to_string() const;
};

// I + t * e_{i,i+1}, size n.
RationalMatrix chevalley(int i, const Rational& t, int n);

// diag(a) * X_{i_k}(t_k) * ... * X_{i_1}(t_1) for (i_1..i_k) a reduced word
// of w0*w; parametrizes the upper-triangular stratum of w.
RationalMatrix phi_up(const Permutation& w, const std::vector<Rational>& a,
                      const std::vector<Rational>& t);

// U^T U; pushes the upper-triangular stratum onto the symmetric one.
RationalMatrix psi_sym(const RationalMatrix& u);

// Sigma = (I - Lambda)^{-T} Omega (I - Lambda)^{-1} for edge weights lambda
// on D and a symmetric Omega whose off-diagonal support is B.
RationalMatrix graph_model_point(const MixedGraph& g,
                                 const std::map<std::pair<int, int>, Rational>& lambda,
                                 const RationalMatrix& omega);

// Rank over Q via fraction-free elimination.
int exact_rank(const RationalMatrix& m);

struct BoxCheck {
    int i = 0, j = 0;
    int bound = 0;
    int achieved = 0;
    bool ok = false;
    bool essential = false;
    bool equality = false;
};

struct RankReport {
    bool pass = false;                  // every bound holds
    bool essential_equality = false;    // equality attained at all essential boxes
    std::vector<BoxCheck> boxes;        // constraining boxes only
};

// Checks every NE rank bound of R (or R(w)) against exact ranks of M.
RankReport verify_rank_array(const RationalMatrix& m, const RankArray& r,
                             const std::set<Box>& essential_boxes = {});
RankReport verify_rank_array(const RationalMatrix& m, const Permutation& w);

// Deterministic sampler: nonzero integers in [-9, 9], identical sequence
// for a given seed on every platform.
class SampleRng {
public:
    explicit SampleRng(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    uint64_t next();
    int nonzero_digit(); // in [-9, 9] \ {0}
    int digit();         // in [-9, 9]

private:
    uint64_t state_;
};

struct FlavorSample {
    std::vector<Rational> a, t;
    RationalMatrix matrix;
};

// Seeded sample of the stratum of w: phi_up output (flavor up) or its Gram
// transform (flavor sym).
FlavorSample sample_stratum(Flavor flavor, const Permutation& w, uint64_t seed);

} // namespace msv

#endif
