#include "msv/param.hpp"

#include <algorithm>
#include <sstream>

#include "msv/error.hpp"

namespace msv {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols != rhs.rows) throw input_error("matrix product dimension mismatch");
    RationalMatrix out(rows, rhs.cols);
    for (int i = 1; i <= rows; ++i)
        for (int k = 1; k <= cols; ++k) {
            const Rational& lik = at(i, k);
            if (lik.is_zero()) continue;
            for (int j = 1; j <= rhs.cols; ++j) out.at(i, j) += lik * rhs.at(k, j);
        }
    return out;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols, rows);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) out.at(j, i) = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& row_idx,
                                         const std::vector<int>& col_idx) const {
    RationalMatrix out(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (size_t i = 0; i < row_idx.size(); ++i)
        for (size_t j = 0; j < col_idx.size(); ++j)
            out.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) =
                at(row_idx[i], col_idx[j]);
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= cols; ++j) {
            if (j > 1) os << ' ';
            os << at(i, j).to_string();
        }
        os << '\n';
    }
    return os.str();
}

RationalMatrix chevalley(int i, const Rational& t, int n) {
    if (i < 1 || i >= n) throw input_error("chevalley generator index out of range");
    RationalMatrix m = RationalMatrix::identity(n);
    m.at(i, i + 1) = t;
    return m;
}

RationalMatrix phi_up(const Permutation& w, const std::vector<Rational>& a,
                      const std::vector<Rational>& t) {
    const int n = w.size();
    if (static_cast<int>(a.size()) != n)
        throw input_error("phi_up: need exactly n diagonal parameters");
    const Permutation w0w = longest_element(n) * w;
    const std::vector<int> word = reduced_word(w0w);
    if (t.size() != word.size())
        throw input_error("phi_up: need exactly length(w0*w) = " + std::to_string(word.size()) +
                          " Chevalley parameters");
    RationalMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = a[static_cast<size_t>(i - 1)];
    for (size_t k = word.size(); k-- > 0;)
        m = m * chevalley(word[k], t[k], n);
    return m;
}

RationalMatrix psi_sym(const RationalMatrix& u) {
    if (u.rows != u.cols) throw input_error("psi_sym needs a square matrix");
    return u.transpose() * u;
}

RationalMatrix graph_model_point(const MixedGraph& g,
                                 const std::map<std::pair<int, int>, Rational>& lambda,
                                 const RationalMatrix& omega) {
    validate(g);
    const int m = g.m;
    if (omega.rows != m || omega.cols != m)
        throw input_error("graph_model_point: omega must be m x m");
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            if (!(omega.at(i, j) == omega.at(j, i)))
                throw input_error("graph_model_point: omega must be symmetric");
            if (i != j && !omega.at(i, j).is_zero() && !g.has_bidirected(i, j))
                throw input_error("graph_model_point: omega_{" + std::to_string(i) + "," +
                                  std::to_string(j) + "} nonzero without a bidirected edge");
        }
    }
    for (const auto& [edge, value] : lambda) {
        (void)value;
        if (!g.directed.count(edge))
            throw input_error("graph_model_point: lambda given on a non-edge");
    }
    // I - Lambda is unipotent upper triangular; invert by back substitution.
    RationalMatrix i_minus_lambda = RationalMatrix::identity(m);
    for (const auto& [edge, value] : lambda) i_minus_lambda.at(edge.first, edge.second) = -value;
    RationalMatrix inv = RationalMatrix::identity(m);
    // column j of inv solves (I - Lambda) x = e_j
    for (int j = 1; j <= m; ++j) {
        for (int i = m; i >= 1; --i) {
            Rational s = (i == j) ? Rational(1) : Rational(0);
            for (int k = i + 1; k <= m; ++k) {
                const Rational& c = i_minus_lambda.at(i, k);
                if (!c.is_zero()) s -= c * inv.at(k, j);
            }
            inv.at(i, j) = s;
        }
    }
    return inv.transpose() * omega * inv;
}

int exact_rank(const RationalMatrix& m) {
    // clear denominators row by row, then fraction-free elimination
    const int r = m.rows, c = m.cols;
    std::vector<std::vector<BigInt>> a(static_cast<size_t>(r), std::vector<BigInt>(static_cast<size_t>(c)));
    for (int i = 1; i <= r; ++i) {
        BigInt scale(1);
        for (int j = 1; j <= c; ++j) {
            const BigInt& d = m.at(i, j).den();
            scale = scale / gcd(scale, d) * d;
        }
        for (int j = 1; j <= c; ++j) {
            const Rational& q = m.at(i, j);
            a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                q.num() * (scale / q.den());
        }
    }
    int rank = 0;
    int row = 0;
    BigInt prev(1);
    for (int col = 0; col < c && row < r; ++col) {
        int pivot = -1;
        for (int i = row; i < r; ++i)
            if (!a[static_cast<size_t>(i)][static_cast<size_t>(col)].is_zero()) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(row)], a[static_cast<size_t>(pivot)]);
        // Bareiss step: a_ij <- (a_ij * p - a_icol * a_rowj) / prev
        const BigInt p = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int i = row + 1; i < r; ++i) {
            const BigInt factor = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            for (int j = col; j < c; ++j) {
                BigInt v = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * p -
                           factor * a[static_cast<size_t>(row)][static_cast<size_t>(j)];
                if (!(v % prev).is_zero())
                    throw invariant_error("fraction-free elimination lost exactness");
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = v / prev;
            }
        }
        prev = p;
        ++row;
        ++rank;
    }
    return rank;
}

namespace {

RankReport verify_impl(const RationalMatrix& m, const RankArray& r,
                       const std::set<Box>& essential_boxes) {
    if (m.rows != r.size || m.cols != r.size)
        throw input_error("verify_rank_array: matrix and rank array sizes differ");
    const int n = r.size;
    RankReport report;
    report.pass = true;
    report.essential_equality = true;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int bound = r.at(i, j);
            if (bound >= std::min(i, n + 1 - j)) continue; // unconstraining cell
            std::vector<int> rows_idx, cols_idx;
            for (int a = 1; a <= i; ++a) rows_idx.push_back(a);
            for (int b = j; b <= n; ++b) cols_idx.push_back(b);
            BoxCheck chk;
            chk.i = i;
            chk.j = j;
            chk.bound = bound;
            chk.achieved = exact_rank(m.submatrix(rows_idx, cols_idx));
            chk.ok = chk.achieved <= bound;
            chk.essential = essential_boxes.count({i, j}) > 0;
            chk.equality = chk.achieved == bound;
            if (!chk.ok) report.pass = false;
            if (chk.essential && !chk.equality) report.essential_equality = false;
            report.boxes.push_back(chk);
        }
    }
    return report;
}

} // namespace

RankReport verify_rank_array(const RationalMatrix& m, const RankArray& r,
                             const std::set<Box>& essential_boxes) {
    return verify_impl(m, r, essential_boxes);
}

RankReport verify_rank_array(const RationalMatrix& m, const Permutation& w) {
    return verify_impl(m, ne_rank_array(w), essential_set(w));
}

uint64_t SampleRng::next() {
    // splitmix64; stable across platforms
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

int SampleRng::nonzero_digit() {
    int v = static_cast<int>(next() % 18) + 1; // 1..18
    return v <= 9 ? v : 9 - v;                 // 1..9, -1..-9
}

int SampleRng::digit() {
    return static_cast<int>(next() % 19) - 9;
}

FlavorSample sample_stratum(Flavor flavor, const Permutation& w, uint64_t seed) {
    if (flavor == Flavor::full)
        throw input_error("sample_stratum: only the sym and up strata are parametrized");
    SampleRng rng(seed);
    const int n = w.size();
    FlavorSample s;
    for (int i = 0; i < n; ++i) s.a.emplace_back(rng.nonzero_digit());
    const int k = length(longest_element(n) * w);
    for (int i = 0; i < k; ++i) s.t.emplace_back(rng.nonzero_digit());
    s.matrix = phi_up(w, s.a, s.t);
    if (flavor == Flavor::sym) s.matrix = psi_sym(s.matrix);
    return s;
}

} // namespace msv
