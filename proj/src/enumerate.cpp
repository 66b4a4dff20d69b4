#include "msv/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "msv/error.hpp"

namespace msv {

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw input_error("stirling2: need 0 <= k <= n");
    // S(n,k) = k S(n-1,k) + S(n-1,k-1)
    std::vector<BigInt> row(static_cast<size_t>(n) + 1);
    row[0] = BigInt(1);
    for (int m = 1; m <= n; ++m) {
        for (int j = std::min(m, k); j >= 1; --j)
            row[static_cast<size_t>(j)] =
                BigInt(j) * row[static_cast<size_t>(j)] + row[static_cast<size_t>(j - 1)];
        row[0] = BigInt(0);
    }
    return row[static_cast<size_t>(k)];
}

namespace {

BigInt factorial(int n) {
    BigInt f(1);
    for (int k = 2; k <= n; ++k) f *= BigInt(k);
    return f;
}

} // namespace

BigInt x_count(int n) {
    if (n < 1) throw input_error("x_count: need n >= 1");
    BigInt total(0);
    for (int k = 1; k <= n + 1; ++k) {
        BigInt term = factorial(k - 1) * stirling2(n + 1, k);
        total += term * term;
    }
    return total;
}

BigInt sigma_count(int n) {
    if (n < 1) throw input_error("sigma_count: need n >= 1");
    BigInt total(0);
    for (int k = 1; k <= n + 1; ++k) total += factorial(k - 1) * stirling2(n + 1, k);
    return total;
}

const BigInt& SeidelTriangle::at(int k, int i) const {
    static const BigInt zero(0);
    if (k < 0 || k >= static_cast<int>(rows.size())) return zero;
    const auto& row = rows[static_cast<size_t>(k)];
    if (i < 1 || i > static_cast<int>(row.size())) return zero;
    return row[static_cast<size_t>(i - 1)];
}

SeidelTriangle seidel(int k_max) {
    if (k_max < 0) throw input_error("seidel: need k_max >= 0");
    SeidelTriangle tri;
    tri.rows.resize(static_cast<size_t>(k_max) + 1);
    for (int k = 0; k <= k_max; ++k)
        tri.rows[static_cast<size_t>(k)].assign(static_cast<size_t>((k + 3) / 2), BigInt(0));
    // the recurrence text starts at 0, but the tabulated triangle (and the
    // median Genocchi values) require s_{0,1} = 1
    tri.rows[0][0] = BigInt(1);
    for (int k = 1; k <= k_max; ++k) {
        auto& row = tri.rows[static_cast<size_t>(k)];
        const int width = static_cast<int>(row.size());
        if (k % 2 == 1) {
            for (int i = 1; i <= width; ++i)
                row[static_cast<size_t>(i - 1)] = tri.at(k - 1, i) + tri.at(k, i - 1);
        } else {
            for (int i = width; i >= 1; --i)
                row[static_cast<size_t>(i - 1)] = tri.at(k - 1, i) + tri.at(k, i + 1);
        }
    }
    return tri;
}

BigInt y_count(int n) {
    if (n < 1) throw input_error("y_count: need n >= 1");
    return seidel(2 * n).at(2 * n, 1);
}

namespace {

// Count permutations of S_{2n} by backtracking with per-position value bounds.
long long count_interval_perms(int n, bool symmetric, bool up_board) {
    const int s = 2 * n;
    std::vector<char> used(static_cast<size_t>(s) + 1, 0);
    std::vector<int> w(static_cast<size_t>(s) + 1, 0);
    long long count = 0;
    auto allowed = [&](int i, int v) {
        if (std::abs(v - i) > n) return false;
        if (up_board && v + i > 3 * n + 1) return false;
        return true;
    };
    std::function<void(int)> rec = [&](int i) {
        if (symmetric && i > n) {
            ++count;
            return;
        }
        if (i > s) {
            ++count;
            return;
        }
        for (int v = 1; v <= s; ++v) {
            if (used[static_cast<size_t>(v)] || !allowed(i, v)) continue;
            if (symmetric) {
                const int mv = s + 1 - v; // forced mirror value at position s+1-i
                if (used[static_cast<size_t>(mv)] || v == mv) continue;
                used[static_cast<size_t>(v)] = used[static_cast<size_t>(mv)] = 1;
                rec(i + 1);
                used[static_cast<size_t>(v)] = used[static_cast<size_t>(mv)] = 0;
            } else {
                used[static_cast<size_t>(v)] = 1;
                rec(i + 1);
                used[static_cast<size_t>(v)] = 0;
            }
        }
    };
    rec(1);
    return count;
}

} // namespace

BigInt brute_count(Flavor space, int n) {
    if (n < 1) throw input_error("brute_count: need n >= 1");
    switch (space) {
        case Flavor::full:
            if (n > 4) throw input_error("brute_count(full): guarded at n <= 4");
            return BigInt(count_interval_perms(n, false, false));
        case Flavor::sym:
            if (n > 5) throw input_error("brute_count(sym): guarded at n <= 5");
            return BigInt(count_interval_perms(n, true, false));
        case Flavor::up:
            if (n > 4) throw input_error("brute_count(up): guarded at n <= 4");
            return BigInt(count_interval_perms(n, false, true));
    }
    throw invariant_error("unreachable space");
}

BigInt gn_count(int n, int require_covered) {
    if (n < 1 || n > 5) throw input_error("gn_count: guarded at 1 <= n <= 5");
    if (require_covered < 0 || require_covered > n)
        throw input_error("gn_count: require_covered out of range");
    // chains = (U, V) nonempty subsets of [n] (unbarred, barred) with max U <= min V
    struct Chain { unsigned u, v; };
    std::vector<Chain> chains;
    for (unsigned u = 1; u < (1u << n); ++u) {
        int max_u = 0;
        for (int b = n; b >= 1; --b)
            if (u & (1u << (b - 1))) { max_u = b; break; }
        for (unsigned v = 1; v < (1u << n); ++v) {
            int min_v = 0;
            for (int b = 1; b <= n; ++b)
                if (v & (1u << (b - 1))) { min_v = b; break; }
            if (max_u <= min_v) chains.push_back({u, v});
        }
    }
    const unsigned required = (1u << require_covered) - 1;
    std::map<std::pair<unsigned, unsigned>, BigInt> memo;
    std::function<BigInt(unsigned, unsigned)> lists = [&](unsigned used_u,
                                                          unsigned used_v) -> BigInt {
        auto it = memo.find({used_u, used_v});
        if (it != memo.end()) return it->second;
        BigInt total((used_u & required) == required ? 1 : 0); // stop here
        for (const auto& c : chains) {
            if ((c.u & used_u) || (c.v & used_v)) continue;
            total += lists(used_u | c.u, used_v | c.v);
        }
        memo[{used_u, used_v}] = total;
        return total;
    };
    return lists(0, 0);
}

} // namespace msv
