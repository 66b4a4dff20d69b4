#include "msv/rank_array.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "msv/error.hpp"

namespace msv {

namespace {
constexpr int kNoBound = 1 << 28; // stands for dropped (out-of-range) min terms
}

RankArray::RankArray(int s, std::vector<int> c) : size(s), cells(std::move(c)) {
    if (s < 1 || cells.size() != static_cast<size_t>(s) * static_cast<size_t>(s))
        throw input_error("rank array: cell count does not match size");
}

RankArray RankArray::from_rows(const std::vector<std::vector<int>>& rows) {
    const int s = static_cast<int>(rows.size());
    std::vector<int> c;
    c.reserve(static_cast<size_t>(s) * static_cast<size_t>(s));
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != s)
            throw input_error("rank array: ragged rows");
        c.insert(c.end(), row.begin(), row.end());
    }
    return RankArray(s, std::move(c));
}

int RankArray::at(int i, int j) const {
    if (i == 0 || j == size + 1) return 0;
    if (i < 0 || i > size || j < 1 || j > size + 1)
        throw invariant_error("rank array access out of range");
    return cells[static_cast<size_t>((i - 1) * size + (j - 1))];
}

int& RankArray::cell(int i, int j) {
    return cells[static_cast<size_t>((i - 1) * size + (j - 1))];
}

bool RankArray::leq(const RankArray& rhs) const {
    if (size != rhs.size) throw input_error("rank array size mismatch");
    for (size_t k = 0; k < cells.size(); ++k)
        if (cells[k] > rhs.cells[k]) return false;
    return true;
}

std::string RankArray::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= size; ++i) {
        for (int j = 1; j <= size; ++j) {
            if (j > 1) os << ' ';
            os << at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

RankArray ne_rank_array(const Permutation& w) {
    return RankArray(w.size(), ne_rank_counts(w));
}

void validate_boundary(const RankArray& r) {
    for (int i = 1; i <= r.size; ++i)
        if (r.at(i, 1) != i)
            throw input_error("rank array boundary violated: R_{" + std::to_string(i) +
                              ",1} must equal " + std::to_string(i));
    for (int j = 1; j <= r.size; ++j)
        if (r.at(r.size, j) != r.size + 1 - j)
            throw input_error("rank array boundary violated: bottom row must be " +
                              std::to_string(r.size) + "..1");
}

bool is_type_c(const RankArray& r) {
    if (r.size % 2 != 0) throw input_error("type-C rank arrays must have even size");
    const int s = r.size;
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            int mirror = (s - i >= 1 && s + 2 - j <= s) ? r.at(s - i, s + 2 - j) : 0;
            if (r.at(i, j) - mirror != i - j + 1) return false;
        }
    }
    return true;
}

namespace {

int staircase_bound(const RankArray& r, int i, int j) {
    const int s = r.size;
    int b = kNoBound;
    if (i + 1 <= s) b = std::min(b, r.at(i + 1, j));
    if (j - 1 >= 1) b = std::min(b, r.at(i, j - 1));
    b = std::min(b, r.at(i - 1, j) + 1);     // R_{0,j} = 0
    b = std::min(b, r.at(i, j + 1) + 1);     // R_{i,s+1} = 0
    return b;
}

} // namespace

RankArray canonicalize(const RankArray& r) {
    RankArray out = r;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 1; i <= out.size; ++i) {
            for (int j = 1; j <= out.size; ++j) {
                int b = staircase_bound(out, i, j);
                if (out.at(i, j) > b) {
                    out.cell(i, j) = b;
                    changed = true;
                }
            }
        }
    }
    return out;
}

RankArray sum(const RankArray& r, const RankArray& s) {
    if (r.size != s.size) throw input_error("rank array size mismatch in sum");
    RankArray out = r;
    for (size_t k = 0; k < out.cells.size(); ++k)
        out.cells[k] = std::min(out.cells[k], s.cells[k]);
    return out;
}

std::optional<Permutation> extract_permutation(const RankArray& r) {
    const int s = r.size;
    std::vector<int> row_dot(static_cast<size_t>(s) + 1, 0);
    std::vector<char> col_used(static_cast<size_t>(s) + 1, 0);
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            int d = r.at(i, j) - r.at(i, j + 1) - r.at(i - 1, j) + r.at(i - 1, j + 1);
            if (d == 0) continue;
            if (d != 1 || row_dot[static_cast<size_t>(i)] != 0 || col_used[static_cast<size_t>(j)])
                return std::nullopt;
            row_dot[static_cast<size_t>(i)] = j;
            col_used[static_cast<size_t>(j)] = 1;
        }
    }
    std::vector<int> one_line(static_cast<size_t>(s));
    for (int i = 1; i <= s; ++i) {
        if (row_dot[static_cast<size_t>(i)] == 0) return std::nullopt;
        // the dot of row i sits at column s+1-w(i)
        one_line[static_cast<size_t>(i - 1)] = s + 1 - row_dot[static_cast<size_t>(i)];
    }
    Permutation w{one_line};
    if (!(ne_rank_array(w) == r)) return std::nullopt;
    return w;
}

namespace {

struct SplitBlock {
    int i = 0, j = 0;
    bool found = false;
};

SplitBlock find_split(const RankArray& r, bool from_bottom) {
    SplitBlock last;
    for (int i = 2; i <= r.size; ++i) {
        for (int j = 1; j <= r.size - 1; ++j) {
            int v = r.at(i, j);
            if (v >= 1 && r.at(i - 1, j) == v && r.at(i, j + 1) == v &&
                r.at(i - 1, j + 1) == v - 1) {
                if (!from_bottom) return {i, j, true};
                last = {i, j, true};
            }
        }
    }
    return last;
}

// Mirror cell of (a, b) under the type-C pairing.
std::pair<int, int> type_c_partner(int s, int a, int b) { return {s - a, s + 2 - b}; }

void lower_paired(RankArray& r, int a, int b, bool type_c) {
    r.cell(a, b) -= 1;
    if (type_c) {
        auto [pa, pb] = type_c_partner(r.size, a, b);
        if (pa != a || pb != b) {
            if (pa < 1 || pa > r.size || pb < 1 || pb > r.size)
                throw invariant_error("type-C partner fell outside the array");
            r.cell(pa, pb) -= 1;
        }
    }
}

void normalize_hexagon(RankArray& r, bool& unit, std::vector<std::string>* trace) {
    const int s = r.size;
    if (s % 2 != 0) throw input_error("hexagonal rank arrays must have even size 2n");
    const int n = s / 2;
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            int forced = -1;
            if (i + j <= n + 1) forced = i;
            else if (i + j >= 3 * n + 1) forced = s + 1 - j;
            if (forced < 0) continue;
            int v = r.at(i, j);
            if (v < forced) { unit = true; return; }
            if (v > forced) {
                if (trace)
                    trace->push_back("clamped out-of-hexagon cell (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") from " + std::to_string(v) + " to " +
                                     std::to_string(forced));
                r.cell(i, j) = forced;
            }
        }
    }
}

} // namespace

DecompositionResult primary_decomposition(const RankArray& r, const DecomposeOptions& opts) {
    DecompositionResult result;
    std::vector<std::string>* trace = opts.want_trace ? &result.trace : nullptr;

    validate_boundary(r);
    RankArray start = r;
    if (opts.type_c && !is_type_c(start))
        throw input_error("type-C decomposition requested on a non-type-C array");
    if (opts.type_c || opts.hexagonal)
        normalize_hexagon(start, result.unit_ideal, trace);
    for (int v : start.cells)
        if (v < 0) result.unit_ideal = true;
    if (result.unit_ideal) return result;

    start = canonicalize(start);
    if (opts.type_c && !is_type_c(start))
        throw invariant_error("canonicalization broke the type-C property");

    std::set<std::vector<int>> seen;
    std::deque<RankArray> work;
    work.push_back(start);
    seen.insert(start.cells);
    std::set<Permutation> leaf_set;

    while (!work.empty()) {
        RankArray cur = work.front();
        work.pop_front();
        SplitBlock blk = find_split(cur, opts.scan_from_bottom);
        if (!blk.found) {
            auto w = extract_permutation(cur);
            if (!w)
                throw invariant_error("split-free canonical array failed to extract a permutation");
            if (opts.type_c && !is_type_c(cur))
                throw invariant_error("type-C property lost at a decomposition leaf");
            leaf_set.insert(*w);
            continue;
        }
        if (trace)
            trace->push_back("split at (" + std::to_string(blk.i) + "," + std::to_string(blk.j) +
                             ") rank " + std::to_string(cur.at(blk.i, blk.j)));
        RankArray left = cur;   // lower (i-1, j)
        lower_paired(left, blk.i - 1, blk.j, opts.type_c);
        RankArray right = cur;  // lower (i, j+1)
        lower_paired(right, blk.i, blk.j + 1, opts.type_c);
        for (RankArray child : {left, right}) {
            child = canonicalize(child);
            for (int v : child.cells)
                if (v < 0) throw invariant_error("decomposition drove a rank negative");
            if (seen.insert(child.cells).second) work.push_back(std::move(child));
        }
    }

    result.leaves.assign(leaf_set.begin(), leaf_set.end());
    // minimal ideals <=> Bruhat-minimal leaves (entrywise rank dominance)
    std::vector<RankArray> leaf_arrays;
    leaf_arrays.reserve(result.leaves.size());
    for (const auto& w : result.leaves) leaf_arrays.push_back(ne_rank_array(w));
    for (size_t a = 0; a < result.leaves.size(); ++a) {
        bool minimal = true;
        for (size_t b = 0; b < result.leaves.size(); ++b) {
            if (a != b && leaf_arrays[a].leq(leaf_arrays[b])) { minimal = false; break; }
        }
        if (minimal) result.components.push_back(result.leaves[a]);
    }
    std::sort(result.components.begin(), result.components.end());
    return result;
}

DecompositionResult primary_decomposition_type_c(const RankArray& r) {
    DecomposeOptions opts;
    opts.type_c = true;
    opts.hexagonal = true;
    return primary_decomposition(r, opts);
}

bool ideal_leq(const RankArray& r, const RankArray& s) {
    if (r.size != s.size) throw input_error("ideal_leq: size mismatch");
    return canonicalize(r).leq(canonicalize(s));
}

bool in_square_interval(const Permutation& w) {
    if (w.size() % 2 != 0) throw input_error("in_square_interval needs even size 2n");
    const int n = w.size() / 2;
    for (int i = 1; i <= w.size(); ++i)
        if (std::abs(w(i) - i) > n) return false;
    return true;
}

RankArray embed_type_c(const RankArray& r) {
    validate_boundary(r);
    const int n = r.size;
    const int s = 2 * n;
    RankArray big(s, std::vector<int>(static_cast<size_t>(s) * static_cast<size_t>(s), 0));
    for (int i = 1; i <= s; ++i) {
        for (int j = 1; j <= s; ++j) {
            int v;
            if (i <= n && j >= n + 1) v = r.at(i, j - n);                        // NE: the payload
            else if (i <= n && j <= n) v = i;                                    // NW: no constraint
            else if (i >= n + 1 && j >= n + 1) v = s + 1 - j;                    // SE: no constraint
            else v = r.at(s - i, n + 2 - j) + i - j + 1;                         // SW: mirrored
            big.cell(i, j) = v;
        }
    }
    if (!is_type_c(big))
        throw invariant_error("embed_type_c produced a non-type-C array");
    return big;
}

} // namespace msv
