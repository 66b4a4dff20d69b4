#include "msv/mixed_graph.hpp"

#include <algorithm>
#include <functional>

#include "msv/error.hpp"

namespace msv {

MixedGraph::MixedGraph(int vertices, std::vector<std::pair<int, int>> dir,
                       std::vector<std::pair<int, int>> bidir)
    : m(vertices) {
    for (auto [a, b] : dir) directed.insert({a, b});
    for (auto [a, b] : bidir) bidirected.insert({std::min(a, b), std::max(a, b)});
    validate(*this);
}

void validate(const MixedGraph& g) {
    if (g.m < 1) throw input_error("mixed graph needs at least one vertex");
    for (auto [a, b] : g.directed) {
        if (a < 1 || b < 1 || a > g.m || b > g.m)
            throw input_error("directed edge endpoint outside [1, m]");
        if (a == b) throw input_error("self-loop in directed edges");
        if (a >= b)
            throw input_error("directed edge " + std::to_string(a) + "->" + std::to_string(b) +
                              " violates the topological vertex order (need i < j)");
    }
    for (auto [a, b] : g.bidirected) {
        if (a < 1 || b < 1 || a > g.m || b > g.m)
            throw input_error("bidirected edge endpoint outside [1, m]");
        if (a == b) throw input_error("self-loop in bidirected edges");
    }
}

namespace {

// All directed paths ending at v, as vertex sequences source..v.
void collect_paths_to(const MixedGraph& g, int v, std::vector<std::vector<int>>& out) {
    out.push_back({v});
    for (auto [a, b] : g.directed) {
        if (b != v) continue;
        std::vector<std::vector<int>> prefix;
        collect_paths_to(g, a, prefix);
        for (auto& p : prefix) {
            p.push_back(v);
            out.push_back(std::move(p));
        }
    }
}

std::vector<std::vector<int>> paths_to(const MixedGraph& g, int v) {
    std::vector<std::vector<int>> out;
    collect_paths_to(g, v, out);
    return out;
}

bool intersects(const std::vector<int>& path, const std::vector<int>& set) {
    for (int v : path)
        if (std::find(set.begin(), set.end(), v) != set.end()) return true;
    return false;
}

} // namespace

std::vector<Trek> treks(const MixedGraph& g, int a1, int a2) {
    if (a1 < 1 || a1 > g.m || a2 < 1 || a2 > g.m)
        throw input_error("trek endpoints outside [1, m]");
    auto lefts = paths_to(g, a1);
    auto rights = paths_to(g, a2);
    std::vector<Trek> out;
    for (const auto& l : lefts) {
        for (const auto& r : rights) {
            if (l.front() == r.front()) {
                out.push_back({l, r, false});
            } else if (g.has_bidirected(l.front(), r.front())) {
                out.push_back({l, r, true});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool t_separates(const MixedGraph& g, const std::vector<int>& A1, const std::vector<int>& A2,
                 const std::vector<int>& C1, const std::vector<int>& C2) {
    for (int a1 : A1) {
        for (int a2 : A2) {
            for (const auto& t : treks(g, a1, a2)) {
                if (!intersects(t.left, C1) && !intersects(t.right, C2)) return false;
            }
        }
    }
    return true;
}

bool t_separates_reachability(const MixedGraph& g, const std::vector<int>& A1,
                              const std::vector<int>& A2, const std::vector<int>& C1,
                              const std::vector<int>& C2) {
    // vertices with a directed path to the target set avoiding the blocker
    auto reach_avoiding = [&](const std::vector<int>& targets, const std::vector<int>& block) {
        std::vector<char> blocked(static_cast<size_t>(g.m) + 1, 0);
        for (int v : block) blocked[static_cast<size_t>(v)] = 1;
        std::vector<char> reach(static_cast<size_t>(g.m) + 1, 0);
        for (int v : targets)
            if (!blocked[static_cast<size_t>(v)]) reach[static_cast<size_t>(v)] = 1;
        // directed edges go low -> high, so one high-to-low sweep suffices
        for (int v = g.m; v >= 1; --v) {
            if (reach[static_cast<size_t>(v)] || blocked[static_cast<size_t>(v)]) continue;
            for (auto [a, b] : g.directed)
                if (a == v && reach[static_cast<size_t>(b)]) { reach[static_cast<size_t>(v)] = 1; break; }
        }
        return reach;
    };
    auto left = reach_avoiding(A1, C1);
    auto right = reach_avoiding(A2, C2);
    for (int v = 1; v <= g.m; ++v)
        if (left[static_cast<size_t>(v)] && right[static_cast<size_t>(v)]) return false;
    for (auto [a, b] : g.bidirected) {
        if (left[static_cast<size_t>(a)] && right[static_cast<size_t>(b)]) return false;
        if (left[static_cast<size_t>(b)] && right[static_cast<size_t>(a)]) return false;
    }
    return true;
}

namespace {

void subsets_of_size(int m, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v <= m; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
}

} // namespace

int min_tsep_rank(const MixedGraph& g, const std::vector<int>& A1, const std::vector<int>& A2) {
    if (g.m > 10)
        throw input_error("min_tsep_rank: exhaustive subset search guarded at m <= 10 "
                          "(a max-flow fast path would be needed beyond desk scale)");
    if (A1.empty() || A2.empty()) throw input_error("min_tsep_rank: empty vertex set");
    const int cap = static_cast<int>(std::min(A1.size(), A2.size()));
    std::vector<std::vector<std::vector<int>>> by_size(static_cast<size_t>(g.m) + 1);
    for (int k = 0; k <= g.m; ++k) subsets_of_size(g.m, k, by_size[static_cast<size_t>(k)]);
    for (int total = 0; total < cap; ++total) {
        for (int k1 = 0; k1 <= total; ++k1) {
            const int k2 = total - k1;
            if (k1 > g.m || k2 > g.m) continue;
            for (const auto& c1 : by_size[static_cast<size_t>(k1)])
                for (const auto& c2 : by_size[static_cast<size_t>(k2)])
                    if (t_separates_reachability(g, A1, A2, c1, c2)) return total;
        }
    }
    return cap;
}

bool is_generalized_markov_chain(const MixedGraph& g) {
    validate(g);
    for (auto [i, j] : g.directed)
        for (int k = i; k < j; ++k)
            for (int l = k + 1; l <= j; ++l)
                if (!g.directed.count({k, l})) return false;
    for (auto [i, j] : g.bidirected)
        for (int k = i; k < j; ++k)
            for (int l = k + 1; l <= j; ++l)
                if (!g.has_bidirected(k, l)) return false;
    return true;
}

VanishingIdeal vanishing_ideal(const MixedGraph& g) {
    if (!is_generalized_markov_chain(g))
        throw input_error("vanishing_ideal requires a generalized Markov chain");
    const int n = g.m;
    RankArray r(n, std::vector<int>(static_cast<size_t>(n) * static_cast<size_t>(n), 0));
    std::vector<int> rows, cols;
    for (int i = 1; i <= n; ++i) {
        rows.push_back(i);
        cols.clear();
        for (int j = 1; j <= n; ++j) {
            cols.clear();
            for (int v = j; v <= n; ++v) cols.push_back(v);
            r.cell(i, j) = min_tsep_rank(g, rows, cols); // already capped at min(i, n+1-j)
        }
    }
    validate_boundary(r);

    auto dec = primary_decomposition_type_c(embed_type_c(r));
    if (dec.unit_ideal)
        throw invariant_error("vanishing ideal rank array decomposed to the unit ideal");
    if (dec.components.size() != 1)
        throw invariant_error("generalized Markov chain produced " +
                              std::to_string(dec.components.size()) +
                              " components; its ideal must be prime");
    const Permutation& u = dec.components.front();
    std::vector<int> head(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        if (u(i) > n)
            throw invariant_error("vanishing ideal component is not an S_n extension");
        head[static_cast<size_t>(i - 1)] = u(i);
    }
    VanishingIdeal out;
    out.rank_array = r;
    out.w = Permutation(head);
    if (extend_sym(out.w) != u)
        throw invariant_error("vanishing ideal component fails to restrict");
    out.spec = ideal_spec(Flavor::sym, out.w);
    return out;
}

} // namespace msv
