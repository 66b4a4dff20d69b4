#include "msv/schubert.hpp"

#include <algorithm>

#include "msv/error.hpp"

namespace msv {

std::string flavor_name(Flavor f) {
    switch (f) {
        case Flavor::full: return "full";
        case Flavor::sym: return "sym";
        case Flavor::up: return "up";
    }
    return "?";
}

Flavor parse_flavor(const std::string& name) {
    if (name == "full") return Flavor::full;
    if (name == "sym") return Flavor::sym;
    if (name == "up") return Flavor::up;
    throw input_error("unknown flavor '" + name + "' (expected full, sym or up)");
}

namespace {

// Dot columns of P(w): row i carries a 1 in column n+1-w(i).
std::vector<int> dot_cols(const Permutation& w) {
    const int n = w.size();
    std::vector<int> u(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) u[static_cast<size_t>(i)] = n + 1 - w(i);
    return u;
}

} // namespace

std::set<Box> diagram(const Permutation& w) {
    const int n = w.size();
    auto u = dot_cols(w);
    std::vector<int> col_row(static_cast<size_t>(n) + 1, 0); // row of the dot in each column
    for (int i = 1; i <= n; ++i) col_row[static_cast<size_t>(u[static_cast<size_t>(i)])] = i;
    std::set<Box> boxes;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (u[static_cast<size_t>(i)] < j && col_row[static_cast<size_t>(j)] > i)
                boxes.insert({i, j});
    return boxes;
}

std::set<Box> essential_set(const Permutation& w) {
    auto d = diagram(w);
    std::set<Box> ess;
    for (const auto& [i, j] : d)
        if (!d.count({i + 1, j}) && !d.count({i, j - 1})) ess.insert({i, j});
    return ess;
}

IdealSpec ideal_spec(Flavor flavor, const Permutation& w, bool full_family) {
    const int n = w.size();
    RankArray r = ne_rank_array(w);
    IdealSpec spec;
    spec.flavor = flavor;
    spec.n = n;
    spec.w = w;
    std::set<Box> boxes;
    if (full_family) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (r.at(i, j) < std::min(i, n + 1 - j)) boxes.insert({i, j});
    } else {
        boxes = essential_set(w);
    }
    for (const auto& [i, j] : boxes) {
        MinorSpec m;
        for (int a = 1; a <= i; ++a) m.rows.push_back(a);
        for (int b = j; b <= n; ++b) m.cols.push_back(b);
        m.size = r.at(i, j) + 1;
        if (m.size > static_cast<int>(std::min(m.rows.size(), m.cols.size())))
            continue; // minors larger than the submatrix cut nothing
        spec.generators.push_back(std::move(m));
    }
    std::sort(spec.generators.begin(), spec.generators.end());
    return spec;
}

Permutation extend_full(const Permutation& w) {
    const int n = w.size();
    std::vector<int> e(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) e[static_cast<size_t>(i - 1)] = w(i);
    for (int i = n + 1; i <= 2 * n; ++i) e[static_cast<size_t>(i - 1)] = i;
    return Permutation(std::move(e));
}

Permutation extend_up(const Permutation& w) {
    const int n = w.size();
    std::vector<int> e(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) e[static_cast<size_t>(i - 1)] = w(i);
    for (int i = n + 1; i <= 2 * n; ++i) e[static_cast<size_t>(i - 1)] = 3 * n + 1 - i;
    return Permutation(std::move(e));
}

Permutation extend_sym(const Permutation& w) {
    const int n = w.size();
    std::vector<int> e(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) {
        e[static_cast<size_t>(i - 1)] = w(i);
        e[static_cast<size_t>(2 * n - i)] = 2 * n + 1 - w(i);
    }
    return Permutation(std::move(e));
}

Permutation w_up_element(int n) {
    std::vector<int> e(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) e[static_cast<size_t>(i - 1)] = i;
    for (int i = n + 1; i <= 2 * n; ++i) e[static_cast<size_t>(i - 1)] = 3 * n + 1 - i;
    return Permutation(std::move(e));
}

Permutation w_square_element(int n) {
    std::vector<int> e(static_cast<size_t>(2 * n));
    for (int i = 1; i <= n; ++i) e[static_cast<size_t>(i - 1)] = n + i;
    for (int i = n + 1; i <= 2 * n; ++i) e[static_cast<size_t>(i - 1)] = i - n;
    return Permutation(std::move(e));
}

bool commutes_with_w0(const Permutation& w) {
    const int s = w.size();
    if (s % 2 != 0) return false;
    for (int i = 1; i <= s; ++i)
        if (w(i) + w(s + 1 - i) != s + 1) return false;
    return true;
}

bool defined_by_inclusions(const Permutation& w) {
    static const std::vector<std::vector<int>> patterns = {
        {1, 3, 2, 4}, {3, 1, 5, 2, 4}, {2, 4, 1, 5, 3}, {4, 2, 6, 1, 5, 3}};
    for (const auto& p : patterns)
        if (contains_pattern(w, Permutation(p))) return false;
    return true;
}

namespace {

// Dots of P(w) weakly north-east / strictly south-west of a box.
bool has_dot_weakly_ne(const Permutation& w, int i, int j) {
    const int n = w.size();
    for (int k = 1; k <= i; ++k)
        if (n + 1 - w(k) >= j) return true;
    return false;
}

bool has_dot_strictly_sw(const Permutation& w, int i, int j) {
    const int n = w.size();
    for (int k = i + 1; k <= n; ++k)
        if (n + 1 - w(k) < j) return true;
    return false;
}

} // namespace

bool defined_by_inclusions_essential(const Permutation& w) {
    for (const auto& [i, j] : essential_set(w))
        if (has_dot_weakly_ne(w, i, j) && has_dot_strictly_sw(w, i, j)) return false;
    return true;
}

BoxType essential_box_type(const Permutation& w, const Box& box) {
    if (!essential_set(w).count(box))
        throw input_error("essential_box_type: box is not essential for this permutation");
    if (!defined_by_inclusions(w))
        throw input_error("essential_box_type: permutation is not defined by inclusions");
    const auto [i, j] = box;
    if (!has_dot_weakly_ne(w, i, j)) return BoxType::type1;
    if (!has_dot_strictly_sw(w, i, j)) return BoxType::type2;
    throw invariant_error("essential box of a defined-by-inclusions permutation has neither type");
}

Permutation min_perm_with_box(int n, int i, int j, BoxType type) {
    std::vector<int> e(static_cast<size_t>(n));
    if (type == BoxType::type1) {
        if (!(1 <= i && i < j && j <= n))
            throw input_error("min_perm_with_box: type-1 boxes need 1 <= i < j <= n");
        const int b = n - j + 1; // size of the suffix block
        for (int k = 1; k <= n; ++k) {
            int v;
            if (k <= i) v = b + k;
            else if (k <= i + b) v = k - i;
            else v = k;
            e[static_cast<size_t>(k - 1)] = v;
        }
    } else {
        if (!(1 < j && j <= i && i < n))
            throw input_error("min_perm_with_box: type-2 boxes need 1 < j <= i < n");
        for (int k = 1; k <= n; ++k) {
            int v;
            if (k <= i - j + 1) v = k;
            else if (k <= i) v = k + n - i;
            else v = k + 1 - j;
            e[static_cast<size_t>(k - 1)] = v;
        }
    }
    return Permutation(std::move(e));
}

std::vector<Permutation> split_by_essential_boxes(const Permutation& w) {
    if (!defined_by_inclusions(w))
        throw input_error("split_by_essential_boxes: permutation is not defined by inclusions");
    std::vector<Permutation> parts;
    for (const auto& box : essential_set(w)) {
        BoxType t = essential_box_type(w, box);
        parts.push_back(min_perm_with_box(w.size(), box.first, box.second, t));
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

namespace {

std::vector<Permutation> decompose_sum_plain(const std::vector<Permutation>& ws) {
    RankArray acc = ne_rank_array(ws.front());
    for (size_t k = 1; k < ws.size(); ++k) acc = sum(acc, ne_rank_array(ws[k]));
    auto dec = primary_decomposition(acc);
    if (dec.unit_ideal) throw invariant_error("sum of permutation ideals cannot be the unit ideal");
    return dec.components;
}

std::vector<Permutation> decompose_sum_sym(const std::vector<Permutation>& ws) {
    RankArray acc = ne_rank_array(extend_sym(ws.front()));
    for (size_t k = 1; k < ws.size(); ++k)
        acc = sum(acc, ne_rank_array(extend_sym(ws[k])));
    auto dec = primary_decomposition_type_c(acc);
    if (dec.unit_ideal) throw invariant_error("sum of permutation ideals cannot be the unit ideal");
    const int n = ws.front().size();
    std::vector<Permutation> out;
    for (const auto& u : dec.components) {
        std::vector<int> head(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) {
            if (u(i) > n)
                throw invariant_error("sym component " + u.to_string() +
                                      " is not the extension of an S_n permutation");
            head[static_cast<size_t>(i - 1)] = u(i);
        }
        Permutation v{head};
        if (extend_sym(v) != u)
            throw invariant_error("sym component fails to restrict to S_n");
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<Permutation> decompose_sum(Flavor flavor, const std::vector<Permutation>& ws) {
    if (ws.empty()) throw input_error("decompose_sum: empty permutation list");
    const int n = ws.front().size();
    for (const auto& w : ws)
        if (w.size() != n) throw input_error("decompose_sum: size mismatch");
    if (flavor == Flavor::sym) return decompose_sum_sym(ws);
    return decompose_sum_plain(ws);
}

std::vector<Permutation> decompose_sum_sym_oracle(const std::vector<Permutation>& ws) {
    if (ws.empty()) throw input_error("decompose_sum_sym_oracle: empty input");
    const int n = ws.front().size();
    if (n > 3) throw input_error("decompose_sum_sym_oracle: feasible only for n <= 3");
    std::vector<Permutation> ext;
    for (const auto& w : ws) ext.push_back(extend_sym(w));
    const Permutation w0 = longest_element(2 * n);

    std::vector<Permutation> comps = minimal_upper_bounds(ext);
    // replace every non-type-C join u by the joins of {u, w0*u*w0}
    for (bool changed = true; changed;) {
        changed = false;
        std::vector<Permutation> next;
        for (const auto& u : comps) {
            if (commutes_with_w0(u)) {
                next.push_back(u);
                continue;
            }
            changed = true;
            auto repl = minimal_upper_bounds({u, w0 * u * w0});
            next.insert(next.end(), repl.begin(), repl.end());
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        // keep Bruhat-minimal elements
        std::vector<Permutation> minimal;
        for (const auto& u : next) {
            bool is_min = true;
            for (const auto& x : next)
                if (x != u && bruhat_leq(x, u)) { is_min = false; break; }
            if (is_min) minimal.push_back(u);
        }
        comps = std::move(minimal);
    }
    std::vector<Permutation> out;
    for (const auto& u : comps) {
        std::vector<int> head(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) head[static_cast<size_t>(i - 1)] = u(i);
        out.emplace_back(head);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int codimension(Flavor flavor, const Permutation& w) {
    const int n = w.size();
    switch (flavor) {
        case Flavor::full:
            return length(extend_full(w));
        case Flavor::up:
            return length(extend_up(w)) - n * (n - 1) / 2;
        case Flavor::sym: {
            // type-C length of the extension
            Permutation ext = extend_sym(w);
            int sign_changes = 0;
            for (int i = 1; i <= n; ++i)
                if (ext(i) > n) ++sign_changes;
            return (length(ext) + sign_changes) / 2;
        }
    }
    throw invariant_error("unreachable flavor");
}

} // namespace msv
