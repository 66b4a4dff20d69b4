#include "msv/permutation.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "msv/error.hpp"

namespace msv {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
    const int n = size();
    std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
    for (int v : entries_) {
        if (v < 1 || v > n)
            throw input_error("malformed permutation: entry " + std::to_string(v) +
                              " out of range [1, " + std::to_string(n) + "]");
        if (seen[static_cast<size_t>(v)])
            throw input_error("malformed permutation: duplicate entry " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(entries_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i) - 1)] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw input_error("permutation size mismatch in composition");
    std::vector<int> out(entries_.size());
    for (int i = 1; i <= size(); ++i) out[static_cast<size_t>(i - 1)] = (*this)(rhs(i));
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    if (size() <= 9) {
        for (int v : entries_) os << v;
    } else {
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) os << ',';
            os << entries_[i];
        }
    }
    return os.str();
}

Permutation parse_one_line(const std::string& text) {
    std::vector<int> vals;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c == ' ') continue;
            if (c < '1' || c > '9')
                throw input_error("malformed permutation text: '" + text + "'");
            vals.push_back(c - '0');
        }
    } else {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                size_t pos = 0;
                int v = std::stoi(tok, &pos);
                while (pos < tok.size() && tok[pos] == ' ') ++pos;
                if (pos != tok.size()) throw std::invalid_argument(tok);
                vals.push_back(v);
            } catch (const std::exception&) {
                throw input_error("malformed permutation text: '" + text + "'");
            }
        }
    }
    if (vals.empty()) throw input_error("empty permutation text");
    return Permutation(std::move(vals));
}

int length(const Permutation& w) {
    int inv = 0;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Permutation longest_element(int n) {
    if (n < 1) throw input_error("longest_element requires n >= 1");
    std::vector<int> e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(e));
}

std::vector<int> ne_rank_counts(const Permutation& w) {
    const int n = w.size();
    // dot of row k sits in column n+1-w(k)
    std::vector<int> out(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    std::vector<int> row_acc(static_cast<size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) {
        int dot_col = n + 1 - w(i);
        for (int j = 1; j <= n; ++j) row_acc[static_cast<size_t>(j)] += (dot_col >= j) ? 1 : 0;
        for (int j = 1; j <= n; ++j)
            out[static_cast<size_t>((i - 1) * n + (j - 1))] = row_acc[static_cast<size_t>(j)];
    }
    return out;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw input_error("bruhat_leq: size mismatch");
    const auto rv = ne_rank_counts(v);
    const auto rw = ne_rank_counts(w);
    for (size_t k = 0; k < rv.size(); ++k)
        if (rv[k] < rw[k]) return false;
    return true;
}

namespace {

constexpr int kOracleMaxN = 8;

// All permutations reachable from v by transpositions that increase length.
std::set<std::vector<int>> closure_up(const Permutation& v) {
    std::set<std::vector<int>> seen;
    std::queue<std::vector<int>> todo;
    seen.insert(v.entries());
    todo.push(v.entries());
    const int n = v.size();
    while (!todo.empty()) {
        std::vector<int> cur = todo.front();
        todo.pop();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (cur[static_cast<size_t>(i)] >= cur[static_cast<size_t>(j)]) continue;
                std::vector<int> nxt = cur;
                std::swap(nxt[static_cast<size_t>(i)], nxt[static_cast<size_t>(j)]);
                if (seen.insert(nxt).second) todo.push(nxt);
            }
        }
    }
    return seen;
}

} // namespace

bool bruhat_leq_oracle(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw input_error("bruhat_leq_oracle: size mismatch");
    if (v.size() > kOracleMaxN)
        throw input_error("bruhat_leq_oracle: n > 8 exceeds the enumeration guard");
    if (length(v) > length(w)) return false;
    auto up = closure_up(v);
    return up.count(w.entries()) > 0;
}

std::vector<Permutation> bruhat_upper_set(const Permutation& v) {
    if (v.size() > kOracleMaxN)
        throw input_error("bruhat_upper_set: n > 8 exceeds the enumeration guard");
    std::vector<Permutation> out;
    for (const auto& e : closure_up(v)) out.emplace_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Permutation> minimal_upper_bounds(
    const std::vector<Permutation>& ws,
    const std::function<bool(const Permutation&)>& restrict) {
    if (ws.empty()) throw input_error("minimal_upper_bounds: empty input set");
    const int n = ws.front().size();
    for (const auto& w : ws)
        if (w.size() != n) throw input_error("minimal_upper_bounds: size mismatch");
    if (n > kOracleMaxN)
        throw input_error("minimal_upper_bounds: n > 8 exceeds the enumeration guard");

    std::vector<Permutation> upper;
    std::vector<int> line(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) line[static_cast<size_t>(i)] = i + 1;
    do {
        Permutation u(line);
        if (restrict && !restrict(u)) continue;
        bool ok = true;
        for (const auto& w : ws)
            if (!bruhat_leq(w, u)) { ok = false; break; }
        if (ok) upper.push_back(std::move(u));
    } while (std::next_permutation(line.begin(), line.end()));

    std::vector<Permutation> minimal;
    for (const auto& u : upper) {
        bool is_min = true;
        for (const auto& x : upper)
            if (x != u && bruhat_leq(x, u)) { is_min = false; break; }
        if (is_min) minimal.push_back(u);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

namespace {

bool pattern_search(const std::vector<int>& w, const std::vector<int>& p, size_t pi,
                    size_t wi, std::vector<int>& chosen) {
    if (pi == p.size()) {
        // chosen must be order-isomorphic to p
        for (size_t a = 0; a < p.size(); ++a)
            for (size_t b = a + 1; b < p.size(); ++b)
                if ((p[a] < p[b]) != (chosen[a] < chosen[b])) return false;
        return true;
    }
    if (w.size() - wi < p.size() - pi) return false;
    for (size_t k = wi; k < w.size(); ++k) {
        chosen.push_back(w[k]);
        // prune: partial order-isomorphism against already chosen values
        bool ok = true;
        for (size_t a = 0; a + 1 < chosen.size() && ok; ++a)
            if ((p[a] < p[pi]) != (chosen[a] < chosen.back())) ok = false;
        if (ok && pattern_search(w, p, pi + 1, k + 1, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool contains_pattern(const Permutation& w, const Permutation& p) {
    if (p.size() == 0) return true;
    if (p.size() > w.size()) return false;
    std::vector<int> chosen;
    return pattern_search(w.entries(), p.entries(), 0, 0, chosen);
}

Permutation adjacent_transposition(int i, int n) {
    if (i < 1 || i >= n) throw input_error("adjacent_transposition: index out of range");
    auto e = Permutation::identity(n).entries();
    std::swap(e[static_cast<size_t>(i - 1)], e[static_cast<size_t>(i)]);
    return Permutation(std::move(e));
}

std::vector<int> reduced_word(const Permutation& w) {
    std::vector<int> cur = w.entries();
    const int n = w.size();
    std::vector<int> swaps; // right-multiplications driving cur to the identity
    for (int val = n; val >= 1; --val) {
        int pos = 0;
        for (int i = 1; i <= n; ++i)
            if (cur[static_cast<size_t>(i - 1)] == val) { pos = i; break; }
        // values > val are already home, so val can only sit left of position val
        for (int q = pos; q < val; ++q) {
            std::swap(cur[static_cast<size_t>(q - 1)], cur[static_cast<size_t>(q)]);
            swaps.push_back(q);
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

} // namespace msv
