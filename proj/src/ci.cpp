#include "msv/ci.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "msv/error.hpp"

namespace msv {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool is_interval(const std::vector<int>& v, int lo, int hi) {
    if (static_cast<int>(v.size()) != hi - lo + 1) return false;
    for (int k = 0; k < static_cast<int>(v.size()); ++k)
        if (v[static_cast<size_t>(k)] != lo + k) return false;
    return true;
}

std::string set_to_string(const std::vector<int>& v) {
    if (v.size() == 1) return std::to_string(v.front());
    std::ostringstream os;
    os << '{';
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) os << ',';
        os << v[k];
    }
    os << '}';
    return os.str();
}

} // namespace

CIStatement::CIStatement(std::vector<int> a, std::vector<int> b, std::vector<int> c, int ground)
    : A(sorted_unique(std::move(a))), B(sorted_unique(std::move(b))),
      C(sorted_unique(std::move(c))), n(ground) {
    if (A.empty() || B.empty()) throw input_error("CI statement: A and B must be nonempty");
    auto in_range = [&](const std::vector<int>& s) {
        for (int v : s)
            if (v < 1 || v > n) return false;
        return true;
    };
    if (!in_range(A) || !in_range(B) || !in_range(C))
        throw input_error("CI statement: indices must lie in [1, " + std::to_string(n) + "]");
    std::set<int> all;
    for (const auto* s : {&A, &B, &C})
        for (int v : *s)
            if (!all.insert(v).second)
                throw input_error("CI statement: A, B, C must be pairwise disjoint");
}

bool CIStatement::operator<(const CIStatement& rhs) const {
    if (A != rhs.A) return A < rhs.A;
    if (B != rhs.B) return B < rhs.B;
    if (C != rhs.C) return C < rhs.C;
    return n < rhs.n;
}

std::string CIStatement::to_string() const {
    std::string out = set_to_string(A) + " _||_ " + set_to_string(B);
    if (!C.empty()) out += " | " + set_to_string(C);
    return out;
}

MinorSpec rank_condition(const CIStatement& s) {
    MinorSpec m;
    m.rows = s.A;
    m.rows.insert(m.rows.end(), s.C.begin(), s.C.end());
    m.rows = sorted_unique(std::move(m.rows));
    m.cols = s.B;
    m.cols.insert(m.cols.end(), s.C.begin(), s.C.end());
    m.cols = sorted_unique(std::move(m.cols));
    m.size = static_cast<int>(s.C.size()) + 1;
    return m;
}

bool is_schubert_ci(const CIStatement& s) {
    const int i = static_cast<int>(s.A.size());
    const int j = s.n - static_cast<int>(s.B.size()) + 1;
    if (!is_interval(s.A, 1, i)) return false;
    if (!is_interval(s.B, j, s.n)) return false;
    if (s.C.empty()) return i < j;
    return i < j - 1 && is_interval(s.C, i + 1, j - 1);
}

Permutation ci_to_perm(const CIStatement& s) {
    if (!is_schubert_ci(s))
        throw input_error("ci_to_perm: statement " + s.to_string() + " is not of Schubert shape");
    const int i = static_cast<int>(s.A.size());
    const int j = s.n - static_cast<int>(s.B.size()) + 1;
    if (s.C.empty()) return min_perm_with_box(s.n, i, j, BoxType::type1);
    return min_perm_with_box(s.n, j - 1, i + 1, BoxType::type2);
}

std::optional<CIStatement> perm_to_ci(const Permutation& w) {
    auto ess = essential_set(w);
    if (ess.size() != 1) return std::nullopt;
    if (!defined_by_inclusions(w)) return std::nullopt;
    const auto [i, j] = *ess.begin();
    const int n = w.size();
    BoxType t = essential_box_type(w, {i, j});
    std::optional<CIStatement> out;
    if (t == BoxType::type1) {
        if (!(i < j)) return std::nullopt;
        std::vector<int> A, B;
        for (int k = 1; k <= i; ++k) A.push_back(k);
        for (int k = j; k <= n; ++k) B.push_back(k);
        out.emplace(A, B, std::vector<int>{}, n);
    } else {
        if (!(j > 1 && i >= j && i < n)) return std::nullopt;
        std::vector<int> A, B, C;
        for (int k = 1; k <= j - 1; ++k) A.push_back(k);
        for (int k = i + 1; k <= n; ++k) B.push_back(k);
        for (int k = j; k <= i; ++k) C.push_back(k);
        out.emplace(A, B, C, n);
    }
    if (ci_to_perm(*out) != w) return std::nullopt;
    return out;
}

std::vector<CIComponent> decompose_ci(const std::vector<CIStatement>& statements) {
    if (statements.empty()) throw input_error("decompose_ci: empty statement list");
    const int n = statements.front().n;
    for (const auto& s : statements)
        if (s.n != n) throw input_error("decompose_ci: statements disagree on the ground set size");
    for (const auto& s : statements) {
        if (!is_schubert_ci(s)) {
            std::string msg = "statement " + s.to_string() + " is not of North-East Schubert shape";
            if (auto relab = suggest_relabeling(statements))
                msg += "; relabeling [n] by " + relab->to_string() + " would fix the family";
            throw input_error(msg);
        }
    }
    std::set<Permutation> ws;
    for (const auto& s : statements) ws.insert(ci_to_perm(s));
    auto comps = decompose_sum(Flavor::sym, {ws.begin(), ws.end()});
    std::vector<CIComponent> out;
    for (const auto& w : comps) {
        CIComponent c;
        c.w = w;
        c.spec = ideal_spec(Flavor::sym, w);
        if (defined_by_inclusions(w)) {
            c.ci_renderable = true;
            for (const auto& part : split_by_essential_boxes(w)) {
                auto s = perm_to_ci(part);
                if (!s)
                    throw invariant_error("single-box component piece failed to render as CI");
                c.statements.push_back(*s);
            }
            std::sort(c.statements.begin(), c.statements.end());
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<Permutation> suggest_relabeling(const std::vector<CIStatement>& statements) {
    if (statements.empty()) return std::nullopt;
    const int n = statements.front().n;
    if (n > 8) return std::nullopt;
    std::vector<int> line(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) line[static_cast<size_t>(i)] = i + 1;
    do {
        bool ok = true;
        for (const auto& s : statements) {
            auto relabel = [&](const std::vector<int>& v) {
                std::vector<int> out;
                for (int x : v) out.push_back(line[static_cast<size_t>(x - 1)]);
                return out;
            };
            try {
                CIStatement t(relabel(s.A), relabel(s.B), relabel(s.C), n);
                if (!is_schubert_ci(t)) { ok = false; break; }
            } catch (const input_error&) {
                ok = false;
                break;
            }
        }
        if (ok) {
            Permutation p{line};
            if (p != Permutation::identity(n)) return p;
            return p;
        }
    } while (std::next_permutation(line.begin(), line.end()));
    return std::nullopt;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<int> parse_set(const std::string& raw, int n) {
    std::string s = trim(raw);
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw input_error("unbalanced braces in set '" + raw + "'");
        s = trim(s.substr(1, s.size() - 2));
    }
    if (s.empty()) throw input_error("empty set in CI statement");
    std::vector<int> vals;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        tok = trim(tok);
        size_t dash = tok.find('-');
        try {
            if (dash != std::string::npos && dash > 0) {
                int lo = std::stoi(trim(tok.substr(0, dash)));
                int hi = std::stoi(trim(tok.substr(dash + 1)));
                if (lo > hi) throw input_error("empty range '" + tok + "'");
                for (int v = lo; v <= hi; ++v) vals.push_back(v);
            } else {
                vals.push_back(std::stoi(tok));
            }
        } catch (const input_error&) {
            throw;
        } catch (const std::exception&) {
            throw input_error("cannot parse set element '" + tok + "'");
        }
    }
    for (int v : vals)
        if (v < 1 || v > n)
            throw input_error("set element " + std::to_string(v) + " outside [1, " +
                              std::to_string(n) + "]");
    return vals;
}

} // namespace

std::vector<CIStatement> parse_ci_statements(const std::string& text, int n) {
    if (n < 1) throw input_error("CI ground set size must be positive");
    std::vector<CIStatement> out;
    std::istringstream is(text);
    std::string stmt;
    while (std::getline(is, stmt, ';')) {
        stmt = trim(stmt);
        if (stmt.empty()) continue;
        size_t indep = stmt.find("_||_");
        if (indep == std::string::npos)
            throw input_error("CI statement '" + stmt + "' is missing '_||_'");
        std::string left = stmt.substr(0, indep);
        std::string rest = stmt.substr(indep + 4);
        std::string mid = rest, cond;
        size_t bar = rest.find('|');
        if (bar != std::string::npos) {
            mid = rest.substr(0, bar);
            cond = rest.substr(bar + 1);
        }
        std::vector<int> A = parse_set(left, n);
        std::vector<int> B = parse_set(mid, n);
        std::vector<int> C;
        if (!trim(cond).empty()) C = parse_set(cond, n);
        out.emplace_back(A, B, C, n);
    }
    if (out.empty()) throw input_error("no CI statements found in '" + text + "'");
    return out;
}

} // namespace msv
