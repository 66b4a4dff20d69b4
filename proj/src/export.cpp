#include "msv/export.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "msv/error.hpp"

namespace msv {

json to_json(const Permutation& w) { return json(w.entries()); }

json to_json(const MinorSpec& m) {
    return json{{"rows", m.rows}, {"cols", m.cols}, {"size", m.size}};
}

json to_json(const IdealSpec& spec) {
    json gens = json::array();
    for (const auto& g : spec.generators) gens.push_back(to_json(g));
    return json{{"flavor", flavor_name(spec.flavor)},
                {"n", spec.n},
                {"permutation", spec.w.entries()},
                {"generators", gens}};
}

json to_json(const RankArray& r) {
    json rows = json::array();
    for (int i = 1; i <= r.size; ++i) {
        json row = json::array();
        for (int j = 1; j <= r.size; ++j) row.push_back(r.at(i, j));
        rows.push_back(row);
    }
    return json{{"size", r.size}, {"cells", rows}};
}

json to_json(const MixedGraph& g) {
    json dir = json::array(), bidir = json::array();
    for (auto [a, b] : g.directed) dir.push_back(json::array({a, b}));
    for (auto [a, b] : g.bidirected) bidir.push_back(json::array({a, b}));
    return json{{"m", g.m}, {"directed", dir}, {"bidirected", bidir}};
}

json to_json(const CIStatement& s) {
    return json{{"A", s.A}, {"B", s.B}, {"C", s.C}, {"n", s.n}};
}

json to_json(const RankReport& report) {
    json boxes = json::array();
    for (const auto& b : report.boxes)
        boxes.push_back(json{{"i", b.i},
                             {"j", b.j},
                             {"bound", b.bound},
                             {"achieved", b.achieved},
                             {"ok", b.ok},
                             {"essential", b.essential},
                             {"equality", b.equality}});
    return json{{"pass", report.pass},
                {"essential_equality", report.essential_equality},
                {"boxes", boxes}};
}

RankArray rank_array_from_json(const json& j) {
    if (!j.contains("size") || !j.contains("cells"))
        throw input_error("rank array JSON needs \"size\" and \"cells\"");
    const int s = j.at("size").get<int>();
    std::vector<std::vector<int>> rows;
    for (const auto& row : j.at("cells")) rows.push_back(row.get<std::vector<int>>());
    if (static_cast<int>(rows.size()) != s)
        throw input_error("rank array JSON: row count does not match size");
    return RankArray::from_rows(rows);
}

MixedGraph graph_from_json(const json& j) {
    if (!j.contains("m")) throw input_error("graph JSON needs \"m\"");
    std::vector<std::pair<int, int>> dir, bidir;
    if (j.contains("directed"))
        for (const auto& e : j.at("directed")) {
            auto v = e.get<std::vector<int>>();
            if (v.size() != 2) throw input_error("graph JSON: edges are pairs");
            dir.emplace_back(v[0], v[1]);
        }
    if (j.contains("bidirected"))
        for (const auto& e : j.at("bidirected")) {
            auto v = e.get<std::vector<int>>();
            if (v.size() != 2) throw input_error("graph JSON: edges are pairs");
            bidir.emplace_back(v[0], v[1]);
        }
    return MixedGraph(j.at("m").get<int>(), dir, bidir);
}

namespace {

void k_subsets(const std::vector<int>& items, int k,
               const std::function<void(const std::vector<int>&)>& sink) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(cur.size()) == k) {
            sink(cur);
            return;
        }
        for (size_t t = start; t < items.size(); ++t) {
            cur.push_back(items[t]);
            rec(t + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

// Every expanded minor of the spec, deduplicated across overlapping boxes
// and pruning determinants that vanish identically on upper-triangular
// matrices.
void expand_minors(const IdealSpec& spec,
                   const std::function<void(const std::vector<int>&, const std::vector<int>&)>& sink) {
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& g : spec.generators) {
        k_subsets(g.rows, g.size, [&](const std::vector<int>& rsel) {
            k_subsets(g.cols, g.size, [&](const std::vector<int>& csel) {
                if (spec.flavor == Flavor::up) {
                    for (size_t a = 0; a < rsel.size(); ++a)
                        if (rsel[a] > csel[a]) return; // identically zero
                }
                if (seen.insert({rsel, csel}).second) sink(rsel, csel);
            });
        });
    }
}

std::string var_m2(Flavor f, int i, int j) {
    char base = f == Flavor::full ? 'x' : (f == Flavor::sym ? 's' : 'y');
    if (f == Flavor::sym && i > j) std::swap(i, j);
    std::ostringstream os;
    os << base << "_(" << i << "," << j << ")";
    return os.str();
}

std::string var_sing(Flavor f, int i, int j) {
    char base = f == Flavor::full ? 'x' : (f == Flavor::sym ? 's' : 'y');
    if (f == Flavor::sym && i > j) std::swap(i, j);
    std::ostringstream os;
    os << base << "(" << i << ")(" << j << ")";
    return os.str();
}

std::string idx_list(const std::vector<int>& v, int offset, char open, char close) {
    std::ostringstream os;
    os << open;
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) os << ',';
        os << v[k] + offset;
    }
    os << close;
    return os.str();
}

std::string header_comment(const IdealSpec& spec, const std::string& lead) {
    std::ostringstream os;
    os << lead << " " << flavor_name(spec.flavor)
       << " Schubert determinantal ideal, permutation " << spec.w.to_string() << ", n = "
       << spec.n << "\n";
    os << lead << " convention: P(w) is the permutation matrix of w0*w; each generator set\n";
    os << lead << " bounds the rank of the submatrix on rows 1..i and columns j..n\n";
    return os.str();
}

} // namespace

std::string to_macaulay2(const IdealSpec& spec) {
    const int n = spec.n;
    const Flavor f = spec.flavor;
    std::ostringstream os;
    os << header_comment(spec, "--");
    os << "R = QQ[";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (f != Flavor::full && i > j) continue;
            if (!first) os << ", ";
            os << var_m2(f, i, j);
            first = false;
        }
    }
    os << "];\n";
    os << (f == Flavor::full ? "X" : (f == Flavor::sym ? "S" : "Y")) << " = matrix {";
    for (int i = 1; i <= n; ++i) {
        if (i > 1) os << ", ";
        os << "{";
        for (int j = 1; j <= n; ++j) {
            if (j > 1) os << ", ";
            if (f == Flavor::up && i > j) os << "0_R";
            else os << var_m2(f, i, j);
        }
        os << "}";
    }
    os << "};\n";
    const char mat = f == Flavor::full ? 'X' : (f == Flavor::sym ? 'S' : 'Y');
    std::vector<std::string> dets;
    expand_minors(spec, [&](const std::vector<int>& rsel, const std::vector<int>& csel) {
        std::ostringstream d;
        d << "det submatrix(" << mat << ", " << idx_list(rsel, -1, '{', '}') << ", "
          << idx_list(csel, -1, '{', '}') << ")";
        dets.push_back(d.str());
    });
    if (dets.empty()) {
        os << "I = ideal(0_R);\n";
    } else {
        os << "I = ideal(\n";
        for (size_t k = 0; k < dets.size(); ++k)
            os << "  " << dets[k] << (k + 1 < dets.size() ? "," : "") << "\n";
        os << ");\n";
    }
    os << "-- external checks: isPrime I; leadTerm gens gb I\n";
    return os.str();
}

std::string to_singular(const IdealSpec& spec) {
    const int n = spec.n;
    const Flavor f = spec.flavor;
    std::ostringstream os;
    os << header_comment(spec, "//");
    os << "LIB \"matrix.lib\";\n";
    os << "ring R = 0, (";
    bool first = true;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (f != Flavor::full && i > j) continue;
            if (!first) os << ", ";
            os << var_sing(f, i, j);
            first = false;
        }
    }
    os << "), dp;\n";
    const char mat = f == Flavor::full ? 'X' : (f == Flavor::sym ? 'S' : 'Y');
    os << "matrix " << mat << "[" << n << "][" << n << "] =\n  ";
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (f == Flavor::up && i > j) os << "0";
            else os << var_sing(f, i, j);
            if (!(i == n && j == n)) os << ", ";
        }
        os << (i == n ? ";" : "");
        os << "\n" << (i == n ? "" : "  ");
    }
    std::vector<std::string> dets;
    expand_minors(spec, [&](const std::vector<int>& rsel, const std::vector<int>& csel) {
        std::ostringstream d;
        d << "det(submat(" << mat << ", intvec" << idx_list(rsel, 0, '(', ')') << ", intvec"
          << idx_list(csel, 0, '(', ')') << "))";
        dets.push_back(d.str());
    });
    if (dets.empty()) {
        os << "ideal I = 0;\n";
    } else {
        os << "ideal I =\n";
        for (size_t k = 0; k < dets.size(); ++k)
            os << "  " << dets[k] << (k + 1 < dets.size() ? "," : ";") << "\n";
    }
    os << "// external checks: std(I); primdecGTZ(I) from primdec.lib\n";
    return os.str();
}

} // namespace msv
