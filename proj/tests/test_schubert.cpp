#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "msv/error.hpp"
#include "msv/permutation.hpp"
#include "msv/rank_array.hpp"
#include "msv/schubert.hpp"

using namespace msv;

namespace {

std::vector<Permutation> all_perms(int n) {
    std::vector<int> line(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) line[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(line);
    while (std::next_permutation(line.begin(), line.end()));
    return out;
}

// rank of a small integer matrix by fraction-free elimination; independent
// of the library's exact-rank path
int int_rank(std::vector<std::vector<long long>> a) {
    const int r = static_cast<int>(a.size());
    if (r == 0) return 0;
    const int c = static_cast<int>(a[0].size());
    int rank = 0, row = 0;
    long long prev = 1;
    for (int col = 0; col < c && row < r; ++col) {
        int pivot = -1;
        for (int i = row; i < r; ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(a[static_cast<size_t>(row)], a[static_cast<size_t>(pivot)]);
        long long p = a[static_cast<size_t>(row)][static_cast<size_t>(col)];
        for (int i = row + 1; i < r; ++i) {
            long long f = a[static_cast<size_t>(i)][static_cast<size_t>(col)];
            for (int j = col; j < c; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    (a[static_cast<size_t>(i)][static_cast<size_t>(j)] * p -
                     f * a[static_cast<size_t>(row)][static_cast<size_t>(j)]) /
                    prev;
        }
        prev = p;
        ++row;
        ++rank;
    }
    return rank;
}

bool satisfies_boxes(const std::vector<std::vector<long long>>& m, const Permutation& w,
                     bool essential_only) {
    const int n = w.size();
    auto r = ne_rank_array(w);
    auto ess = essential_set(w);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (r.at(i, j) >= std::min(i, n + 1 - j)) continue;
            if (essential_only && !ess.count({i, j})) continue;
            std::vector<std::vector<long long>> sub;
            for (int a = 1; a <= i; ++a) {
                std::vector<long long> row;
                for (int b = j; b <= n; ++b)
                    row.push_back(m[static_cast<size_t>(a - 1)][static_cast<size_t>(b - 1)]);
                sub.push_back(std::move(row));
            }
            if (int_rank(sub) > r.at(i, j)) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("diagram") {
    CHECK(diagram(parse_one_line("312")) == std::set<Box>{{1, 2}, {1, 3}});
    CHECK(diagram(Permutation::identity(4)).empty());
    // the longest element carries the full strictly-upper staircase
    std::set<Box> upper;
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) upper.insert({i, j});
    CHECK(diagram(longest_element(4)) == upper);
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_perms(n))
            CHECK(static_cast<int>(diagram(w).size()) == length(w));
}

TEST_CASE("essential set") {
    CHECK(essential_set(parse_one_line("312")) == std::set<Box>{{1, 2}});
    CHECK(essential_set(Permutation::identity(5)).empty());
    // superdiagonal corners for the longest element
    CHECK(essential_set(longest_element(4)) == std::set<Box>{{1, 2}, {2, 3}, {3, 4}});
    // single box carrying the two-block independence statement
    auto ess = essential_set(parse_one_line("341256"));
    REQUIRE(ess.size() == 1);
    CHECK(*ess.begin() == Box{2, 5});
    CHECK(ne_rank_array(parse_one_line("341256")).at(2, 5) == 0);
}

TEST_CASE("ideal_spec examples") {
    auto s213 = ideal_spec(Flavor::sym, parse_one_line("213"));
    REQUIRE(s213.generators.size() == 1);
    CHECK(s213.generators[0] == MinorSpec{{1}, {3}, 1});

    auto s132 = ideal_spec(Flavor::sym, parse_one_line("132"));
    REQUIRE(s132.generators.size() == 1);
    CHECK(s132.generators[0] == MinorSpec{{1, 2}, {2, 3}, 2});

    // the identity imposes nothing
    CHECK(ideal_spec(Flavor::full, Permutation::identity(4)).generators.empty());

    // the longest element pins every strictly-upper variable
    auto sw0 = ideal_spec(Flavor::full, longest_element(3));
    REQUIRE(sw0.generators.size() == 2);
    CHECK(sw0.generators[0] == MinorSpec{{1}, {2, 3}, 1});
    CHECK(sw0.generators[1] == MinorSpec{{1, 2}, {3}, 1});
}

TEST_CASE("essential minors cut the same rank locus as the full family") {
    // exhaustive S_3 over {-1,0,1} matrices
    for (const auto& w : all_perms(3)) {
        for (int code = 0; code < 19683; ++code) {
            int c = code;
            std::vector<std::vector<long long>> m(3, std::vector<long long>(3));
            for (auto& row : m)
                for (auto& v : row) {
                    v = c % 3 - 1;
                    c /= 3;
                }
            if (satisfies_boxes(m, w, true) != satisfies_boxes(m, w, false)) {
                CHECK(false);
                return;
            }
        }
    }
    // sampled S_4
    uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    };
    auto perms4 = all_perms(4);
    for (int trial = 0; trial < 4000; ++trial) {
        std::vector<std::vector<long long>> m(4, std::vector<long long>(4));
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long long>(next() % 3) - 1;
        const auto& w = perms4[next() % perms4.size()];
        CHECK(satisfies_boxes(m, w, true) == satisfies_boxes(m, w, false));
    }
}

TEST_CASE("extensions") {
    CHECK(extend_full(parse_one_line("213")) == parse_one_line("213456"));
    CHECK(extend_full(Permutation::identity(3)) == Permutation::identity(6));
    CHECK(extend_up(parse_one_line("12")) == parse_one_line("1243"));
    CHECK(extend_up(parse_one_line("213")) == parse_one_line("213654"));
    CHECK(extend_sym(parse_one_line("213")) == parse_one_line("213465"));
    CHECK(extend_sym(Permutation::identity(3)) == Permutation::identity(6));
    CHECK(w_up_element(2) == parse_one_line("1243"));
    CHECK(w_square_element(2) == parse_one_line("3412"));

    for (int n = 1; n <= 4; ++n) {
        for (const auto& w : all_perms(n)) {
            CHECK(in_square_interval(extend_full(w)));
            CHECK(in_square_interval(extend_up(w)));
            CHECK(in_square_interval(extend_sym(w)));
            CHECK(commutes_with_w0(extend_sym(w)));
            CHECK(bruhat_leq(w_up_element(n), extend_up(w)));
        }
    }
}

TEST_CASE("defined by inclusions") {
    CHECK_FALSE(defined_by_inclusions(parse_one_line("351624")));
    CHECK(defined_by_inclusions(parse_one_line("341256")));
    CHECK(defined_by_inclusions(Permutation::identity(3)));
    // the pattern list and the essential-set criterion coincide on S_6
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_perms(n))
            CHECK(defined_by_inclusions(w) == defined_by_inclusions_essential(w));
}

TEST_CASE("essential box types") {
    CHECK(essential_box_type(parse_one_line("312"), {1, 2}) == BoxType::type1);
    CHECK(essential_box_type(parse_one_line("213"), {1, 3}) == BoxType::type1);
    CHECK(essential_box_type(parse_one_line("132"), {2, 2}) == BoxType::type2);
    CHECK_THROWS_AS(essential_box_type(parse_one_line("312"), {2, 2}), input_error);
    CHECK_THROWS_AS(essential_box_type(parse_one_line("351624"), {1, 2}), input_error);
}

TEST_CASE("minimal single-box permutations") {
    CHECK(min_perm_with_box(3, 1, 3, BoxType::type1) == parse_one_line("213"));
    CHECK(min_perm_with_box(3, 2, 2, BoxType::type2) == parse_one_line("132"));
    CHECK(min_perm_with_box(5, 4, 4, BoxType::type2) == parse_one_line("13452"));
    CHECK(min_perm_with_box(6, 2, 5, BoxType::type1) == parse_one_line("341256"));
    // each output has exactly the requested essential box at the CI rank
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n - 1; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i < j) {
                    auto w = min_perm_with_box(n, i, j, BoxType::type1);
                    CHECK(essential_set(w) == std::set<Box>{{i, j}});
                    CHECK(ne_rank_array(w).at(i, j) == 0);
                }
                if (j > 1 && j <= i) {
                    auto w = min_perm_with_box(n, i, j, BoxType::type2);
                    CHECK(essential_set(w) == std::set<Box>{{i, j}});
                    CHECK(ne_rank_array(w).at(i, j) == i - j + 1);
                }
            }
        }
    }
}

TEST_CASE("split by essential boxes") {
    auto parts = split_by_essential_boxes(parse_one_line("35142"));
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == parse_one_line("13452"));
    CHECK(parts[1] == parse_one_line("15234"));
    CHECK(parts[2] == parse_one_line("34125"));

    CHECK(split_by_essential_boxes(parse_one_line("213")) ==
          std::vector<Permutation>{parse_one_line("213")});
    CHECK(split_by_essential_boxes(Permutation::identity(4)).empty());
    CHECK_THROWS_AS(split_by_essential_boxes(parse_one_line("351624")), input_error);

    // the ideal sum of the parts regenerates the ideal of w
    for (int n = 2; n <= 5; ++n) {
        for (const auto& w : all_perms(n)) {
            if (!defined_by_inclusions(w) || w == Permutation::identity(n)) continue;
            auto pieces = split_by_essential_boxes(w);
            REQUIRE(!pieces.empty());
            RankArray acc = ne_rank_array(pieces.front());
            for (size_t k = 1; k < pieces.size(); ++k)
                acc = sum(acc, ne_rank_array(pieces[k]));
            CHECK(canonicalize(acc) == ne_rank_array(w));
        }
    }
}

TEST_CASE("decompose_sum examples") {
    auto pair = decompose_sum(Flavor::sym, {parse_one_line("213"), parse_one_line("132")});
    REQUIRE(pair.size() == 2);
    CHECK(pair[0] == parse_one_line("231"));
    CHECK(pair[1] == parse_one_line("312"));

    auto five = decompose_sum(
        Flavor::sym, {parse_one_line("15234"), parse_one_line("13452"), parse_one_line("31245")});
    REQUIRE(five.size() == 2);
    CHECK(five[0] == parse_one_line("35142"));
    CHECK(five[1] == parse_one_line("51342"));

    auto blocks = decompose_sum(Flavor::sym, {parse_one_line("341256"), parse_one_line("125634")});
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == parse_one_line("345612"));
    CHECK(blocks[1] == parse_one_line("351624"));
    CHECK(blocks[2] == parse_one_line("561234"));

    CHECK(decompose_sum(Flavor::full, {parse_one_line("3142")}) ==
          std::vector<Permutation>{parse_one_line("3142")});
}

TEST_CASE("decompose_sum(full) equals brute-force joins on S_4 pairs") {
    auto perms = all_perms(4);
    for (size_t a = 0; a < perms.size(); a += 3) {
        for (size_t b = a; b < perms.size(); b += 3) {
            auto got = decompose_sum(Flavor::full, {perms[a], perms[b]});
            CHECK(got == minimal_upper_bounds({perms[a], perms[b]}));
            // up-flavor sums share the same combinatorics
            CHECK(decompose_sum(Flavor::up, {perms[a], perms[b]}) == got);
        }
    }
}

TEST_CASE("decompose_sum(sym) matches the iterative-replacement oracle on S_3 pairs") {
    auto perms = all_perms(3);
    for (const auto& v1 : perms)
        for (const auto& v2 : perms)
            CHECK(decompose_sum(Flavor::sym, {v1, v2}) == decompose_sum_sym_oracle({v1, v2}));
}

TEST_CASE("codimension") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_perms(n)) {
            CHECK(codimension(Flavor::full, w) == length(w));
            CHECK(codimension(Flavor::sym, w) == length(w));
            CHECK(codimension(Flavor::up, w) == length(w));
        }
    }
    CHECK(codimension(Flavor::full, Permutation::identity(4)) == 0);
    CHECK(codimension(Flavor::full, longest_element(4)) == 6);
    // cover steps in the poset drop the codimension by exactly one (n <= 3)
    for (const auto& w : all_perms(3)) {
        for (const auto& v : all_perms(3)) {
            if (bruhat_leq(v, w) && length(w) == length(v) + 1)
                CHECK(codimension(Flavor::up, w) == codimension(Flavor::up, v) + 1);
        }
    }
}
