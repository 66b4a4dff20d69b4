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

// the 8x8 hexagonal type-C array of the symmetric partial-permutation example
const RankArray kExampleR = RankArray::from_rows({
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 1, 1, 1, 1},
    {3, 3, 3, 2, 2, 1, 1, 1},
    {4, 4, 3, 2, 2, 1, 1, 1},
    {5, 5, 4, 3, 3, 2, 2, 1},
    {6, 6, 5, 4, 3, 3, 2, 1},
    {7, 7, 6, 5, 4, 3, 2, 1},
    {8, 7, 6, 5, 4, 3, 2, 1},
});

const RankArray kExampleR1 = RankArray::from_rows({
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 1, 1, 1, 1, 1},
    {3, 3, 3, 2, 2, 1, 1, 1},
    {4, 4, 3, 2, 2, 1, 1, 1},
    {5, 5, 4, 3, 3, 2, 2, 1},
    {6, 6, 5, 4, 3, 2, 2, 1},
    {7, 7, 6, 5, 4, 3, 2, 1},
    {8, 7, 6, 5, 4, 3, 2, 1},
});

const RankArray kExampleR3 = RankArray::from_rows({
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 1, 1, 1, 1},
    {3, 3, 3, 1, 1, 1, 1, 1},
    {4, 4, 3, 2, 2, 1, 1, 1},
    {5, 5, 4, 3, 2, 1, 2, 1},
    {6, 6, 5, 4, 3, 3, 2, 1},
    {7, 7, 6, 5, 4, 3, 2, 1},
    {8, 7, 6, 5, 4, 3, 2, 1},
});

const RankArray kExampleR4 = RankArray::from_rows({
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 2, 1, 1, 1, 1},
    {3, 3, 3, 2, 1, 1, 1, 1},
    {4, 4, 3, 2, 1, 1, 1, 1},
    {5, 5, 4, 3, 2, 2, 2, 1},
    {6, 6, 5, 4, 3, 3, 2, 1},
    {7, 7, 6, 5, 4, 3, 2, 1},
    {8, 7, 6, 5, 4, 3, 2, 1},
});

const RankArray kExampleR5 = RankArray::from_rows({
    {1, 1, 1, 1, 1, 1, 1, 1},
    {2, 2, 2, 1, 1, 1, 1, 1},
    {3, 3, 2, 1, 1, 1, 1, 1},
    {4, 4, 3, 2, 2, 1, 1, 1},
    {5, 5, 4, 3, 2, 1, 1, 1},
    {6, 6, 5, 4, 3, 2, 2, 1},
    {7, 7, 6, 5, 4, 3, 2, 1},
    {8, 7, 6, 5, 4, 3, 2, 1},
});

} // namespace

TEST_CASE("ne_rank_array basics") {
    CHECK(ne_rank_array(parse_one_line("21")) == RankArray::from_rows({{1, 0}, {2, 1}}));
    CHECK(ne_rank_array(parse_one_line("12")) == RankArray::from_rows({{1, 1}, {2, 1}}));
    for (const auto& w : all_perms(4)) {
        auto r = ne_rank_array(w);
        CHECK(r.at(1, 1) == 1);
        CHECK(r.at(4, 4) == 1);
        CHECK_NOTHROW(validate_boundary(r));
    }
}

TEST_CASE("round trip through extract_permutation") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_perms(n))
            CHECK(extract_permutation(ne_rank_array(w)) == w);
}

TEST_CASE("bruhat order is entrywise rank dominance") {
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_perms(n);
        for (const auto& v : perms) {
            auto up = bruhat_upper_set(v);
            auto rv = ne_rank_array(v);
            for (const auto& w : perms) {
                bool dominance = ne_rank_array(w).leq(rv);
                CHECK(dominance == std::binary_search(up.begin(), up.end(), w));
            }
        }
    }
}

TEST_CASE("canonicalize") {
    // permutation arrays are already canonical
    for (const auto& w : all_perms(4)) {
        auto r = ne_rank_array(w);
        CHECK(canonicalize(r) == r);
    }
    // printed example: R_3 canonicalizes to R_5
    CHECK(canonicalize(kExampleR3) == kExampleR5);
    CHECK(canonicalize(kExampleR5) == kExampleR5);
}

TEST_CASE("sum is the entrywise minimum") {
    auto a = ne_rank_array(parse_one_line("213"));
    auto b = ne_rank_array(parse_one_line("132"));
    CHECK(sum(a, a) == a);
    CHECK(sum(a, b) == sum(b, a));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(sum(a, b).at(i, j) == std::min(a.at(i, j), b.at(i, j)));
    CHECK_THROWS_AS(sum(a, ne_rank_array(parse_one_line("21"))), input_error);
}

TEST_CASE("type-C recognition") {
    CHECK(is_type_c(kExampleR));
    for (const auto& w : all_perms(4))
        CHECK(is_type_c(ne_rank_array(extend_sym(w))));
    // full-type extensions break the symmetry
    CHECK_FALSE(is_type_c(ne_rank_array(extend_full(parse_one_line("213")))));
    CHECK_THROWS_AS(is_type_c(ne_rank_array(parse_one_line("213"))), input_error);
}

TEST_CASE("extract_permutation on the printed arrays") {
    CHECK(extract_permutation(kExampleR1) == parse_one_line("16472538"));
    CHECK(extract_permutation(kExampleR4) == parse_one_line("15672348"));
    CHECK_FALSE(extract_permutation(kExampleR).has_value());
}

TEST_CASE("type-C decomposition of the printed example") {
    auto dec = primary_decomposition_type_c(kExampleR);
    CHECK_FALSE(dec.unit_ideal);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0] == parse_one_line("15672348"));
    CHECK(dec.components[1] == parse_one_line("16472538"));
    // the printed intermediate primes are reachable leaves
    CHECK(ne_rank_array(dec.components[1]) == kExampleR1);
    CHECK(ne_rank_array(dec.components[0]) == kExampleR4);
    // R_5's permutation shows up as a non-minimal leaf
    auto u5 = extract_permutation(kExampleR5);
    REQUIRE(u5.has_value());
    CHECK(std::find(dec.leaves.begin(), dec.leaves.end(), *u5) != dec.leaves.end());
    CHECK(bruhat_leq(parse_one_line("16472538"), *u5));
}

TEST_CASE("decomposition of prime inputs") {
    for (const auto& w : all_perms(4)) {
        auto dec = primary_decomposition(ne_rank_array(w));
        REQUIRE(dec.components.size() == 1);
        CHECK(dec.components[0] == w);
    }
}

TEST_CASE("pairwise sums decompose to minimal upper bounds (full, S_4 exhaustive)") {
    auto perms = all_perms(4);
    for (const auto& v1 : perms) {
        for (const auto& v2 : perms) {
            auto input = sum(ne_rank_array(v1), ne_rank_array(v2));
            auto dec = primary_decomposition(input);
            auto mub = minimal_upper_bounds({v1, v2});
            CHECK(dec.components == mub);
            for (const auto& u : dec.components) CHECK(ideal_leq(ne_rank_array(u), input));
        }
    }
}

TEST_CASE("type-C pairwise sums match restricted minimal upper bounds (n = 3 exhaustive)") {
    auto perms = all_perms(3);
    auto restrict = [](const Permutation& u) {
        bool c = u.size() % 2 == 0;
        for (int i = 1; c && i <= u.size(); ++i)
            if (u(i) + u(u.size() + 1 - i) != u.size() + 1) c = false;
        return c && in_square_interval(u);
    };
    for (const auto& v1 : perms) {
        for (const auto& v2 : perms) {
            auto e1 = extend_sym(v1), e2 = extend_sym(v2);
            auto dec = primary_decomposition_type_c(sum(ne_rank_array(e1), ne_rank_array(e2)));
            auto mub = minimal_upper_bounds({e1, e2}, restrict);
            CHECK(dec.components == mub);
        }
    }
}

TEST_CASE("marginal-conditional pair through the rank array calculus") {
    auto e1 = ne_rank_array(extend_sym(parse_one_line("213")));
    auto e2 = ne_rank_array(extend_sym(parse_one_line("132")));
    auto dec = primary_decomposition_type_c(sum(e1, e2));
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0] == extend_sym(parse_one_line("231")));
    CHECK(dec.components[1] == extend_sym(parse_one_line("312")));
}

TEST_CASE("decomposition is insensitive to worklist order") {
    auto dec1 = primary_decomposition_type_c(kExampleR);
    auto dec2 = primary_decomposition_type_c(canonicalize(kExampleR));
    CHECK(dec1.components == dec2.components);
    DecomposeOptions rev;
    rev.type_c = true;
    rev.hexagonal = true;
    rev.scan_from_bottom = true;
    CHECK(primary_decomposition(kExampleR, rev).components == dec1.components);

    // reversed block choice across every pairwise sum in S_4 (full regime)
    auto perms = all_perms(4);
    for (size_t a = 0; a < perms.size(); a += 2) {
        for (size_t b = a; b < perms.size(); b += 2) {
            auto input = sum(ne_rank_array(perms[a]), ne_rank_array(perms[b]));
            DecomposeOptions fwd;
            DecomposeOptions bwd;
            bwd.scan_from_bottom = true;
            CHECK(primary_decomposition(input, fwd).components ==
                  primary_decomposition(input, bwd).components);
        }
    }
}

TEST_CASE("ideal_leq compares canonical arrays entrywise") {
    CHECK(ideal_leq(ne_rank_array(parse_one_line("231")), ne_rank_array(parse_one_line("213"))));
    CHECK_FALSE(ideal_leq(ne_rank_array(parse_one_line("213")), ne_rank_array(parse_one_line("231"))));
    auto r = ne_rank_array(parse_one_line("213"));
    CHECK(ideal_leq(r, r));
    CHECK_FALSE(ideal_leq(ne_rank_array(parse_one_line("213")), ne_rank_array(parse_one_line("132"))));
    CHECK_FALSE(ideal_leq(ne_rank_array(parse_one_line("132")), ne_rank_array(parse_one_line("213"))));
    // printed example: I_sym(R_1) strictly inside I_sym(R_5)
    CHECK(kExampleR5.leq(kExampleR1));
}

TEST_CASE("in_square_interval") {
    CHECK(in_square_interval(w_square_element(3)));
    CHECK_FALSE(in_square_interval(longest_element(4)));
    int members = 0;
    for (const auto& w : all_perms(4))
        if (in_square_interval(w)) ++members;
    CHECK(members == 14);
    CHECK_THROWS_AS(in_square_interval(parse_one_line("213")), input_error);
}

TEST_CASE("unit ideal detection") {
    // an out-of-hexagon cell below its forced value is infeasible
    RankArray bad = kExampleR;
    bad.cell(1, 2) = 0; // i + j = 3 <= n+1 = 5 forces the value 1
    auto dec = primary_decomposition(bad, {.type_c = false, .hexagonal = true, .want_trace = false});
    CHECK(dec.unit_ideal);
    CHECK(dec.components.empty());
}

TEST_CASE("boundary validation") {
    RankArray bad = ne_rank_array(parse_one_line("213"));
    bad.cell(2, 1) = 1;
    CHECK_THROWS_AS(primary_decomposition(bad), input_error);
}

TEST_CASE("hexagonal clamping of overstated cells preserves the ideal") {
    RankArray loose = kExampleR;
    loose.cell(2, 2) = 3; // i + j = 4 <= 5, forced value 2
    auto dec = primary_decomposition(loose, {.type_c = false, .hexagonal = true, .want_trace = false});
    auto ref = primary_decomposition(kExampleR, {.type_c = false, .hexagonal = true, .want_trace = false});
    CHECK(dec.components == ref.components);
}

TEST_CASE("embed_type_c matches the symmetric extension on permutations") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& w : all_perms(n))
            CHECK(embed_type_c(ne_rank_array(w)) == ne_rank_array(extend_sym(w)));
}
