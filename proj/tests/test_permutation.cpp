#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "msv/error.hpp"
#include "msv/permutation.hpp"

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

} // namespace

TEST_CASE("one-line parsing") {
    CHECK(parse_one_line("213").entries() == std::vector<int>{2, 1, 3});
    CHECK(parse_one_line("3,5,1,6,2,4").entries() == std::vector<int>{3, 5, 1, 6, 2, 4});
    CHECK(parse_one_line("10,2,3,4,5,6,7,8,9,1").size() == 10);
    CHECK_THROWS_AS(parse_one_line("221"), input_error);
    CHECK_THROWS_AS(parse_one_line("13"), input_error);
    CHECK_THROWS_AS(parse_one_line("1,2,x"), input_error);
    CHECK_THROWS_AS(parse_one_line(""), input_error);
    // round trip through formatting
    for (const auto& w : all_perms(4)) CHECK(parse_one_line(w.to_string()) == w);
}

TEST_CASE("length") {
    CHECK(length(Permutation::identity(4)) == 0);
    CHECK(length(parse_one_line("213")) == 1);
    CHECK(length(parse_one_line("4321")) == 6);
}

TEST_CASE("longest element") {
    CHECK(longest_element(2) == parse_one_line("21"));
    CHECK(longest_element(4) == parse_one_line("4321"));
    CHECK(longest_element(1) == parse_one_line("1"));
}

TEST_CASE("composition and inverse") {
    for (const auto& w : all_perms(4)) {
        CHECK(w.inverse().inverse() == w);
        CHECK(w * w.inverse() == Permutation::identity(4));
        CHECK(w.inverse() * w == Permutation::identity(4));
    }
}

TEST_CASE("bruhat order examples") {
    CHECK(bruhat_leq(parse_one_line("213"), parse_one_line("231")));
    CHECK_FALSE(bruhat_leq(parse_one_line("312"), parse_one_line("231")));
    CHECK(bruhat_leq(parse_one_line("132"), parse_one_line("312")));
    CHECK(bruhat_leq_oracle(parse_one_line("132"), parse_one_line("312")));
    CHECK_FALSE(bruhat_leq_oracle(parse_one_line("321"), parse_one_line("312")));
    for (const auto& w : all_perms(3)) {
        CHECK(bruhat_leq(w, w));
        CHECK(bruhat_leq(Permutation::identity(3), w));
    }
}

TEST_CASE("bruhat matches the closure oracle exhaustively through S_5") {
    for (int n = 1; n <= 5; ++n) {
        auto perms = all_perms(n);
        for (const auto& v : perms) {
            auto up = bruhat_upper_set(v);
            for (const auto& w : perms) {
                bool oracle = std::binary_search(up.begin(), up.end(), w);
                CHECK(bruhat_leq(v, w) == oracle);
            }
        }
    }
}

TEST_CASE("bruhat is a partial order on S_4") {
    auto perms = all_perms(4);
    for (const auto& a : perms) {
        CHECK(bruhat_leq(a, a));
        for (const auto& b : perms) {
            if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
            for (const auto& c : perms)
                if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
        }
    }
}

TEST_CASE("minimal upper bounds") {
    auto mub = minimal_upper_bounds({parse_one_line("213"), parse_one_line("132")});
    REQUIRE(mub.size() == 2);
    CHECK(mub[0] == parse_one_line("231"));
    CHECK(mub[1] == parse_one_line("312"));

    auto single = minimal_upper_bounds({parse_one_line("3142")});
    REQUIRE(single.size() == 1);
    CHECK(single[0] == parse_one_line("3142"));

    // outputs are pairwise incomparable and dominate every input
    auto ws = std::vector<Permutation>{parse_one_line("15234"), parse_one_line("13452"),
                                       parse_one_line("31245")};
    auto joins = minimal_upper_bounds(ws);
    REQUIRE(joins.size() == 2);
    CHECK(joins[0] == parse_one_line("35142"));
    CHECK(joins[1] == parse_one_line("51342"));
    for (const auto& u : joins) {
        for (const auto& w : ws) CHECK(bruhat_leq(w, u));
        for (const auto& v : joins)
            if (!(u == v)) CHECK_FALSE(bruhat_leq(u, v));
    }
}

TEST_CASE("minimal upper bounds with a restriction") {
    // restricting to even-length permutations can empty the result
    auto evens = minimal_upper_bounds({parse_one_line("321")},
                                      [](const Permutation& u) { return length(u) % 2 == 0; });
    CHECK(evens.empty());
}

TEST_CASE("pattern containment") {
    CHECK(contains_pattern(parse_one_line("351624"), parse_one_line("31524")));
    CHECK_FALSE(contains_pattern(parse_one_line("341256"), parse_one_line("1324")));
    CHECK(contains_pattern(parse_one_line("321"), Permutation{}));
    CHECK(contains_pattern(parse_one_line("1324"), parse_one_line("1324")));
    CHECK_FALSE(contains_pattern(parse_one_line("123"), parse_one_line("21")));
}

TEST_CASE("pattern containment agrees with exhaustive subsequence enumeration") {
    auto patterns = std::vector<Permutation>{parse_one_line("132"), parse_one_line("1324"),
                                             parse_one_line("2143")};
    for (const auto& w : all_perms(6)) {
        for (const auto& p : patterns) {
            // brute force: scan all index subsets
            const int n = w.size(), k = p.size();
            bool brute = false;
            std::vector<int> idx(static_cast<size_t>(k));
            std::function<void(int, int)> rec = [&](int pos, int start) {
                if (brute) return;
                if (pos == k) {
                    bool iso = true;
                    for (int a = 0; a < k && iso; ++a)
                        for (int b = a + 1; b < k && iso; ++b)
                            if ((p.entries()[static_cast<size_t>(a)] <
                                 p.entries()[static_cast<size_t>(b)]) !=
                                (w.entries()[static_cast<size_t>(idx[static_cast<size_t>(a)])] <
                                 w.entries()[static_cast<size_t>(idx[static_cast<size_t>(b)])]))
                                iso = false;
                    brute = brute || iso;
                    return;
                }
                for (int t = start; t < n; ++t) {
                    idx[static_cast<size_t>(pos)] = t;
                    rec(pos + 1, t + 1);
                }
            };
            rec(0, 0);
            CHECK(contains_pattern(w, p) == brute);
        }
    }
}

TEST_CASE("reduced words multiply back and have the right length") {
    CHECK(reduced_word(Permutation::identity(4)).empty());
    CHECK(reduced_word(parse_one_line("213")) == std::vector<int>{1});
    for (int n = 1; n <= 5; ++n) {
        for (const auto& w : all_perms(n)) {
            auto word = reduced_word(w);
            CHECK(static_cast<int>(word.size()) == length(w));
            Permutation prod = Permutation::identity(n);
            for (int i : word) prod = prod * adjacent_transposition(i, n);
            CHECK(prod == w);
        }
    }
}
