#include <doctest.h>

#include <set>

#include "permstat/errors.hpp"
#include "permstat/permutation.hpp"
#include "permstat/statistics.hpp"
#include "oracles.hpp"

using namespace permstat;

namespace {

Permutation P(const char* s) { return parse_permutation(s); }
Word W(std::initializer_list<int> v) { return Word(v); }

}  // namespace

TEST_CASE("parse_permutation accepts both spellings") {
    CHECK(P("354162").word().size() == 6);
    const auto p = P("354162");
    CHECK(Word(p.word().begin(), p.word().end()) == W({3, 5, 4, 1, 6, 2}));
    CHECK(P("3,5,4,1,6,2") == P("354162"));
    CHECK(P(" 1 ") == Permutation::identity(1));
    CHECK(P("10,1,2,3,4,5,6,7,8,9").size() == 10);
    CHECK(P("10,1,2,3,4,5,6,7,8,9").to_string() == "10,1,2,3,4,5,6,7,8,9");
    CHECK(P("3,5,4,1,6,2").to_string() == "354162");
}

TEST_CASE("parse_permutation rejects bad input") {
    CHECK_THROWS_AS(P("3541"), ValidationError);
    CHECK_THROWS_AS(P("1123"), ValidationError);
    CHECK_THROWS_AS(P(""), ValidationError);
    CHECK_THROWS_AS(P("   "), ValidationError);
    CHECK_THROWS_AS(P("1,a,3"), ValidationError);
    CHECK_THROWS_AS(P("1,,2"), ValidationError);
    CHECK_THROWS_AS(P("0"), ValidationError);
    CHECK_THROWS_AS(P("2,1,-3"), ValidationError);
    CHECK_THROWS_WITH(P("1123"), "duplicate value 1");
    CHECK_THROWS_AS(Permutation::identity(0), ValidationError);
}

TEST_CASE("lexicographic rank agrees with enumeration order") {
    for (int n = 1; n <= 6; ++n) {
        std::size_t expected = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            REQUIRE(lex_rank(p) == expected);
            REQUIRE(lex_unrank(n, expected) == p);
            ++expected;
        });
        CHECK(expected == factorial(n));
    }
}

TEST_CASE("basic statistics of the worked example") {
    const auto s = basic_statistics(P("354162"));
    CHECK(s.des == 3);
    CHECK(s.maj == 10);
    CHECK(s.exc == 4);
    CHECK(s.cyc == 2);
    CHECK(s.inv == 8);
    CHECK(s.rlmin == 2);

    CHECK(basic_statistics(P("123456")) == StatRecord{0, 0, 0, 0, 6, 6});
}

TEST_CASE("basic statistics respect their ranges") {
    for (int n = 1; n <= 6; ++n) {
        for_each_permutation(n, [n](const Permutation& p) {
            const auto s = basic_statistics(p);
            REQUIRE(s.inv <= n * (n - 1) / 2);
            REQUIRE(s.des <= n - 1);
            REQUIRE(s.maj <= n * (n - 1) / 2);
            REQUIRE(s.exc <= n - 1);
            REQUIRE((1 <= s.rlmin && s.rlmin <= n));
            REQUIRE((1 <= s.cyc && s.cyc <= n));

            const auto positions = descent_positions(p);
            int sum = 0;
            for (int j : positions) sum += j;
            REQUIRE(sum == s.maj);
            REQUIRE(static_cast<int>(positions.size()) == s.des);

            const std::vector<int> w(p.word().begin(), p.word().end());
            REQUIRE(s.inv == oracle::inversions(w));
            REQUIRE(s.rlmin == oracle::rl_minima(w));
        });
    }
}

TEST_CASE("cycle decomposition") {
    using Cycles = std::vector<std::vector<int>>;
    CHECK(cycle_decomposition(P("354162")) == Cycles{{1, 3, 4}, {2, 5, 6}});
    CHECK(cycle_decomposition(P("123")) == Cycles{{1}, {2}, {3}});
    CHECK(cycle_decomposition(P("21")) == Cycles{{1, 2}});

    for_each_permutation(5, [](const Permutation& p) {
        std::set<int> covered;
        for (const auto& c : cycle_decomposition(p)) {
            REQUIRE(*std::min_element(c.begin(), c.end()) == c.front());
            for (std::size_t i = 0; i < c.size(); ++i) {
                REQUIRE(p(c[i]) == c[(i + 1) % c.size()]);
                REQUIRE(covered.insert(c[i]).second);
            }
        }
        REQUIRE(covered.size() == 5);
    });
}

TEST_CASE("restrict_to keeps small values in order") {
    CHECK(restrict_to(P("354162"), 3) == W({3, 1, 2}));
    CHECK(restrict_to(P("354162"), 5) == W({3, 5, 4, 1, 2}));
    CHECK(restrict_to(P("354162"), 6) == W({3, 5, 4, 1, 6, 2}));
    CHECK_THROWS_AS(restrict_to(P("354162"), 0), ValidationError);
    CHECK_THROWS_AS(restrict_to(P("354162"), 7), ValidationError);
}

TEST_CASE("descent blocks") {
    const auto s = descent_blocks(P("354162"));
    REQUIRE(s.blocks.size() == 3);
    CHECK(s.blocks[0].values == W({3}));
    CHECK(s.blocks[1].values == W({5, 4, 1}));
    CHECK(s.blocks[2].values == W({6, 2}));
    CHECK(s.blocks[0].is_outsider());
    CHECK(s.blocks[1].closer() == 5);
    CHECK(s.blocks[1].opener() == 1);

    const auto inc = descent_blocks(P("123"));
    CHECK(inc.blocks.size() == 3);
    CHECK(std::all_of(inc.blocks.begin(), inc.blocks.end(), [](const auto& b) { return b.is_outsider(); }));

    const auto dec = descent_blocks(P("321"));
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].closer() == 3);
    CHECK(dec.blocks[0].opener() == 1);
}

TEST_CASE("descent blocks reassemble the word and split at ascents") {
    for_each_permutation(6, [](const Permutation& p) {
        const auto s = descent_blocks(p);
        REQUIRE(s.concatenated() == Word(p.word().begin(), p.word().end()));
        int position = 0;
        for (std::size_t b = 0; b < s.blocks.size(); ++b) {
            const auto& v = s.blocks[b].values;
            REQUIRE(std::is_sorted(v.rbegin(), v.rend()));
            REQUIRE(s.blocks[b].is_outsider() == (s.blocks[b].opener() == s.blocks[b].closer()));
            position += static_cast<int>(v.size());
            if (b + 1 < s.blocks.size()) REQUIRE(p(position) < p(position + 1));
        }
    });
}

TEST_CASE("right embracing numbers") {
    CHECK(rem_values(P("354162")) == std::vector<int>{0, 0, 0, 2, 1, 1, 0});
    CHECK(rem_values(P("12345")) == std::vector<int>(6, 0));
    CHECK(rem_values(P("321")) == std::vector<int>(4, 0));
}

TEST_CASE("mak") {
    CHECK(mak(P("354162")) == 11);
    CHECK(mak(P("1234")) == 0);
    CHECK(mak(P("321")) == 3);
}

TEST_CASE("excedance split") {
    CHECK(excedance_split(P("354162")) == std::pair{W({3, 5, 4, 6}), W({1, 2})});
    CHECK(excedance_split(P("1234")) == std::pair{Word{}, W({1, 2, 3, 4})});
    CHECK(excedance_split(P("321")) == std::pair{W({3}), W({2, 1})});
}

TEST_CASE("den by both definitions") {
    CHECK(den_by_pair_sets(P("354162")) == 12);
    CHECK(den_by_excedance_subwords(P("354162")) == 12);
    CHECK(den(P("354162")) == 12);
    CHECK(den(P("1234")) == 0);
    CHECK(den(P("321")) == 2);
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Permutation& p) {
            REQUIRE(den_by_pair_sets(p) == den_by_excedance_subwords(p));
        });
    }
}

TEST_CASE("no excedance top is a right-to-left minimum") {
    for (int n = 1; n <= 7; ++n) {
        for_each_permutation(n, [](const Permutation& p) {
            const auto minima = rlmin_values(p);
            for (int top : excedance_tops(p)) {
                REQUIRE(std::find(minima.begin(), minima.end(), top) == minima.end());
            }
        });
    }
}

TEST_CASE("sorting index") {
    CHECK(sor_c_values(P("354162")) == std::vector<int>{0, 1, 2, 1, 1, 2, 2});
    CHECK(sor_c_values(P("341625")) == std::vector<int>{0, 1, 2, 1, 2, 2, 5});
    CHECK(sor_c_values(P("1234")) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(sor(P("354162")) == 12);
    CHECK(sor(P("1234")) == 0);
    CHECK(sor(P("21")) == 1);
}

TEST_CASE("c_j lies in 1..j and equals j exactly at cycle minima") {
    for_each_permutation(6, [](const Permutation& p) {
        const auto c = sor_c_values(p);
        std::set<int> minima;
        for (const auto& cycle : cycle_decomposition(p)) minima.insert(cycle.front());
        for (int j = 1; j <= 6; ++j) {
            const int cj = c[static_cast<std::size_t>(j)];
            REQUIRE((1 <= cj && cj <= j));
            REQUIRE((cj == j) == minima.contains(j));
        }
    });
}

TEST_CASE("inversion numbers") {
    const auto f = inversion_numbers(W({6, 4, 5}));
    CHECK(f.bottom == std::map<int, int>{{6, 0}, {4, 1}, {5, 1}});
    const auto g = inversion_numbers(W({3, 1, 2}));
    CHECK(g.top == std::map<int, int>{{3, 2}, {1, 0}, {2, 0}});
    const auto inc = inversion_numbers(W({2, 5, 9}));
    for (const auto& [v, b] : inc.bottom) CHECK(b == 0);
    CHECK_THROWS_AS(inversion_numbers(W({1, 2, 1})), ValidationError);
}
