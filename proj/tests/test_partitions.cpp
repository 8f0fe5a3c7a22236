#include <doctest.h>

#include <numeric>
#include <set>

#include "heckedn/partitions.hpp"

using namespace heckedn;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}  // namespace

TEST_CASE("conjugate") {
    CHECK(conjugate(P({2, 1})) == P({2, 1}));
    CHECK(conjugate(P({3})) == P({1, 1, 1}));
    CHECK(conjugate(P({2, 2, 1})) == P({3, 2}));
    for (int k = 0; k <= 12; ++k)
        for (const auto& la : partitions_of(k)) CHECK(conjugate(conjugate(la)) == la);
}

TEST_CASE("hook lengths") {
    CHECK(hook_lengths(P({1})) == std::vector<int>{1});
    CHECK(hook_lengths(P({2, 1})) == std::vector<int>{3, 1, 1});
    CHECK(hook_lengths(P({2})) == std::vector<int>{2, 1});
}

TEST_CASE("longest Young-subgroup element") {
    CHECK(young_longest_length(P({1, 1, 1})) == 0);
    CHECK(young_longest_length(P({2, 1})) == 1);
    CHECK(young_longest_length(P({3})) == 3);
}

TEST_CASE("w_lambda") {
    CHECK(w_lambda(P({4})).one_line == std::vector<int>{1, 2, 3, 4});
    CHECK(w_lambda(P({4})).length() == 0);
    CHECK(w_lambda(P({1, 1})).length() == 0);
    const auto w21 = w_lambda(P({2, 1}));
    CHECK(w21.one_line == std::vector<int>{1, 3, 2});
    CHECK(w21.length() == 1);
    // reduced word length equals the inversion count of the one-line form
    for (int k = 1; k <= 7; ++k) {
        for (const auto& la : partitions_of(k)) {
            const auto w = w_lambda(la);
            long inv = 0;
            for (size_t i = 0; i < w.one_line.size(); ++i)
                for (size_t j = i + 1; j < w.one_line.size(); ++j)
                    if (w.one_line[i] > w.one_line[j]) ++inv;
            CHECK(w.length() == inv);
        }
    }
}

TEST_CASE("restrictedness") {
    CHECK(is_e_restricted(P({1, 1, 1}), 3));
    CHECK_FALSE(is_e_restricted(P({3}), 3));
    CHECK(is_e_restricted(P({2, 1}), 3));
    // conjugation exchanges restricted and regular
    for (int k = 0; k <= 10; ++k)
        for (const auto& la : partitions_of(k))
            for (int e = 2; e <= 5; ++e)
                CHECK(is_e_restricted(la, e) == is_e_regular(conjugate(la), e));
}

TEST_CASE("dominance") {
    CHECK(dominance_leq(P({1, 1, 1}), P({3})));
    CHECK(dominance_leq(P({2, 1}), P({2, 1})));
    CHECK_FALSE(dominance_leq(P({3}), P({2, 1})));
    CHECK_THROWS_AS(dominance_leq(P({2}), P({2, 1})), SizeMismatchError);
}

TEST_CASE("standard tableaux counts") {
    CHECK(count_standard_tableaux(P({5})) == 1);
    CHECK(count_standard_tableaux(P({2, 1})) == 2);
    CHECK(count_standard_tableaux(P({2, 2})) == 2);
    // dim divides m!, and the dims square-sum to m!
    for (int m = 1; m <= 12; ++m) {
        long long sum = 0, fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        for (const auto& la : partitions_of(m)) {
            const long long d = count_standard_tableaux(la);
            CHECK(fact % d == 0);
            sum += d * d;
        }
        CHECK(sum == fact);
    }
}

TEST_CASE("bipartition enumeration") {
    const auto b21 = enumerate_bipartitions(2, 1);
    REQUIRE(b21.size() == 1);
    CHECK(b21[0] == Bipartition(P({1}), P({1})));

    CHECK(enumerate_bipartitions(4, 2).size() == 4);

    size_t total = 0;
    for (int a = 0; a <= 4; ++a) total += enumerate_bipartitions(4, a).size();
    CHECK(total == 20);

    // deterministic lex-descending order
    const auto b42 = enumerate_bipartitions(4, 2);
    CHECK(b42[0] == Bipartition(P({2}), P({2})));
    CHECK(b42[3] == Bipartition(P({1, 1}), P({1, 1})));
}

TEST_CASE("parsing and rendering") {
    CHECK(P({2, 1}).str() == "[2,1]");
    CHECK(Partition().str() == "[]");
    CHECK(parse_partition("[3,2,1]") == P({3, 2, 1}));
    CHECK(parse_partition("[]") == Partition());
    CHECK(Bipartition(P({2, 1}), P({1, 1, 1})).str() == "([2,1]|[1,1,1])");
    CHECK(parse_bipartition("[2,1]|[1,1,1]") == Bipartition(P({2, 1}), P({1, 1, 1})));
    CHECK(parse_bipartition("([2,1]|[])") == Bipartition(P({2, 1}), Partition()));
    CHECK_THROWS_AS(parse_partition("[2,3]"), std::invalid_argument);
}

TEST_CASE("cells") {
    const auto addable = addable_cells(P({2, 1}));
    CHECK(addable == std::vector<Cell>{{1, 3}, {2, 2}, {3, 1}});
    const auto removable = removable_cells(P({2, 1}));
    CHECK(removable == std::vector<Cell>{{1, 2}, {2, 1}});
    CHECK(with_cell(P({2, 1}), {3, 1}) == P({2, 1, 1}));
}
