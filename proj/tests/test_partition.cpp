#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "coreab/partition.hpp"
#include "test_support.hpp"

using namespace coreab;

TEST_CASE("partition construction validates input") {
    CHECK(Partition{}.empty());
    CHECK(Partition{7, 5, 4, 2, 1}.size() == 19);
    CHECK(Partition{7, 5, 4, 2, 1}.num_parts() == 5);
    CHECK(Partition{2, 2}.num_parts() == 2); // repeats are fine
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("partition text format") {
    CHECK(Partition{7, 5, 4, 2, 1}.str() == "7,5,4,2,1");
    CHECK(Partition{}.str() == "()");
    CHECK(Partition::parse("7,5,4,2,1") == Partition{7, 5, 4, 2, 1});
    CHECK(Partition::parse("()") == Partition{});
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
}

TEST_CASE("beta-set of a partition") {
    CHECK(parts_to_beta(Partition{7, 5, 4, 2, 1}) == BetaSet{11, 8, 6, 3, 1});
    CHECK(parts_to_beta(Partition{}) == BetaSet{});
    CHECK(parts_to_beta(Partition{3, 1}) == BetaSet{4, 1});
}

TEST_CASE("partition from a beta-set") {
    CHECK(beta_to_parts(BetaSet{11, 8, 6, 3, 1}) == Partition{7, 5, 4, 2, 1});
    CHECK(beta_to_parts(BetaSet{}) == Partition{});
    CHECK(beta_to_parts(BetaSet{4, 1}) == Partition{3, 1});
    CHECK_THROWS_AS(BetaSet({4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(BetaSet({0}), std::invalid_argument);
}

TEST_CASE("partition size from beta-set") {
    CHECK(partition_size_from_beta(BetaSet{11, 8, 6, 3, 1}) == 19);
    CHECK(partition_size_from_beta(BetaSet{}) == 0);
    CHECK(partition_size_from_beta(BetaSet{4, 1}) == 4);
}

TEST_CASE("t-core predicates on the worked example") {
    Partition p{7, 5, 4, 2, 1};
    CHECK(is_t_core_direct(p, 5));
    CHECK_FALSE(is_t_core_direct(p, 7));
    CHECK(is_t_core_beta(p, 5));
    CHECK_FALSE(is_t_core_beta(p, 7));
    CHECK(is_t_core_direct(Partition{}, 3));
    CHECK_FALSE(is_t_core_beta(Partition{1}, 1)); // a nonempty partition has a 1-hook
}

TEST_CASE("d-distinct predicate") {
    CHECK(is_d_distinct(Partition{5, 2, 1}, 1));
    CHECK(is_d_distinct(Partition{4, 1}, 3));
    CHECK_FALSE(is_d_distinct(Partition{2, 2}, 1));
    CHECK(is_d_distinct(Partition{}, 2));
    CHECK(is_d_distinct(Partition{9}, 4));
}

TEST_CASE("initial gap") {
    CHECK(initial_gap(Partition{7, 5, 4, 2, 1}) == 2);
    CHECK(initial_gap(Partition{5, 2, 1}) == 3);
    CHECK_THROWS_AS(initial_gap(Partition{1}), std::domain_error);
    CHECK_THROWS_AS(initial_gap(Partition{}), std::domain_error);
}

TEST_CASE("maximum hook length") {
    CHECK(max_hook(Partition{7, 5, 4, 2, 1}) == 11);
    CHECK(max_hook(Partition{}) == 0);
    CHECK(max_hook(Partition{4, 1}) == 5);
}

TEST_CASE("beta-set round trip is the identity") {
    for (const Partition& p : testsupport::partitions_up_to(30))
        CHECK(beta_to_parts(parts_to_beta(p)) == p);

    std::mt19937 rng(20191006);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Int> parts;
        Int value = 1 + rng() % 50;
        Int count = 1 + rng() % 30;
        for (Int i = 0; i < count; ++i) {
            parts.push_back(value);
            value += rng() % 7;
        }
        std::reverse(parts.begin(), parts.end());
        Partition p(parts);
        CHECK(beta_to_parts(parts_to_beta(p)) == p);
    }
}

TEST_CASE("core predicate routes agree") {
    for (const Partition& p : testsupport::partitions_up_to(20))
        for (Int t = 1; t <= 12; ++t)
            CHECK(is_t_core_direct(p, t) == is_t_core_beta(p, t));
}

TEST_CASE("max hook equals the largest beta entry") {
    for (const Partition& p : testsupport::partitions_up_to(18)) {
        if (p.empty()) continue;
        CHECK(max_hook(p) == parts_to_beta(p).hooks().front());
        CHECK(partition_size_from_beta(parts_to_beta(p)) == p.size());
    }
}
