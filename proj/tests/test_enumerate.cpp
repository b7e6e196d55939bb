#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "coreab/enumerate.hpp"
#include "coreab/recurrence.hpp"
#include "test_support.hpp"

using namespace coreab;

namespace {

/// Test-local oracle for families where the gap set is infinite: enumerate
/// d-distinct partitions with all hooks bounded by `cap` and filter by the
/// hook predicates directly.
std::vector<Partition> bounded_core_distinct(Int s, Int t, Int d, Int cap) {
    std::vector<Partition> out;
    std::vector<Int> beta;
    auto rec = [&](auto&& self, Int next) -> void {
        Partition p = beta_to_parts(BetaSet(std::vector<Int>(beta.rbegin(), beta.rend())));
        if (is_t_core_direct(p, s) && is_t_core_direct(p, t)) out.push_back(std::move(p));
        for (Int h = next; h <= cap; ++h) {
            beta.push_back(h);
            self(self, h + d + 1);
            beta.pop_back();
        }
    };
    rec(rec, 1);
    std::sort(out.begin(), out.end(), graded_beta_less);
    return out;
}

} // namespace

TEST_CASE("abacus family enumeration") {
    CHECK(enumerate_abaci(Params(4, 3, -1, 1)).size() == 15);
    CHECK(enumerate_abaci(Params(1, 3, 0, 1)) == std::vector<Abacus>{Abacus(1)});
    CHECK(enumerate_abaci(Params(5, 1, 1, 1)).size() == 8);
    CHECK(enumerate_abaci(Params(6, 1, -5, 2)) == std::vector<Abacus>{Abacus(6)});

    auto family = enumerate_abaci(Params(4, 3, -1, 1));
    CHECK(family.front() == Abacus(4)); // empty abacus sorts first
    CHECK(std::is_sorted(family.begin(), family.end(),
                         [](const Abacus& x, const Abacus& y) { return x.beads() < y.beads(); }));
    for (const Abacus& a : family) CHECK(in_family(a, Params(4, 3, -1, 1)));
}

TEST_CASE("bead-count polynomial by brute force") {
    CHECK(abacus_poly_bruteforce(Params(4, 3, -1, 1)) ==
          QPolynomial({1, 3, 4, 4, 2, 1}));
    CHECK(abacus_poly_bruteforce(Params(2, 3, 1, 1)) == QPolynomial({1, 1, 1, 1}));
    CHECK(abacus_poly_bruteforce_bound(0, 5, 1) == QPolynomial::one());
    CHECK(abacus_poly_bruteforce_bound(-2, 5, 1) == QPolynomial::zero());
}

TEST_CASE("gap set of a numerical semigroup") {
    CHECK(frobenius_gaps(4, 5) == std::vector<Int>{1, 2, 3, 6, 7, 11});
    CHECK(frobenius_gaps(4, 11).size() == 15);
    CHECK(frobenius_gaps(2, 3) == std::vector<Int>{1});
    CHECK(frobenius_gaps(1, 7).empty());
    CHECK_THROWS_AS(frobenius_gaps(4, 6), non_coprime_error);
    for (Int s = 2; s <= 9; ++s)
        for (Int t = s + 1; t <= 12; ++t) {
            if (std::gcd(s, t) != 1) continue;
            auto gaps = frobenius_gaps(s, t);
            CHECK(static_cast<Int>(gaps.size()) == (s - 1) * (t - 1) / 2);
            CHECK(gaps.back() == s * t - s - t);
        }
}

TEST_CASE("core partitions into d-distinct parts, worked families") {
    auto fifteen = enumerate_core_distinct(4, 11, 1);
    REQUIRE(fifteen.size() == 15);
    std::vector<std::string> listed;
    for (const Partition& p : fifteen) listed.push_back(p.str());
    CHECK(listed == std::vector<std::string>{
              "()", "1", "2", "3", "2,1", "4,1", "5,2", "6,3", "3,2,1", "5,2,1",
              "7,4,1", "8,5,2", "4,3,2,1", "6,3,2,1", "5,4,3,2,1"});

    CHECK(enumerate_core_distinct(3, 5, 1) ==
          std::vector<Partition>{Partition{}, Partition{1}, Partition{2}, Partition{3, 1}});
    CHECK(enumerate_core_distinct(6, 7, 1).size() == 13);
    CHECK_THROWS_AS(enumerate_core_distinct(4, 6, 1), non_coprime_error);
}

TEST_CASE("part-count polynomial by brute force") {
    CHECK(core_parts_poly_bruteforce(4, 11, 1) == QPolynomial({1, 3, 4, 4, 2, 1}));
    CHECK(core_parts_poly_bruteforce(4, 7, 1) == QPolynomial({1, 1}).pow(3));
    CHECK(core_parts_poly_bruteforce(2, 3, 1) == QPolynomial({1, 1}));
}

TEST_CASE("unrestricted core partition enumeration") {
    CHECK(enumerate_all_core(4, 5).size() == 14);
    CHECK(enumerate_all_core(2, 3).size() == 2);
    CHECK(enumerate_all_core(5, 6).size() == 42);
    for (Int s = 2; s <= 6; ++s)
        for (Int t = s + 1; s + t <= 13; ++t) {
            if (std::gcd(s, t) != 1) continue;
            Int expected = binomial(s + t, s) / (s + t);
            CHECK(static_cast<Int>(enumerate_all_core(s, t, 64).size()) == expected);
        }
    for (const Partition& p : enumerate_all_core(4, 5)) {
        CHECK(is_t_core_direct(p, 4));
        CHECK(is_t_core_direct(p, 5));
    }
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(enumerate_all_core(13, 14), budget_exceeded_error);
    CHECK_NOTHROW(enumerate_all_core(13, 14, 100));
    CHECK_THROWS_AS(enumerate_core_distinct(15, 17, 1), budget_exceeded_error);
    CHECK(core_parts_poly_bruteforce(15, 17, 1, 128).evaluate(1) == 16384);
}

TEST_CASE("abacus and partition counts agree where the families correspond") {
    for (Int d = 1; d <= 3; ++d)
        for (Int s = 2; s <= 8; ++s)
            for (Int m = 1; m <= 3; ++m) {
                std::vector<Int> offsets{-1};
                for (Int r = 1; r <= d; ++r) offsets.push_back(r);
                for (Int r : offsets) {
                    Int t = m * s + r;
                    if (t < 2 || std::gcd(s, t) != 1) continue;
                    CHECK(abacus_poly_bruteforce(Params(s, m, r, d)) ==
                          core_parts_poly_bruteforce(s, t, d, 64));
                }
            }
}

TEST_CASE("families with a large hook bound offset need not correspond") {
    // (s, m, r, d) = (6, 1, -2, 3): the partition (4,1) is (6,4)-core and
    // 3-distinct, but its maximum hook 5 is not < 4, so it has no abacus in
    // the bounded family.  The two polynomials differ -- permanently.
    auto family = bounded_core_distinct(6, 4, 3, 30);
    std::vector<std::string> names;
    for (const Partition& p : family) names.push_back(p.str());
    CHECK(names == std::vector<std::string>{"()", "1", "2", "3", "4,1"});

    QPolynomial parts_poly({1, 3, 1});
    QPolynomial abacus_side = abacus_poly_bruteforce(Params(6, 1, -2, 3));
    CHECK(abacus_side == QPolynomial({1, 3}));
    CHECK_FALSE(abacus_side == parts_poly);
    CHECK(max_hook(Partition{4, 1}) == 5);
}

TEST_CASE("bounded hook growth for small positive offsets") {
    for (Int d = 1; d <= 3; ++d)
        for (Int r = 1; r <= d; ++r)
            for (Int s = 2; s <= 9; ++s) {
                if (std::gcd(s, s + r) != 1) continue;
                for (const Partition& p : enumerate_core_distinct(s, s + r, d, 64))
                    CHECK(max_hook(p) < s + r);
            }
}

TEST_CASE("every enumerated object passes its defining predicates") {
    Params family(5, 2, 1, 2);
    for (const Abacus& a : enumerate_abaci(family)) {
        CHECK(is_s_core_abacus(a));
        CHECK(has_spacing(a, family.d));
        CHECK(in_family(a, family));
    }
    for (const Partition& p : enumerate_core_distinct(5, 7, 2)) {
        CHECK(is_t_core_direct(p, 5));
        CHECK(is_t_core_direct(p, 7));
        CHECK(is_d_distinct(p, 2));
    }
}
