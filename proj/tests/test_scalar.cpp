#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "klein/scalar.hpp"

using klein::CReal;
using klein::error;
using klein::errc;
using klein::Rat;

namespace {

CReal rq(long n, long d) { return CReal::from_fraction(n, d); }

// Random expression tree of bounded depth.  Divisors are nudged away from
// zero and sqrt operands are squared first, so every tree is well formed.
CReal random_tree(std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
    std::uniform_int_distribution<long> num(-12, 12);
    std::uniform_int_distribution<long> den(1, 12);
    switch (pick(rng)) {
        case 0:
            return rq(num(rng), den(rng));
        case 1:
            return random_tree(rng, depth - 1) + random_tree(rng, depth - 1);
        case 2:
            return random_tree(rng, depth - 1) - random_tree(rng, depth - 1);
        case 3:
            return random_tree(rng, depth - 1) * random_tree(rng, depth - 1);
        case 4: {
            CReal d = random_tree(rng, depth - 1);
            if (d.sign() == 0) d = d + CReal(1);
            if (d.sign() == 0) d = CReal(1);
            return random_tree(rng, depth - 1) / d;
        }
        default: {
            CReal x = random_tree(rng, depth - 2 < 0 ? 0 : depth - 2);
            return sqrt(x * x + rq(1, 7));
        }
    }
}

}  // namespace

TEST_CASE("rational construction canonicalises") {
    CReal v = rq(6, -10);
    CHECK(v.is_rational());
    CHECK(v.rational() == Rat(-3, 5));
    CHECK(v.to_expr() == "-3/5");
    CHECK_THROWS_AS(rq(1, 0), error);
}

TEST_CASE("arithmetic folds rationals") {
    CReal v = rq(1, 3) + rq(1, 6);
    CHECK(v.is_rational());
    CHECK(v.rational() == Rat(1, 2));
    CHECK((rq(2, 3) * rq(9, 4)).rational() == Rat(3, 2));
    CHECK((rq(1, 2) - rq(1, 2)).sign() == 0);
}

TEST_CASE("division by a symbolic exact zero is rejected") {
    CReal root2 = sqrt(CReal(2));
    CReal zero = root2 * root2 - CReal(2);
    CHECK(zero.sign() == 0);
    CHECK_THROWS_AS(CReal(1) / zero, error);
    try {
        CReal(1) / zero;
    } catch (const error& e) {
        CHECK(e.kind() == errc::arithmetic);
    }
}

TEST_CASE("sqrt of a perfect square folds") {
    CReal v = sqrt(rq(9, 25));
    CHECK(v.is_rational());
    CHECK(v.rational() == Rat(3, 5));
    CHECK_THROWS_AS(sqrt(CReal(-1)), error);
    try {
        sqrt(rq(-1, 4));
    } catch (const error& e) {
        CHECK(e.kind() == errc::domain);
    }
}

TEST_CASE("signs near algebraic boundaries") {
    CReal root2 = sqrt(CReal(2));
    CHECK((root2 - rq(3, 2)).sign() == -1);
    CHECK((CReal(3) - CReal(2) * root2).sign() == 1);
    CHECK((root2 * root2 - CReal(2)).sign() == 0);
    CReal root8 = sqrt(CReal(8));
    CHECK((root8 - CReal(2) * root2).sign() == 0);
}

TEST_CASE("substitutability under exact equality") {
    CReal a = sqrt(CReal(2)) * sqrt(CReal(2));
    CReal b = CReal(2);
    REQUIRE((a - b).sign() == 0);
    CReal probe = rq(7, 3);
    CHECK((a * probe - b * probe).sign() == 0);
    CHECK((sqrt(a) - sqrt(b)).sign() == 0);
    CHECK(((a + probe) / (b + probe) - CReal(1)).sign() == 0);
}

TEST_CASE("field identities on random trees") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 100; ++i) {
        CReal a = random_tree(rng, 5);
        CReal b = random_tree(rng, 5);
        CReal c = random_tree(rng, 5);
        CHECK(((a + b) - (b + a)).sign() == 0);
        CHECK(((a + b) * c - (a * c + b * c)).sign() == 0);
        CHECK(((a * b) * c - a * (b * c)).sign() == 0);
    }
}

TEST_CASE("sqrt squares back to its operand") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        CReal x = random_tree(rng, 3);
        CReal a = x * x;  // non-negative by construction
        CReal r = sqrt(a);
        CHECK((r * r - a).sign() == 0);
    }
}

TEST_CASE("expression grammar round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 40; ++i) {
        CReal v = random_tree(rng, 4);
        CReal back = CReal::parse(v.to_expr());
        CHECK((v - back).sign() == 0);
    }
    CReal v = CReal::parse("(1/3 + sqrt(2))");
    CHECK((v - (rq(1, 3) + sqrt(CReal(2)))).sign() == 0);
    CHECK(CReal::parse("-3/5").rational() == Rat(-3, 5));
    CHECK_THROWS_AS(CReal::parse("1/0"), error);
    CHECK_THROWS_AS(CReal::parse("(1 +"), error);
    CHECK_THROWS_AS(CReal::parse("(1 + 2) junk"), error);
}

TEST_CASE("enclosures contain the value and nest under refinement") {
    CReal root2 = sqrt(CReal(2));
    auto [lo, hi] = root2.enclosure_hint();
    CHECK(lo <= 1.4142135623730951);
    CHECK(hi >= 1.4142135623730951);
    CHECK(lo <= hi);

    // A fresh equal expression evaluated at 4x the precision must stay inside.
    long saved = klein::initial_precision_bits();
    klein::set_initial_precision_bits(64);
    CReal a = sqrt(CReal(2)) + sqrt(CReal(3));
    auto coarse = a.enclosure_hint();
    klein::set_initial_precision_bits(256);
    CReal b = sqrt(CReal(2)) + sqrt(CReal(3));
    auto fine = b.enclosure_hint();
    klein::set_initial_precision_bits(saved);
    CHECK(fine.first >= coarse.first);
    CHECK(fine.second <= coarse.second);
}

TEST_CASE("decimal approximations are deterministic") {
    CReal root2 = sqrt(CReal(2));
    std::string a = root2.approx(20);
    std::string b = root2.approx(20);
    CHECK(a == b);
    CHECK(a.substr(0, 10) == "1.41421356");
    CHECK(root2.approx_fixed(6).substr(0, 8) == "1.414214");
    CHECK(CReal(0).approx(20) == "0");
}

TEST_CASE("concurrent sign queries agree") {
    CReal root2 = sqrt(CReal(2));
    CReal v = root2 * root2 - CReal(2);
    std::vector<int> outs(8, 5);
    std::vector<std::thread> ts;
    for (int k = 0; k < 8; ++k)
        ts.emplace_back([&outs, &v, k] { outs[static_cast<size_t>(k)] = v.sign(); });
    for (auto& t : ts) t.join();
    for (int s : outs) CHECK(s == 0);
}

TEST_CASE("negation and comparisons") {
    CReal x = rq(2, 7);
    CHECK((-x).rational() == Rat(-2, 7));
    CHECK(x > CReal(0));
    CHECK(-x < CReal(0));
    CHECK(x == rq(4, 14));
    CHECK(x != rq(3, 7));
}
