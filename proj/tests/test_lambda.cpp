#include "ddim/lambda.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace ddim;
using namespace ddim::testutil;

TEST_CASE("multiply is componentwise addition") {
    CHECK(multiply(mono({1, 0}, {2}), mono({0, 1}, {-1})) == mono({1, 1}, {1}));
    auto lam = mono({2, 3}, {-4});
    CHECK(multiply(lam, LambdaMonomial::identity(2, 1)) == lam);
    CHECK(multiply(mono({2}, {}), mono({3}, {})) == mono({5}, {}));
    CHECK_THROWS_AS(multiply(mono({1}, {}), mono({1, 2}, {})), input_error);
}

TEST_CASE("order components") {
    Partition part{{1, 1, 1}, 1};
    auto lam = mono({2, 1, 0}, {-3});
    CHECK(order_block(part, lam, 1) == 2);
    CHECK(order_block(part, lam, 2) == 1);
    CHECK(order_block(part, lam, 3) == 0);
    CHECK(order_sigma(lam) == 3);
    CHECK(order_total(lam) == 6);

    CHECK(order_total(LambdaMonomial::identity(3, 1)) == 0);

    Partition whole{{2}, 2};
    auto mu = mono({1, 1}, {2, -2});
    CHECK(order_block(whole, mu, 1) == 2);
    CHECK(order_sigma(mu) == 4);
}

TEST_CASE("sigma and block orders separate delta from alpha") {
    // m = n = p = 1: tuples expanded by hand from the order definition
    Partition part{{1}, 1};
    auto delta = mono({1}, {0});
    auto alpha = mono({0}, {1});
    CHECK(compare(part, delta, alpha, kSigmaOrder) < 0);  // delta <_sigma alpha
    CHECK(compare(part, alpha, delta, 1) < 0);            // alpha <_1 delta
    CHECK(compare(part, delta, delta, kSigmaOrder) == 0);
}

TEST_CASE("term comparison breaks ties by generator") {
    Partition part{{1}, 1};
    CHECK(compare_terms(part, term({1}, {1}, 0), term({1}, {1}, 1), kSigmaOrder) < 0);
    CHECK(compare_terms(part, term({1}, {0}, 1), term({0}, {1}, 0), kSigmaOrder) < 0);
    CHECK(compare_terms(part, term({1}, {1}, 1), term({1}, {1}, 1), 1) == 0);
}

TEST_CASE("similarity is shared-orthant membership") {
    CHECK(similar(mono({}, {0, -3}), mono({}, {2, -1})));
    CHECK_FALSE(similar(mono({}, {1}), mono({}, {-1})));
    CHECK(similar(mono({}, {5, -7}), mono({}, {0, 0})));
}

TEST_CASE("divisibility is orthant-restricted") {
    // alpha^2 | delta alpha^3
    CHECK(divides(mono({0}, {2}), mono({1}, {3})));
    CHECK_FALSE(divides(mono({0}, {1}), mono({0}, {-1})));
    CHECK_FALSE(divides(mono({2}, {0}), mono({1}, {0})));
}

TEST_CASE("lcm of similar terms") {
    // lcm(d1 a^2 y, d2 a y) = d1 d2 a^2 y
    auto l = lcm_similar(term({1, 0}, {2}), term({0, 1}, {1}));
    CHECK(l == term({1, 1}, {2}));
    auto u = term({1, 2}, {-3}, 1);
    CHECK(lcm_similar(u, u) == u);
    CHECK(lcm_similar(term({0}, {-1}), term({1}, {-2})) == term({1}, {-2}));
    CHECK_THROWS_AS(lcm_similar(term({0}, {1}), term({0}, {-1})), input_error);
    CHECK_THROWS_AS(lcm_similar(term({0}, {1}, 0), term({0}, {1}, 1)), input_error);
}

TEST_CASE("lcm minimality by enumeration") {
    // every common multiple within a small box is divisible by the lcm
    auto u = term({1, 0}, {2});
    auto v = term({0, 1}, {1});
    auto l = lcm_similar(u, v);
    CHECK(divides(u, l));
    CHECK(divides(v, l));
    for (int k1 = 0; k1 <= 3; ++k1)
        for (int k2 = 0; k2 <= 3; ++k2)
            for (int s = -4; s <= 4; ++s) {
                Term cand = term({k1, k2}, {s});
                if (divides(u, cand) && divides(v, cand)) CHECK(divides(l, cand));
            }
}

TEST_CASE("display syntax") {
    CHECK(to_string(mono({2, 1}, {-3})) == "d[2,1] s[-3]");
    CHECK(to_string(LambdaMonomial::identity(2, 1)) == "1");
    CHECK(to_string(mono({1}, {})) == "d[1]");
    CHECK(to_string(mono({}, {2})) == "s[2]");
    CHECK(to_string(term({0}, {1}), {"y"}) == "d[0] s[1] y");
    CHECK(to_string(Term{LambdaMonomial::identity(1, 1), 0}, {"y"}) == "y");
}

namespace {

LambdaMonomial random_mono(Rng& rng, int m, int n) {
    LambdaMonomial lam = LambdaMonomial::identity(m, n);
    for (int i = 0; i < m; ++i) lam.delta[i] = static_cast<int>(rng.range(0, 4));
    for (int j = 0; j < n; ++j) lam.sigma[j] = static_cast<int>(rng.range(-4, 4));
    return lam;
}

}  // namespace

TEST_CASE("property: each order is total, antisymmetric and transitive") {
    Rng rng(0x5eed0001);
    Partition part{{1, 2}, 2};
    std::vector<LambdaMonomial> sample;
    for (int i = 0; i < 40; ++i) sample.push_back(random_mono(rng, 3, 2));
    for (int order = 0; order <= 2; ++order) {
        for (const auto& a : sample)
            for (const auto& b : sample) {
                const int ab = compare(part, a, b, order);
                const int ba = compare(part, b, a, order);
                CHECK(ab == -ba);
                if (ab == 0) CHECK(a == b);
            }
        for (size_t i = 0; i < 12; ++i)
            for (size_t j = 0; j < 12; ++j)
                for (size_t k = 0; k < 12; ++k) {
                    const auto &a = sample[i], &b = sample[j], &c = sample[k];
                    if (compare(part, a, b, order) <= 0 && compare(part, b, c, order) <= 0)
                        CHECK(compare(part, a, c, order) <= 0);
                }
    }
}

TEST_CASE("property: divisibility implies similarity and respects every order") {
    Rng rng(0x5eed0002);
    Partition part{{2, 1}, 2};
    std::vector<LambdaMonomial> sample;
    for (int i = 0; i < 60; ++i) sample.push_back(random_mono(rng, 3, 2));
    for (const auto& a : sample) {
        CHECK(divides(a, a));
        for (const auto& b : sample) {
            if (!divides(a, b)) continue;
            CHECK(similar(a, b));
            for (int order = 0; order <= 2; ++order) CHECK(compare(part, a, b, order) <= 0);
            for (const auto& c : sample)
                if (divides(b, c)) CHECK(divides(a, c));
        }
    }
}

TEST_CASE("property: multiplication is commutative and associative") {
    Rng rng(0x5eed0003);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_mono(rng, 2, 2);
        auto b = random_mono(rng, 2, 2);
        auto c = random_mono(rng, 2, 2);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}
