#include "ddim/setdim.hpp"

#include "ddim/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ddim;
using namespace ddim::testutil;

TEST_CASE("minimal elements under the product order") {
    CHECK(minimal_elements({{1, 1}, {2, 1}, {0, 3}}) ==
          std::vector<std::vector<int>>{{0, 3}, {1, 1}});
    CHECK(minimal_elements({}).empty());
    CHECK(minimal_elements({{0, 0}, {5, 5}}) == std::vector<std::vector<int>>{{0, 0}});
}

TEST_CASE("omega_E closed forms") {
    Partition part{{2}, 0};
    CHECK(omega_E({{}, part}) == binomial_term(1, 0, 2, 2));
    CHECK(omega_E({{{0, 0}}, part}).is_zero());

    // E = {(2,1),(1,2)}: counted Card V_E(3) = 8 by enumeration first
    PointSetN e{{{2, 1}, {1, 2}}, part};
    CHECK(count_VE(e, {3}) == 8);
    NumPoly w = omega_E(e);
    NumPoly expect = binomial_term(1, 0, 2, 2) - binomial_term(1, 0, -1, 2).scaled(2) +
                     binomial_term(1, 0, -2, 2);
    CHECK(w == expect);
    CHECK(w.evaluate({3}) == 8);
}

TEST_CASE("rho embedding splits signs") {
    CHECK(rho_embed({1, 1}, 1, 1) == std::vector<int>{1, 1, 0});
    CHECK(rho_embed({0, -3}, 1, 1) == std::vector<int>{0, 0, 3});
    CHECK(rho_embed({2, 0}, 1, 1) == std::vector<int>{2, 0, 0});
    CHECK(rho_embed({1, 2, -1}, 1, 2) == std::vector<int>{1, 2, 0, 0, 1});
}

TEST_CASE("phi_A closed forms") {
    Partition part{{1}, 1};
    // empty set: (t1+1)(2 t2 + 1)
    NumPoly empty = phi_A({{}, part});
    NumPoly t1(2), t2(2);
    t1.add_term({1, 0}, 1);
    t2.add_term({0, 1}, 1);
    CHECK(empty == (t1 + NumPoly::constant(2, 1)) * (t2.scaled(2) + NumPoly::constant(2, 1)));

    CHECK(phi_A({{{0, 0}}, part}).is_zero());

    // A = {(1,1)}: W_A(2,2) enumerated first
    PointSetNZ a{{{1, 1}}, part};
    CHECK(count_WA(a, {2, 2}) == 11);
    NumPoly phi = phi_A(a);
    CHECK(phi == empty - t1 * t2);
    CHECK(phi.evaluate({2, 2}) == 11);
}

namespace {

PointSetN random_E(Rng& rng) {
    const int p = static_cast<int>(rng.range(1, 3));
    Partition part;
    part.num_autos = 0;
    int m = 0;
    for (int i = 0; i < p; ++i) {
        const int b = static_cast<int>(rng.range(1, 2));
        part.blocks.push_back(b);
        m += b;
    }
    while (m < p || m > 4) {
        // resample block sizes until 1 <= m <= 4
        m = 0;
        for (auto& b : part.blocks) {
            b = static_cast<int>(rng.range(1, 2));
            m += b;
        }
    }
    PointSetN e;
    e.part = part;
    const int count = static_cast<int>(rng.range(0, 4));
    for (int i = 0; i < count; ++i) {
        std::vector<int> pt(m);
        for (auto& v : pt) v = static_cast<int>(rng.range(0, 4));
        e.points.push_back(std::move(pt));
    }
    return e;
}

std::vector<long long> stability_corner_E(const PointSetN& e) {
    const int p = e.part.block_count();
    std::vector<long long> r(p, 0);
    for (const auto& pt : e.points)
        for (int j = 1; j <= p; ++j)
            for (int v = e.part.block_begin(j); v < e.part.block_end(j); ++v) r[j - 1] += pt[v];
    return r;
}

}  // namespace

TEST_CASE("property: omega_E equals Card V_E beyond the stability corner") {
    Rng rng(0x5eed0201);
    for (int trial = 0; trial < 25; ++trial) {
        PointSetN e = random_E(rng);
        NumPoly w = omega_E(e);
        auto base = stability_corner_E(e);
        const int p = e.part.block_count();
        std::vector<long long> r = base;
        // walk a width-2 grid above the corner
        std::vector<int> off(p, 0);
        while (true) {
            for (int j = 0; j < p; ++j) r[j] = base[j] + off[j];
            CHECK(w.evaluate(r) == count_VE(e, r));
            int i = p - 1;
            while (i >= 0 && off[i] == 1) off[i--] = 0;
            if (i < 0) break;
            ++off[i];
        }
        // reduction to minimal elements changes nothing
        PointSetN reduced{minimal_elements(e.points), e.part};
        CHECK(omega_E(reduced) == w);
        // degree caps
        auto degs = w.degrees();
        for (int j = 0; j < p; ++j) CHECK(degs[j] <= e.part.blocks[j]);
        CHECK((w.total_degree() == e.part.derivation_count()) == e.points.empty());
        // canonical coefficients of counting polynomials are integers
        for (const auto& [idx, c] : canonical_coeffs(w)) CHECK(is_integer(c));
    }
}

TEST_CASE("property: phi_A equals Card W_A beyond the stability corner") {
    Rng rng(0x5eed0202);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = static_cast<int>(rng.range(1, 2));
        const int n = static_cast<int>(rng.range(1, 2));
        Partition part;
        part.blocks.assign(m, 1);
        part.num_autos = n;
        PointSetNZ a;
        a.part = part;
        const int count = static_cast<int>(rng.range(0, 3));
        for (int i = 0; i < count; ++i) {
            std::vector<int> pt(m + n);
            for (int v = 0; v < m; ++v) pt[v] = static_cast<int>(rng.range(0, 3));
            for (int v = m; v < m + n; ++v) pt[v] = static_cast<int>(rng.range(-3, 3));
            a.points.push_back(std::move(pt));
        }
        NumPoly phi = phi_A(a);
        std::vector<long long> base(m + 1, 0);
        for (const auto& pt : a.points) {
            for (int v = 0; v < m; ++v) base[v] += pt[v];
            for (int v = m; v < m + n; ++v) base[m] += std::abs(pt[v]);
        }
        base[m] += n;
        for (int d0 = 0; d0 <= 1; ++d0) {
            std::vector<long long> r = base;
            for (auto& v : r) v += d0;
            CHECK(phi.evaluate(r) == count_WA(a, r));
        }
        auto degs = phi.degrees();
        for (int j = 0; j < m; ++j) CHECK(degs[j] <= 1);
        CHECK(degs[m] <= n);
        for (const auto& [idx, c] : canonical_coeffs(phi)) CHECK(is_integer(c));
    }
}

TEST_CASE("phi_A of the empty set carries cap coefficient 2^n") {
    for (int n = 1; n <= 2; ++n) {
        Partition part{{1}, n};
        NumPoly phi = phi_A({{}, part});
        BinomialForm form = canonical_coeffs(phi);
        Rational expected = 1;
        for (int i = 0; i < n; ++i) expected *= 2;
        CHECK(form.at({1, n}) == expected);
    }
}
