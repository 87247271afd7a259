#include "ddim/dmod.hpp"

#include "ddim/oracle.hpp"
#include "test_util.hpp"

#include <doctest.h>

using namespace ddim;
using namespace ddim::testutil;

namespace {

Ring module_ring(std::vector<int> blocks, int n, int gens = 1) {
    Ring ring;
    ring.part.blocks = std::move(blocks);
    ring.part.num_autos = n;
    for (int i = 0; i < gens; ++i) ring.indets.push_back("e" + std::to_string(i + 1));
    return ring;
}

// g = (d1^{a+c} d2^b + d2^{a+b} d3^c + d1^a d3^{b+c}) e
LinearPoly kernel_generator(int a, int b, int c) {
    return poly_of({{1, {a + c, b, 0}, {}}, {1, {0, a + b, c}, {}}, {1, {a, 0, b + c}, {}}});
}

}  // namespace

TEST_CASE("rho map") {
    Ring ring = module_ring({1, 1, 1}, 0);
    LinearPoly g = kernel_generator(1, 1, 1);
    GammaTerm rho = rho_map(ring, g);
    CHECK(rho.base == term({2, 1, 0}, {}));
    CHECK(rho.z == std::vector<int>{0, 1, 2});
    CHECK(to_string(ring, rho) == "z2*z3^2*d[2,1,0] e1");

    LinearPoly single = poly_of({{1, {1, 0, 2}, {}}});
    GammaTerm rho2 = rho_map(ring, single);
    CHECK(rho2.base == term({1, 0, 2}, {}));
    CHECK(rho2.z == std::vector<int>{0, 0, 0});

    Ring one = module_ring({1}, 1);
    LinearPoly rel = poly_of({{1, {0}, {1}}, {-1, {1}, {0}}});
    GammaTerm rho3 = rho_map(one, rel);
    CHECK(rho3.base == term({0}, {1}));
    CHECK(rho3.z == std::vector<int>{1});

    CHECK_THROWS_AS(rho_map(ring, LinearPoly{}), input_error);
}

TEST_CASE("gamma divisibility") {
    GammaTerm a{{0, 1}, term({1}, {}, 0)};
    GammaTerm b{{0, 1}, term({2}, {}, 0)};
    b.z = {1, 1};
    CHECK(gamma_divides(a, b));
    GammaTerm c{{2, 0}, term({1}, {}, 0)};
    CHECK_FALSE(gamma_divides(c, b));
    GammaTerm d{{0, 0}, term({1}, {}, 1)};
    CHECK_FALSE(gamma_divides(d, b));
}

TEST_CASE("module reduction") {
    Ring ring = module_ring({1, 1, 1}, 0);
    LinearPoly g = kernel_generator(1, 1, 1);

    // the head eliminates in one step
    LinearPoly f = poly_of({{1, {2, 1, 0}, {}}});
    auto red = module_reduce(ring, f, {g});
    CHECK(red.normal_form == poly_of({{-1, {0, 2, 1}, {}}, {-1, {1, 0, 2}, {}}}));
    // f - normal_form = 1 * g
    CHECK(f - red.normal_form == g);
    LinearPoly recombined;
    recombined = apply(ring, red.multipliers[0], g);
    CHECK(f - red.normal_form == recombined);

    // no leader multiple: untouched
    LinearPoly e = poly_of({{1, {0, 0, 0}, {}}});
    CHECK(module_reduce(ring, e, {g}).normal_form == e);

    // self-reduction
    CHECK(module_reduce(ring, g, {g}).normal_form.is_zero());
}

TEST_CASE("module certificates expand exactly") {
    Ring ring = module_ring({1, 1, 1}, 0);
    LinearPoly g = kernel_generator(1, 2, 3);
    Rng rng(0x5eed0401);
    for (int trial = 0; trial < 10; ++trial) {
        LinearPoly f;
        for (int t = 0; t < 3; ++t)
            f.add_term(term({static_cast<int>(rng.range(0, 5)), static_cast<int>(rng.range(0, 4)),
                             static_cast<int>(rng.range(0, 5))},
                            {}),
                       Coefficient(Rational(rng.range(-4, 4))));
        auto red = module_reduce(ring, f, {g});
        CHECK(f - red.normal_form == apply(ring, red.multipliers[0], g));
    }
}

TEST_CASE("Groebner verification") {
    Ring ring = module_ring({1, 1, 1}, 0);
    LinearPoly g = kernel_generator(1, 1, 1);
    ModulePresentation pres{ring, {g}};
    CHECK(is_groebner(ring, {g}, pres));

    // the Example-5.11 module analogue needs both orthant images
    Ring one = module_ring({1}, 1);
    LinearPoly rel = poly_of({{1, {0}, {1}}, {-1, {1}, {0}}});
    ModulePresentation pres1{one, {rel}};
    auto basis = complete_module_basis(pres1);
    REQUIRE(basis.size() == 2);
    CHECK(is_groebner(one, basis, pres1));
    CHECK_FALSE(is_groebner(one, {rel}, pres1));

    // dropping an overlap remainder is detected
    Ring cross = module_ring({1, 1}, 1);
    LinearPoly c1 = poly_of({{1, {1, 0}, {1}}, {-1, {0, 2}, {0}}});
    LinearPoly c2 = poly_of({{1, {0, 1}, {1}}, {-1, {2, 0}, {0}}});
    ModulePresentation pres2{cross, {c1, c2}};
    CHECK_FALSE(is_groebner(cross, {c1, c2}, pres2));
    auto completed = complete_module_basis(pres2);
    CHECK(is_groebner(cross, completed, pres2));

    Ring sym = module_ring({1}, 1);
    sym.model = CoefficientModel::formal_symbols;
    CHECK_THROWS_AS(is_groebner(sym, {rel}, ModulePresentation{sym, {rel}}), input_error);
}

TEST_CASE("kahler module of a linear system") {
    // Example-6.8 relation
    Ring sys3 = make_ring({1, 1, 1}, 0);
    LinearPoly g = kernel_generator(2, 1, 1);
    ModulePresentation pres = kahler_module_of_linear_system(sys3, {g});
    REQUIRE(pres.relations.size() == 1);
    CHECK(pres.relations[0].terms == g.terms);
    CHECK(pres.ring.indets == std::vector<std::string>{"e1"});

    // constants drop
    Ring sys1 = make_ring({1}, 1, 1, CoefficientModel::formal_symbols);
    LinearPoly a = poly_of({{1, {0}, {1}}, {-1, {1}, {0}}});
    a.constant = -Coefficient::symbol("a", 1, 1);
    ModulePresentation pres1 = kahler_module_of_linear_system(sys1, {a});
    REQUIRE(pres1.relations.size() == 1);
    CHECK(pres1.relations[0].constant.is_zero());
    CHECK(pres1.relations[0].terms == a.terms);

    // uncoupled equations touch separate generators
    Ring sys2 = make_ring({1}, 0, 2);
    LinearPoly q1 = poly_of({{1, {1}, {}, 0}, {-1, {0}, {}, 0}});
    LinearPoly q2 = poly_of({{1, {2}, {}, 1}});
    ModulePresentation pres2 = kahler_module_of_linear_system(sys2, {q1, q2});
    REQUIRE(pres2.relations.size() == 2);
    CHECK(pres2.relations[0].terms.begin()->first.indet == 0);
    CHECK(pres2.relations[1].terms.begin()->first.indet == 1);
}

TEST_CASE("module dimension polynomials reproduce the closed forms") {
    struct Triple {
        int a, b, c;
    };
    for (Triple t : {Triple{1, 1, 1}, Triple{1, 2, 3}, Triple{2, 1, 1}}) {
        Ring ring = module_ring({1, 1, 1}, 0);
        LinearPoly g = kernel_generator(t.a, t.b, t.c);
        ModulePresentation pres{ring, {g}};
        auto basis = complete_module_basis(pres);
        REQUIRE(is_groebner(ring, basis, pres));
        DimensionReport rep = gb_dimension_polynomial(ring, basis);

        // degree-2 part (b+c) t1 t2 + (a+b) t1 t3 + (a+c) t2 t3
        NumPoly expected_top(4);
        expected_top.add_term({1, 1, 0, 0}, t.b + t.c);
        expected_top.add_term({1, 0, 1, 0}, t.a + t.b);
        expected_top.add_term({0, 1, 1, 0}, t.a + t.c);
        NumPoly top(4);
        for (const auto& [idx, c] : rep.phi.coeffs())
            if (idx[0] + idx[1] + idx[2] + idx[3] == 2) top.add_term(idx, c);
        CHECK(top == expected_top);

        // oracle interpolation over the stability corner
        LeaderTable table = make_leader_table(ring, basis);
        auto stab = stability_offsets(ring, table);
        std::map<std::vector<long long>, Rational> values;
        for (long long r1 = stab[0]; r1 <= stab[0] + 1; ++r1)
            for (long long r2 = stab[1]; r2 <= stab[1] + 1; ++r2)
                for (long long r3 = stab[2]; r3 <= stab[2] + 1; ++r3)
                    values[{r1, r2, r3, 0}] =
                        count_reduced_terms(ring, table, 1, {r1, r2, r3, 0});
        CHECK(interpolate_numerical(values, {1, 1, 1, 0},
                                    {stab[0], stab[1], stab[2], 0}) == rep.phi);

        // p = 1 collapse: the Kolchin polynomial C(t+3,3) - C(t+3-a-b-c,3)
        Ring collapsed = module_ring({3}, 0);
        auto basis1 = complete_module_basis(ModulePresentation{collapsed, {g}});
        DimensionReport rep1 = gb_dimension_polynomial(collapsed, basis1);
        NumPoly kolchin =
            binomial_term(2, 0, 3, 3) - binomial_term(2, 0, 3 - (t.a + t.b + t.c), 3);
        CHECK(rep1.phi == kolchin);
    }
}

TEST_CASE("module route and charset route agree") {
    // Example 5.11
    {
        Ring sys = make_ring({1}, 1, 1, CoefficientModel::formal_symbols);
        LinearPoly a = poly_of({{1, {0}, {1}}, {-1, {1}, {0}}});
        a.constant = -Coefficient::symbol("a", 1, 1);
        DimensionReport charset_route = dimension_polynomial(sys, {a});
        ModulePresentation pres = kahler_module_of_linear_system(sys, {a});
        pres.ring.model = CoefficientModel::rational_constants;
        auto basis = complete_module_basis(pres);
        DimensionReport module_route = gb_dimension_polynomial(pres.ring, basis);
        CHECK(charset_route.phi == module_route.phi);
    }
    // Example 5.12
    {
        Ring sys = make_ring({1, 1}, 1, 1, CoefficientModel::formal_symbols);
        LinearPoly g = poly_of({{1, {0, 0}, {1}}, {1, {2, 0}, {0}}, {1, {0, 2}, {0}}});
        g.constant = Coefficient::symbol("a", 2, 1);
        DimensionReport charset_route = dimension_polynomial(sys, {g});
        ModulePresentation pres = kahler_module_of_linear_system(sys, {g});
        pres.ring.model = CoefficientModel::rational_constants;
        auto basis = complete_module_basis(pres);
        DimensionReport module_route = gb_dimension_polynomial(pres.ring, basis);
        CHECK(charset_route.phi == module_route.phi);
    }
}

TEST_CASE("rho of a shift multiple moves the base and keeps z") {
    Ring ring = module_ring({1, 1, 1}, 1);
    Rng rng(0x5eed0402);
    for (int trial = 0; trial < 20; ++trial) {
        LinearPoly f;
        const int terms = static_cast<int>(rng.range(1, 3));
        for (int t = 0; t < terms; ++t)
            f.add_term(term({static_cast<int>(rng.range(0, 3)), static_cast<int>(rng.range(0, 3)),
                             static_cast<int>(rng.range(0, 3))},
                            {static_cast<int>(rng.range(0, 3))}),
                       Coefficient(Rational(rng.range(1, 5))));
        LambdaMonomial lam = mono({static_cast<int>(rng.range(0, 2)),
                                   static_cast<int>(rng.range(0, 2)),
                                   static_cast<int>(rng.range(0, 2))},
                                  {static_cast<int>(rng.range(0, 2))});
        GammaTerm before = rho_map(ring, f);
        GammaTerm after = rho_map(ring, apply(ring, lam, f));
        CHECK(after.base == multiply(lam, before.base));
        CHECK(after.z == before.z);
    }
}
