#include "doctest.h"

#include "idg/derivation.hpp"
#include "idg/parser.hpp"
#include "test_helpers.hpp"

using namespace idg;
using idg_test::Rng;

TEST_CASE("named higher derivatives") {
    FiniteField K3(3);
    IterativeDerivation d3(K3, 't', 16);
    // C(5,2) = 10 = 1 mod 3
    CHECK(d3.derive(parse_expr("t^5", K3, 't'), 2) == parse_expr("t^3", K3, 't'));
    // identity at order zero
    RatFunc f = parse_expr("(t^2+1)/(t+2)", K3, 't');
    CHECK(d3.derive(f, 0) == f);
    // d^(1)(t^p) = 0
    CHECK(d3.derive(parse_expr("t^3", K3, 't'), 1).is_zero());

    FiniteField K5(5);
    IterativeDerivation d5(K5, 't', 16);
    CHECK(d5.derive(parse_expr("1/t", K5, 't'), 1) == parse_expr("4/t^2", K5, 't'));
}

TEST_CASE("geometric series oracle for 1/t") {
    // theta(1/t) = 1/(t+T) = sum (-1)^k T^k / t^(k+1); freeze the first orders
    FiniteField K5(5);
    IterativeDerivation d(K5, 't', 8);
    RatFunc inv_t = parse_expr("1/t", K5, 't');
    for (std::size_t k = 0; k <= 8; ++k) {
        RatFunc expected = parse_expr(k % 2 == 0 ? "1" : "4", K5, 't') /
                           RatFunc::variable(K5, 't').pow(static_cast<std::int64_t>(k + 1));
        CHECK(d.derive(inv_t, k) == expected);
    }
}

TEST_CASE("taylor expansion named values") {
    FiniteField K3(3);
    IterativeDerivation d(K3, 't', 8);
    TruncSeries th = d.taylor(RatFunc::variable(K3, 't'), 4);
    CHECK(th.coeff(0) == parse_expr("t", K3, 't'));
    CHECK(th.coeff(1).is_one());
    for (std::size_t k = 2; k <= 4; ++k) CHECK(th.coeff(k).is_zero());

    TruncSeries c = d.taylor(parse_expr("2", K3, 't'), 4);
    CHECK(c.coeff(0) == parse_expr("2", K3, 't'));
    for (std::size_t k = 1; k <= 4; ++k) CHECK(c.coeff(k).is_zero());

    TruncSeries t2 = d.taylor(parse_expr("t^2", K3, 't'), 4);
    CHECK(t2.coeff(0) == parse_expr("t^2", K3, 't'));
    CHECK(t2.coeff(1) == parse_expr("2*t", K3, 't'));
    CHECK(t2.coeff(2).is_one());
    CHECK(t2.coeff(3).is_zero());
}

TEST_CASE("taylor multiplicativity on random samples") {
    Rng rng(101);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        FiniteField K(p);
        IterativeDerivation d(K, 't', 10);
        for (int iter = 0; iter < 10; ++iter) {
            RatFunc f = idg_test::random_ratfunc(rng, K, 't', 2, 2);
            RatFunc g = idg_test::random_ratfunc(rng, K, 't', 2, 2);
            CHECK(d.taylor(f * g, 10) == d.taylor(f, 10) * d.taylor(g, 10));
        }
    }
}

TEST_CASE("truncation bound is enforced") {
    FiniteField K3(3);
    IterativeDerivation d(K3, 't', 4);
    CHECK_THROWS_AS(d.derive(parse_expr("t", K3, 't'), 5), TruncationError);
}

TEST_CASE("subfield level named examples") {
    FiniteField K3(3);
    IterativeDerivation d(K3, 't', 32);
    auto r = d.subfield_level(parse_expr("t^3", K3, 't'));
    CHECK_FALSE(r.all_levels);
    CHECK(r.level == 1);

    auto c = d.subfield_level(parse_expr("2", K3, 't'));
    CHECK(c.all_levels);
    CHECK_FALSE(c.zero_input);

    auto z = d.subfield_level(RatFunc::zero(K3, 't'));
    CHECK(z.all_levels);
    CHECK(z.zero_input);

    auto t = d.subfield_level(parse_expr("t", K3, 't'));
    CHECK_FALSE(t.all_levels);
    CHECK(t.level == 0);
}

TEST_CASE("filtration characterization via substitution oracle") {
    // level(g(t^(p^l))) >= l, and the p^l-th derivative of t^(p^l) is 1
    Rng rng(55);
    for (std::uint64_t p : {2ULL, 3ULL}) {
        FiniteField K(p);
        IterativeDerivation d(K, 't', 32);
        for (int l = 0; l <= 2; ++l) {
            std::int64_t pl = 1;
            for (int i = 0; i < l; ++i) pl *= static_cast<std::int64_t>(p);
            RatFunc tp = RatFunc::variable(K, 't').pow(pl);
            for (int iter = 0; iter < 8; ++iter) {
                RatFunc g = idg_test::random_ratfunc(rng, K, 't', 2, 2);
                RatFunc comp = g.substitute(tp);
                if (comp.is_zero() || comp.is_constant()) continue;
                auto lev = d.subfield_level(comp);
                CHECK(lev.level >= l);
            }
            // strictness of the filtration
            CHECK(d.derive(tp, static_cast<std::size_t>(pl)).is_one());
        }
    }
}

TEST_CASE("level-l members rewrite as functions of t^(p^l)") {
    // converse direction: a reduced fraction at level >= l has every exponent
    // divisible by p^l, so dividing exponents reconstructs the inner function
    Rng rng(56);
    FiniteField K3(3);
    IterativeDerivation d(K3, 't', 32);
    auto rewrite = [&](const RatFunc& f, std::int64_t q) {
        auto squeeze = [&](const Poly& p) {
            std::vector<FieldElem> out;
            for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
                if (p.coeffs()[i].is_zero()) continue;
                REQUIRE(i % static_cast<std::size_t>(q) == 0);
                std::size_t k = i / static_cast<std::size_t>(q);
                if (out.size() <= k) out.resize(k + 1, K3.zero());
                out[k] = p.coeffs()[i];
            }
            return Poly(K3, std::move(out));
        };
        return RatFunc(squeeze(f.num()), squeeze(f.den()), 't');
    };
    int done = 0;
    while (done < 20) {
        RatFunc g = idg_test::random_ratfunc(rng, K3, 't', 2, 2);
        if (g.is_zero() || g.is_constant()) continue;
        int l = 1 + static_cast<int>(rng.below(2));
        std::int64_t q = l == 1 ? 3 : 9;
        RatFunc f = g.substitute(RatFunc::variable(K3, 't').pow(q));
        auto lev = d.subfield_level(f);
        REQUIRE(lev.level >= l);
        RatFunc inner = rewrite(f, q);
        CHECK(inner.substitute(RatFunc::variable(K3, 't').pow(q)) == f);
        ++done;
    }
}

TEST_CASE("derivation axioms hold on random samples") {
    Rng rng(2024);
    FiniteField K3(3);
    IterativeDerivation d(K3, 't', 9);
    std::vector<RatFunc> samples;
    for (int i = 0; i < 20; ++i) samples.push_back(idg_test::random_ratfunc(rng, K3, 't', 2, 2));
    AxiomReport rep = d.verify_axioms(samples, 9);
    CHECK(rep.ok);
    CHECK(rep.additivity_checks > 0);
    CHECK(rep.leibniz_checks > 0);
    CHECK(rep.composition_checks > 0);
    CHECK(rep.pcurvature_checks > 0);
}

TEST_CASE("p-fold composition and the composition law, directly") {
    FiniteField K3(3);
    IterativeDerivation d(K3, 't', 9);
    RatFunc f = parse_expr("t^2+t", K3, 't');
    RatFunc once = d.derive(f, 1);
    RatFunc twice = d.derive(once, 1);
    RatFunc thrice = d.derive(twice, 1);
    CHECK(thrice.is_zero());

    FiniteField K2(2);
    IterativeDerivation d2(K2, 't', 4);
    RatFunc g = parse_expr("t^2", K2, 't');
    RatFunc lhs = d2.derive(d2.derive(g, 1), 1);
    // C(2,1) = 0 mod 2
    CHECK(lhs.is_zero());
    CHECK(d2.derive(g, 2).is_one());
}
