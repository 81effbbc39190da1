#include "doctest.h"

#include "idg/equivariance.hpp"
#include "idg/parser.hpp"
#include "test_helpers.hpp"

using namespace idg;

namespace {

struct TorusScenario {
    DiffField L;
    GaloisSection chi;
    EquivariantSystem es;
    std::vector<Matrix> Z;

    static TorusScenario make() {
        FiniteField K3(3);
        DiffField L = DiffField::extension(CyclicExtension::kummer(K3, 2, 16));
        Matrix w = Matrix::from_rows({{parse_expr("0", K3, 's'), parse_expr("1", K3, 's')},
                                      {parse_expr("1", K3, 's'), parse_expr("0", K3, 's')}});
        GaloisSection chi(L, w, GroupShape::DiagonalTorus);
        RatFunc d = parse_expr("(1+s)/(1-s)", K3, 's');
        Matrix D0 = Matrix::from_rows({{d, RatFunc::zero(K3, 's')},
                                       {RatFunc::zero(K3, 's'), d.inverse()}});
        Matrix D1 = Matrix::identity(2, K3, 's');
        ProjectiveSystem sys{L, {D0, D1}};
        EquivariantSystem es{chi, sys};
        auto zmat = [&](int power) {
            RatFunc sp = RatFunc::variable(K3, 's').pow(power);
            return Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr("1", K3, 's')},
                                      {sp, -sp}});
        };
        std::vector<Matrix> Z = {zmat(1), zmat(3), zmat(9)};
        return TorusScenario{L, chi, es, Z};
    }
};

}   // namespace

TEST_CASE("equivariance of the torus scenario") {
    TorusScenario sc = TorusScenario::make();
    EquivarianceReport rep = check_equivariant(sc.es);
    CHECK(rep.ok);

    // the d = s perturbation fails with a witness
    FiniteField K3(3);
    Matrix bad = Matrix::from_rows({{parse_expr("s", K3, 's'), parse_expr("0", K3, 's')},
                                    {parse_expr("0", K3, 's'), parse_expr("1/s", K3, 's')}});
    EquivariantSystem es2{sc.chi, ProjectiveSystem{sc.L, {bad}}};
    EquivarianceReport rep2 = check_equivariant(es2);
    CHECK_FALSE(rep2.ok);
    CHECK(rep2.failed_level == 0);
    CHECK_FALSE(rep2.failed_entry.empty());

    // identity matrices are equivariant for any section
    EquivariantSystem es3{sc.chi, ProjectiveSystem{sc.L, {Matrix::identity(2, K3, 's')}}};
    CHECK(check_equivariant(es3).ok);
}

TEST_CASE("star action basics") {
    TorusScenario sc = TorusScenario::make();
    FiniteField K3(3);
    Matrix id = Matrix::identity(2, K3, 's');
    CHECK(star_action(sc.chi, 1, id) == id);

    // with the trivial section, base-field matrices are fixed
    GaloisSection trivial(sc.L, id, GroupShape::FullGL);
    Matrix base = Matrix::from_rows({{parse_expr("s^2", K3, 's'), parse_expr("1", K3, 's')},
                                     {parse_expr("0", K3, 's'), parse_expr("s^2+1", K3, 's')}});
    CHECK(star_action(trivial, 1, base) == base);

    // chi(eta) = diag(1,-1) fixes the unipotent coordinate s
    Matrix diag = Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr("0", K3, 's')},
                                     {parse_expr("0", K3, 's'), parse_expr("-1", K3, 's')}});
    GaloisSection chi2(sc.L, diag, GroupShape::UpperUnitriangular);
    Matrix u = Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr("s", K3, 's')},
                                  {parse_expr("0", K3, 's'), parse_expr("1", K3, 's')}});
    CHECK(star_action(chi2, 1, u) == u);

    // the star action is a group action: composing powers matches
    Matrix g = Matrix::from_rows({{parse_expr("s", K3, 's'), parse_expr("1", K3, 's')},
                                  {parse_expr("1", K3, 's'), parse_expr("s", K3, 's')}});
    CHECK(star_action(sc.chi, 1, star_action(sc.chi, 1, g)) == star_action(sc.chi, 2, g));
    CHECK(star_action(sc.chi, 0, g) == g);
}

TEST_CASE("form membership of the unipotent coordinate") {
    TorusScenario sc = TorusScenario::make();
    FiniteField K3(3);
    Matrix diag = Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr("0", K3, 's')},
                                     {parse_expr("0", K3, 's'), parse_expr("-1", K3, 's')}});
    GaloisSection chi(sc.L, diag, GroupShape::UpperUnitriangular);
    auto uni = [&](const std::string& u) {
        return Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr(u, K3, 's')},
                                  {parse_expr("0", K3, 's'), parse_expr("1", K3, 's')}});
    };
    CHECK(form_membership(chi, uni("s"), 0));
    CHECK_FALSE(form_membership(chi, uni("1"), 0));
    CHECK(form_membership(chi, uni("0"), 0));
    // level matters: s^3 sits at level 1, s does not
    CHECK(form_membership(chi, uni("s^3"), 1));
    CHECK_FALSE(form_membership(chi, uni("s"), 1));
    // the fixed set is closed under the group operation
    idg_test::Rng rng(17);
    for (int iter = 0; iter < 10; ++iter) {
        RatFunc f = idg_test::random_ratfunc(rng, K3, 't', 1, 1);
        RatFunc g = idg_test::random_ratfunc(rng, K3, 't', 1, 1);
        RatFunc uf = sc.L.lift(f) * RatFunc::variable(K3, 's');
        RatFunc ug = sc.L.lift(g) * RatFunc::variable(K3, 's');
        Matrix a = Matrix::from_rows({{parse_expr("1", K3, 's'), uf},
                                      {parse_expr("0", K3, 's'), parse_expr("1", K3, 's')}});
        Matrix b = Matrix::from_rows({{parse_expr("1", K3, 's'), ug},
                                      {parse_expr("0", K3, 's'), parse_expr("1", K3, 's')}});
        if (form_membership(chi, a, 0) && form_membership(chi, b, 0))
            CHECK(form_membership(chi, a * b, 0));
    }
}

TEST_CASE("hilbert 90 solutions satisfy their cocycle equation") {
    TorusScenario sc = TorusScenario::make();
    FiniteField K3(3);
    SUBCASE("trivial section gives an invariant matrix") {
        GaloisSection trivial(sc.L, Matrix::identity(2, K3, 's'), GroupShape::FullGL);
        Matrix Z = hilbert90_solve(trivial, 7);
        CHECK(Z.invertible());
        CHECK(Z.galois(sc.L, 1) == Z);
    }
    SUBCASE("swap section over several seeds and levels") {
        for (std::uint64_t seed : {1ULL, 2ULL, 42ULL, 99ULL}) {
            Matrix Z = hilbert90_solve(sc.chi, seed);
            CHECK(Z.invertible());
            CHECK(Z.galois(sc.L, 1) == Z * sc.chi.at(1));
        }
        Matrix Z1 = hilbert90_solve(sc.chi, 5, 1);
        CHECK(Z1.level_member(sc.L, 1));
        CHECK(Z1.galois(sc.L, 1) == Z1 * sc.chi.at(1));
    }
    SUBCASE("the example cocycle matrix is a valid output shape") {
        Matrix Z = sc.Z[0];
        CHECK(Z.galois(sc.L, 1) == Z * sc.chi.at(1));
        CHECK(Z.det() == parse_expr("s", K3, 's'));   // -2s = s over GF(3)
    }
}

TEST_CASE("compose solution descends the torus system to the base field") {
    TorusScenario sc = TorusScenario::make();
    FiniteField K3(3);
    ProjectiveSystem out = compose_solution(sc.Z, sc.es);
    REQUIRE(out.D.size() == 2);
    CHECK_FALSE(out.ctx.is_extension());
    CHECK(check_projective_system(out).ok);
    for (std::size_t l = 0; l < out.D.size(); ++l)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(out.D[l].at(i, j).var() == 't');

    SUBCASE("trivial data composes to the original system") {
        DiffField L = sc.L;
        Matrix id = Matrix::identity(1, K3, 's');
        GaloisSection trivial(L, id, GroupShape::FullGL);
        RatFunc t_in_s = L.lift(parse_expr("t", K3, 't'));
        ProjectiveSystem sys{L, {Matrix::from_rows({{t_in_s}})}};
        EquivariantSystem es{trivial, sys};
        std::vector<Matrix> Z = {id, id};
        ProjectiveSystem out2 = compose_solution(Z, es);
        CHECK(out2.D[0].at(0, 0) == parse_expr("t", K3, 't'));
    }
    SUBCASE("non-equivariant input is rejected before composition") {
        Matrix bad = Matrix::from_rows({{parse_expr("s", K3, 's'), parse_expr("0", K3, 's')},
                                        {parse_expr("0", K3, 's'), parse_expr("1/s", K3, 's')}});
        EquivariantSystem es{sc.chi, ProjectiveSystem{sc.L, {bad, sc.es.sys.D[1]}}};
        CHECK_THROWS_WITH_AS(compose_solution(sc.Z, es), doctest::Contains("not equivariant"),
                             ArithmeticError);
    }
    SUBCASE("broken cocycle data is rejected") {
        std::vector<Matrix> Z = sc.Z;
        Z[1] = Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr("0", K3, 's')},
                                  {parse_expr("0", K3, 's'), parse_expr("1", K3, 's')}});
        CHECK_THROWS_WITH_AS(compose_solution(Z, sc.es), doctest::Contains("cocycle"),
                             ArithmeticError);
    }
}

TEST_CASE("hat transform on the scalar torus scenario") {
    FiniteField K3(3);
    DiffField L = DiffField::extension(CyclicExtension::kummer(K3, 2, 16));
    Matrix minus1 = Matrix::from_rows({{parse_expr("-1", K3, 's')}});
    GaloisSection chi(L, minus1, GroupShape::FullGL);
    auto spow = [&](int e) {
        return Matrix::from_rows({{RatFunc::variable(K3, 's').pow(e)}});
    };
    // Y_l = s^(3^l), D_l = Y_l Y_(l+1)^(-1)
    std::vector<Matrix> Y = {spow(1), spow(3), spow(9)};
    std::vector<Matrix> D = {spow(1) * spow(3).inverse(), spow(3) * spow(9).inverse()};
    ProjectiveSystem sys{L, D};
    REQUIRE(check_projective_system(sys).ok);
    EquivariantSystem es{chi, sys};
    REQUIRE(check_equivariant(es).ok);

    SUBCASE("identity data passes through") {
        Matrix id = Matrix::identity(1, K3, 's');
        std::vector<Matrix> Yid = {id, id, id};
        ProjectiveSystem trivial_sys{L, {id, id}};
        EquivariantSystem trivial_es{chi, trivial_sys};
        std::vector<Matrix> U = {spow(2), spow(6)};
        auto hat = hat_transform(Yid, U, trivial_es);
        CHECK(hat[0] == U[0]);
        CHECK(hat[1] == U[1]);
    }
    SUBCASE("identity input recovers the transition matrices") {
        Matrix id = Matrix::identity(1, K3, 's');
        std::vector<Matrix> U = {id, id};
        auto hat = hat_transform(Y, U, es);
        CHECK(hat[0] == D[0]);
        CHECK(hat[1] == D[1]);
    }
    SUBCASE("conjugated base data lands back in the form at each level") {
        // U_l = Y_l^(-1) V_l Y_(l+1) with V_l = t^(3^l) in the base field
        std::vector<Matrix> U;
        for (int l = 0; l < 2; ++l) {
            Matrix V = spow(2 * (l == 0 ? 1 : 3));
            U.push_back(Y[l].inverse() * V * Y[l + 1]);
        }
        auto hat = hat_transform(Y, U, es);
        for (std::size_t l = 0; l < hat.size(); ++l)
            CHECK(form_membership(chi, hat[l], static_cast<int>(l)));
    }
    SUBCASE("a broken recurrence is rejected") {
        std::vector<Matrix> Ybad = {spow(1), spow(3), spow(3)};
        std::vector<Matrix> U = {spow(2), spow(6)};
        CHECK_THROWS_WITH_AS(hat_transform(Ybad, U, es), doctest::Contains("recurrence"),
                             ArithmeticError);
    }
}

TEST_CASE("conjugate membership matches direct equivariance on the u-coordinate") {
    FiniteField K3(3);
    DiffField L = DiffField::extension(CyclicExtension::kummer(K3, 2, 16));
    Matrix diag = Matrix::from_rows({{parse_expr("1", K3, 's'), parse_expr("0", K3, 's')},
                                     {parse_expr("0", K3, 's'), parse_expr("-1", K3, 's')}});
    GaloisSection chi(L, diag, GroupShape::UpperUnitriangular);
    auto uni = [&](const RatFunc& u) {
        return Matrix::from_rows({{RatFunc::one(K3, 's'), u},
                                  {RatFunc::zero(K3, 's'), RatFunc::one(K3, 's')}});
    };
    Matrix id = Matrix::identity(2, K3, 's');
    RatFunc s = RatFunc::variable(K3, 's');

    SUBCASE("identity conjugator reduces to form membership") {
        CHECK(conjugate_membership({uni(s)}, {id}, chi));
        CHECK_FALSE(conjugate_membership({uni(RatFunc::one(K3, 's'))}, {id}, chi));
        CHECK(conjugate_membership({id}, {id}, chi));
    }
    SUBCASE("nontrivial conjugator agrees with direct equivariance both ways") {
        RatFunc t_lift = L.lift(parse_expr("t", K3, 't'));
        Matrix Y0 = Matrix::from_rows({{t_lift, RatFunc::zero(K3, 's')},
                                       {RatFunc::zero(K3, 's'), RatFunc::one(K3, 's')}});
        std::vector<RatFunc> candidates = {s, s * t_lift, RatFunc::one(K3, 's'),
                                           s + RatFunc::one(K3, 's'), RatFunc::zero(K3, 's')};
        for (const RatFunc& u : candidates) {
            Matrix U = uni(u);
            bool direct = direct_equivariance(chi, U);
            bool conj = conjugate_membership({U}, {Y0}, chi);
            CHECK(direct == conj);
        }
    }
}

TEST_CASE("h-effectivity of the torus scenario") {
    TorusScenario sc = TorusScenario::make();
    FiniteField K3(3);
    Matrix id = Matrix::identity(2, K3, 's');
    HEffectiveData data;
    data.Z = sc.Z;
    data.D = sc.es.sys.D;
    // fundamental data from the backward products
    data.Y = {sc.es.sys.D[0] * sc.es.sys.D[1], sc.es.sys.D[1], id};
    data.Ytilde = {data.Z[0] * data.Y[0], data.Z[1] * data.Y[1], data.Z[2] * data.Y[2]};
    data.alpha_generator_image = sc.chi.at(1);

    HEffectiveReport rep = h_effective_check(data, sc.chi, GroupShape::DiagonalTorus);
    CHECK(rep.cocycle_section);
    CHECK(rep.equivariant_defining);
    CHECK(rep.composed_identification);
    CHECK(rep.ok());

    SUBCASE("perturbing the defining matrices off the torus fails condition 2") {
        HEffectiveData bad = data;
        bad.D[0].at(0, 1) = RatFunc::one(K3, 's');
        bad.Y = {bad.D[0] * bad.D[1], bad.D[1], id};
        bad.Ytilde = {bad.Z[0] * bad.Y[0], bad.Z[1] * bad.Y[1], bad.Z[2] * bad.Y[2]};
        HEffectiveReport r2 = h_effective_check(bad, sc.chi, GroupShape::DiagonalTorus);
        CHECK_FALSE(r2.equivariant_defining);
        CHECK_FALSE(r2.ok());
    }
    SUBCASE("trivial scenario collapses to plain effectivity") {
        DiffField F = DiffField::base(K3, 16);
        Matrix one = Matrix::identity(1, K3, 't');
        GaloisSection trivial(F, one, GroupShape::FullGL);
        RatFunc t = parse_expr("t", K3, 't');
        HEffectiveData d2;
        d2.Z = {one, one};
        d2.D = {Matrix::from_rows({{t}})};
        d2.Y = {Matrix::from_rows({{t}}), one};
        d2.Ytilde = d2.Y;
        d2.alpha_generator_image = one;
        HEffectiveReport r2 = h_effective_check(d2, trivial, GroupShape::FullGL);
        CHECK(r2.ok());

        // a defining matrix at the wrong level is exactly what effectivity rejects
        HEffectiveData d3 = d2;
        d3.D = {Matrix::from_rows({{t}}), Matrix::from_rows({{t}})};
        d3.Y = {Matrix::from_rows({{t * t}}), Matrix::from_rows({{t}}), one};
        d3.Ytilde = d3.Y;
        HEffectiveReport r3 = h_effective_check(d3, trivial, GroupShape::FullGL);
        CHECK_FALSE(r3.equivariant_defining);
    }
    SUBCASE("wrong claimed identification fails condition 3") {
        HEffectiveData bad = data;
        bad.alpha_generator_image = id;
        HEffectiveReport r2 = h_effective_check(bad, sc.chi, GroupShape::DiagonalTorus);
        CHECK_FALSE(r2.composed_identification);
    }
    SUBCASE("the galois action on the composed matrices factors through the section") {
        for (std::size_t l = 0; l < data.Ytilde.size(); ++l)
            CHECK(data.Ytilde[l].galois(sc.L, 1) == data.Ytilde[l] * sc.chi.at(1));
    }
}
