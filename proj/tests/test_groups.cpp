#include "doctest.h"

#include "idg/group_ops.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace idg;

TEST_CASE("catalogue sanity") {
    CHECK(catalogue_group("Z6").order() == 6);
    CHECK(catalogue_group("D4").order() == 8);
    CHECK(catalogue_group("Q8").order() == 8);
    CHECK(catalogue_group("V4").order() == 4);
    CHECK(catalogue_group("A4").order() == 12);
    CHECK(catalogue_group("S3").order() == 6);
    CHECK(catalogue_group("Z6").is_abelian());
    CHECK_FALSE(catalogue_group("S3").is_abelian());
    CHECK_FALSE(catalogue_group("Q8").is_abelian());
    CHECK_THROWS_AS(catalogue_group("nope"), GroupError);

    // Q8: exactly one element of order 2
    FiniteGroup q8 = catalogue_group("Q8");
    int order2 = 0;
    for (int a = 0; a < 8; ++a)
        if (q8.elem_order(a) == 2) ++order2;
    CHECK(order2 == 1);
}

TEST_CASE("group construction validation") {
    // a non-associative magma must be rejected
    std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
    CHECK_THROWS_AS(FiniteGroup("bad", bad), GroupError);
    // Z3 handed as an explicit table passes
    std::vector<std::vector<int>> z3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    CHECK_NOTHROW(FiniteGroup("z3", z3));
}

TEST_CASE("permutation construction") {
    FiniteGroup s3 = FiniteGroup::from_permutations(
        "S3p", {parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)});
    CHECK(s3.order() == 6);
    CHECK(find_isomorphism(s3, catalogue_group("S3")).has_value());
}

TEST_CASE("frattini subgroups by brute force") {
    CHECK(frattini_subgroup(catalogue_group("Z4")) == std::vector<int>{0, 2});
    FiniteGroup s3 = catalogue_group("S3");
    CHECK(frattini_subgroup(s3) == std::vector<int>{s3.identity()});
    CHECK(frattini_subgroup(catalogue_group("Z1")) == std::vector<int>{0});
    CHECK(frattini_subgroup(catalogue_group("Q8")).size() == 2);
}

TEST_CASE("frattini epimorphism tests") {
    FiniteGroup z4 = catalogue_group("Z4");
    FiniteGroup z2 = catalogue_group("Z2");
    GroupHom mod2(z4, z2, {0, 1, 0, 1});
    CHECK(is_frattini_epi(mod2));
    CHECK(frattini_criterion(mod2));

    FiniteGroup v4 = catalogue_group("V4");
    GroupHom first(v4, z2, {0, 0, 1, 1});
    CHECK_FALSE(is_frattini_epi(first));
    CHECK_FALSE(frattini_criterion(first));

    std::vector<int> ident(static_cast<std::size_t>(z4.order()));
    for (int i = 0; i < z4.order(); ++i) ident[i] = i;
    GroupHom id_map(z4, z4, ident);
    CHECK(is_frattini_epi(id_map));
    CHECK(frattini_criterion(id_map));

    GroupHom nonsurj(z2, z4, {0, 2});
    CHECK_THROWS_AS(is_frattini_epi(nonsurj), GroupError);
}

TEST_CASE("minimal supplements") {
    FiniteGroup z4 = catalogue_group("Z4");
    CHECK(minimal_supplement(z4, {0, 2}) == std::vector<int>{0, 1, 2, 3});

    FiniteGroup v4 = catalogue_group("V4");
    std::vector<int> u = minimal_supplement(v4, {0, 1});
    CHECK(u.size() == 2);
    CHECK(u[0] == 0);
    CHECK((u[1] == 2 || u[1] == 3));
    // tie-break picks the lexicographically least option
    CHECK(u == std::vector<int>{0, 2});

    std::vector<int> all(static_cast<std::size_t>(v4.order()));
    for (int i = 0; i < v4.order(); ++i) all[i] = i;
    CHECK(minimal_supplement(v4, {0}) == all);
}

TEST_CASE("semidirect products") {
    FiniteGroup z3 = catalogue_group("Z3");
    FiniteGroup z2 = catalogue_group("Z2");
    // inversion action of Z2 on Z3
    std::vector<std::vector<int>> inversion = {{0, 1, 2}, {0, 2, 1}};
    SemidirectProduct sp = semidirect_product(z3, z2, inversion);
    CHECK(sp.group.order() == 6);
    CHECK(find_isomorphism(sp.group, catalogue_group("S3")).has_value());
    CHECK_FALSE(find_isomorphism(sp.group, catalogue_group("Z6")).has_value());

    SemidirectProduct direct = semidirect_product(z3, z2, trivial_action(z3, z2));
    CHECK(find_isomorphism(direct.group, catalogue_group("Z6")).has_value());

    // projection and section compose to the identity on H
    for (int h = 0; h < 2; ++h) CHECK(sp.projection.apply(sp.section.apply(h)) == h);

    // a non-automorphism action is rejected
    std::vector<std::vector<int>> broken = {{0, 1, 2}, {1, 0, 2}};
    CHECK_THROWS_AS(semidirect_product(z3, z2, broken), GroupError);
}

TEST_CASE("fibre products") {
    FiniteGroup z4 = catalogue_group("Z4");
    FiniteGroup z2 = catalogue_group("Z2");
    GroupHom mod2a(z4, z2, {0, 1, 0, 1});
    GroupHom mod2b(z4, z2, {0, 1, 0, 1});
    FibreProduct fp = fibre_product(mod2a, mod2b);
    CHECK(fp.group.order() == 8);   // |A||B|/|C| for surjective legs

    FiniteGroup z1 = catalogue_group("Z1");
    GroupHom toa(z4, z1, {0, 0, 0, 0});
    GroupHom tob(z2, z1, {0, 0});
    CHECK(fibre_product(toa, tob).group.order() == 8);   // full direct product

    std::vector<int> ident = {0, 1, 2, 3};
    GroupHom ida(z4, z4, ident);
    FibreProduct diag = fibre_product(ida, ida);
    CHECK(diag.group.order() == 4);
    CHECK(find_isomorphism(diag.group, z4).has_value());
}

TEST_CASE("type-mu epimorphisms") {
    SUBCASE("Z6 with complementary parts is an isomorphism") {
        FiniteGroup z6 = catalogue_group("Z6");
        TypeMuResult r = type_mu_epi(z6, {0, 2, 4}, {0, 3});
        CHECK(r.kernel.size() == 1);
        CHECK(r.kernel_matches_formula);
        CHECK(r.mu.is_surjective());
        CHECK(r.mu.is_injective());
    }
    SUBCASE("Z4 with H = G") {
        FiniteGroup z4 = catalogue_group("Z4");
        TypeMuResult r = type_mu_epi(z4, {0, 2}, {0, 1, 2, 3});
        CHECK(r.kernel.size() == 2);
        CHECK(r.kernel_matches_formula);
    }
    SUBCASE("N = H = G embeds antidiagonally") {
        FiniteGroup z4 = catalogue_group("Z4");
        std::vector<int> all = {0, 1, 2, 3};
        TypeMuResult r = type_mu_epi(z4, all, all);
        CHECK(r.kernel.size() == 4);
        CHECK(r.kernel_matches_formula);
    }
    SUBCASE("N . H must cover G") {
        FiniteGroup z4 = catalogue_group("Z4");
        CHECK_THROWS_AS(type_mu_epi(z4, {0, 2}, {0, 2}), GroupError);
    }
}

TEST_CASE("triple product isomorphisms") {
    FiniteGroup z3 = catalogue_group("Z3");
    FiniteGroup z2 = catalogue_group("Z2");
    std::vector<std::vector<int>> inversion = {{0, 1, 2}, {0, 2, 1}};
    auto rep = triple_product_isos(z3, z2, z2, inversion, trivial_action(z2, z2));
    CHECK(rep.ok);
    CHECK(rep.order == 12);

    // all-trivial actions give the direct product
    auto rep2 = triple_product_isos(z3, z2, z2, trivial_action(z3, z2), trivial_action(z2, z2));
    CHECK(rep2.ok);

    FiniteGroup z5 = catalogue_group("Z5");
    FiniteGroup z1 = catalogue_group("Z1");
    auto rep3 = triple_product_isos(z5, z2, z1, trivial_action(z5, z1), trivial_action(z2, z1));
    CHECK(rep3.ok);
    CHECK(rep3.order == 10);
}

TEST_CASE("hom enumeration") {
    FiniteGroup z4 = catalogue_group("Z4");
    FiniteGroup z2 = catalogue_group("Z2");
    CHECK(all_homs(z4, z2).size() == 2);
    CHECK(surjective_homs(z4, z2).size() == 1);
    CHECK(surjective_homs(z2, z4).empty());
    // V4 onto Z2: three surjections
    CHECK(surjective_homs(catalogue_group("V4"), z2).size() == 3);
    // S3 onto Z2: the sign map only
    CHECK(surjective_homs(catalogue_group("S3"), z2).size() == 1);
}

TEST_CASE("quotients and subgroup machinery") {
    FiniteGroup z4 = catalogue_group("Z4");
    auto [q, proj] = quotient_group(z4, {0, 2});
    CHECK(q.order() == 2);
    CHECK(proj.is_surjective());

    FiniteGroup s3 = catalogue_group("S3");
    CHECK(s3.subgroups().size() == 6);   // 1, three <flip>, <r>, S3
    CHECK(s3.maximal_subgroups().size() == 4);

    // fibre product universal property on small cones: maps into the two
    // legs agreeing on C factor through the fibre product, uniquely
    FiniteGroup z2 = catalogue_group("Z2");
    auto mediating_count = [](const FiniteGroup& X, const FibreProduct& fp,
                              const GroupHom& to_left, const GroupHom& to_right) {
        // candidate maps are x -> (to_left(x), to_right(x)); count the homs
        // into the fibre product realizing both projections
        int found = 0;
        std::map<std::pair<int, int>, int> index;
        for (int e = 0; e < fp.group.order(); ++e) index[fp.elems[e]] = e;
        std::vector<int> img(static_cast<std::size_t>(X.order()));
        bool total = true;
        for (int x = 0; x < X.order(); ++x) {
            auto key = std::make_pair(to_left.apply(x), to_right.apply(x));
            auto it = index.find(key);
            if (it == index.end()) {
                total = false;
                break;
            }
            img[x] = it->second;
        }
        if (total) {
            try {
                GroupHom cand(X, fp.group, img);
                ++found;
            } catch (const GroupError&) {
            }
        }
        // uniqueness: any hom with the same projections equals the candidate
        // because the projections jointly separate the pair coordinates
        return found;
    };

    GroupHom mod2a(z4, z2, {0, 1, 0, 1});
    GroupHom mod2b(z4, z2, {0, 1, 0, 1});
    FibreProduct fp = fibre_product(mod2a, mod2b);
    std::vector<int> ident = {0, 1, 2, 3};
    GroupHom cone_left(z4, z4, ident), cone_right(z4, z4, ident);
    // cone legs are the identities composed with the given surjections
    CHECK(mediating_count(z4, fp, cone_left, cone_right) == 1);

    FiniteGroup v4 = catalogue_group("V4");
    GroupHom first(v4, z2, {0, 0, 1, 1});
    GroupHom second(v4, z2, {0, 1, 0, 1});
    FibreProduct fp2 = fibre_product(first, second);
    CHECK(fp2.group.order() == 8);
    // cone from Z2 landing in the two kernels, so the legs agree on C
    GroupHom vcl(z2, v4, {0, 1});
    GroupHom vcr(z2, v4, {0, 2});
    CHECK(mediating_count(z2, fp2, vcl, vcr) == 1);
}
