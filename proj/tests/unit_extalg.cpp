#include <doctest.h>

#include <homext/extalg.hpp>

#include <algorithm>

using namespace homext;

namespace {

const Ring R4 = Ring::make(4);
const Ring R8 = Ring::make(8);

Module Z2(const Ring& r = R4) { return Module::make(r, {2}); }
Module Z4(const Ring& r = R4) { return Module::make(r, {4}); }

/* 0 -> Z/2 --2--> Z/4 --1--> Z/2 -> 0, the nonsplit class over Z/4 */
Extension nonsplit_ext() {
    IntMatrix a(1, 1), b(1, 1);
    a.at(0, 0) = 2;
    b.at(0, 0) = 1;
    return Extension::make({Morphism::make(Z2(), Z4(), a), Morphism::make(Z4(), Z2(), b)});
}

}  // namespace

TEST_SUITE("extalg") {

TEST_CASE("extension construction validates exactness") {
    Extension S = nonsplit_ext();
    CHECK(S.degree() == 1);
    CHECK(S.sub() == Z2());
    CHECK(S.quot() == Z2());
    CHECK(S.middle() == Z4());
    Extension T = Extension::split_extension(Z2(), Z2());
    CHECK(T.middle().factors == std::vector<Int>{2, 2});

    // beta must hit all of C
    IntMatrix a(1, 1);
    a.at(0, 0) = 2;
    Morphism mono = Morphism::make(Z2(), Z4(), a);
    CHECK_THROWS_AS(Extension::make({mono, Morphism::zero(Z4(), Z2())}), PreconditionError);
    // middle too large for exactness at the middle spot
    Module big = Module::make(R4, {2, 4});
    CHECK_THROWS_AS(Extension::make({Morphism::make(Z2(), big, IntMatrix(2, 1)),
                                     Morphism::zero(big, Z2())}),
                    PreconditionError);
}

TEST_CASE("an extension is an exact three term complex") {
    ChainComplex X = complex_of(nonsplit_ext());
    CHECK(X.lo() == 0);
    CHECK(X.hi() == 2);
    CHECK(is_exact(X));
    CHECK(X.at(0) == Z2());
    CHECK(X.at(2) == Z2());
}

TEST_CASE("relatedness separates the two classes over Z/4") {
    Extension S = nonsplit_ext();
    Extension T = Extension::split_extension(Z2(), Z2());
    CHECK(is_equivalent(S, S));
    CHECK(!is_related(S, T));
    CHECK(!is_related(T, S));

    // a twisted presentation of the split class is still split
    Module mid = T.middle();
    IntMatrix am(2, 1), bm(1, 2);
    am.at(0, 0) = 1; am.at(1, 0) = 1;  // diagonal embedding
    bm.at(0, 0) = 1; bm.at(0, 1) = 1;  // sum map: kernel is the diagonal
    Extension T2 = Extension::make({Morphism::make(Z2(), mid, am),
                                    Morphism::make(mid, Z2(), bm)});
    CHECK(is_equivalent(T, T2));
}

TEST_CASE("baer sum group law on the worked example") {
    Extension S = nonsplit_ext();
    Extension T = Extension::split_extension(Z2(), Z2());
    Extension SS = baer_sum(S, S);
    CHECK(is_equivalent(SS, T));  // 2-torsion
    CHECK(SS.middle().factors == std::vector<Int>{2, 2});
    CHECK(is_equivalent(baer_sum(S, T), S));  // split is neutral
    CHECK(is_equivalent(baer_sum(T, T), T));
}

TEST_CASE("change of ends") {
    Extension S = nonsplit_ext();
    CHECK(is_equivalent(ext_pullback(S, Morphism::identity(Z2())), S));
    CHECK(is_equivalent(ext_pushforward(S, Morphism::identity(Z2())), S));
    CHECK(is_equivalent(ext_pullback(S, Morphism::zero(Z2(), Z2())),
                        Extension::split_extension(Z2(), Z2())));
    CHECK(is_equivalent(ext_pushforward(S, Morphism::zero(Z2(), Z2())),
                        Extension::split_extension(Z2(), Z2())));
}

TEST_CASE("free resolutions are two periodic and exact") {
    Resolution res = free_resolution(Z2(R8), 4);
    REQUIRE(res.maps.size() == 5);
    CHECK(is_epi(res.maps[0]));
    for (std::size_t k = 0; k + 1 < res.maps.size(); ++k) {
        CHECK(compose(res.maps[k], res.maps[k + 1]).is_zero());
        CHECK(kernel(res.maps[k]).obj.order() == image(res.maps[k + 1]).obj.order());
    }
    CHECK(res.frees[1] == res.frees[3]);  // periodicity
    CHECK(res.maps[2].mat == res.maps[4].mat);
    Resolution zres = free_resolution(Module::zero(R4), 2);
    CHECK(zres.frees[0].is_zero());
}

TEST_CASE("ext groups at the worked values") {
    CHECK(ext_group(1, Z2(), Z2()).order() == 2);
    CHECK(ext_group(2, Z2(), Z2()).order() == 2);
    CHECK(ext_group(1, Z4(), Z2()).order() == 1);  // free C
    CHECK(ext_group(1, Z2(), Z4()).order() == 1);  // injective D over Z/4
    CHECK(ext_group(1, Z2(R8), Z2(R8)).order() == 2);
    CHECK(ext_group(1, Module::make(R8, {4}), Module::make(R8, {2})).order() == 2);
    CHECK(ext_group(1, Module::make(R4, {2, 2}), Module::make(R4, {2, 2})).order() == 16);

    ExtGroup G = ext_group(1, Z2(), Z2());
    std::size_t seen = 0;
    G.for_each_coords([&](const std::vector<Int>& c) {
        ++seen;
        CHECK(G.coords_of(G.cocycle_from_coords(c)) == c);
    });
    CHECK(Int(seen) == G.order());
}

TEST_CASE("resolution independence of ext") {
    // hand padded resolution of Z/2 over Z/4:
    // Z/4 --(2,0)--> Z/4 (+) Z/4 --[[2,0],[0,1]]--> Z/4 (+) Z/4 --[1 0]--> Z/2
    Module F = Module::free_module(R4, 2), F2 = Module::free_module(R4, 1);
    IntMatrix f0(1, 2), f1(2, 2), f2(2, 1);
    f0.at(0, 0) = 1;
    f1.at(0, 0) = 2; f1.at(1, 1) = 1;
    f2.at(0, 0) = 2;
    Resolution res{Z2(),
                   {F, F, F2},
                   {Morphism::make(F, Z2(), f0), Morphism::make(F, F, f1),
                    Morphism::make(F2, F, f2)}};
    ExtGroup G = ext_group_from(res, 1, Z2());
    CHECK(G.order() == ext_group(1, Z2(), Z2()).order());
    CHECK(G.group == ext_group(1, Z2(), Z2()).group);
}

TEST_CASE("phi and psi invert each other on the worked group") {
    ExtGroup G = ext_group(1, Z2(), Z2());
    Extension split = psi(G, {0});
    CHECK(is_equivalent(split, Extension::split_extension(Z2(), Z2())));
    Extension gen = psi(G, {1});
    CHECK(gen.middle().factors == std::vector<Int>{4});
    CHECK(phi(gen, G).coords == std::vector<Int>{1});
    CHECK(phi(nonsplit_ext(), G).coords == std::vector<Int>{1});
    CHECK(phi(Extension::split_extension(Z2(), Z2()), G).coords == std::vector<Int>{0});
    CHECK(is_equivalent(psi(G, phi(nonsplit_ext(), G).coords), nonsplit_ext()));
    // additivity on all four pairs
    for (Int c1 = 0; c1 < 2; ++c1)
        for (Int c2 = 0; c2 < 2; ++c2) {
            Extension sum = baer_sum(psi(G, {c1}), psi(G, {c2}));
            CHECK(phi(sum, G).coords == std::vector<Int>{(c1 + c2) % 2});
        }
}

TEST_CASE("brute force classification agrees with the cocycle count") {
    std::vector<Extension> classes = enumerate_extension_classes(Z2(), Z2());
    CHECK(classes.size() == 2);
    std::vector<std::vector<Int>> mids;
    for (const Extension& S : classes) mids.push_back(S.middle().factors);
    std::sort(mids.begin(), mids.end());
    CHECK(mids[0] == std::vector<Int>{2, 2});
    CHECK(mids[1] == std::vector<Int>{4});
    CHECK(Int(classes.size()) == ext_group(1, Z2(), Z2()).order());
}

TEST_CASE("relative subgroups at the worked values") {
    TestClass F2 = TestClass::make(R4, {Z2()});
    RelativeSubgroup rs = relative_ext_subgroup(1, Z2(), Z2(), F2);
    CHECK(rs.group.order() == 2);
    CHECK(rs.order() == 1);  // only the split class stays exact under Hom(Z/2, -)
    CHECK(rs.contains(std::vector<Int>{0}));
    CHECK(!rs.contains(std::vector<Int>{1}));

    RelativeSubgroup full = relative_ext_subgroup(1, Z2(), Z2(), TestClass::free_class(R4));
    CHECK(full.order() == 2);  // projectives obstruct nothing

    RelativeSubgroup right = relative_ext_subgroup_right(1, Z2(), Z2(), F2);
    CHECK(right.order() == 1);

    CHECK(is_left_relative(Extension::split_extension(Z2(), Z2()), F2));
    CHECK(!is_left_relative(nonsplit_ext(), F2));
    CHECK(is_left_relative(nonsplit_ext(), TestClass::free_class(R4)));
    CHECK(!is_right_relative(nonsplit_ext(), F2));
}

TEST_CASE("extension closed classes") {
    CHECK(!is_extension_closed(TestClass::make(R4, {Z2()})));
    CHECK(is_extension_closed(TestClass::free_class(R4)));
    CHECK(is_extension_closed(TestClass::all_class(R4)));
    CHECK(is_extension_closed(TestClass::all_class(Ring::make(12))));
}

TEST_CASE("special precovers from free covers") {
    SpecialPrecover pc = special_precover_free(Z2());
    CHECK(is_epi(pc.cover));
    CHECK(pc.special);
    CHECK(pc.ker.obj.factors == std::vector<Int>{2});
    CHECK(compose(pc.cover, pc.ker.mono).is_zero());
}

}  // TEST_SUITE
