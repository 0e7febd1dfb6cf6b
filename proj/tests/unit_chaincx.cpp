#include <doctest.h>

#include <homext/chaincx.hpp>

using namespace homext;

namespace {

const Ring R4 = Ring::make(4);

/* 0 -> Z/4 --2--> Z/4 -> 0 in degrees 1, 0; homology Z/2 at both spots */
ChainComplex doubling_complex() {
    Module Z4 = Module::make(R4, {4});
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    return ChainComplex::make(R4, 0, {Z4, Z4}, {Morphism::make(Z4, Z4, two)});
}

}  // namespace

TEST_SUITE("chaincx") {

TEST_CASE("construction trims and validates") {
    Module Z2 = Module::make(R4, {2});
    ChainComplex X = ChainComplex::make(R4, -1, {Module::zero(R4), Z2, Module::zero(R4)},
                                        {Morphism::zero(Z2, Module::zero(R4)),
                                         Morphism::zero(Module::zero(R4), Z2)});
    CHECK(X == sphere(Z2, 0));
    CHECK(X.lo() == 0);
    CHECK(X.hi() == 0);
    CHECK(X.at(5).is_zero());
    CHECK(X.diff(0).is_zero());
    CHECK(ChainComplex::zero_complex(R4).is_zero());

    // d after d must vanish
    Module Z4 = Module::make(R4, {4});
    Morphism id4 = Morphism::identity(Z4);
    CHECK_THROWS_AS(ChainComplex::make(R4, 0, {Z4, Z4, Z4}, {id4, id4}), PreconditionError);
}

TEST_CASE("spheres, disks, direct sums") {
    Module Z2 = Module::make(R4, {2});
    ChainComplex S = sphere(Z2, 3);
    CHECK(S.lo() == 3);
    CHECK(S.hi() == 3);
    CHECK(!is_exact(S));
    ChainComplex D = disk(Z2, 3);
    CHECK(D.lo() == 2);
    CHECK(D.hi() == 3);
    CHECK(is_exact(D));
    CHECK(is_iso(D.diff(3)));
    ChainComplex sum = direct_sum(S, D);
    CHECK(sum.at(3).order() == 4);
    CHECK(sum.at(2).order() == 2);
    CHECK(component(sum, 2) == Z2);
}

TEST_CASE("chain maps validate every square over the union") {
    ChainComplex X = doubling_complex();
    Module Z4 = Module::make(R4, {4});
    // the identity component alone does not commute with the doubling
    CHECK_THROWS_AS(ChainMap::make(X, sphere(Z4, 0), {Morphism::identity(Z4)}),
                    PreconditionError);
    ChainMap id = ChainMap::identity(X);
    CHECK(is_iso_map(id));
    CHECK(compose(id, id) == id);
    CHECK(sub(id, id).is_zero());
    CHECK(add(id, id).at(0).mat.at(0, 0) == 2);
    CHECK(ChainMap::zero(X, X).is_zero());
}

TEST_CASE("cycles, boundaries, homology of the doubling complex") {
    ChainComplex X = doubling_complex();
    CHECK(cycles(X, 0).obj.factors == std::vector<Int>{4});
    CHECK(boundaries(X, 0).obj.factors == std::vector<Int>{2});
    CHECK(cycles(X, 1).obj.factors == std::vector<Int>{2});
    CHECK(boundaries(X, 1).obj.is_zero());
    CHECK(quotient(X, 0).obj.factors == std::vector<Int>{2});
    CHECK(homology(X, 0).factors == std::vector<Int>{2});
    CHECK(homology(X, 1).factors == std::vector<Int>{2});
    CHECK(homology(X, 2).is_zero());
    CHECK(!is_exact(X));
    CHECK(is_exact(disk(Module::make(R4, {4}), 1)));

    // induced identity on homology
    HomologyAt h0 = homology_at(X, 0);
    Morphism hid = homology_map(ChainMap::identity(X), 0, h0, h0);
    CHECK(hid == Morphism::identity(h0.group));
}

TEST_CASE("induced maps respect presentations") {
    ChainComplex X = doubling_complex();
    Module Z4 = Module::make(R4, {4});
    ChainComplex D = disk(Z4, 1);
    // disk over the doubling: f1 = id forces f0 = 2
    IntMatrix two(1, 1);
    two.at(0, 0) = 2;
    ChainMap f = ChainMap::make(D, X, {Morphism::make(Z4, Z4, two), Morphism::identity(Z4)});
    SubObject zD = cycles(D, 0), zX = cycles(X, 0);
    Morphism zf = cycle_map(f, 0, zD, zX);
    CHECK(!zf.is_zero());
    CHECK(compose(zX.mono, zf) == compose(f.at(0), zD.mono));
    QuotObject qD = quotient(D, 1), qX = quotient(X, 1);
    Morphism qf = quotient_map(f, 1, qD, qX);
    CHECK(!qf.is_zero());
    CHECK(compose(qf, qD.epi) == compose(qX.epi, f.at(1)));
}

TEST_CASE("duality flips degrees and preserves homology") {
    ChainComplex X = doubling_complex();
    ChainComplex DX = dualize_complex(X);
    CHECK(DX.lo() == -1);
    CHECK(DX.hi() == 0);
    for (long m = X.lo(); m <= X.hi(); ++m)
        CHECK(homology(DX, -m).order() == homology(X, m).order());
    ChainMap df = dualize_chain_map(ChainMap::identity(X));
    CHECK(is_iso_map(df));
    CHECK(dualize_complex(DX) == X);
}

TEST_CASE("chain map groups are enumerable") {
    Module Z2 = Module::make(R4, {2});
    Module Z4 = Module::make(R4, {4});
    ChainMapGroup g = chain_map_group(sphere(Z2, 0), disk(Z4, 1));
    CHECK(g.order() == 2);
    std::size_t nullh = 0, seen = 0;
    g.for_each([&](const ChainMap& f) {
        ++seen;
        if (is_homotopic_to_zero(f)) ++nullh;
        CHECK(g.from_coeffs(g.coeffs(f)) == f);
    });
    CHECK(seen == 2);
    CHECK(nullh == 2);  // everything into a disk dies

    ChainComplex X = doubling_complex();
    ChainMapGroup gg = chain_map_group(X, X);
    CHECK(gg.coeffs(ChainMap::identity(X)) ==
          gg.coeffs(gg.from_coeffs(gg.coeffs(ChainMap::identity(X)))));
}

TEST_CASE("homotopy basics") {
    Module Z2 = Module::make(R4, {2});
    CHECK(is_homotopic_to_zero(ChainMap::identity(disk(Z2, 1))));
    CHECK(!is_homotopic_to_zero(ChainMap::identity(sphere(Z2, 0))));
    ChainComplex X = doubling_complex();
    CHECK(is_homotopic(ChainMap::identity(X), ChainMap::identity(X)));
}

TEST_CASE("hom complexes and relative exactness") {
    ChainComplex X = doubling_complex();
    Module Z2 = Module::make(R4, {2});
    ChainComplex H = hom_complex(Z2, X);
    CHECK(H.at(0).order() == 2);
    CHECK(H.at(1).order() == 2);
    CHECK(H.diff(1).is_zero());  // post-composition with doubling kills Hom(Z/2, -)
    TestClass F2 = TestClass::make(R4, {Z2});
    CHECK(!is_hom_F_exact(X, F2));
    CHECK(is_hom_F_exact(disk(Z2, 1), TestClass::all_class(R4)));
}

TEST_CASE("complex class membership") {
    Module Z2 = Module::make(R4, {2});
    TestClass F2 = TestClass::make(R4, {Z2});
    CHECK(class_membership(sphere(Z2, 0), F2, ComplexClassKind::DegreewiseF) ==
          std::optional<bool>(true));
    CHECK(class_membership(sphere(Module::make(R4, {4}), 0), F2,
                           ComplexClassKind::DegreewiseF) == std::optional<bool>(false));
    CHECK(class_membership(sphere(Z2, 0), F2, ComplexClassKind::FComplex) ==
          std::optional<bool>(false));  // not exact
    CHECK(class_membership(disk(Z2, 1), F2, ComplexClassKind::FComplex) ==
          std::optional<bool>(true));
    CHECK(class_membership(disk(Z2, 1), TestClass::all_class(R4), ComplexClassKind::DgF) ==
          std::optional<bool>(true));
    CHECK(!class_membership(disk(Z2, 1), F2, ComplexClassKind::DgF).has_value());
}

}  // TEST_SUITE
