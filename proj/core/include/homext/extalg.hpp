#pragma once

#include <homext/chaincx.hpp>

namespace homext {

/* An i-extension 0 -> D -> E^i -> ... -> E^1 -> C -> 0, stored as the i+1
 * arrows left to right: maps[0]: D -> E^i, maps[i]: E^1 -> C. Exactness at
 * every spot (mono at D, epi onto C included) is validated at construction. */
struct Extension {
    std::vector<Morphism> maps;

    static Extension make(std::vector<Morphism> maps);
    static Extension split_extension(const Module& C, const Module& D);

    std::size_t degree() const { return maps.size() - 1; }
    Module sub() const { return maps.front().src; }     // D
    Module quot() const { return maps.back().dst; }     // C
    Module middle() const;                              // E^1, degree 1 only
    const Morphism& alpha() const { return maps.front(); }
    const Morphism& beta() const { return maps.back(); }
};

/* the extension as a chain complex: C in degree 0, D in degree i+1 */
ChainComplex complex_of(const Extension& S);

/* 0 -> dual(C) -> dual(E^1) -> ... -> dual(D) -> 0 */
Extension dualize_extension(const Extension& S);

/* existence of a ladder (id at D and C) from S to S2; for degree 1 the
 * middle arrow is automatically an isomorphism, so this is the equivalence */
bool is_related(const Extension& S, const Extension& S2);
bool is_equivalent(const Extension& S, const Extension& S2);

/* degree 1 only: direct sum, pullback along the diagonal of C, pushout
 * along the codiagonal of D */
Extension baer_sum(const Extension& S1, const Extension& S2);

/* degree 1: change of ends */
Extension ext_pushforward(const Extension& S, const Morphism& g);  // g: D -> D'
Extension ext_pullback(const Extension& S, const Morphism& h);     // h: C' -> C

struct Resolution {
    Module target;
    std::vector<Module> frees;   // F_0, F_1, ...
    std::vector<Morphism> maps;  // maps[0]: F_0 -> target, maps[k]: F_k -> F_{k-1}
};
/* canonical free resolution, computed syzygy by syzygy; over Z/N it is
 * 2-periodic with alternating multiplications */
Resolution free_resolution(const Module& M, std::size_t depth);

/* Ext^i(C, D) as cohomology of Hom(F_*, D) at spot i; canonical generators */
struct ExtGroup {
    std::size_t i = 1;
    Module C, D;
    Resolution res;
    HomGroup hom_i;      // Hom(F_i, D)
    Subquotient sq;      // cocycle lattice / coboundary lattice
    Module group;

    Int order() const { return group.order(); }
    std::size_t ngens() const { return group.rank(); }
    /* representative cocycle F_i -> D of generator t resp. of coordinates */
    Morphism cocycle(std::size_t t) const;
    Morphism cocycle_from_coords(const std::vector<Int>& c) const;
    std::vector<Int> coords_of(const Morphism& cocycle) const;
    void for_each_coords(const std::function<void(const std::vector<Int>&)>& fn) const;
};
ExtGroup ext_group(std::size_t i, const Module& C, const Module& D);
/* same cohomology from a caller-supplied resolution (resolution independence
 * checks); res must carry maps f_0 .. f_{i+1} */
ExtGroup ext_group_from(Resolution res, std::size_t i, const Module& D);

struct ExtElement {
    Morphism cocycle;         // F_i -> D
    std::vector<Int> coords;  // against the parent group generators
};

/* Baer class -> cocycle class: lift the free cover through beta, factor the
 * defect through alpha. Degree 1. */
ExtElement phi(const Extension& S, const ExtGroup& G);
/* cocycle class -> Baer class: factor through the syzygy inclusion, push out.
 * Degree 1. */
Extension psi(const ExtGroup& G, const std::vector<Int>& coords);

/* Hom(F,-)-exactness resp. Hom(-,G)-exactness of the extension sequence;
 * the right side goes through the duality */
bool is_left_relative(const Extension& S, const TestClass& F);
bool is_right_relative(const Extension& S, const TestClass& G);

/* all elements of ext_group(1, C, D) whose psi-realization is left resp.
 * right relative; subgroup axioms are asserted on the result */
struct RelativeSubgroup {
    ExtGroup group;
    std::vector<std::vector<Int>> members;  // sorted coordinate tuples

    bool contains(const std::vector<Int>& coords) const;
    Int order() const { return Int(members.size()); }
};
RelativeSubgroup relative_ext_subgroup(std::size_t i, const Module& C, const Module& D,
                                       const TestClass& F);
RelativeSubgroup relative_ext_subgroup_right(std::size_t i, const Module& C, const Module& D,
                                             const TestClass& G);

/* middles of all classes in Ext^1 between members stay members; decided on
 * the generators plus their indecomposable pieces */
bool is_extension_closed(const TestClass& F);

struct SpecialPrecover {
    Morphism cover;  // free -> M, epi
    SubObject ker;
    bool special;    // Ext^1(free, ker) = 0 certified
};
SpecialPrecover special_precover_free(const Module& M);

/* brute-force class list of 1-extensions of C by D: every middle of the
 * right order, every mono/epi pair, grouped by is_related. Oracle for the
 * cocycle-side computations; desk scale only. */
std::vector<Extension> enumerate_extension_classes(const Module& C, const Module& D);

}  // namespace homext
