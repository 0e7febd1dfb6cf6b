#pragma once

#include <homext/modcat.hpp>

namespace homext {

/* Bounded chain complex, homological grading: diff(m): at(m) -> at(m-1).
 * Stored window [lo, lo+mods.size()-1]; everything outside is zero.
 * Zero padding is canonical: make() trims zero modules off both ends, so
 * equality of trimmed data is equality of complexes. The empty complex has
 * hi() < lo(). */
struct ChainComplex {
    Ring ring;
    long lo_ = 0;
    std::vector<Module> mods;    // mods[i] = degree lo_+i
    std::vector<Morphism> diffs; // diffs[i]: mods[i+1] -> mods[i]

    static ChainComplex make(Ring r, long lo, std::vector<Module> mods,
                             std::vector<Morphism> diffs);
    static ChainComplex zero_complex(const Ring& r);

    long lo() const { return lo_; }
    long hi() const { return lo_ + static_cast<long>(mods.size()) - 1; }
    bool is_zero() const { return mods.empty(); }
    Module at(long m) const;
    Morphism diff(long m) const;  // at(m) -> at(m-1)

    bool operator==(const ChainComplex& o) const;
};

Module component(const ChainComplex& X, long m);

/* C concentrated in degree m */
ChainComplex sphere(const Module& C, long m);
/* C in degrees m and m-1 with identity differential */
ChainComplex disk(const Module& C, long m);
/* degreewise biproduct; structure maps via chain_map_group if needed */
ChainComplex direct_sum(const ChainComplex& X, const ChainComplex& Y);

/* Chain map X -> Y: components stored over the overlap of supports, every
 * square over the union of supports validated (components outside are zero,
 * so boundary squares are real constraints). */
struct ChainMap {
    ChainComplex X, Y;
    long lo_ = 0;
    std::vector<Morphism> comps;

    static ChainMap make(ChainComplex X, ChainComplex Y,
                         std::vector<Morphism> comps_on_overlap);
    static ChainMap zero(const ChainComplex& X, const ChainComplex& Y);
    static ChainMap identity(const ChainComplex& X);

    Morphism at(long m) const;  // X.at(m) -> Y.at(m)
    bool is_zero() const;
    bool operator==(const ChainMap& o) const;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap sub(const ChainMap& f, const ChainMap& g);
bool is_iso_map(const ChainMap& f);
bool is_mono_map(const ChainMap& f);
bool is_epi_map(const ChainMap& f);

/* Z_m = ker diff(m) as a subobject of X_m */
SubObject cycles(const ChainComplex& X, long m);
/* B_m = im diff(m+1) as a subobject of X_m */
SubObject boundaries(const ChainComplex& X, long m);
/* Q_m = X_m / B_m */
QuotObject quotient(const ChainComplex& X, long m);

/* induced maps at degree m against precomputed presentations */
Morphism cycle_map(const ChainMap& f, long m, const SubObject& zX, const SubObject& zY);
Morphism quotient_map(const ChainMap& f, long m, const QuotObject& qX, const QuotObject& qY);

/* H_m = Z_m/B_m with a coordinate presentation: coords() accepts an integer
 * vector satisfying the cycle congruences, gen() yields representatives */
struct HomologyAt {
    Module group;
    Subquotient sq;
};
HomologyAt homology_at(const ChainComplex& X, long m);
Module homology(const ChainComplex& X, long m);
Morphism homology_map(const ChainMap& f, long m, const HomologyAt& hX, const HomologyAt& hY);

bool is_exact(const ChainComplex& X);

/* contravariant Hom(-, Z/N) on complexes: degree m becomes -m */
ChainComplex dualize_complex(const ChainComplex& X);
ChainMap dualize_chain_map(const ChainMap& f);  // D(Y) -> D(X)

/* all chain maps X -> Y as a finite group, coordinates per solution_group */
struct ChainMapGroup {
    ChainComplex X, Y;
    long lo = 0;  // degree of unknown block 0 (overlap window start)
    MorphismSystem::SolutionGroup g;

    Int order() const { return g.order(); }
    std::size_t ngens() const { return g.factors().size(); }
    ChainMap generator(std::size_t t) const;
    ChainMap from_coeffs(const std::vector<Int>& c) const;
    std::vector<Int> coeffs(const ChainMap& f) const;
    void for_each(const std::function<void(const ChainMap&)>& fn) const;
};
ChainMapGroup chain_map_group(const ChainComplex& X, const ChainComplex& Y);

bool is_homotopic_to_zero(const ChainMap& f);
bool is_homotopic(const ChainMap& f, const ChainMap& g);

/* the complex Hom(G, X): finite abelian groups presented as modules over the
 * same ring (all orders divide N), with post-composition differentials */
ChainComplex hom_complex(const Module& G, const ChainComplex& X);
/* Hom(G, X) exact for every generator G of F, ends included */
bool is_hom_F_exact(const ChainComplex& X, const TestClass& F);

/* complex-level classes built on a module class F:
 *   DegreewiseF - every component in add(F)
 *   FComplex    - exact with every cycle module in add(F)
 *   DgF         - components in add(F) and maps into the orthogonal
 *                 complexes nullhomotopic; decidable only when F is the
 *                 full class (where it coincides with DegreewiseF),
 *                 otherwise nullopt */
enum class ComplexClassKind { DegreewiseF, FComplex, DgF };
std::optional<bool> class_membership(const ChainComplex& X, const TestClass& F,
                                     ComplexClassKind kind);

}  // namespace homext
