#pragma once

#include <homext/adjunct.hpp>

namespace homext {

/* quasi-Frobenius setup over Z/N: the indecomposable projective blocks and
 * the class W of finite projective dimension. Over these rings W is the
 * projectives; the identification is certified per instance by syzygy
 * stabilization rather than assumed. */
struct GorensteinContext {
    Ring ring;
    std::vector<Module> blocks;  // Z/p^a with p^a maximal in N, ascending
    TestClass W;

    static GorensteinContext make(const Ring& r);
};

/* least syzygy depth at which the sequence hits a projective; nullopt when
 * it settles into the 2-periodic loop without doing so (pd infinite) */
std::optional<std::size_t> finite_pd_depth(const Module& M, const GorensteinContext& ctx);
bool is_projective(const Module& M, const GorensteinContext& ctx);

/* Ext^1(M, P) = 0 against every projective block, computed outright */
bool is_gorenstein_projective(const Module& M, const GorensteinContext& ctx);

/* left resolution by Gorenstein projectives, kept explicit so that
 * exactness, termwise membership, and properness stay checkable */
struct GPResolution {
    Module target;
    std::vector<Module> gps;     // G_0, G_1, ...
    std::vector<Morphism> maps;  // maps[0]: G_0 -> target, maps[k]: G_k -> G_{k-1}
};
/* ... -> 0 -> M -> M: the degenerate resolution every module admits here */
GPResolution trivial_gp_resolution(const Module& M, const GorensteinContext& ctx);
/* 0 -> R -> M (+) R -> M: one honest step, still proper */
GPResolution padded_gp_resolution(const Module& M, const GorensteinContext& ctx);

/* cohomology of Hom(G_*, D) at spot i >= 1; the resolution is certified
 * exact, termwise Gorenstein projective, and Hom-exact against the full
 * additive class before anything is computed */
Module gext_from(const GPResolution& res, std::size_t i, const Module& D,
                 const GorensteinContext& ctx);
Module gext(std::size_t i, const Module& M, const Module& D, const GorensteinContext& ctx);

/* GExt^1 = 0 three ways: two different resolutions and the split-only
 * Baer subgroup, plus the dual-side subgroup; Ext^1 is reported alongside
 * for contrast */
VerificationReport verify_isosgext(const Module& M, const Module& D,
                                   const GorensteinContext& ctx);

/* every chain map from a degreewise Gorenstein projective complex into a
 * complex built from disks of projectives is homotopic to zero */
VerificationReport verify_dw_eq_dg(const std::vector<ChainComplex>& sample,
                                   const GorensteinContext& ctx);

/* special precover sequence W (+) X -> X with W a disk of a projective
 * block, the induced precover of the degree-m quotient, both four-term Hom
 * segments, the comparison grid against the sphere adjunction, and the
 * vanishing GExt^1 at both levels */
VerificationReport verify_isosgorspheres(const ChainComplex& X, const Module& M, long m,
                                         const GorensteinContext& ctx);

}  // namespace homext
