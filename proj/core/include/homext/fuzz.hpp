#pragma once

#include <homext/adjunct.hpp>
#include <homext/gorenstein.hpp>
#include <homext/serialize.hpp>

#include <cstdint>
#include <optional>

namespace homext {

/* Deterministic draw stream. Every instance owns its own stream keyed by
 * (seed, index), so reports do not depend on scheduling or worker count.
 * Draws go through the engine directly; distribution adapters are not
 * reproducible across standard library implementations. */
class FuzzStream {
public:
    FuzzStream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t below(std::uint64_t n);  // uniform in [0, n), n >= 1
    bool percent(unsigned p);              // true with probability p/100
    Int pick(const std::vector<Int>& xs);

private:
    std::uint64_t state_;
};

/* generator bounds: N in {4, 8, 9, 12}, at most 3 invariant factors per
 * module, complex support at most 5; callers pass tighter caps where the
 * downstream enumeration needs shaping */
Ring fuzz_ring(std::uint64_t index);
Module fuzz_module(FuzzStream& fs, const Ring& r, std::size_t max_factors,
                   bool allow_zero = false);
Morphism fuzz_morphism(FuzzStream& fs, const Module& A, const Module& B);
/* random valid differentials, degree by degree inside the kernel of the
 * previous one; may have homology anywhere */
ChainComplex fuzz_complex(FuzzStream& fs, const Ring& r, long lo, std::size_t support,
                          std::size_t max_factors);
/* biproduct of disks and realized short exact splices; exact, window
 * contains degree 0 */
ChainComplex fuzz_exact_complex(FuzzStream& fs, const Ring& r, std::size_t max_support);
TestClass fuzz_class(FuzzStream& fs, const Ring& r, bool want_closed);

/* Proposition ids accepted by the drivers below:
 *   1.1 .. 1.4, 4.2.1 .. 4.2.4, 4.dwsd, 5.mono.1 .. 5.mono.4,
 *   5.iso.1 .. 5.iso.4, 6.gext, 6.dwdg, 6.spheres */
const std::vector<std::string>& all_prop_ids();

/* Manifest slot names per proposition family; fuzz emits the same slots it
 * reads back, so a dumped instance replays bit for bit:
 *   1.x                complexes X, modules C            (degree used)
 *   4.2.x, 5.*         complexes X, modules C, classes F (degree used)
 *   4.dwsd             complexes sub/middle/quot, morphisms mono.<k>/epi.<k>
 *                      for k over each overlap, classes F
 *   6.gext             modules M, D
 *   6.dwdg             every complex in the manifest, in name order
 *   6.spheres          complexes X, modules M            (degree used) */
VerificationReport run_manifest_case(const std::string& prop, const Manifest& man,
                                     long degree = 0);

/* instance for (prop, seed, index); generated objects always put the degree
 * of interest at 0, so replay needs no extra flags */
Manifest fuzz_case_manifest(const std::string& prop, std::uint64_t seed, std::uint64_t index,
                            const std::optional<Int>& ringN);
VerificationReport run_fuzz_case(const std::string& prop, std::uint64_t seed,
                                 std::uint64_t index, const std::optional<Int>& ringN);

}  // namespace homext
