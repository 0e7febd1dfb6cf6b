#include <homext/fuzz.hpp>

#include <algorithm>
#include <string>

namespace homext {

namespace {

/* splitmix64; stable everywhere, one multiply-shift chain per draw */
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t small_u(const Int& v) { return v.convert_to<std::uint64_t>(); }

}  // namespace

FuzzStream::FuzzStream(std::uint64_t seed, std::uint64_t index)
    : state_(mix64(mix64(seed) ^ mix64(index * 0x100000001B3ull + 0xCBF29CE484222325ull))) {}

std::uint64_t FuzzStream::below(std::uint64_t n) {
    state_ = mix64(state_);
    return n < 2 ? 0 : state_ % n;
}

bool FuzzStream::percent(unsigned p) { return below(100) < p; }

Int FuzzStream::pick(const std::vector<Int>& xs) { return xs[below(xs.size())]; }

Ring fuzz_ring(std::uint64_t index) {
    static const int ns[4] = {4, 8, 9, 12};
    return Ring::make(ns[index % 4]);
}

namespace {

std::vector<Int> proper_divisors(const Ring& r) {
    std::vector<Int> ds;
    for (Int d = 2; d <= r.N; ++d)
        if (r.N % d == 0) ds.push_back(d);
    return ds;
}

}  // namespace

Module fuzz_module(FuzzStream& fs, const Ring& r, std::size_t max_factors, bool allow_zero) {
    const std::vector<Int> divs = proper_divisors(r);
    std::size_t k = (allow_zero ? 0 : 1) + fs.below(max_factors + (allow_zero ? 1 : 0));
    if (!allow_zero && k == 0) k = 1;
    k = std::min(k, max_factors);
    std::vector<Int> fac;
    Int prev = 1;
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<Int> fit;
        for (const Int& d : divs)
            if (d % prev == 0) fit.push_back(d);
        prev = fs.pick(fit);
        fac.push_back(prev);
    }
    return Module::make(r, std::move(fac));
}

Morphism fuzz_morphism(FuzzStream& fs, const Module& A, const Module& B) {
    HomGroup H = hom_group(A, B);
    std::vector<Int> c;
    for (const Int& o : H.orders) c.push_back(Int(fs.below(small_u(o))));
    return H.from_coeffs(c);
}

namespace {

/* uniform draw from { u : prev o u = 0 } (all of Hom when prev is absent) */
Morphism fuzz_kernel_morphism(FuzzStream& fs, const Ring& r, const Module& src,
                              const Module& dst, const Morphism* prev) {
    MorphismSystem sys(r);
    std::size_t u = sys.add_unknown(src, dst);
    if (prev) sys.eq_left(*prev, u, Morphism::zero(src, prev->dst));
    MorphismSystem::SolutionGroup sg = sys.solution_group();
    std::vector<Int> coords;
    for (const Int& f : sg.factors()) coords.push_back(Int(fs.below(small_u(f))));
    return sg.combine(coords)[0];
}

}  // namespace

ChainComplex fuzz_complex(FuzzStream& fs, const Ring& r, long lo, std::size_t support,
                          std::size_t max_factors) {
    if (support == 0) return ChainComplex::make(r, 0, {}, {});
    std::vector<Module> mods;
    for (std::size_t t = 0; t < support; ++t) mods.push_back(fuzz_module(fs, r, max_factors));
    std::vector<Morphism> diffs;
    for (std::size_t t = 0; t + 1 < support; ++t)
        diffs.push_back(fuzz_kernel_morphism(fs, r, mods[t + 1], mods[t],
                                             t == 0 ? nullptr : &diffs.back()));
    return ChainComplex::make(r, lo, std::move(mods), std::move(diffs));
}

ChainComplex fuzz_exact_complex(FuzzStream& fs, const Ring& r, std::size_t max_support) {
    ChainComplex X = ChainComplex::make(r, 0, {}, {});
    const long whi = static_cast<long>(std::min<std::size_t>(max_support, 5)) - 1;
    bool covers_zero = false;
    if (whi >= 2 && fs.percent(60)) {
        /* realized short exact splice C0 at 0, middle at 1, D0 at 2 */
        Module C0 = fuzz_module(fs, r, 1), D0 = fuzz_module(fs, r, 1);
        ExtGroup G = ext_group(1, C0, D0);
        std::vector<Int> coords;
        for (const Int& f : G.group.factors) coords.push_back(Int(fs.below(small_u(f))));
        X = complex_of(psi(G, coords));
        covers_zero = true;
    }
    /* disk at degree d covers {d-1, d}; without a splice stay in {0,1} so
     * the window always contains degree 0 */
    std::size_t ndisks = 1 + fs.below(2);
    for (std::size_t t = 0; t < ndisks; ++t) {
        long d = covers_zero ? 1 + static_cast<long>(fs.below(std::max<long>(whi, 1)))
                             : static_cast<long>(fs.below(2));
        X = direct_sum(X, disk(fuzz_module(fs, r, 2), d));
        covers_zero = true;
    }
    return X;
}

TestClass fuzz_class(FuzzStream& fs, const Ring& r, bool want_closed) {
    for (int attempt = 0; attempt < 5; ++attempt) {
        std::vector<Module> gens;
        std::size_t k = 1 + fs.below(2);
        for (std::size_t t = 0; t < k; ++t) gens.push_back(fuzz_module(fs, r, 2));
        TestClass F = TestClass::make(r, std::move(gens));
        if (!want_closed || is_extension_closed(F)) return F;
    }
    return fs.percent(50) ? TestClass::free_class(r) : TestClass::all_class(r);
}

const std::vector<std::string>& all_prop_ids() {
    static const std::vector<std::string> ids = {
        "1.1",      "1.2",      "1.3",      "1.4",     "4.2.1",    "4.2.2",
        "4.2.3",    "4.2.4",    "4.dwsd",   "5.mono.1", "5.mono.2", "5.mono.3",
        "5.mono.4", "5.iso.1",  "5.iso.2",  "5.iso.3", "5.iso.4",  "6.gext",
        "6.dwdg",   "6.spheres"};
    return ids;
}

namespace {

bool starts_with(const std::string& s, const std::string& p) {
    return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

ChainMap chain_map_slot(const Manifest& man, const std::string& name, const ChainComplex& X,
                        const ChainComplex& Y) {
    const long lo = std::max(X.lo(), Y.lo()), hi = std::min(X.hi(), Y.hi());
    std::vector<Morphism> comps;
    for (long k = lo; k <= hi; ++k) comps.push_back(man.morphism_at(name + "." + std::to_string(k)));
    return ChainMap::make(X, Y, std::move(comps));
}

void put_chain_map(Manifest& man, const std::string& name, const ChainMap& f) {
    const long lo = std::max(f.X.lo(), f.Y.lo()), hi = std::min(f.X.hi(), f.Y.hi());
    for (long k = lo; k <= hi; ++k)
        man.morphisms.emplace(name + "." + std::to_string(k), f.at(k));
}

Int window_order(const ChainComplex& X) {
    Int o = 1;
    for (long k = X.lo(); k <= X.hi(); ++k) o *= X.at(k).order();
    return o;
}

Module smallest_block(const Ring& r) {
    Int p = 2;
    while (r.N % p != 0) ++p;
    return Module::make(r, {p});
}

/* cyclic, redrawn once when free: free C kills every ext group and makes
 * the instance vacuous */
Module biased_cyclic(FuzzStream& fs, const Ring& r) {
    Module C = fuzz_module(fs, r, 1);
    if (C.factors[0] == r.N && fs.percent(60)) C = fuzz_module(fs, r, 1);
    return C;
}

/* ---- per-family instance builders; every retry keeps drawing from the
 * same stream, so the result is still a function of (seed, index) ---- */

Manifest build_adjunction(FuzzStream& fs, const Ring& r) {
    Manifest man;
    man.ring = r;
    long lo = -1 - static_cast<long>(fs.below(2));
    man.complexes.emplace("X", fuzz_complex(fs, r, lo, 2 + fs.below(3), 2));
    man.modules.emplace("C", fuzz_module(fs, r, 2));
    return man;
}

Manifest build_disk_iso(FuzzStream& fs, const Ring& r) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        const std::size_t support = attempt < 4 ? 2 + fs.below(2) : 2;
        const std::size_t maxf = attempt < 2 ? 2 : 1;
        long lo = -static_cast<long>(fs.below(2));
        ChainComplex X = fuzz_complex(fs, r, lo, support, maxf);
        Module C = biased_cyclic(fs, r);
        if (window_order(X) > 4096) continue;
        Int eL = ext_group(1, X.at(0), C).order();
        Int eR = ext_group(1, C, X.at(0)).order();
        if (eL > 128 || eR > 128) continue;
        if (eL == 1 && eR == 1 && attempt < 6 && fs.percent(70)) continue;
        Manifest man;
        man.ring = r;
        man.complexes.emplace("X", std::move(X));
        man.modules.emplace("C", std::move(C));
        man.classes.emplace("F", fs.percent(35) ? TestClass::free_class(r)
                                                : fuzz_class(fs, r, fs.percent(50)));
        return man;
    }
    Manifest man;
    man.ring = r;
    Module P = smallest_block(r);
    man.complexes.emplace("X", disk(P, 1));
    man.modules.emplace("C", P);
    man.classes.emplace("F", TestClass::free_class(r));
    return man;
}

Manifest build_dwsd(FuzzStream& fs, const Ring& r) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        const std::size_t support = attempt < 4 ? 2 + fs.below(2) : 2;
        ChainComplex X = fuzz_complex(fs, r, -static_cast<long>(fs.below(2)), support,
                                      attempt < 2 ? 2 : 1);
        Module C = biased_cyclic(fs, r);
        long m = X.lo() + static_cast<long>(fs.below(X.hi() - X.lo() + 1));
        const bool sub_side = fs.percent(50);
        ExtGroup G = sub_side ? ext_group(1, X.at(m), C) : ext_group(1, C, X.at(m));
        if (G.order() > 64 || window_order(X) > 4096) continue;
        if (G.order() == 1 && attempt < 6 && fs.percent(60)) continue;
        std::vector<Int> coords;
        for (const Int& f : G.group.factors) coords.push_back(Int(fs.below(small_u(f))));
        Extension Sm = psi(G, coords);
        ComplexExtension S = sub_side ? disk_psi(Sm, X, m) : disk_psi_quot(Sm, X, m);
        Manifest man;
        man.ring = r;
        man.complexes.emplace("sub", S.sub());
        man.complexes.emplace("middle", S.middle());
        man.complexes.emplace("quot", S.quot());
        put_chain_map(man, "mono", S.mono);
        put_chain_map(man, "epi", S.epi);
        man.classes.emplace("F", fuzz_class(fs, r, fs.percent(70)));
        return man;
    }
    Manifest man;
    man.ring = r;
    Module P = smallest_block(r);
    ComplexExtension S = ComplexExtension::split_extension(disk(P, 1), sphere(P, 0));
    man.complexes.emplace("sub", S.sub());
    man.complexes.emplace("middle", S.middle());
    man.complexes.emplace("quot", S.quot());
    put_chain_map(man, "mono", S.mono);
    put_chain_map(man, "epi", S.epi);
    man.classes.emplace("F", TestClass::free_class(r));
    return man;
}

Manifest build_sphere_mono(FuzzStream& fs, const Ring& r, std::uint64_t index) {
    if (index % 17 == 5) {
        /* non-exact complex whose raw class count strictly exceeds the
         * subgroup order at desk scale; kept in rotation so the strictness
         * path stays exercised */
        Module P = smallest_block(r);
        Manifest man;
        man.ring = r;
        man.complexes.emplace("X", direct_sum(sphere(P, 1), sphere(P, 0)));
        man.modules.emplace("C", P);
        man.classes.emplace("F", TestClass::free_class(r));
        return man;
    }
    const bool tiny = index % 4 == 1;
    for (int attempt = 0; attempt < 8; ++attempt) {
        ChainComplex X =
            tiny || attempt >= 4
                ? fuzz_complex(fs, r, 0, 2, 1)
                : (fs.percent(40) ? fuzz_exact_complex(fs, r, 3)
                                  : fuzz_complex(fs, r, -static_cast<long>(fs.below(2)),
                                                 2 + fs.below(2), 2));
        Module C = biased_cyclic(fs, r);
        if (window_order(X) > 2048) continue;
        Int eq = ext_group(1, quotient(X, 0).obj, C).order();
        Int ez = ext_group(1, C, cycles(X, 0).obj).order();
        if (eq > 32 || ez > 32) continue;
        if (eq == 1 && ez == 1 && attempt < 6 && fs.percent(70)) continue;
        Manifest man;
        man.ring = r;
        man.complexes.emplace("X", std::move(X));
        man.modules.emplace("C", std::move(C));
        man.classes.emplace("F", fs.percent(35) ? TestClass::free_class(r)
                                                : fuzz_class(fs, r, fs.percent(60)));
        return man;
    }
    Manifest man;
    man.ring = r;
    Module P = smallest_block(r);
    man.complexes.emplace("X", sphere(P, 0));
    man.modules.emplace("C", P);
    man.classes.emplace("F", TestClass::free_class(r));
    return man;
}

Manifest build_sphere_iso(FuzzStream& fs, const Ring& r) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        ChainComplex X;
        TestClass F = TestClass::free_class(r);
        if (attempt < 6 && fs.percent(60)) {
            X = direct_sum(disk(fuzz_module(fs, r, 2), 1),
                           fs.percent(50) ? disk(fuzz_module(fs, r, 1), fs.percent(50) ? 0 : 2)
                                          : ChainComplex::make(r, 0, {}, {}));
            F = fuzz_class(fs, r, true);
        } else {
            X = fuzz_exact_complex(fs, r, 4);
        }
        Module C = biased_cyclic(fs, r);
        if (window_order(X) > 2048) continue;
        Int eq = ext_group(1, quotient(X, 0).obj, C).order();
        Int ez = ext_group(1, C, cycles(X, 0).obj).order();
        if (eq > 32 || ez > 32) continue;
        if (eq == 1 && ez == 1 && attempt < 5 && fs.percent(60)) continue;
        if (!is_exact(X) || !is_hom_F_exact(X, F) || !is_extension_closed(F)) continue;
        Manifest man;
        man.ring = r;
        man.complexes.emplace("X", std::move(X));
        man.modules.emplace("C", std::move(C));
        man.classes.emplace("F", std::move(F));
        return man;
    }
    Manifest man;
    man.ring = r;
    Module P = smallest_block(r);
    man.complexes.emplace("X", disk(P, 1));
    man.modules.emplace("C", P);
    man.classes.emplace("F", TestClass::free_class(r));
    return man;
}

Manifest build_gext(FuzzStream& fs, const Ring& r) {
    Manifest man;
    man.ring = r;
    man.modules.emplace("M", fuzz_module(fs, r, fs.percent(25) ? 3 : 2));
    man.modules.emplace("D", fuzz_module(fs, r, 2));
    return man;
}

Manifest build_dwdg(FuzzStream& fs, const Ring& r) {
    Manifest man;
    man.ring = r;
    std::size_t k = 1 + fs.below(2);
    for (std::size_t t = 0; t < k; ++t) {
        ChainComplex X = fs.percent(40) ? fuzz_exact_complex(fs, r, 3)
                                        : fuzz_complex(fs, r, 0, 2 + fs.below(2), 2);
        man.complexes.emplace("X" + std::to_string(t + 1), std::move(X));
    }
    return man;
}

Manifest build_spheres(FuzzStream& fs, const Ring& r) {
    for (int attempt = 0; attempt < 8; ++attempt) {
        ChainComplex X = fuzz_exact_complex(fs, r, attempt < 4 ? 4 : 3);
        Module M = fs.percent(30) ? fuzz_module(fs, r, 2) : biased_cyclic(fs, r);
        if (!is_exact(X) || window_order(X) > 2048) continue;
        if (ext_group(1, quotient(X, 0).obj, M).order() > 32) continue;
        Int e0 = ext_group(1, X.at(0), M).order();
        if (e0 > 64) continue;
        if (e0 == 1 && attempt < 5 && fs.percent(50)) continue;
        Manifest man;
        man.ring = r;
        man.complexes.emplace("X", std::move(X));
        man.modules.emplace("M", std::move(M));
        return man;
    }
    Manifest man;
    man.ring = r;
    Module P = smallest_block(r);
    man.complexes.emplace("X", disk(P, 1));
    man.modules.emplace("M", P);
    return man;
}

}  // namespace

VerificationReport run_manifest_case(const std::string& prop, const Manifest& man,
                                     long degree) {
    const auto& ids = all_prop_ids();
    if (std::find(ids.begin(), ids.end(), prop) == ids.end())
        throw ParseError("unknown proposition id '" + prop + "'");
    const int variant = prop.back() - '0';

    if (starts_with(prop, "1."))
        return verify_adjunction(variant, man.complex_at("X"), man.module_at("C"), degree);
    if (starts_with(prop, "4.2."))
        return verify_prop_4_2(man.complex_at("X"), man.module_at("C"), degree,
                               man.class_at("F"), variant);
    if (prop == "4.dwsd") {
        const ChainComplex& A = man.complex_at("sub");
        const ChainComplex& B = man.complex_at("middle");
        const ChainComplex& C = man.complex_at("quot");
        ComplexExtension S = ComplexExtension::make(chain_map_slot(man, "mono", A, B),
                                                    chain_map_slot(man, "epi", B, C));
        return verify_relativedwsd(S, man.class_at("F"));
    }
    if (starts_with(prop, "5."))
        return verify_prop_5(man.complex_at("X"), man.module_at("C"), degree,
                             man.class_at("F"), variant,
                             starts_with(prop, "5.mono.") ? "mono" : "iso");

    GorensteinContext ctx = GorensteinContext::make(man.ring);
    if (prop == "6.gext")
        return verify_isosgext(man.module_at("M"), man.module_at("D"), ctx);
    if (prop == "6.dwdg") {
        std::vector<ChainComplex> sample;
        for (const auto& [name, X] : man.complexes) {
            (void)name;
            sample.push_back(X);
        }
        return verify_dw_eq_dg(sample, ctx);
    }
    return verify_isosgorspheres(man.complex_at("X"), man.module_at("M"), degree, ctx);
}

Manifest fuzz_case_manifest(const std::string& prop, std::uint64_t seed, std::uint64_t index,
                            const std::optional<Int>& ringN) {
    const auto& ids = all_prop_ids();
    if (std::find(ids.begin(), ids.end(), prop) == ids.end())
        throw ParseError("unknown proposition id '" + prop + "'");
    FuzzStream fs(seed, index);
    Ring r = ringN ? Ring::make(*ringN) : fuzz_ring(index);

    if (starts_with(prop, "1.")) return build_adjunction(fs, r);
    if (starts_with(prop, "4.2.")) return build_disk_iso(fs, r);
    if (prop == "4.dwsd") return build_dwsd(fs, r);
    if (starts_with(prop, "5.mono.")) return build_sphere_mono(fs, r, index);
    if (starts_with(prop, "5.iso.")) return build_sphere_iso(fs, r);
    if (prop == "6.gext") return build_gext(fs, r);
    if (prop == "6.dwdg") return build_dwdg(fs, r);
    return build_spheres(fs, r);
}

VerificationReport run_fuzz_case(const std::string& prop, std::uint64_t seed,
                                 std::uint64_t index, const std::optional<Int>& ringN) {
    return run_manifest_case(prop, fuzz_case_manifest(prop, seed, index, ringN));
}

}  // namespace homext
