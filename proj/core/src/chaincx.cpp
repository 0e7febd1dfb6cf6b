#include <homext/chaincx.hpp>

#include <algorithm>

namespace homext {

namespace {

long union_lo(const ChainComplex& X, const ChainComplex& Y) {
    if (X.is_zero()) return Y.lo();
    if (Y.is_zero()) return X.lo();
    return std::min(X.lo(), Y.lo());
}
long union_hi(const ChainComplex& X, const ChainComplex& Y) {
    if (X.is_zero()) return Y.hi();
    if (Y.is_zero()) return X.hi();
    return std::max(X.hi(), Y.hi());
}

}  // namespace

ChainComplex ChainComplex::make(Ring r, long lo, std::vector<Module> mods,
                                std::vector<Morphism> diffs) {
    for (const auto& M : mods)
        if (!(M.ring == r)) throw PreconditionError("chain complex: mixed rings");
    std::size_t want = mods.size() > 1 ? mods.size() - 1 : 0;
    if (diffs.size() != want)
        throw PreconditionError("chain complex: differential count mismatch");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (!(diffs[i].src == mods[i + 1]) || !(diffs[i].dst == mods[i]))
            throw PreconditionError("chain complex: differential shape mismatch");
        if (i + 1 < diffs.size() && !compose(diffs[i], diffs[i + 1]).is_zero())
            throw PreconditionError("chain complex: d*d nonzero");
    }
    // canonical form: strip zero modules off both ends
    std::size_t a = 0, b = mods.size();
    while (a < b && mods[a].is_zero()) ++a;
    while (b > a && mods[b - 1].is_zero()) --b;
    ChainComplex X;
    X.ring = std::move(r);
    if (a == b) {
        X.lo_ = 0;
        return X;
    }
    X.lo_ = lo + static_cast<long>(a);
    X.mods.assign(mods.begin() + a, mods.begin() + b);
    if (b - a > 1) X.diffs.assign(diffs.begin() + a, diffs.begin() + (b - 1));
    return X;
}

ChainComplex ChainComplex::zero_complex(const Ring& r) {
    ChainComplex X;
    X.ring = r;
    return X;
}

Module ChainComplex::at(long m) const {
    if (is_zero() || m < lo() || m > hi()) return Module::zero(ring);
    return mods[static_cast<std::size_t>(m - lo_)];
}

Morphism ChainComplex::diff(long m) const {
    if (!is_zero() && m > lo() && m <= hi())
        return diffs[static_cast<std::size_t>(m - lo_ - 1)];
    return Morphism::zero(at(m), at(m - 1));
}

bool ChainComplex::operator==(const ChainComplex& o) const {
    if (!(ring == o.ring) || mods.size() != o.mods.size()) return false;
    if (!mods.empty() && lo_ != o.lo_) return false;
    for (std::size_t i = 0; i < mods.size(); ++i)
        if (!(mods[i] == o.mods[i])) return false;
    for (std::size_t i = 0; i < diffs.size(); ++i)
        if (!(diffs[i] == o.diffs[i])) return false;
    return true;
}

Module component(const ChainComplex& X, long m) { return X.at(m); }

ChainComplex sphere(const Module& C, long m) {
    return ChainComplex::make(C.ring, m, {C}, {});
}

ChainComplex disk(const Module& C, long m) {
    if (C.is_zero()) return ChainComplex::zero_complex(C.ring);
    return ChainComplex::make(C.ring, m - 1, {C, C}, {Morphism::identity(C)});
}

ChainComplex direct_sum(const ChainComplex& X, const ChainComplex& Y) {
    if (X.is_zero()) return Y;
    if (Y.is_zero()) return X;
    long lo = union_lo(X, Y), hi = union_hi(X, Y);
    std::vector<BiproductResult> bp;
    for (long m = lo; m <= hi; ++m) bp.push_back(biproduct(X.at(m), Y.at(m)));
    std::vector<Module> mods;
    std::vector<Morphism> diffs;
    for (long m = lo; m <= hi; ++m) mods.push_back(bp[m - lo].sum);
    for (long m = lo + 1; m <= hi; ++m) {
        const auto& s = bp[m - lo];
        const auto& d = bp[m - 1 - lo];
        diffs.push_back(add(compose(d.iA, compose(X.diff(m), s.pA)),
                            compose(d.iB, compose(Y.diff(m), s.pB))));
    }
    return ChainComplex::make(X.ring, lo, std::move(mods), std::move(diffs));
}

ChainMap ChainMap::make(ChainComplex X, ChainComplex Y,
                        std::vector<Morphism> comps_on_overlap) {
    ChainMap f;
    long olo = std::max(X.lo(), Y.lo());
    long ohi = std::min(X.hi(), Y.hi());
    std::size_t want = ohi >= olo ? static_cast<std::size_t>(ohi - olo + 1) : 0;
    if (comps_on_overlap.size() != want)
        throw PreconditionError("chain map: component count mismatch");
    for (std::size_t i = 0; i < want; ++i) {
        long m = olo + static_cast<long>(i);
        if (!(comps_on_overlap[i].src == X.at(m)) || !(comps_on_overlap[i].dst == Y.at(m)))
            throw PreconditionError("chain map: component shape mismatch");
    }
    f.X = std::move(X);
    f.Y = std::move(Y);
    f.lo_ = olo;
    f.comps = std::move(comps_on_overlap);
    if (!f.X.is_zero() && !f.Y.is_zero()) {
        long ulo = union_lo(f.X, f.Y), uhi = union_hi(f.X, f.Y);
        for (long m = ulo; m <= uhi + 1; ++m)
            if (!(compose(f.Y.diff(m), f.at(m)) == compose(f.at(m - 1), f.X.diff(m))))
                throw PreconditionError("chain map: square does not commute");
    }
    return f;
}

ChainMap ChainMap::zero(const ChainComplex& X, const ChainComplex& Y) {
    long olo = std::max(X.lo(), Y.lo());
    long ohi = std::min(X.hi(), Y.hi());
    std::vector<Morphism> comps;
    for (long m = olo; m <= ohi; ++m) comps.push_back(Morphism::zero(X.at(m), Y.at(m)));
    return make(X, Y, std::move(comps));
}

ChainMap ChainMap::identity(const ChainComplex& X) {
    std::vector<Morphism> comps;
    for (long m = X.lo(); m <= X.hi(); ++m) comps.push_back(Morphism::identity(X.at(m)));
    return make(X, X, std::move(comps));
}

Morphism ChainMap::at(long m) const {
    long ohi = lo_ + static_cast<long>(comps.size()) - 1;
    if (!comps.empty() && m >= lo_ && m <= ohi)
        return comps[static_cast<std::size_t>(m - lo_)];
    return Morphism::zero(X.at(m), Y.at(m));
}

bool ChainMap::is_zero() const {
    for (const auto& c : comps)
        if (!c.is_zero()) return false;
    return true;
}

bool ChainMap::operator==(const ChainMap& o) const {
    if (!(X == o.X) || !(Y == o.Y) || comps.size() != o.comps.size()) return false;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (!(comps[i] == o.comps[i])) return false;
    return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
    if (!(f.Y == g.X)) throw PreconditionError("chain map compose: shape mismatch");
    long olo = std::max(f.X.lo(), g.Y.lo());
    long ohi = std::min(f.X.hi(), g.Y.hi());
    std::vector<Morphism> comps;
    for (long m = olo; m <= ohi; ++m) comps.push_back(compose(g.at(m), f.at(m)));
    return ChainMap::make(f.X, g.Y, std::move(comps));
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
    if (!(f.X == g.X) || !(f.Y == g.Y)) throw PreconditionError("chain map add: shape mismatch");
    std::vector<Morphism> comps;
    for (std::size_t i = 0; i < f.comps.size(); ++i) comps.push_back(add(f.comps[i], g.comps[i]));
    return ChainMap::make(f.X, f.Y, std::move(comps));
}

ChainMap sub(const ChainMap& f, const ChainMap& g) {
    if (!(f.X == g.X) || !(f.Y == g.Y)) throw PreconditionError("chain map sub: shape mismatch");
    std::vector<Morphism> comps;
    for (std::size_t i = 0; i < f.comps.size(); ++i) comps.push_back(sub(f.comps[i], g.comps[i]));
    return ChainMap::make(f.X, f.Y, std::move(comps));
}

bool is_iso_map(const ChainMap& f) {
    if (f.X.is_zero() || f.Y.is_zero()) {
        // only mutual zero complexes can be isomorphic through f
        return f.X.is_zero() && f.Y.is_zero();
    }
    for (long m = union_lo(f.X, f.Y); m <= union_hi(f.X, f.Y); ++m)
        if (!is_iso(f.at(m))) return false;
    return true;
}

bool is_mono_map(const ChainMap& f) {
    for (long m = f.X.lo(); m <= f.X.hi(); ++m)
        if (!is_mono(f.at(m))) return false;
    return true;
}

bool is_epi_map(const ChainMap& f) {
    for (long m = f.Y.lo(); m <= f.Y.hi(); ++m)
        if (!is_epi(f.at(m))) return false;
    return true;
}

SubObject cycles(const ChainComplex& X, long m) { return kernel(X.diff(m)); }
SubObject boundaries(const ChainComplex& X, long m) { return image(X.diff(m + 1)); }
QuotObject quotient(const ChainComplex& X, long m) { return cokernel(X.diff(m + 1)); }

Morphism cycle_map(const ChainMap& f, long m, const SubObject& zX, const SubObject& zY) {
    auto u = factor_through_mono(zY.mono, compose(f.at(m), zX.mono));
    if (!u) throw std::logic_error("cycle_map: induced map does not exist");
    return *u;
}

Morphism quotient_map(const ChainMap& f, long m, const QuotObject& qX, const QuotObject& qY) {
    auto u = factor_through_epi(qX.epi, compose(qY.epi, f.at(m)));
    if (!u) throw std::logic_error("quotient_map: induced map does not exist");
    return *u;
}

HomologyAt homology_at(const ChainComplex& X, long m) {
    const Module Xm = X.at(m);
    const std::size_t k = Xm.rank();
    const Morphism dm = X.diff(m);
    const Morphism dup = X.diff(m + 1);
    CongruenceSystem cs(k, X.ring.N);
    for (std::size_t i = 0; i < dm.dst.rank(); ++i) {
        std::vector<Int> row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dm.mat.at(i, j);
        cs.add(row, 0, dm.dst.factors[i]);
    }
    IntMatrix cyc = cs.solve().lattice;
    IntMatrix rel = hstack(dup.mat, IntMatrix::diag(Xm.factors));
    Subquotient sq = present_subquotient(cyc, rel);
    return HomologyAt{Module::make(X.ring, sq.factors), sq};
}

Module homology(const ChainComplex& X, long m) { return homology_at(X, m).group; }

Morphism homology_map(const ChainMap& f, long m, const HomologyAt& hX, const HomologyAt& hY) {
    const std::size_t s = hX.group.rank(), t = hY.group.rank();
    IntMatrix mat(t, s);
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<Int> v = hX.sq.gen(j);
        std::vector<Int> w(f.at(m).dst.rank(), 0);
        const IntMatrix& F = f.at(m).mat;
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t l = 0; l < v.size(); ++l) w[i] += F.at(i, l) * v[l];
        std::vector<Int> c = hY.sq.coords(w);
        for (std::size_t i = 0; i < t; ++i) mat.at(i, j) = c[i];
    }
    return Morphism::make(hX.group, hY.group, std::move(mat));
}

bool is_exact(const ChainComplex& X) {
    for (long m = X.lo(); m <= X.hi(); ++m)
        if (!homology(X, m).is_zero()) return false;
    return true;
}

ChainComplex dualize_complex(const ChainComplex& X) {
    if (X.is_zero()) return X;
    const std::size_t n = X.mods.size();
    std::vector<Module> mods;
    std::vector<Morphism> diffs;
    for (std::size_t j = 0; j < n; ++j) mods.push_back(dual(X.mods[n - 1 - j]));
    for (std::size_t i = 0; i + 1 < n; ++i) diffs.push_back(dualize(X.diffs[n - 2 - i]));
    return ChainComplex::make(X.ring, -X.hi(), std::move(mods), std::move(diffs));
}

ChainMap dualize_chain_map(const ChainMap& f) {
    ChainComplex DX = dualize_complex(f.X), DY = dualize_complex(f.Y);
    long olo = std::max(DY.lo(), DX.lo());
    long ohi = std::min(DY.hi(), DX.hi());
    std::vector<Morphism> comps;
    for (long m = olo; m <= ohi; ++m) comps.push_back(dualize(f.at(-m)));
    return ChainMap::make(std::move(DY), std::move(DX), std::move(comps));
}

ChainMapGroup chain_map_group(const ChainComplex& X, const ChainComplex& Y) {
    MorphismSystem ms(X.ring);
    long olo = std::max(X.lo(), Y.lo());
    long ohi = std::min(X.hi(), Y.hi());
    std::vector<std::size_t> blk;
    for (long m = olo; m <= ohi; ++m) blk.push_back(ms.add_unknown(X.at(m), Y.at(m)));
    auto have = [&](long m) { return m >= olo && m <= ohi; };
    if (!X.is_zero() && !Y.is_zero()) {
        for (long m = union_lo(X, Y); m <= union_hi(X, Y) + 1; ++m) {
            std::vector<MorphismSystem::Term> terms;
            if (have(m))
                terms.push_back({Y.diff(m).mat, blk[m - olo], IntMatrix::identity(X.at(m).rank())});
            if (have(m - 1)) {
                IntMatrix L = IntMatrix::identity(Y.at(m - 1).rank());
                for (auto& v : L.a) v = -v;
                terms.push_back({std::move(L), blk[m - 1 - olo], X.diff(m).mat});
            }
            if (terms.empty()) continue;
            ms.add_equation(std::move(terms), X.at(m), Y.at(m - 1),
                            IntMatrix(Y.at(m - 1).rank(), X.at(m).rank()));
        }
    }
    return ChainMapGroup{X, Y, olo, ms.solution_group()};
}

ChainMap ChainMapGroup::generator(std::size_t t) const {
    return ChainMap::make(X, Y, g.generator(t));
}

ChainMap ChainMapGroup::from_coeffs(const std::vector<Int>& c) const {
    return ChainMap::make(X, Y, g.combine(c));
}

std::vector<Int> ChainMapGroup::coeffs(const ChainMap& f) const {
    return g.coords(f.comps);
}

void ChainMapGroup::for_each(const std::function<void(const ChainMap&)>& fn) const {
    const auto& fac = g.factors();
    std::vector<Int> c(fac.size(), 0);
    while (true) {
        fn(from_coeffs(c));
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < fac[i]) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) return;
    }
}

bool is_homotopic_to_zero(const ChainMap& f) {
    const ChainComplex& X = f.X;
    const ChainComplex& Y = f.Y;
    if (X.is_zero() || Y.is_zero()) return true;
    MorphismSystem ms(X.ring);
    long slo = std::max(X.lo(), Y.lo() - 1);
    long shi = std::min(X.hi(), Y.hi() - 1);
    std::vector<std::size_t> blk;
    for (long m = slo; m <= shi; ++m) blk.push_back(ms.add_unknown(X.at(m), Y.at(m + 1)));
    auto have = [&](long m) { return m >= slo && m <= shi; };
    for (long m = union_lo(X, Y); m <= union_hi(X, Y); ++m) {
        std::vector<MorphismSystem::Term> terms;
        if (have(m))
            terms.push_back({Y.diff(m + 1).mat, blk[m - slo], IntMatrix::identity(X.at(m).rank())});
        if (have(m - 1))
            terms.push_back({IntMatrix::identity(Y.at(m).rank()), blk[m - 1 - slo], X.diff(m).mat});
        ms.add_equation(std::move(terms), X.at(m), Y.at(m), f.at(m).mat);
    }
    return ms.solve().has_value();
}

bool is_homotopic(const ChainMap& f, const ChainMap& g) {
    return is_homotopic_to_zero(sub(f, g));
}

ChainComplex hom_complex(const Module& G, const ChainComplex& X) {
    if (X.is_zero()) return ChainComplex::zero_complex(X.ring);
    std::vector<HomGroup> hg;
    std::vector<Subquotient> pres;
    std::vector<Module> mods;
    for (long m = X.lo(); m <= X.hi(); ++m) {
        hg.push_back(hom_group(G, X.at(m)));
        std::vector<Int> orders = hg.back().orders;
        std::size_t k = orders.size();
        Subquotient sq = present_subquotient(IntMatrix::identity(k), IntMatrix::diag(orders));
        mods.push_back(Module::make(X.ring, sq.factors));
        pres.push_back(std::move(sq));
    }
    std::vector<Morphism> diffs;
    for (long m = X.lo() + 1; m <= X.hi(); ++m) {
        std::size_t iu = m - X.lo(), id = iu - 1;
        const Module& src = mods[iu];
        const Module& dst = mods[id];
        IntMatrix mat(dst.rank(), src.rank());
        for (std::size_t t = 0; t < src.rank(); ++t) {
            Morphism a = hg[iu].from_coeffs(pres[iu].gen(t));
            std::vector<Int> c = pres[id].coords(hg[id].coeffs(compose(X.diff(m), a)));
            for (std::size_t i = 0; i < dst.rank(); ++i) mat.at(i, t) = c[i];
        }
        diffs.push_back(Morphism::make(src, dst, std::move(mat)));
    }
    return ChainComplex::make(X.ring, X.lo(), std::move(mods), std::move(diffs));
}

bool is_hom_F_exact(const ChainComplex& X, const TestClass& F) {
    for (const auto& G : F.indecomposables())
        if (!is_exact(hom_complex(G, X))) return false;
    return true;
}

std::optional<bool> class_membership(const ChainComplex& X, const TestClass& F,
                                     ComplexClassKind kind) {
    switch (kind) {
        case ComplexClassKind::DegreewiseF: {
            for (long m = X.lo(); m <= X.hi(); ++m)
                if (!F.contains(X.at(m))) return false;
            return true;
        }
        case ComplexClassKind::FComplex: {
            if (!is_exact(X)) return false;
            for (long m = X.lo(); m <= X.hi(); ++m)
                if (!F.contains(cycles(X, m).obj)) return false;
            return true;
        }
        case ComplexClassKind::DgF: {
            // decidable only where dg and dw coincide: the full class
            if (F.piece_set() != TestClass::all_class(X.ring).piece_set())
                return std::nullopt;
            return class_membership(X, F, ComplexClassKind::DegreewiseF);
        }
    }
    return std::nullopt;
}

}  // namespace homext
