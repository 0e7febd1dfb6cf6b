#include <homext/extalg.hpp>

#include <algorithm>
#include <map>

namespace homext {

namespace {

/* odometer over mixed radices */
void for_each_tuple(const std::vector<Int>& radix,
                    const std::function<void(const std::vector<Int>&)>& fn) {
    std::vector<Int> c(radix.size(), 0);
    while (true) {
        fn(c);
        std::size_t i = 0;
        while (i < c.size()) {
            if (++c[i] < radix[i]) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) return;
    }
}

}  // namespace

Extension Extension::make(std::vector<Morphism> maps) {
    if (maps.size() < 2) throw PreconditionError("extension: degree must be at least 1");
    for (std::size_t j = 0; j + 1 < maps.size(); ++j)
        if (!(maps[j].dst == maps[j + 1].src))
            throw PreconditionError("extension: maps do not compose");
    Extension S{std::move(maps)};
    if (!is_exact(complex_of(S))) throw PreconditionError("extension: sequence not exact");
    return S;
}

Extension Extension::split_extension(const Module& C, const Module& D) {
    BiproductResult bp = biproduct(D, C);
    return make({bp.iA, bp.pB});
}

Module Extension::middle() const {
    if (degree() != 1) throw PreconditionError("extension middle: degree 1 only");
    return maps[0].dst;
}

ChainComplex complex_of(const Extension& S) {
    const std::size_t n = S.maps.size();
    std::vector<Module> mods;
    std::vector<Morphism> diffs;
    mods.push_back(S.quot());
    for (std::size_t r = 0; r < n; ++r) {
        mods.push_back(S.maps[n - 1 - r].src);
        diffs.push_back(S.maps[n - 1 - r]);
    }
    return ChainComplex::make(S.quot().ring, 0, std::move(mods), std::move(diffs));
}

Extension dualize_extension(const Extension& S) {
    std::vector<Morphism> maps;
    for (std::size_t j = S.maps.size(); j > 0; --j) maps.push_back(dualize(S.maps[j - 1]));
    return Extension::make(std::move(maps));
}

bool is_related(const Extension& S, const Extension& S2) {
    if (S.degree() != S2.degree()) throw PreconditionError("is_related: degree mismatch");
    if (!(S.sub() == S2.sub()) || !(S.quot() == S2.quot()))
        throw PreconditionError("is_related: endpoint mismatch");
    const std::size_t n = S.maps.size();
    MorphismSystem ms(S.sub().ring);
    std::vector<std::size_t> u(n + 1, 0);  // positions 1..n-1 get unknowns
    for (std::size_t t = 1; t < n; ++t) u[t] = ms.add_unknown(S.maps[t].src, S2.maps[t].src);
    for (std::size_t j = 0; j < n; ++j) {
        // S2.maps[j] o u_j = u_{j+1} o S.maps[j], ends pinned to identities
        if (j == 0) {
            ms.eq_right(u[1], S.maps[0], S2.maps[0]);
        } else if (j == n - 1) {
            ms.eq_left(S2.maps[j], u[j], S.maps[j]);
        } else {
            const Module& Ssrc = S.maps[j].src;
            const Module& Ddst = S2.maps[j].dst;
            IntMatrix negI = IntMatrix::identity(Ddst.rank());
            for (auto& v : negI.a) v = -v;
            ms.add_equation({{S2.maps[j].mat, u[j], IntMatrix::identity(Ssrc.rank())},
                             {std::move(negI), u[j + 1], S.maps[j].mat}},
                            Ssrc, Ddst, IntMatrix(Ddst.rank(), Ssrc.rank()));
        }
    }
    return ms.solve().has_value();
}

bool is_equivalent(const Extension& S, const Extension& S2) {
    if (S.degree() != 1) throw PreconditionError("is_equivalent: degree 1 only");
    return is_related(S, S2);
}

Extension baer_sum(const Extension& S1, const Extension& S2) {
    if (S1.degree() != 1 || S2.degree() != 1)
        throw PreconditionError("baer_sum: degree 1 only");
    if (!(S1.sub() == S2.sub()) || !(S1.quot() == S2.quot()))
        throw PreconditionError("baer_sum: endpoint mismatch");
    const Module C = S1.quot(), D = S1.sub();
    BiproductResult bpE = biproduct(S1.middle(), S2.middle());
    BiproductResult bpC = biproduct(C, C);
    BiproductResult bpD = biproduct(D, D);
    Morphism alpha2 = add(compose(bpE.iA, compose(S1.alpha(), bpD.pA)),
                          compose(bpE.iB, compose(S2.alpha(), bpD.pB)));
    Morphism beta2 = add(compose(bpC.iA, compose(S1.beta(), bpE.pA)),
                         compose(bpC.iB, compose(S2.beta(), bpE.pB)));
    Morphism diagC = add(bpC.iA, bpC.iB);
    Morphism codiagD = add(bpD.pA, bpD.pB);
    PullbackResult pb = pullback(beta2, diagC);
    Morphism intoP = pullback_factor(pb, alpha2, Morphism::zero(bpD.sum, C));
    PushoutResult po = pushout(intoP, codiagD);
    Morphism epi = pushout_factor(po, pb.toB, Morphism::zero(D, C));
    return Extension::make({po.fromB, epi});
}

Extension ext_pushforward(const Extension& S, const Morphism& g) {
    if (S.degree() != 1) throw PreconditionError("ext_pushforward: degree 1 only");
    if (!(g.src == S.sub())) throw PreconditionError("ext_pushforward: domain mismatch");
    PushoutResult po = pushout(S.alpha(), g);
    Morphism epi = pushout_factor(po, S.beta(), Morphism::zero(g.dst, S.quot()));
    return Extension::make({po.fromB, epi});
}

Extension ext_pullback(const Extension& S, const Morphism& h) {
    if (S.degree() != 1) throw PreconditionError("ext_pullback: degree 1 only");
    if (!(h.dst == S.quot())) throw PreconditionError("ext_pullback: codomain mismatch");
    PullbackResult pb = pullback(S.beta(), h);
    Morphism mono = pullback_factor(pb, S.alpha(), Morphism::zero(S.sub(), h.src));
    return Extension::make({mono, pb.toB});
}

Resolution free_resolution(const Module& M, std::size_t depth) {
    Resolution res;
    res.target = M;
    Module F0 = Module::free_module(M.ring, M.rank());
    IntMatrix I0 = IntMatrix::identity(M.rank());
    res.frees.push_back(F0);
    res.maps.push_back(Morphism::make(F0, M, I0));
    for (std::size_t k = 1; k <= depth; ++k) {
        SubObject K = kernel(res.maps.back());
        Module Fk = Module::free_module(M.ring, K.obj.rank());
        Morphism cover = Morphism::make(Fk, K.obj, IntMatrix::identity(K.obj.rank()));
        res.frees.push_back(Fk);
        res.maps.push_back(compose(K.mono, cover));
    }
    return res;
}

ExtGroup ext_group_from(Resolution res, std::size_t i, const Module& D) {
    if (i < 1) throw PreconditionError("ext_group: degree must be at least 1");
    if (res.maps.size() < i + 2)
        throw PreconditionError("ext_group: resolution too shallow");
    HomGroup hom_i = hom_group(res.frees[i], D);
    HomGroup hom_next = hom_group(res.frees[i + 1], D);
    HomGroup hom_prev = hom_group(i >= 2 ? res.frees[i - 1] : res.frees[0], D);
    const Morphism& f_next = res.maps[i + 1];
    const Morphism& f_i = res.maps[i];

    const std::size_t k = hom_i.orders.size();
    // cocycles: coefficient vectors whose postcomposition with f_{i+1} dies
    IntMatrix T(hom_next.orders.size(), k);
    for (std::size_t t = 0; t < k; ++t) {
        std::vector<Int> c = hom_next.coeffs(compose(hom_i.generator(t), f_next));
        for (std::size_t r = 0; r < c.size(); ++r) T.at(r, t) = c[r];
    }
    CongruenceSystem cs(k, D.ring.N);
    for (std::size_t r = 0; r < T.rows; ++r) {
        std::vector<Int> row(k);
        for (std::size_t t = 0; t < k; ++t) row[t] = T.at(r, t);
        cs.add(row, 0, hom_next.orders[r]);
    }
    IntMatrix cocycles = cs.solve().lattice;
    // coboundaries: precompositions with f_i, plus the ambient relations
    IntMatrix B(k, hom_prev.orders.size());
    for (std::size_t s = 0; s < hom_prev.orders.size(); ++s) {
        std::vector<Int> c = hom_i.coeffs(compose(hom_prev.generator(s), f_i));
        for (std::size_t r = 0; r < k; ++r) B.at(r, s) = c[r];
    }
    IntMatrix rel = hstack(B, IntMatrix::diag(hom_i.orders));
    Subquotient sq = present_subquotient(cocycles, rel);
    Module group = Module::make(D.ring, sq.factors);
    Module C = res.target;
    return ExtGroup{i, std::move(C), D, std::move(res), std::move(hom_i), std::move(sq),
                    std::move(group)};
}

ExtGroup ext_group(std::size_t i, const Module& C, const Module& D) {
    return ext_group_from(free_resolution(C, i + 1), i, D);
}

Morphism ExtGroup::cocycle(std::size_t t) const { return hom_i.from_coeffs(sq.gen(t)); }

Morphism ExtGroup::cocycle_from_coords(const std::vector<Int>& c) const {
    if (c.size() != group.rank()) throw PreconditionError("ext element: coordinate arity");
    std::vector<Int> rep(hom_i.orders.size(), 0);
    for (std::size_t t = 0; t < c.size(); ++t) {
        std::vector<Int> g = sq.gen(t);
        for (std::size_t r = 0; r < rep.size(); ++r) rep[r] += c[t] * g[r];
    }
    return hom_i.from_coeffs(rep);
}

std::vector<Int> ExtGroup::coords_of(const Morphism& cocycle) const {
    if (!compose(cocycle, res.maps[i + 1]).is_zero())
        throw PreconditionError("ext coords: not a cocycle");
    return sq.coords(hom_i.coeffs(cocycle));
}

void ExtGroup::for_each_coords(const std::function<void(const std::vector<Int>&)>& fn) const {
    for_each_tuple(sq.factors, fn);
}

ExtElement phi(const Extension& S, const ExtGroup& G) {
    if (S.degree() != 1) throw PreconditionError("phi: degree 1 only");
    if (!(S.quot() == G.C) || !(S.sub() == G.D))
        throw PreconditionError("phi: endpoint mismatch");
    auto g0 = lift_through_epi(S.beta(), G.res.maps[0]);
    if (!g0) throw std::logic_error("phi: free cover failed to lift");
    auto gS = factor_through_mono(S.alpha(), compose(*g0, G.res.maps[1]));
    if (!gS) throw std::logic_error("phi: defect does not factor through the sub end");
    if (!compose(*gS, G.res.maps[2]).is_zero())
        throw std::logic_error("phi: produced a non-cocycle");
    return ExtElement{*gS, G.coords_of(*gS)};
}

Extension psi(const ExtGroup& G, const std::vector<Int>& coords) {
    if (G.i != 1) throw PreconditionError("psi: degree 1 only");
    Morphism h = G.cocycle_from_coords(coords);
    SubObject k0 = kernel(G.res.maps[0]);
    auto f1hat = factor_through_mono(k0.mono, G.res.maps[1]);
    if (!f1hat) throw std::logic_error("psi: syzygy corestriction missing");
    auto hprime = factor_through_epi(*f1hat, h);
    if (!hprime) throw std::logic_error("psi: cocycle does not factor through the syzygy");
    PushoutResult po = pushout(k0.mono, *hprime);
    Morphism epi = pushout_factor(po, G.res.maps[0], Morphism::zero(G.D, G.C));
    return Extension::make({po.fromB, epi});
}

bool is_left_relative(const Extension& S, const TestClass& F) {
    return is_hom_F_exact(complex_of(S), F);
}

bool is_right_relative(const Extension& S, const TestClass& G) {
    std::vector<Module> duals;
    for (const auto& g : G.generators) duals.push_back(dual(g));
    return is_left_relative(dualize_extension(S), TestClass::make(G.ring, std::move(duals)));
}

bool RelativeSubgroup::contains(const std::vector<Int>& coords) const {
    return std::binary_search(members.begin(), members.end(), coords);
}

namespace {

RelativeSubgroup relative_subgroup_impl(std::size_t i, const Module& C, const Module& D,
                                        const TestClass& F, bool right_side) {
    if (i != 1) throw PreconditionError("relative subgroup: degree 1 only");
    ExtGroup G = ext_group(1, C, D);
    std::vector<std::vector<Int>> members;
    G.for_each_coords([&](const std::vector<Int>& c) {
        Extension S = psi(G, c);
        bool in = right_side ? is_right_relative(S, F) : is_left_relative(S, F);
        if (in) members.push_back(c);
    });
    std::sort(members.begin(), members.end());
    RelativeSubgroup sub{std::move(G), std::move(members)};
    // the containment claims behind the subgroup structure, asserted
    if (!sub.contains(std::vector<Int>(sub.group.group.rank(), 0)))
        throw std::logic_error("relative subgroup: split class rejected");
    const auto& fac = sub.group.sq.factors;
    for (const auto& a : sub.members)
        for (const auto& b : sub.members) {
            std::vector<Int> s(a.size());
            for (std::size_t t = 0; t < a.size(); ++t) s[t] = mod_reduce(a[t] + b[t], fac[t]);
            if (!sub.contains(s))
                throw std::logic_error("relative subgroup: not closed under addition");
        }
    return sub;
}

}  // namespace

RelativeSubgroup relative_ext_subgroup(std::size_t i, const Module& C, const Module& D,
                                       const TestClass& F) {
    return relative_subgroup_impl(i, C, D, F, false);
}

RelativeSubgroup relative_ext_subgroup_right(std::size_t i, const Module& C, const Module& D,
                                             const TestClass& G) {
    return relative_subgroup_impl(i, C, D, G, true);
}

bool is_extension_closed(const TestClass& F) {
    std::vector<Module> probes = F.generators;
    for (auto& p : F.indecomposables()) probes.push_back(p);
    for (const auto& A : probes)
        for (const auto& B : probes) {
            if (A.is_zero() || B.is_zero()) continue;
            ExtGroup G = ext_group(1, A, B);
            bool ok = true;
            G.for_each_coords([&](const std::vector<Int>& c) {
                if (ok && !F.contains(psi(G, c).middle())) ok = false;
            });
            if (!ok) return false;
        }
    return true;
}

SpecialPrecover special_precover_free(const Module& M) {
    Module F0 = Module::free_module(M.ring, M.rank());
    Morphism cover = Morphism::make(F0, M, IntMatrix::identity(M.rank()));
    SubObject ker = kernel(cover);
    bool special = ext_group(1, Module::free_module(M.ring, 1), ker.obj).order() == 1;
    return SpecialPrecover{std::move(cover), std::move(ker), special};
}

namespace {

void factor_chains(const Int& N, const Int& order, const Int& minf, std::vector<Int>& cur,
                   const std::function<void(const std::vector<Int>&)>& fn) {
    if (order == 1) {
        fn(cur);
        return;
    }
    for (Int d = minf; d <= order; ++d) {
        if (order % d != 0 || N % d != 0) continue;
        // ascending chain: every later factor is a multiple of d
        if (!cur.empty() && d % cur.back() != 0) continue;
        cur.push_back(d);
        factor_chains(N, order / d, d, cur, fn);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Extension> enumerate_extension_classes(const Module& C, const Module& D) {
    const Ring& r = C.ring;
    const Int order = C.order() * D.order();
    std::vector<Extension> reps;
    std::vector<Int> chain;
    factor_chains(r.N, order, 2, chain, [&](const std::vector<Int>& fs) {
        Module E = Module::make(r, fs);
        HomGroup in = hom_group(D, E);
        HomGroup out = hom_group(E, C);
        in.for_each([&](const Morphism& a) {
            if (!is_mono(a)) return;
            out.for_each([&](const Morphism& b) {
                if (!compose(b, a).is_zero() || !is_epi(b)) return;
                /* mono + epi + zero composite + |E| = |C||D| force
                 * im a = ker b, so this is exact without the full check */
                Extension S{{a, b}};
                for (const auto& seen : reps)
                    if (is_related(seen, S)) return;
                reps.push_back(std::move(S));
            });
        });
    });
    return reps;
}

}  // namespace homext
