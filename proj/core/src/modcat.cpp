#include "homext/modcat.hpp"

#include <algorithm>
#include <numeric>

namespace homext {

namespace {

Int gcd_int(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_int(a, b) * b;
}

IntMatrix diag_of(const std::vector<Int>& d) { return IntMatrix::diag(d); }

}  // namespace

Module Module::make(Ring r, std::vector<Int> factors) {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] <= 1) throw PreconditionError("module factor must exceed 1");
        if (r.N % factors[i] != 0) throw PreconditionError("module factor must divide N");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw PreconditionError("module factors must form a divisibility chain");
    }
    return Module{std::move(r), std::move(factors)};
}

Module Module::free_module(Ring r, std::size_t rank) {
    std::vector<Int> f(rank, r.N);
    return Module{std::move(r), std::move(f)};
}

Int Module::order() const {
    Int o = 1;
    for (const Int& d : factors) o *= d;
    return o;
}

Morphism Morphism::make(Module src, Module dst, IntMatrix m) {
    if (m.rows != dst.rank() || m.cols != src.rank())
        throw std::logic_error("morphism matrix shape mismatch");
    if (!(src.ring == dst.ring)) throw std::logic_error("morphism across rings");
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            m.at(i, j) = mod_reduce(m.at(i, j), dst.factors[i]);
            if (src.factors[j] * m.at(i, j) % dst.factors[i] != 0)
                throw std::logic_error("morphism entry violates well-definedness");
        }
    return Morphism{std::move(src), std::move(dst), std::move(m)};
}

Morphism Morphism::zero(Module src, Module dst) {
    IntMatrix m(dst.rank(), src.rank());
    return Morphism{std::move(src), std::move(dst), std::move(m)};
}

Morphism Morphism::identity(const Module& M) {
    return Morphism{M, M, IntMatrix::identity(M.rank())};
}

Morphism compose(const Morphism& g, const Morphism& f) {
    if (!(f.dst == g.src)) throw std::logic_error("compose: middle objects differ");
    return Morphism::make(f.src, g.dst, mul(g.mat, f.mat));
}

Morphism add(const Morphism& f, const Morphism& g) {
    if (!(f.src == g.src) || !(f.dst == g.dst)) throw std::logic_error("add: shape mismatch");
    IntMatrix m = f.mat;
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] += g.mat.a[i];
    return Morphism::make(f.src, f.dst, std::move(m));
}

Morphism sub(const Morphism& f, const Morphism& g) { return add(f, negate(g)); }

Morphism negate(const Morphism& f) {
    IntMatrix m = f.mat;
    for (auto& x : m.a) x = -x;
    return Morphism::make(f.src, f.dst, std::move(m));
}

std::vector<Int> apply(const Morphism& f, const std::vector<Int>& x) {
    std::vector<Int> y = mul_vec(f.mat, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = mod_reduce(y[i], f.dst.factors[i]);
    return y;
}

Int element_order(const Module& M, const std::vector<Int>& x) {
    Int o = 1;
    for (std::size_t j = 0; j < M.rank(); ++j)
        o = lcm_int(o, M.factors[j] / gcd_int(M.factors[j], x[j]));
    return o;
}

void for_each_element(const Module& M, const std::function<void(const std::vector<Int>&)>& fn) {
    std::vector<Int> x(M.rank(), 0);
    for (;;) {
        fn(x);
        std::size_t i = 0;
        while (i < M.rank()) {
            x[i] += 1;
            if (x[i] < M.factors[i]) break;
            x[i] = 0;
            ++i;
        }
        if (i == M.rank()) return;
    }
}

/* ---- presentation machinery ---- */

Subquotient present_subquotient(const IntMatrix& sub_gens, const IntMatrix& rel_gens) {
    const std::size_t k = sub_gens.rows;
    if (rel_gens.rows != k) throw std::logic_error("present_subquotient: ambient mismatch");
    Subquotient sq;
    if (k == 0) {
        sq.B = IntMatrix(0, 0);
        sq.U = IntMatrix(0, 0);
        sq.Uinv = IntMatrix(0, 0);
        return sq;
    }
    sq.B = hnf_basis(sub_gens);
    IntMatrix R = hnf_basis(rel_gens);
    IntMatrix C = solve_lower_tri(sq.B, R);
    SnfFull f = snf_full(C);
    sq.U = std::move(f.U);
    sq.Uinv = std::move(f.Uinv);
    for (std::size_t t = 0; t < k; ++t) {
        if (f.D.at(t, t) == 0) throw std::logic_error("present_subquotient: infinite quotient");
        if (f.D.at(t, t) > 1) {
            sq.kept.push_back(t);
            sq.factors.push_back(f.D.at(t, t));
        }
    }
    return sq;
}

Int Subquotient::order() const {
    Int o = 1;
    for (const Int& d : factors) o *= d;
    return o;
}

std::vector<Int> Subquotient::coords(const std::vector<Int>& x) const {
    const std::size_t k = B.rows;
    IntMatrix xc(k, 1);
    for (std::size_t i = 0; i < k; ++i) xc.at(i, 0) = x[i];
    IntMatrix c = solve_lower_tri(B, xc);
    std::vector<Int> y(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) y[i] += U.at(i, j) * c.at(j, 0);
    std::vector<Int> out(kept.size());
    for (std::size_t t = 0; t < kept.size(); ++t) out[t] = mod_reduce(y[kept[t]], factors[t]);
    return out;
}

std::vector<Int> Subquotient::gen(std::size_t t) const {
    const std::size_t k = B.rows;
    std::vector<Int> c(k, 0);
    for (std::size_t i = 0; i < k; ++i) c[i] = Uinv.at(i, kept[t]);
    std::vector<Int> g(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) g[i] += B.at(i, j) * c[j];
    return g;
}

Int subgroup_order(const IntMatrix& lattice_basis, const std::vector<Int>& ambient) {
    Int num = 1, den = 1;
    for (const Int& d : ambient) num *= d;
    for (std::size_t i = 0; i < lattice_basis.rows; ++i) den *= lattice_basis.at(i, i);
    if (den == 0 || num % den != 0) throw std::logic_error("subgroup_order: not a sublattice");
    return num / den;
}

/* ---- kernels and friends ---- */

SubObject kernel(const Morphism& f) {
    const Module& A = f.src;
    const Module& B = f.dst;
    const Int& N = A.ring.N;
    const std::size_t kA = A.rank();

    CongruenceSystem sys(kA, N);
    std::vector<Int> row(kA);
    for (std::size_t i = 0; i < B.rank(); ++i) {
        for (std::size_t j = 0; j < kA; ++j) row[j] = f.mat.at(i, j);
        sys.add(row, 0, B.factors[i]);
    }
    SolveModResult r = sys.solve();

    Subquotient sq = present_subquotient(r.lattice, diag_of(A.factors));
    Module K = Module::make(A.ring, sq.factors);
    IntMatrix m(kA, K.rank());
    for (std::size_t t = 0; t < K.rank(); ++t) {
        std::vector<Int> g = sq.gen(t);
        for (std::size_t i = 0; i < kA; ++i) m.at(i, t) = mod_reduce(g[i], A.factors[i]);
    }
    Morphism mono = Morphism::make(K, A, std::move(m));
    return SubObject{std::move(K), std::move(mono)};
}

QuotObject cokernel(const Morphism& f) {
    const Module& B = f.dst;
    const std::size_t kB = B.rank();
    Subquotient sq =
        present_subquotient(IntMatrix::identity(kB), hstack(f.mat, diag_of(B.factors)));
    Module Q = Module::make(B.ring, sq.factors);
    IntMatrix m(Q.rank(), kB);
    std::vector<Int> e(kB, 0);
    for (std::size_t j = 0; j < kB; ++j) {
        e[j] = 1;
        std::vector<Int> c = sq.coords(e);
        for (std::size_t t = 0; t < Q.rank(); ++t) m.at(t, j) = c[t];
        e[j] = 0;
    }
    return QuotObject{Q, Morphism::make(B, Q, std::move(m))};
}

SubObject image(const Morphism& f) {
    const Module& B = f.dst;
    const std::size_t kB = B.rank();
    Subquotient sq =
        present_subquotient(hstack(f.mat, diag_of(B.factors)), diag_of(B.factors));
    Module I = Module::make(B.ring, sq.factors);
    IntMatrix m(kB, I.rank());
    for (std::size_t t = 0; t < I.rank(); ++t) {
        std::vector<Int> g = sq.gen(t);
        for (std::size_t i = 0; i < kB; ++i) m.at(i, t) = mod_reduce(g[i], B.factors[i]);
    }
    Morphism mono = Morphism::make(I, B, std::move(m));
    return SubObject{std::move(I), std::move(mono)};
}

bool is_mono(const Morphism& f) { return kernel(f).obj.is_zero(); }
bool is_epi(const Morphism& f) { return image(f).obj.order() == f.dst.order(); }
bool is_iso(const Morphism& f) { return is_mono(f) && is_epi(f); }

BiproductResult biproduct(const Module& A, const Module& B) {
    if (!(A.ring == B.ring)) throw std::logic_error("biproduct across rings");
    const std::size_t kA = A.rank(), kB = B.rank(), k = kA + kB;
    std::vector<Int> stacked = A.factors;
    stacked.insert(stacked.end(), B.factors.begin(), B.factors.end());

    Subquotient sq = present_subquotient(IntMatrix::identity(k), diag_of(stacked));
    Module S = Module::make(A.ring, sq.factors);

    IntMatrix inj(S.rank(), k);
    std::vector<Int> e(k, 0);
    for (std::size_t j = 0; j < k; ++j) {
        e[j] = 1;
        std::vector<Int> c = sq.coords(e);
        for (std::size_t t = 0; t < S.rank(); ++t) inj.at(t, j) = c[t];
        e[j] = 0;
    }
    IntMatrix prj(k, S.rank());
    for (std::size_t t = 0; t < S.rank(); ++t) {
        std::vector<Int> g = sq.gen(t);
        for (std::size_t i = 0; i < k; ++i) prj.at(i, t) = mod_reduce(g[i], stacked[i]);
    }

    auto block = [&](const IntMatrix& M, std::size_t r0, std::size_t nr, std::size_t c0,
                     std::size_t nc) {
        IntMatrix out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) out.at(i, j) = M.at(r0 + i, c0 + j);
        return out;
    };

    BiproductResult res{
        S,
        Morphism::make(A, S, block(inj, 0, S.rank(), 0, kA)),
        Morphism::make(B, S, block(inj, 0, S.rank(), kA, kB)),
        Morphism::make(S, A, block(prj, 0, kA, 0, S.rank())),
        Morphism::make(S, B, block(prj, kA, kB, 0, S.rank())),
    };
    return res;
}

PullbackResult pullback(const Morphism& f, const Morphism& g) {
    if (!(f.dst == g.dst)) throw PreconditionError("pullback: codomains differ");
    BiproductResult S = biproduct(f.src, g.src);
    Morphism h = sub(compose(f, S.pA), compose(g, S.pB));
    SubObject K = kernel(h);
    return PullbackResult{K.obj, compose(S.pA, K.mono), compose(S.pB, K.mono)};
}

PushoutResult pushout(const Morphism& f, const Morphism& g) {
    if (!(f.src == g.src)) throw PreconditionError("pushout: domains differ");
    BiproductResult S = biproduct(f.dst, g.dst);
    Morphism h = sub(compose(S.iA, f), compose(S.iB, g));
    QuotObject Q = cokernel(h);
    return PushoutResult{Q.obj, compose(Q.epi, S.iA), compose(Q.epi, S.iB)};
}

Morphism kernel_factor(const SubObject& ker, const Morphism& f, const Morphism& g) {
    if (!compose(f, g).is_zero()) throw PreconditionError("kernel_factor: composite is nonzero");
    auto u = factor_through_mono(ker.mono, g);
    if (!u) throw std::logic_error("kernel_factor: no factorization");
    return *u;
}

Morphism cokernel_factor(const QuotObject& cok, const Morphism& f, const Morphism& g) {
    if (!compose(g, f).is_zero()) throw PreconditionError("cokernel_factor: composite is nonzero");
    auto u = factor_through_epi(cok.epi, g);
    if (!u) throw std::logic_error("cokernel_factor: no factorization");
    return *u;
}

Morphism pullback_factor(const PullbackResult& pb, const Morphism& a, const Morphism& b) {
    MorphismSystem ms(pb.obj.ring);
    std::size_t u = ms.add_unknown(a.src, pb.obj);
    ms.eq_left(pb.toA, u, a);
    ms.eq_left(pb.toB, u, b);
    auto sol = ms.solve();
    if (!sol) throw PreconditionError("pullback_factor: cone does not commute");
    return (*sol)[0];
}

Morphism pushout_factor(const PushoutResult& po, const Morphism& u, const Morphism& v) {
    MorphismSystem ms(po.obj.ring);
    std::size_t w = ms.add_unknown(po.obj, u.dst);
    ms.eq_right(w, po.fromA, u);
    ms.eq_right(w, po.fromB, v);
    auto sol = ms.solve();
    if (!sol) throw PreconditionError("pushout_factor: cocone does not commute");
    return (*sol)[0];
}

/* ---- Hom groups ---- */

HomGroup hom_group(const Module& A, const Module& B) {
    HomGroup H;
    H.src = A;
    H.dst = B;
    for (std::size_t i = 0; i < B.rank(); ++i)
        for (std::size_t j = 0; j < A.rank(); ++j) {
            Int g = gcd_int(A.factors[j], B.factors[i]);
            if (g > 1) {
                H.pos.emplace_back(i, j);
                H.orders.push_back(g);
            }
        }
    return H;
}

Int HomGroup::order() const {
    Int o = 1;
    for (const Int& d : orders) o *= d;
    return o;
}

Morphism HomGroup::generator(std::size_t t) const {
    IntMatrix m(dst.rank(), src.rank());
    auto [i, j] = pos[t];
    m.at(i, j) = dst.factors[i] / orders[t];
    return Morphism::make(src, dst, std::move(m));
}

Morphism HomGroup::from_coeffs(const std::vector<Int>& c) const {
    IntMatrix m(dst.rank(), src.rank());
    for (std::size_t t = 0; t < pos.size(); ++t) {
        auto [i, j] = pos[t];
        m.at(i, j) += c[t] * (dst.factors[i] / orders[t]);
    }
    return Morphism::make(src, dst, std::move(m));
}

std::vector<Int> HomGroup::coeffs(const Morphism& f) const {
    std::vector<Int> c(pos.size());
    for (std::size_t t = 0; t < pos.size(); ++t) {
        auto [i, j] = pos[t];
        Int step = dst.factors[i] / orders[t];
        if (f.mat.at(i, j) % step != 0) throw std::logic_error("hom coeffs: not a morphism");
        c[t] = mod_reduce(f.mat.at(i, j) / step, orders[t]);
    }
    return c;
}

void HomGroup::for_each(const std::function<void(const Morphism&)>& fn) const {
    std::vector<Int> c(pos.size(), 0);
    for (;;) {
        fn(from_coeffs(c));
        std::size_t i = 0;
        while (i < c.size()) {
            c[i] += 1;
            if (c[i] < orders[i]) break;
            c[i] = 0;
            ++i;
        }
        if (i == c.size()) return;
    }
}

/* ---- duality ---- */

Module dual(const Module& M) { return M; }

Morphism dualize(const Morphism& f) {
    const Module& A = f.src;
    const Module& B = f.dst;
    IntMatrix m(A.rank(), B.rank());
    for (std::size_t i = 0; i < B.rank(); ++i)
        for (std::size_t j = 0; j < A.rank(); ++j) {
            Int q = f.mat.at(i, j) * A.factors[j];
            if (q % B.factors[i] != 0) throw std::logic_error("dualize: entry not well-defined");
            m.at(j, i) = mod_reduce(q / B.factors[i], A.factors[j]);
        }
    return Morphism::make(dual(B), dual(A), std::move(m));
}

/* ---- morphism systems ---- */

std::size_t MorphismSystem::add_unknown(Module src, Module dst) {
    if (!(src.ring == ring_) || !(dst.ring == ring_))
        throw std::logic_error("MorphismSystem: ring mismatch");
    Block b{std::move(src), std::move(dst), nvars_};
    nvars_ += b.src.rank() * b.dst.rank();
    blocks_.push_back(std::move(b));
    return blocks_.size() - 1;
}

void MorphismSystem::add_equation(std::vector<Term> terms, const Module& S, const Module& D,
                                  IntMatrix rhs) {
    if (rhs.rows != D.rank() || rhs.cols != S.rank())
        throw std::logic_error("MorphismSystem: rhs shape");
    for (const Term& t : terms) {
        const Block& b = blocks_.at(t.block);
        if (t.L.rows != D.rank() || t.L.cols != b.dst.rank() || t.R.rows != b.src.rank() ||
            t.R.cols != S.rank())
            throw std::logic_error("MorphismSystem: term shape");
    }
    eqs_.push_back(Equation{std::move(terms), S, D, std::move(rhs)});
}

void MorphismSystem::eq_left(const Morphism& L, std::size_t u, const Morphism& rhs) {
    const Block& b = blocks_.at(u);
    if (!(L.src == b.dst)) throw std::logic_error("eq_left: L domain mismatch");
    add_equation({Term{L.mat, u, IntMatrix::identity(b.src.rank())}}, b.src, L.dst, rhs.mat);
}

void MorphismSystem::eq_right(std::size_t u, const Morphism& R, const Morphism& rhs) {
    const Block& b = blocks_.at(u);
    if (!(R.dst == b.src)) throw std::logic_error("eq_right: R codomain mismatch");
    add_equation({Term{IntMatrix::identity(b.dst.rank()), u, R.mat}}, R.src, b.dst, rhs.mat);
}

CongruenceSystem MorphismSystem::build(bool homogeneous) const {
    CongruenceSystem sys(nvars_, ring_.N);
    std::vector<Int> row(nvars_, 0);
    auto clear = [&] { std::fill(row.begin(), row.end(), Int(0)); };

    for (const Block& b : blocks_) {
        for (std::size_t i = 0; i < b.dst.rank(); ++i)
            for (std::size_t j = 0; j < b.src.rank(); ++j) {
                clear();
                row[b.offset + i * b.src.rank() + j] = b.src.factors[j];
                sys.add(row, 0, b.dst.factors[i]);
            }
    }
    for (const Equation& e : eqs_) {
        for (std::size_t i = 0; i < e.D.rank(); ++i)
            for (std::size_t j = 0; j < e.S.rank(); ++j) {
                clear();
                for (const Term& t : e.terms) {
                    const Block& b = blocks_[t.block];
                    for (std::size_t s = 0; s < b.dst.rank(); ++s) {
                        if (t.L.at(i, s) == 0) continue;
                        for (std::size_t u = 0; u < b.src.rank(); ++u)
                            row[b.offset + s * b.src.rank() + u] += t.L.at(i, s) * t.R.at(u, j);
                    }
                }
                sys.add(row, homogeneous ? Int(0) : e.rhs.at(i, j), e.D.factors[i]);
            }
    }
    return sys;
}

std::vector<Morphism> MorphismSystem::slice(const std::vector<Int>& x) const {
    std::vector<Morphism> out;
    out.reserve(blocks_.size());
    for (const Block& b : blocks_) {
        IntMatrix m(b.dst.rank(), b.src.rank());
        for (std::size_t i = 0; i < b.dst.rank(); ++i)
            for (std::size_t j = 0; j < b.src.rank(); ++j)
                m.at(i, j) = x[b.offset + i * b.src.rank() + j];
        out.push_back(Morphism::make(b.src, b.dst, std::move(m)));
    }
    return out;
}

std::optional<std::vector<Morphism>> MorphismSystem::solve() const {
    SolveModResult r = build(false).solve();
    if (!r.ok) return std::nullopt;
    return slice(r.x);
}

MorphismSystem::SolutionGroup MorphismSystem::solution_group() const {
    SolveModResult r = build(true).solve();
    SolutionGroup g;
    for (const Block& b : blocks_) {
        g.srcs.push_back(b.src);
        g.dsts.push_back(b.dst);
        for (std::size_t i = 0; i < b.dst.rank(); ++i)
            for (std::size_t j = 0; j < b.src.rank(); ++j) g.ambient.push_back(b.dst.factors[i]);
    }
    g.sq = present_subquotient(r.lattice, diag_of(g.ambient));
    return g;
}

std::vector<Morphism> MorphismSystem::SolutionGroup::generator(std::size_t t) const {
    std::vector<Int> c(sq.factors.size(), 0);
    c[t] = 1;
    return combine(c);
}

std::vector<Morphism> MorphismSystem::SolutionGroup::combine(const std::vector<Int>& coeffs) const {
    std::vector<Int> x(ambient.size(), 0);
    for (std::size_t t = 0; t < coeffs.size(); ++t) {
        if (coeffs[t] == 0) continue;
        std::vector<Int> g = sq.gen(t);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += coeffs[t] * g[i];
    }
    std::vector<Morphism> out;
    std::size_t off = 0;
    for (std::size_t b = 0; b < srcs.size(); ++b) {
        IntMatrix m(dsts[b].rank(), srcs[b].rank());
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = x[off + i * m.cols + j];
        off += m.rows * m.cols;
        out.push_back(Morphism::make(srcs[b], dsts[b], std::move(m)));
    }
    return out;
}

std::vector<Int> MorphismSystem::SolutionGroup::coords(const std::vector<Morphism>& value) const {
    std::vector<Int> x;
    x.reserve(ambient.size());
    for (const Morphism& m : value)
        for (const Int& v : m.mat.a) x.push_back(v);
    return sq.coords(x);
}

std::optional<Morphism> lift_through_epi(const Morphism& e, const Morphism& g) {
    MorphismSystem ms(e.src.ring);
    std::size_t u = ms.add_unknown(g.src, e.src);
    ms.eq_left(e, u, g);
    auto sol = ms.solve();
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

std::optional<Morphism> factor_through_mono(const Morphism& m, const Morphism& g) {
    MorphismSystem ms(m.src.ring);
    std::size_t u = ms.add_unknown(g.src, m.src);
    ms.eq_left(m, u, g);
    auto sol = ms.solve();
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& g) {
    MorphismSystem ms(e.src.ring);
    std::size_t u = ms.add_unknown(e.dst, g.dst);
    ms.eq_right(u, e, g);
    auto sol = ms.solve();
    if (!sol) return std::nullopt;
    return (*sol)[0];
}

std::vector<Int> indecomposable_pieces(const Int& d) {
    std::vector<Int> out;
    Int rest = d;
    for (Int p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        Int q = 1;
        while (rest % p == 0) { q *= p; rest /= p; }
        out.push_back(q);
    }
    if (rest > 1) out.push_back(rest);
    std::sort(out.begin(), out.end());
    return out;
}

TestClass TestClass::make(Ring r, std::vector<Module> gens) {
    for (const auto& g : gens)
        if (!(g.ring == r)) throw PreconditionError("TestClass: mixed rings");
    return TestClass{r, std::move(gens)};
}

TestClass TestClass::free_class(const Ring& r) {
    return TestClass{r, {Module::free_module(r, 1)}};
}

TestClass TestClass::all_class(const Ring& r) {
    std::vector<Module> gens;
    for (const Int& q : indecomposable_pieces(r.N)) {
        Int p = 2;
        while (q % p != 0) ++p;
        for (Int a = p; ; a *= p) {
            gens.push_back(Module::make(r, {a}));
            if (a == q) break;
        }
    }
    return TestClass{r, std::move(gens)};
}

std::vector<Int> TestClass::piece_set() const {
    std::vector<Int> out;
    for (const auto& g : generators)
        for (const auto& d : g.factors)
            for (const auto& q : indecomposable_pieces(d)) out.push_back(q);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Module> TestClass::indecomposables() const {
    std::vector<Module> out;
    for (const auto& q : piece_set()) out.push_back(Module::make(ring, {q}));
    return out;
}

bool TestClass::contains(const Module& M) const {
    auto pieces = piece_set();
    for (const auto& d : M.factors)
        for (const auto& q : indecomposable_pieces(d))
            if (!std::binary_search(pieces.begin(), pieces.end(), q)) return false;
    return true;
}

}  // namespace homext
