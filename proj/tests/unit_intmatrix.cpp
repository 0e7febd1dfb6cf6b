#include <doctest.h>

#include <homext/intmatrix.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

using namespace homext;
using boost::multiprecision::abs;
using boost::multiprecision::gcd;

namespace {

/* cofactor expansion, independent of det() under test */
Int det_cofactor(const IntMatrix& A) {
    const std::size_t n = A.rows;
    if (n == 0) return 1;
    if (n == 1) return A.at(0, 0);
    Int acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) sub.at(r - 1, cc++) = A.at(r, c);
        }
        Int term = A.at(0, j) * det_cofactor(sub);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

/* gcd of all k x k minors; 0 when every minor vanishes */
Int minor_gcd(const IntMatrix& A, std::size_t k) {
    std::vector<std::size_t> ri(k), ci(k);
    Int g = 0;
    auto rec_cols = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = A.at(ri[i], ci[j]);
            g = gcd(g, det_cofactor(sub));
            return;
        }
        for (std::size_t c = start; c < A.cols; ++c) {
            ci[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    auto rec_rows = [&](auto&& self, std::size_t pos, std::size_t start) -> void {
        if (pos == k) {
            rec_cols(rec_cols, 0, 0);
            return;
        }
        for (std::size_t r = start; r < A.rows; ++r) {
            ri[pos] = r;
            self(self, pos + 1, r + 1);
        }
    };
    rec_rows(rec_rows, 0, 0);
    return abs(g);
}

/* tiny deterministic generator for matrix entries; not the fuzz stream on
 * purpose, the oracle side should share nothing with the library */
struct MiniRng {
    std::uint64_t s = 0x9E3779B97F4A7C15ull;
    long next(long lo, long hi) {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return lo + static_cast<long>((s >> 33) % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

void check_snf_contract(const IntMatrix& A) {
    SnfFull f = snf_full(A);
    CHECK(mul(mul(f.U, A), f.V) == f.D);
    CHECK(abs(det_cofactor(f.U)) == 1);
    CHECK(abs(det_cofactor(f.V)) == 1);
    CHECK(mul(f.U, f.Uinv) == IntMatrix::identity(A.rows));
    CHECK(mul(f.V, f.Vinv) == IntMatrix::identity(A.cols));
    std::size_t r = 0;
    for (std::size_t i = 0; i < f.D.rows; ++i)
        for (std::size_t j = 0; j < f.D.cols; ++j) {
            if (i == j) continue;
            CHECK(f.D.at(i, j) == 0);
        }
    Int prev = 0;
    for (std::size_t i = 0; i < std::min(f.D.rows, f.D.cols); ++i) {
        const Int& d = f.D.at(i, i);
        CHECK(d >= 0);
        if (d != 0) {
            CHECK(r == i);  // zeros trail
            if (prev != 0) CHECK(d % prev == 0);
            prev = d;
            ++r;
        }
    }
    // d1*...*dk = gcd of k x k minors, the classical invariant
    Int prod = 1;
    for (std::size_t k = 1; k <= r; ++k) {
        prod *= f.D.at(k - 1, k - 1);
        CHECK(prod == minor_gcd(A, k));
    }
    if (r < std::min(A.rows, A.cols)) CHECK(minor_gcd(A, r + 1) == 0);
}

}  // namespace

TEST_SUITE("intmatrix") {

TEST_CASE("snf of the worked 2x2") {
    IntMatrix A(2, 2);
    A.at(0, 0) = 2; A.at(0, 1) = 4;
    A.at(1, 0) = 6; A.at(1, 1) = 8;
    SnfResult s = snf(A);
    CHECK(s.D.at(0, 0) == 2);
    CHECK(s.D.at(1, 1) == 4);
    CHECK(mul(mul(s.U, A), s.V) == s.D);
    check_snf_contract(A);
}

TEST_CASE("snf against the minor gcd invariant") {
    check_snf_contract(IntMatrix::zero(2, 3));
    check_snf_contract(IntMatrix::identity(3));
    check_snf_contract(IntMatrix::diag({6, 4}));  // needs reordering into a chain

    MiniRng rng;
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + static_cast<std::size_t>(rng.next(0, 3));
        std::size_t c = 1 + static_cast<std::size_t>(rng.next(0, 3));
        IntMatrix A(r, c);
        for (auto& e : A.a) e = rng.next(-9, 9);
        check_snf_contract(A);
    }
}

TEST_CASE("snf output is pinned, not just valid") {
    IntMatrix A(2, 2);
    A.at(0, 0) = 2; A.at(0, 1) = 4;
    A.at(1, 0) = 6; A.at(1, 1) = 8;
    SnfResult s1 = snf(A), s2 = snf(A);
    CHECK(s1.U == s2.U);
    CHECK(s1.V == s2.V);
}

TEST_CASE("floor division and reduction") {
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-8, 2) == -4);
    CHECK(mod_reduce(-1, 4) == 3);
    CHECK(mod_reduce(9, 4) == 1);
    CHECK(mod_reduce(-8, 4) == 0);
}

TEST_CASE("determinant matches cofactor expansion") {
    MiniRng rng;
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 1 + static_cast<std::size_t>(rng.next(0, 3));
        IntMatrix A(n, n);
        for (auto& e : A.a) e = rng.next(-7, 7);
        CHECK(det(A) == det_cofactor(A));
    }
}

TEST_CASE("hermite basis is canonical") {
    IntMatrix G(2, 3);
    G.at(0, 0) = 4; G.at(0, 1) = 2; G.at(0, 2) = 0;
    G.at(1, 0) = 0; G.at(1, 1) = 3; G.at(1, 2) = 5;
    IntMatrix H = hnf_basis(G);
    REQUIRE(H.rows == 2);
    REQUIRE(H.cols == 2);
    CHECK(H.at(0, 1) == 0);
    CHECK(H.at(0, 0) > 0);
    CHECK(H.at(1, 1) > 0);
    CHECK(H.at(1, 0) >= 0);
    CHECK(H.at(1, 0) < H.at(1, 1));
    // permuting the generators does not move the basis
    IntMatrix G2(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) G2.at(i, j) = G.at(i, (j + 1) % 3);
    CHECK(hnf_basis(G2) == H);
    // index equals the covolume
    CHECK(H.at(0, 0) * H.at(1, 1) == abs(minor_gcd(G, 2)));
}

TEST_CASE("integer kernel annihilates") {
    MiniRng rng;
    for (int t = 0; t < 20; ++t) {
        IntMatrix A(2, 3);
        for (auto& e : A.a) e = rng.next(-5, 5);
        IntMatrix K = int_kernel(A);
        if (K.cols == 0) continue;
        CHECK(mul(A, K).is_zero());
    }
    // rank-deficient square: kernel must be nontrivial
    IntMatrix A(2, 2);
    A.at(0, 0) = 2; A.at(0, 1) = 4;
    A.at(1, 0) = 1; A.at(1, 1) = 2;
    IntMatrix K = int_kernel(A);
    REQUIRE(K.cols == 1);
    CHECK(mul(A, K).is_zero());
}

TEST_CASE("solve_mod against exhaustive enumeration") {
    for (Int N : std::vector<Int>{4, 6}) {
        const long n = static_cast<long>(N);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b)
                for (long c = 0; c < n; ++c)
                    for (long d = 0; d < n; ++d) {
                        IntMatrix A(2, 2);
                        A.at(0, 0) = a; A.at(0, 1) = b;
                        A.at(1, 0) = c; A.at(1, 1) = d;
                        for (std::vector<Int> rhs :
                             {std::vector<Int>{0, 0}, std::vector<Int>{1, 2}}) {
                            SolveModResult r = solve_mod(A, rhs, N);
                            std::vector<Int> best;
                            long nsol0 = 0;
                            for (long x0 = 0; x0 < n; ++x0)
                                for (long x1 = 0; x1 < n; ++x1) {
                                    std::vector<Int> x{x0, x1};
                                    std::vector<Int> Ax = mul_vec(A, x);
                                    bool hom = true;
                                    bool hit = true;
                                    for (std::size_t i = 0; i < 2; ++i) {
                                        if (mod_reduce(Ax[i], N) != 0) hom = false;
                                        if (mod_reduce(Ax[i] - rhs[i], N) != 0) hit = false;
                                    }
                                    if (hom && rhs[0] == 0 && rhs[1] == 0) ++nsol0;
                                    if (hit && best.empty()) best = x;
                                }
                            CHECK(r.ok == !best.empty());
                            if (r.ok) {
                                CHECK(r.x == best);  // lex least
                                REQUIRE(r.lattice.rows == 2);
                                Int idx = r.lattice.at(0, 0) * r.lattice.at(1, 1);
                                if (rhs[0] == 0 && rhs[1] == 0)
                                    CHECK(N * N == idx * nsol0);
                                for (std::size_t j = 0; j < r.lattice.cols; ++j) {
                                    std::vector<Int> v = r.lattice.col(j);
                                    for (const Int& e : mul_vec(A, v))
                                        CHECK(mod_reduce(e, N) == 0);
                                }
                            }
                        }
                    }
    }
}

TEST_CASE("congruences with mixed moduli") {
    // x + y = 1 (mod 2), x = 2 (mod 4), over N = 4
    CongruenceSystem cs(2, 4);
    cs.add({1, 1}, 1, 2);
    cs.add({1, 0}, 2, 4);
    SolveModResult r = cs.solve();
    REQUIRE(r.ok);
    CHECK(mod_reduce(r.x[0], 4) == 2);
    CHECK(mod_reduce(r.x[0] + r.x[1], 2) == 1);
    // least solution is x = 2, y = 1
    CHECK(r.x == std::vector<Int>{2, 1});

    CongruenceSystem bad(1, 4);
    bad.add({2}, 1, 4);  // 2x = 1 (mod 4) has no solution
    CHECK(!bad.solve().ok);
}

TEST_CASE("solve_lower_tri refuses inexact division") {
    IntMatrix L = IntMatrix::diag({2, 3});
    IntMatrix B(2, 1);
    B.at(0, 0) = 4; B.at(1, 0) = 6;
    IntMatrix X = solve_lower_tri(L, B);
    CHECK(mul(L, X) == B);
    B.at(0, 0) = 3;
    CHECK_THROWS_AS(solve_lower_tri(L, B), std::logic_error);
}

}  // TEST_SUITE
