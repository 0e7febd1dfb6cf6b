#include "homext/intmatrix.hpp"

#include <algorithm>
#include <cassert>

namespace homext {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

IntMatrix IntMatrix::diag(const std::vector<Int>& d) {
    IntMatrix D(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) D.at(i, i) = d[i];
    return D;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix T(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) T.at(j, i) = at(i, j);
    return T;
}

std::vector<Int> IntMatrix::col(std::size_t j) const {
    std::vector<Int> v(rows);
    for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

IntMatrix mul(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.rows) throw std::logic_error("mul: shape mismatch");
    IntMatrix C(A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const Int& aik = A.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

std::vector<Int> mul_vec(const IntMatrix& A, const std::vector<Int>& x) {
    if (A.cols != x.size()) throw std::logic_error("mul_vec: shape mismatch");
    std::vector<Int> y(A.rows);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (A.at(i, j) != 0) y[i] += A.at(i, j) * x[j];
    return y;
}

IntMatrix hstack(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows != B.rows) throw std::logic_error("hstack: row mismatch");
    IntMatrix C(A.rows, A.cols + B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (std::size_t j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

IntMatrix vstack(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols != B.cols) throw std::logic_error("vstack: col mismatch");
    IntMatrix C(A.rows + B.rows, A.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (std::size_t i = 0; i < B.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) C.at(A.rows + i, j) = B.at(i, j);
    return C;
}

Int det(const IntMatrix& A) {
    if (A.rows != A.cols) throw std::logic_error("det: not square");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    IntMatrix M = A;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && M.at(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(M.at(k, j), M.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

Int floor_div(const Int& a, const Int& b) {
    assert(b > 0);
    Int q = a / b;
    if (a % b != 0 && a < 0) q -= 1;
    return q;
}

Int mod_reduce(const Int& a, const Int& m) {
    assert(m > 0);
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

namespace {

/* Elementary operation bookkeeping on D = U*A*V with inverses kept in
 * lockstep. All four transforms stay unimodular by construction. */
struct SnfWork {
    IntMatrix D, U, V, Uinv, Vinv;

    explicit SnfWork(const IntMatrix& A)
        : D(A),
          U(IntMatrix::identity(A.rows)),
          V(IntMatrix::identity(A.cols)),
          Uinv(IntMatrix::identity(A.rows)),
          Vinv(IntMatrix::identity(A.cols)) {}

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < D.cols; ++c) std::swap(D.at(i, c), D.at(j, c));
        for (std::size_t c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (std::size_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < D.rows; ++r) std::swap(D.at(r, i), D.at(r, j));
        for (std::size_t r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (std::size_t c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t k = 0; k < D.cols; ++k) D.at(i, k) += c * D.at(j, k);
        for (std::size_t k = 0; k < U.cols; ++k) U.at(i, k) += c * U.at(j, k);
        for (std::size_t r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= c * Uinv.at(r, i);
    }
    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, const Int& c) {
        if (c == 0) return;
        for (std::size_t r = 0; r < D.rows; ++r) D.at(r, i) += c * D.at(r, j);
        for (std::size_t r = 0; r < V.rows; ++r) V.at(r, i) += c * V.at(r, j);
        for (std::size_t k = 0; k < Vinv.cols; ++k) Vinv.at(j, k) -= c * Vinv.at(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t r = 0; r < D.rows; ++r) D.at(r, j) = -D.at(r, j);
        for (std::size_t r = 0; r < V.rows; ++r) V.at(r, j) = -V.at(r, j);
        for (std::size_t k = 0; k < Vinv.cols; ++k) Vinv.at(j, k) = -Vinv.at(j, k);
    }
};

/* quotient with balanced remainder: x - q*p in (-p/2, p/2], p > 0 */
Int balanced_quot(const Int& x, const Int& p) {
    Int q = floor_div(x, p);
    if (2 * (x - q * p) > p) ++q;
    return q;
}

}  // namespace

SnfFull snf_full(const IntMatrix& A) {
    SnfWork w(A);
    const std::size_t n = A.rows, m = A.cols;
    const std::size_t steps = std::min(n, m);

    /* Per pass: move the least |entry| of the trailing block to (t, t), then
     * clear with balanced quotients. Any leftover remainder is at most half
     * the pivot, so the pivot at least halves between repeats and entries
     * never get the chance to snowball. */
    bool done = false;
    for (std::size_t t = 0; t < steps && !done; ++t) {
        for (;;) {
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < m; ++j) {
                    const Int& x = w.D.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (!found || ax < best) {
                        found = true;
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                done = true;  // trailing block is all zero
                break;
            }
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
            if (w.D.at(t, t) < 0) w.negate_col(t);
            const Int p = w.D.at(t, t);

            bool dirty = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (w.D.at(i, t) == 0) continue;
                w.add_row(i, t, -balanced_quot(w.D.at(i, t), p));
                if (w.D.at(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (w.D.at(t, j) == 0) continue;
                w.add_col(j, t, -balanced_quot(w.D.at(t, j), p));
                if (w.D.at(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            /* row/col t are clear; fold in any row the pivot misses so the
             * divisibility chain comes out of the main loop for free */
            bool refold = false;
            for (std::size_t i = t + 1; i < n && !refold; ++i)
                for (std::size_t j = t + 1; j < m && !refold; ++j)
                    if (w.D.at(i, j) % p != 0) {
                        w.add_row(t, i, 1);
                        refold = true;
                    }
            if (!refold) break;
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (w.D.at(t, t) < 0) w.negate_col(t);

    return SnfFull{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.Uinv),
                   std::move(w.Vinv)};
}

SnfResult snf(const IntMatrix& A) {
    SnfFull f = snf_full(A);
    return SnfResult{std::move(f.U), std::move(f.D), std::move(f.V)};
}

IntMatrix hnf_basis(const IntMatrix& G) {
    const std::size_t k = G.rows, r = G.cols;
    IntMatrix H = G;
    auto add_col = [&](std::size_t i, std::size_t j, const Int& c) {
        for (std::size_t x = 0; x < k; ++x) H.at(x, i) += c * H.at(x, j);
    };
    auto swap_col = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t x = 0; x < k; ++x) std::swap(H.at(x, i), H.at(x, j));
    };

    std::size_t pos = 0;
    for (std::size_t row = 0; row < k; ++row) {
        for (;;) {
            bool found = false;
            std::size_t pj = pos;
            Int best;
            for (std::size_t j = pos; j < r; ++j) {
                const Int& x = H.at(row, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pj = j;
                }
            }
            if (!found) throw std::logic_error("hnf_basis: rank deficient input");
            swap_col(pos, pj);
            bool clean = true;
            for (std::size_t j = pos + 1; j < r; ++j) {
                if (H.at(row, j) == 0) continue;
                Int q = H.at(row, j) / H.at(row, pos);
                add_col(j, pos, -q);
                if (H.at(row, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H.at(row, pos) < 0)
            for (std::size_t x = 0; x < k; ++x) H.at(x, pos) = -H.at(x, pos);
        for (std::size_t j = 0; j < pos; ++j) {
            Int q = floor_div(H.at(row, j), H.at(row, pos));
            add_col(j, pos, -q);
        }
        ++pos;
    }

    IntMatrix B(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) B.at(i, j) = H.at(i, j);
    return B;
}

IntMatrix int_kernel(const IntMatrix& A) {
    SnfFull f = snf_full(A);
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < A.cols; ++j) {
        Int d = (j < std::min(A.rows, A.cols)) ? f.D.at(j, j) : Int(0);
        if (d == 0) free_cols.push_back(j);
    }
    IntMatrix K(A.cols, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t)
        for (std::size_t i = 0; i < A.cols; ++i) K.at(i, t) = f.V.at(i, free_cols[t]);
    return K;
}

IntMatrix solve_lower_tri(const IntMatrix& L, const IntMatrix& B) {
    if (L.rows != L.cols || L.rows != B.rows) throw std::logic_error("solve_lower_tri: shape");
    const std::size_t n = L.rows;
    IntMatrix X(n, B.cols);
    for (std::size_t c = 0; c < B.cols; ++c)
        for (std::size_t i = 0; i < n; ++i) {
            Int s = B.at(i, c);
            for (std::size_t j = 0; j < i; ++j) s -= L.at(i, j) * X.at(j, c);
            if (L.at(i, i) == 0 || s % L.at(i, i) != 0)
                throw std::logic_error("solve_lower_tri: not in lattice");
            X.at(i, c) = s / L.at(i, i);
        }
    return X;
}

SolveModResult solve_mod(const IntMatrix& A, const std::vector<Int>& b, const Int& N) {
    if (N < 2) throw PreconditionError("solve_mod: modulus must be >= 2");
    if (A.rows != b.size()) throw std::logic_error("solve_mod: rhs size mismatch");
    const std::size_t n = A.rows, m = A.cols;

    SolveModResult res;
    if (m == 0) {
        res.ok = std::all_of(b.begin(), b.end(), [&](const Int& x) { return x % N == 0; });
        res.lattice = IntMatrix(0, 0);
        return res;
    }

    IntMatrix NI(n, n);
    for (std::size_t i = 0; i < n; ++i) NI.at(i, i) = N;
    IntMatrix Ap = hstack(A, NI);
    SnfFull f = snf_full(Ap);

    /* kernel of [A | N*I] has rank exactly m; its projection to the x-block
     * is the solution lattice of A*x = 0 (mod N), which contains N*Z^m */
    IntMatrix G(m, m);
    {
        std::size_t t = 0;
        for (std::size_t j = 0; j < m + n; ++j) {
            Int d = (j < n) ? f.D.at(j, j) : Int(0);
            if (d != 0) continue;
            if (t == m) throw std::logic_error("solve_mod: kernel rank");
            for (std::size_t i = 0; i < m; ++i) G.at(i, t) = f.V.at(i, j);
            ++t;
        }
        if (t != m) throw std::logic_error("solve_mod: kernel rank");
    }
    res.lattice = hnf_basis(G);

    std::vector<Int> c = mul_vec(f.U, b);
    std::vector<Int> w(m + n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Int& d = f.D.at(i, i);
        if (d == 0) {
            if (c[i] != 0) return res;  // unreachable: rank is n
            continue;
        }
        if (c[i] % d != 0) return res;  // no solution
        w[i] = c[i] / d;
    }
    std::vector<Int> z = mul_vec(f.V, w);
    std::vector<Int> x(z.begin(), z.begin() + static_cast<long>(m));

    /* greedy reduction against the triangular lattice basis gives the
     * lexicographically least nonnegative representative */
    for (std::size_t i = 0; i < m; ++i) {
        Int q = floor_div(x[i], res.lattice.at(i, i));
        if (q == 0) continue;
        for (std::size_t r = i; r < m; ++r) x[r] -= q * res.lattice.at(r, i);
    }
    res.ok = true;
    res.x = std::move(x);
    return res;
}

IntMatrix nullspace_mod(const IntMatrix& A, const Int& N) {
    std::vector<Int> zero(A.rows, 0);
    SolveModResult r = solve_mod(A, zero, N);
    const std::size_t m = A.cols;
    std::vector<std::vector<Int>> cols;
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Int> v(m);
        bool nz = false;
        for (std::size_t i = 0; i < m; ++i) {
            v[i] = mod_reduce(r.lattice.at(i, j), N);
            if (v[i] != 0) nz = true;
        }
        if (nz) cols.push_back(std::move(v));
    }
    IntMatrix B(m, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m; ++i) B.at(i, j) = cols[j][i];
    return B;
}

void CongruenceSystem::add(const std::vector<Int>& coeffs, const Int& rhs, const Int& m) {
    if (coeffs.size() != nvars_) throw std::logic_error("CongruenceSystem: row width");
    if (m <= 0 || N_ % m != 0) throw std::logic_error("CongruenceSystem: modulus must divide N");
    Int s = N_ / m;
    std::vector<Int> row(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) row[i] = coeffs[i] * s;
    rows_.push_back(std::move(row));
    rhs_.push_back(rhs * s);
}

SolveModResult CongruenceSystem::solve() const {
    IntMatrix A(rows_.size(), nvars_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < nvars_; ++j) A.at(i, j) = rows_[i][j];
    if (rows_.empty()) {
        /* no constraints: solution lattice is all of Z^nvars */
        SolveModResult r;
        r.ok = true;
        r.x.assign(nvars_, 0);
        r.lattice = IntMatrix::identity(nvars_);
        return r;
    }
    return solve_mod(A, rhs_, N_);
}

}  // namespace homext
