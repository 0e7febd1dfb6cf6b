#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace homext {

using Int = boost::multiprecision::cpp_int;

/* Dense integer matrix, row major. Entries are arbitrary precision:
 * intermediate Smith normal form entries overflow machine words even for
 * small inputs, so no fixed-width shortcut is taken anywhere. */
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t r, std::size_t c) { return IntMatrix(r, c); }
    static IntMatrix diag(const std::vector<Int>& d);

    IntMatrix transposed() const;
    std::vector<Int> col(std::size_t j) const;
    bool is_zero() const;

    bool operator==(const IntMatrix& o) const = default;
};

IntMatrix mul(const IntMatrix& A, const IntMatrix& B);
std::vector<Int> mul_vec(const IntMatrix& A, const std::vector<Int>& x);
IntMatrix hstack(const IntMatrix& A, const IntMatrix& B);
IntMatrix vstack(const IntMatrix& A, const IntMatrix& B);

/* Exact determinant (Bareiss). Used by tests to certify that the Smith
 * transforms are unimodular; cheap at the sizes we ever see. */
Int det(const IntMatrix& A);

/* floor division with b > 0 (cpp_int's operator/ truncates toward zero) */
Int floor_div(const Int& a, const Int& b);
Int mod_reduce(const Int& a, const Int& m);  // representative in [0, m)

/* Smith normal form U*A*V = D. D is diagonal with d1 | d2 | ... | dr,
 * entries nonnegative (signs absorbed into V), zeros trailing. U and V are
 * unimodular. Pivoting: smallest nonzero absolute value in the remaining
 * submatrix, ties broken by lowest (row, col); this pins the output bytes. */
struct SnfResult {
    IntMatrix U, D, V;
};

/* Same plus the inverse transforms, which the module layer needs to push
 * generators back and forth without solving linear systems again. */
struct SnfFull {
    IntMatrix U, D, V, Uinv, Vinv;
};

SnfFull snf_full(const IntMatrix& A);
SnfResult snf(const IntMatrix& A);

/* Column-style Hermite basis of the lattice spanned by the columns of G.
 * G must have full row rank (every lattice we ever present contains a
 * diagonal of positive moduli, so this always holds). Result is square
 * lower triangular, positive diagonal, entries left of the diagonal reduced
 * into [0, diag); this makes the basis canonical. */
IntMatrix hnf_basis(const IntMatrix& G);

/* Basis of the integer kernel of A, as columns. */
IntMatrix int_kernel(const IntMatrix& A);

/* Solve L*X = B exactly for lower triangular L with nonzero diagonal.
 * Divisions must be exact; throws std::logic_error otherwise (callers use
 * this only when B's columns are known to lie in the lattice of L). */
IntMatrix solve_lower_tri(const IntMatrix& L, const IntMatrix& B);

/* A*x = b (mod N). `x` is the lexicographically least nonnegative solution
 * (coordinates minimized left to right); `lattice` is the Hermite basis of
 * the full integer solution lattice of A*x = 0 (mod N), which contains
 * N*Z^m. Both are canonical, so every "pick a morphism" step downstream is
 * deterministic. */
struct SolveModResult {
    bool ok = false;
    std::vector<Int> x;
    IntMatrix lattice;
};

SolveModResult solve_mod(const IntMatrix& A, const std::vector<Int>& b, const Int& N);

/* Generators of {x : A*x = 0 (mod N)} reduced into [0,N)^m, zero columns
 * dropped. */
IntMatrix nullspace_mod(const IntMatrix& A, const Int& N);

/* Accumulates congruences c.x = rhs (mod m), each with its own modulus
 * m | N, and solves them as one system mod N by scaling rows with N/m.
 * This is the single substrate for every "find a morphism making the
 * diagram commute" step in the category layer. */
class CongruenceSystem {
public:
    CongruenceSystem(std::size_t nvars, Int N) : nvars_(nvars), N_(std::move(N)) {}

    void add(const std::vector<Int>& coeffs, const Int& rhs, const Int& m);
    SolveModResult solve() const;
    std::size_t nvars() const { return nvars_; }
    const Int& modulus() const { return N_; }

private:
    std::size_t nvars_;
    Int N_;
    std::vector<std::vector<Int>> rows_;
    std::vector<Int> rhs_;
};

/* Raised when a caller hands an operation data that violates its stated
 * preconditions (non-exact extension, mismatched ring, ...). The CLI maps
 * this to exit code 2. */
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Malformed serialized input; the message names the offending field. The
 * CLI maps this to exit code 1. */
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace homext
