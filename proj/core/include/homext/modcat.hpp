#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "homext/intmatrix.hpp"

namespace homext {

/* The ring Z/N. Everything in one computation shares a single ring; mixing
 * rings is a logic error and is checked where cheap. */
struct Ring {
    Int N;
    static Ring make(Int N) {
        if (N < 2) throw PreconditionError("ring modulus must be >= 2");
        return Ring{std::move(N)};
    }
    bool operator==(const Ring&) const = default;
};

/* Finitely generated Z/N-module in invariant factor form: factors
 * d1 | d2 | ... | dk with 1 < di and di | N. The empty list is the zero
 * module. Two modules are isomorphic iff their factor lists are equal, so
 * equality of canonical forms is isomorphism testing. */
struct Module {
    Ring ring;
    std::vector<Int> factors;

    static Module make(Ring r, std::vector<Int> factors);
    static Module zero(Ring r) { return Module{std::move(r), {}}; }
    static Module free_module(Ring r, std::size_t rank);

    std::size_t rank() const { return factors.size(); }
    Int order() const;
    bool is_zero() const { return factors.empty(); }
    bool operator==(const Module&) const = default;
};

/* Morphism as a matrix over Z acting on column coordinate vectors; entry
 * (i,j) is kept reduced mod dst factor e_i. Well-definedness requires
 * d_j * a_ij = 0 (mod e_i) for all entries; constructors enforce it. */
struct Morphism {
    Module src, dst;
    IntMatrix mat;

    static Morphism make(Module src, Module dst, IntMatrix m);
    static Morphism zero(Module src, Module dst);
    static Morphism identity(const Module& M);

    bool is_zero() const { return mat.is_zero(); }
    bool operator==(const Morphism&) const = default;
};

Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism sub(const Morphism& f, const Morphism& g);
Morphism negate(const Morphism& f);

std::vector<Int> apply(const Morphism& f, const std::vector<Int>& x);

/* order of an element given in coordinates */
Int element_order(const Module& M, const std::vector<Int>& x);

/* iterate all coordinate tuples of M (odometer order); oracle-sized use only */
void for_each_element(const Module& M, const std::function<void(const std::vector<Int>&)>& fn);

bool is_mono(const Morphism& f);
bool is_epi(const Morphism& f);
bool is_iso(const Morphism& f);

struct SubObject {
    Module obj;
    Morphism mono;  // obj -> ambient
};
struct QuotObject {
    Module obj;
    Morphism epi;  // ambient -> obj
};

SubObject kernel(const Morphism& f);
QuotObject cokernel(const Morphism& f);
SubObject image(const Morphism& f);

struct BiproductResult {
    Module sum;
    Morphism iA, iB;  // injections
    Morphism pA, pB;  // projections
};
BiproductResult biproduct(const Module& A, const Module& B);

struct PullbackResult {
    Module obj;
    Morphism toA, toB;  // projections of the limit cone
};
/* f: A -> C, g: B -> C; realized as ker((f,-g): A (+) B -> C) */
PullbackResult pullback(const Morphism& f, const Morphism& g);

struct PushoutResult {
    Module obj;
    Morphism fromA, fromB;
};
/* f: C -> A, g: C -> B; realized as coker((f,-g): C -> A (+) B) */
PushoutResult pushout(const Morphism& f, const Morphism& g);

/* Unique factorizations through the universal objects. Inputs violating the
 * stated compatibility (f∘g != 0 for kernel_factor etc.) throw
 * PreconditionError. */
Morphism kernel_factor(const SubObject& ker, const Morphism& f, const Morphism& g);
Morphism cokernel_factor(const QuotObject& cok, const Morphism& f, const Morphism& g);
Morphism pullback_factor(const PullbackResult& pb, const Morphism& a, const Morphism& b);
Morphism pushout_factor(const PushoutResult& po, const Morphism& u, const Morphism& v);

/* Hom(A,B) as a finite abelian group on the elementary generators
 * g_(i,j): (generator j of A) -> (e_i/gcd(d_j,e_i)) * (generator i of B),
 * of order gcd(d_j,e_i). Every morphism has unique coefficients mod the
 * orders, and |Hom(A,B)| is the product of the gcds. */
struct HomGroup {
    Module src, dst;
    std::vector<std::pair<std::size_t, std::size_t>> pos;  // (dst row, src col)
    std::vector<Int> orders;

    std::size_t ngens() const { return pos.size(); }
    Int order() const;
    Morphism generator(std::size_t t) const;
    Morphism from_coeffs(const std::vector<Int>& c) const;
    std::vector<Int> coeffs(const Morphism& f) const;
    void for_each(const std::function<void(const Morphism&)>& fn) const;
};
HomGroup hom_group(const Module& A, const Module& B);

/* Exact duality D = Hom(-, Z/N). Z/N is self-injective, so D is exact and
 * D(D(f)) = f on the nose with the canonical identifications used here
 * (D(Z/d) = Z/d generated by 1 -> N/d). */
Module dual(const Module& M);
Morphism dualize(const Morphism& f);

/* ---- presentation machinery shared by the upper layers ---- */

/* L/R for full-rank lattices R <= L <= Z^k, canonical invariant factors plus
 * coordinate transfer both ways. This single helper realizes kernels,
 * cokernels, Hom-group subquotients and Ext cohomology. */
struct Subquotient {
    std::vector<Int> factors;       // invariant factors > 1, ascending chain
    IntMatrix B;                    // HNF basis of L
    IntMatrix U, Uinv;              // Smith transforms of B^{-1}*R
    std::vector<std::size_t> kept;  // positions with sigma > 1

    Int order() const;
    /* x must lie in L; class coordinates in (+) Z/factors */
    std::vector<Int> coords(const std::vector<Int>& x) const;
    /* ambient integer representative of generator t */
    std::vector<Int> gen(std::size_t t) const;
};
Subquotient present_subquotient(const IntMatrix& sub_gens, const IntMatrix& rel_gens);

/* index [diag(ambient) : lattice] for lattice >= diag(ambient) given by a
 * triangular basis; counts subgroup orders without a full presentation */
Int subgroup_order(const IntMatrix& lattice_basis, const std::vector<Int>& ambient);

/* Linear system whose unknowns are whole morphisms. Equations are
 *    sum_terms  L ∘ u_b ∘ R  =  rhs      (maps S -> D)
 * with L, R fixed matrices. Well-definedness congruences for each unknown
 * are added automatically. Solutions are canonical (lex-least), and the
 * homogeneous solutions come back as a finite group with generators, which
 * is how chain map groups and extension ladders are enumerated. */
class MorphismSystem {
public:
    explicit MorphismSystem(Ring r) : ring_(std::move(r)) {}

    std::size_t add_unknown(Module src, Module dst);

    struct Term {
        IntMatrix L;
        std::size_t block;
        IntMatrix R;
    };
    void add_equation(std::vector<Term> terms, const Module& S, const Module& D, IntMatrix rhs);

    /* convenience: L ∘ u = rhs and u ∘ R = rhs */
    void eq_left(const Morphism& L, std::size_t u, const Morphism& rhs);
    void eq_right(std::size_t u, const Morphism& R, const Morphism& rhs);

    std::optional<std::vector<Morphism>> solve() const;

    struct SolutionGroup {
        std::vector<Module> srcs, dsts;
        std::vector<Int> ambient;  // per-variable modulus
        Subquotient sq;

        const std::vector<Int>& factors() const { return sq.factors; }
        Int order() const { return sq.order(); }
        std::size_t ngens() const { return sq.factors.size(); }
        std::vector<Morphism> generator(std::size_t t) const;
        std::vector<Morphism> combine(const std::vector<Int>& coeffs) const;
        std::vector<Int> coords(const std::vector<Morphism>& value) const;
    };
    /* group of solutions of the homogeneous system (rhs forced to 0) */
    SolutionGroup solution_group() const;

    const Ring& ring() const { return ring_; }

private:
    struct Block {
        Module src, dst;
        std::size_t offset;
    };
    struct Equation {
        std::vector<Term> terms;
        Module S, D;
        IntMatrix rhs;
    };

    Ring ring_;
    std::vector<Block> blocks_;
    std::vector<Equation> eqs_;
    std::size_t nvars_ = 0;

    CongruenceSystem build(bool homogeneous) const;
    std::vector<Morphism> slice(const std::vector<Int>& x) const;
    friend struct SolutionGroupAccess;
};

/* sugar over MorphismSystem for the common one-unknown shapes */
std::optional<Morphism> lift_through_epi(const Morphism& e, const Morphism& g);      // e∘u = g
std::optional<Morphism> factor_through_mono(const Morphism& m, const Morphism& g);   // m∘u = g
std::optional<Morphism> factor_through_epi(const Morphism& e, const Morphism& g);    // u∘e = g

/* A class of modules given by finitely many generators, closed under finite
 * biproducts and summands. Membership is decided on Krull-Schmidt pieces:
 * M belongs iff every indecomposable summand Z/p^a of M occurs as a summand
 * of some generator. The zero module always belongs. */
struct TestClass {
    Ring ring;
    std::vector<Module> generators;

    static TestClass make(Ring r, std::vector<Module> gens);
    /* just R itself (projective = free over Z/N up to summands of R^k is
     * false; this class is literal free modules and their summands) */
    static TestClass free_class(const Ring& r);
    /* every indecomposable Z/p^a with p^a | N; the whole category */
    static TestClass all_class(const Ring& r);

    bool contains(const Module& M) const;
    /* sorted distinct prime power piece orders across the generators */
    std::vector<Int> piece_set() const;
    /* the pieces as rank-one modules, for per-generator Hom tests */
    std::vector<Module> indecomposables() const;
};

/* prime power decomposition of d | N as piece orders p^a, ascending */
std::vector<Int> indecomposable_pieces(const Int& d);

}  // namespace homext
