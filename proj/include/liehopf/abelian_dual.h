#pragma once

#include "liehopf/findim.h"
#include "liehopf/pbw.h"
#include "liehopf/polynomial.h"

#include <map>
#include <string>
#include <vector>

namespace liehopf {

/// Point ω of the dual space, in coordinates of the dual basis.
using DualVector = Vector;

/// Finite formal sum Σ c_i e^{q_i} with distinct rational q_i. Distinct
/// exponentials are taken to be linearly independent over Q, so equality of
/// canonical forms is equality of values.
class ExpRational
{
  public:
	ExpRational() = default;
	explicit ExpRational(Rational const &c) { add_term(0, c); }
	static ExpRational exponential(Rational const &q, Rational const &c = 1);

	/// q ↦ c, sorted by q, no zero coefficients.
	std::map<Rational, Rational> const &terms() const { return terms_; }
	void add_term(Rational const &q, Rational const &c);
	bool is_rational() const;
	/// The coefficient of e^0.
	Rational rational_part() const;

	ExpRational &operator+=(ExpRational const &o);
	friend ExpRational operator+(ExpRational a, ExpRational const &b) { return a += b; }
	friend ExpRational operator*(ExpRational const &a, ExpRational const &b);
	friend bool operator==(ExpRational const &, ExpRational const &) = default;

	/// e.g. "4", "3*e^(1/2) - 1".
	std::string format() const;

  private:
	std::map<Rational, Rational> terms_;
};

/// φ(ω) = Σ_i p_i(ω) e^{⟨ℓ_i, ω⟩} on Q^d, kept with distinct ℓ_i and
/// nonzero p_i. Canonical forms are equal iff the functions are.
class ExpPolyFunction
{
  public:
	using Summands = std::map<Vector, Polynomial>;

	explicit ExpPolyFunction(std::size_t dim = 0) : dim_(dim) {}
	static ExpPolyFunction constant(std::size_t dim, Rational const &c);
	static ExpPolyFunction polynomial(Polynomial p);
	/// ω ↦ e^{⟨ℓ, ω⟩}.
	static ExpPolyFunction exponential(Vector const &l);
	/// ω ↦ ω_j.
	static ExpPolyFunction coordinate(std::size_t dim, std::size_t j);

	std::size_t dim() const { return dim_; }
	Summands const &summands() const { return summands_; }
	bool is_zero() const { return summands_.empty(); }
	void add_summand(Vector const &l, Polynomial const &p);

	/// Exact value at ω.
	ExpRational eval(DualVector const &w) const;
	/// ω' ↦ φ(Aω') for a d × m matrix A.
	ExpPolyFunction compose(Matrix const &A) const;

	ExpPolyFunction &operator+=(ExpPolyFunction const &o);
	ExpPolyFunction &operator-=(ExpPolyFunction const &o);
	ExpPolyFunction &operator*=(Rational const &c);
	friend ExpPolyFunction operator+(ExpPolyFunction a, ExpPolyFunction const &b) { return a += b; }
	friend ExpPolyFunction operator-(ExpPolyFunction a, ExpPolyFunction const &b) { return a -= b; }
	friend ExpPolyFunction operator-(ExpPolyFunction a) { return a *= Rational(-1); }
	friend ExpPolyFunction operator*(Rational const &c, ExpPolyFunction a) { return a *= c; }
	friend ExpPolyFunction operator*(ExpPolyFunction const &a, ExpPolyFunction const &b);
	friend bool operator==(ExpPolyFunction const &, ExpPolyFunction const &) = default;

	/// Canonical text over the given variable names, e.g.
	/// "w1^2 + (2*w2)*exp(w1 - w2)". Summands in increasing order of ℓ.
	std::string format(std::vector<std::string> const &names) const;
	/// Same with names w1..wd.
	std::string format() const;

  private:
	void check_same(ExpPolyFunction const &o) const;

	std::size_t dim_;
	Summands summands_;
};

/// A function of (ω¹, ω²) ∈ Q^d × Q^d, variables ordered ω¹ then ω².
using PairFunction = ExpPolyFunction;

/// Names w1..wd.
std::vector<std::string> dual_names(std::size_t d);
/// Names w1_1..wd_1, w1_2..wd_2 for pair functions.
std::vector<std::string> pair_names(std::size_t d);

ExpPolyFunction fn_add(ExpPolyFunction const &a, ExpPolyFunction const &b);
ExpPolyFunction fn_mul(ExpPolyFunction const &a, ExpPolyFunction const &b);
ExpRational fn_eval(ExpPolyFunction const &a, DualVector const &w);

/// ν(x)(ω) = ⟨ω, x⟩.
ExpPolyFunction nu_embed(Vector const &x);

/// γφ(ω¹, ω²) = φ(ω¹ + ω²).
PairFunction gamma(ExpPolyFunction const &f);
/// φ⊗ψ: (ω¹, ω²) ↦ φ(ω¹)ψ(ω²).
PairFunction tensor(ExpPolyFunction const &f, ExpPolyFunction const &g);
/// (σφ)(ω) = φ(−ω).
ExpPolyFunction antipode_fn(ExpPolyFunction const &f);
/// φ ↦ φ(0) as a constant function.
ExpPolyFunction counit_fn(ExpPolyFunction const &f);
/// ω ↦ Σ ψ(±ω, ±ω) with σ applied to the left (side 0) or right (side 1)
/// factor: the two convolutions of σ with the identity.
ExpPolyFunction convolve_antipode(PairFunction const &g, std::size_t d, int side);

/// (γ⊗id)γφ and (id⊗γ)γφ as functions on (Q^d)³.
ExpPolyFunction gamma_left(ExpPolyFunction const &f);
ExpPolyFunction gamma_right(ExpPolyFunction const &f);

/// γφ = φ⊗1 + 1⊗φ.
bool is_primitive_fn(ExpPolyFunction const &f);
/// γφ = φ⊗φ and φ(0) = 1.
bool is_grouplike_fn(ExpPolyFunction const &f);

/// q: U(g) → K^{g'} for abelian g: x_{i1}⋯x_{in} ↦ ω_{i1}⋯ω_{in}. Throws
/// NotAbelian.
ExpPolyFunction q_map(LieAlgebra const &L, PbwElement const &u);
/// q(u·exp x) = q(u)·e^{⟨ω, x⟩}.
ExpPolyFunction q_map_exp(LieAlgebra const &L, PbwElement const &u,
                          Vector const &x);
/// q⊗q on U(g)⊗U(g).
PairFunction q_tensor(LieAlgebra const &L, TensorElement const &t);

/// Radical of a commutative algebra as the kernel of the trace form
/// (x, y) ↦ tr(L_x L_y). Throws NotCommutative.
Subspace radical_commutative(FinDimQuotient const &A);

// ---------------------------------------------------------------------------
// The algebra A₂ = K² with (x₁,y₁)(x₂,y₂) = (y₁x₂ + y₂x₁, y₁y₂).

struct A2Element
{
	Rational x, y;
	friend bool operator==(A2Element const &, A2Element const &) = default;
};

A2Element a2_mul(A2Element const &a, A2Element const &b);
/// [[y, x], [0, y]].
Matrix a2_matrix(A2Element const &a);
bool a2_is_unit(A2Element const &a);
/// Multiplicative inverse of a unit. Throws InvalidArgument.
A2Element a2_inverse(A2Element const &a);
/// A₂ as a FinDimQuotient on the basis c = (1,0), 1 = (0,1).
FinDimQuotient a2_algebra();
/// All solutions of e² = e.
std::vector<A2Element> a2_idempotents();

struct A2Morphism
{
	/// Images of the standard idempotents of K^n.
	std::vector<A2Element> images;
	/// 2 × n matrix of the map in the basis c, 1.
	Matrix matrix;
	/// Unital and multiplicative on basis pairs.
	bool is_morphism = false;
	/// F⁻¹(R(A₂)) ⊆ ker F.
	bool radical_condition = false;
};

/// Unital algebra morphisms K^n → A₂, enumerated by assigning orthogonal
/// idempotents summing to 1 to the standard idempotents. Requires n ≤ 8
/// (InvalidArgument otherwise).
std::vector<A2Morphism> a2_morphism_census(std::size_t n);

} // namespace liehopf
