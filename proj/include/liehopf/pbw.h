#pragma once

#include "liehopf/findim.h"
#include "liehopf/lie_algebra.h"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace liehopf {

/// Non-decreasing sequence of basis positions; empty means the unit 1.
using Monomial = std::vector<int>;

/// Graded lexicographic order: lower degree first, then lexicographic.
struct GradedLex
{
	bool operator()(Monomial const &a, Monomial const &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

struct GradedLexPair
{
	bool operator()(std::pair<Monomial, Monomial> const &a,
	                std::pair<Monomial, Monomial> const &b) const
	{
		std::size_t da = a.first.size() + a.second.size();
		std::size_t db = b.first.size() + b.second.size();
		if (da != db)
			return da < db;
		GradedLex lt;
		if (lt(a.first, b.first))
			return true;
		if (lt(b.first, a.first))
			return false;
		return lt(a.second, b.second);
	}
};

bool is_pbw_monomial(Monomial const &m);

/// Finite linear combination of PBW monomials; never stores zero terms.
class PbwElement
{
  public:
	using Terms = std::map<Monomial, Rational, GradedLex>;

	PbwElement() = default;
	static PbwElement scalar(Rational const &c);
	static PbwElement unit() { return scalar(1); }
	static PbwElement generator(int i) { return monomial({i}); }
	static PbwElement monomial(Monomial m, Rational const &c = 1);
	/// Degree-one element Σ v_i b_i.
	static PbwElement from_vector(Vector const &v);

	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// −1 for zero.
	int degree() const;
	Rational coefficient(Monomial const &m) const;
	void add_term(Monomial const &m, Rational const &c);
	/// Largest basis index + 1 appearing (0 for scalars).
	std::size_t support_dim() const;

	PbwElement &operator+=(PbwElement const &o);
	PbwElement &operator-=(PbwElement const &o);
	PbwElement &operator*=(Rational const &c);
	friend PbwElement operator+(PbwElement a, PbwElement const &b) { return a += b; }
	friend PbwElement operator-(PbwElement a, PbwElement const &b) { return a -= b; }
	friend PbwElement operator-(PbwElement a) { return a *= Rational(-1); }
	friend PbwElement operator*(Rational const &c, PbwElement a) { return a *= c; }
	friend bool operator==(PbwElement const &, PbwElement const &) = default;

  private:
	Terms terms_;
};

/// Element of U ⊗ U, keyed by monomial pairs.
class TensorElement
{
  public:
	using Key = std::pair<Monomial, Monomial>;
	using Terms = std::map<Key, Rational, GradedLexPair>;

	TensorElement() = default;
	static TensorElement pure(PbwElement const &a, PbwElement const &b);

	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	Rational coefficient(Monomial const &a, Monomial const &b) const;
	void add_term(Monomial const &a, Monomial const &b, Rational const &c);

	TensorElement &operator+=(TensorElement const &o);
	TensorElement &operator-=(TensorElement const &o);
	TensorElement &operator*=(Rational const &c);
	friend TensorElement operator+(TensorElement a, TensorElement const &b) { return a += b; }
	friend TensorElement operator-(TensorElement a, TensorElement const &b) { return a -= b; }
	friend bool operator==(TensorElement const &, TensorElement const &) = default;

  private:
	Terms terms_;
};

/// Which descent of a word is rewritten next.
enum class RewriteStrategy { LeftmostDescent, RightmostDescent, Random };

/// The commutation rule applied at a descent. `SignErrorAtFront` is a
/// deliberately broken rule (the commutator term gets the wrong sign when the
/// descent sits at the first position) used to check that the test suites
/// are not vacuous.
enum class RewriteRule { Standard, SignErrorAtFront };

struct RewriteOptions
{
	RewriteStrategy strategy = RewriteStrategy::LeftmostDescent;
	RewriteRule rule = RewriteRule::Standard;
	std::uint64_t seed = 0;
};

/// The enveloping algebra U(L) in the PBW basis of L's declared basis order.
class Envelope
{
  public:
	explicit Envelope(LieAlgebra L, RewriteOptions options = {});

	LieAlgebra const &algebra() const { return L_; }
	std::size_t dim() const { return L_.dim(); }
	RewriteOptions const &options() const { return options_; }

	/// PBW normal form of the product of generators in the given order.
	PbwElement straighten(std::span<int const> word) const;
	PbwElement mul(PbwElement const &a, PbwElement const &b) const;
	PbwElement power(PbwElement const &a, unsigned k) const;

	TensorElement coproduct(PbwElement const &a) const;
	PbwElement antipode(PbwElement const &a) const;
	bool is_primitive(PbwElement const &a) const;

	/// Commutator ab − ba.
	PbwElement commutator(PbwElement const &a, PbwElement const &b) const;

	/// Throws AlgebraMismatch if a mentions basis indices outside L.
	void check_element(PbwElement const &a) const;

  private:
	LieAlgebra L_;
	RewriteOptions options_;
};

Rational counit(PbwElement const &a);

/// (a⊗b)(c⊗d) = E1(a c) ⊗ E2(b d), straightening each side independently.
TensorElement tensor_mul(Envelope const &left, Envelope const &right,
                         TensorElement const &x, TensorElement const &y);
/// The multiplication map a⊗b ↦ ab.
PbwElement multiply_out(Envelope const &E, TensorElement const &t);

/// All PBW monomials on `dim` generators of degree ≤ d, graded-lex sorted.
std::vector<Monomial> pbw_window(std::size_t dim, int d);

/// A subspace of a PBW window, in coordinates over `monomials`.
struct WindowSubspace
{
	std::vector<Monomial> monomials;
	Subspace space;

	std::vector<PbwElement> elements() const;
};

Vector window_coordinates(std::vector<Monomial> const &window,
                          PbwElement const &a);
PbwElement from_window_coordinates(std::vector<Monomial> const &window,
                                   Vector const &v);

/// Primitive elements of degree ≤ d, by solving Δu = u⊗1 + 1⊗u.
WindowSubspace primitive_space(Envelope const &E, int d);

/// Applies the algebra morphism U(source) → U(target) induced by a linear
/// map on generators (`images` has dim target rows, dim source columns).
PbwElement map_generators(Envelope const &target, Matrix const &images,
                          PbwElement const &u);

/// U(L) rewritten over an adapted basis F, F', F'' of an ideal J.
struct AdaptedEnvelope
{
	OrderedAdaptedBasis basis;
	Envelope envelope;        // U(L) in the adapted basis and order
	Matrix to_adapted;        // coordinates of original b_k in the new basis
	std::size_t complement_dim;
};

AdaptedEnvelope adapt(Envelope const &E, Subspace const &J,
                      std::vector<Vector> const &F = {});

/// Part of u (in the adapted PBW basis) with no trailing factor from J.
/// Zero exactly when u ∈ U(L)J. Throws NotAnIdeal.
PbwElement membership_defect(Envelope const &E, PbwElement const &u,
                             Subspace const &J);
bool membership_ULJ(Envelope const &E, PbwElement const &u, Subspace const &J);

/// U(p): U(L) → U(L/J) for the quotient map p.
class QuotientMorphism
{
  public:
	QuotientMorphism(Envelope const &E, Subspace const &J);

	Quotient const &quotient() const { return quotient_; }
	Envelope const &target() const { return target_; }
	PbwElement operator()(PbwElement const &u) const;

  private:
	Quotient quotient_;
	Envelope target_;
};

QuotientMorphism functor_U_on_quotient(Envelope const &E, Subspace const &J);

/// (U(L)J) ∩ window and ker U(p) ∩ window, as subspaces of the degree-≤d
/// window of U(L).
WindowSubspace ulj_window(Envelope const &E, Subspace const &J, int d);
WindowSubspace quotient_kernel_window(Envelope const &E, Subspace const &J,
                                      int d);

/// An algebra morphism from U(source) into a finite-dimensional algebra,
/// defined on PBW elements of degree ≤ degree_bound.
class AlgebraMorphismWindow
{
  public:
	AlgebraMorphismWindow(LieAlgebra source, int degree_bound,
	                      FinDimQuotient target, std::vector<Vector> images);

	LieAlgebra const &source() const { return source_; }
	int degree_bound() const { return degree_bound_; }
	FinDimQuotient const &target() const { return target_; }
	std::vector<Vector> const &generator_images() const { return images_; }

	/// Throws DegreeOutOfWindow above the bound.
	Vector apply(PbwElement const &u) const;
	Vector apply(Monomial const &m) const;
	/// Matrix form of apply(), when the target has one.
	Matrix apply_matrix(PbwElement const &u) const;

	/// image(m·m') = image(m)·image(m') for window monomials with
	/// deg m + deg m' ≤ bound, and image(1) = 1.
	bool check_multiplicative(Envelope const &E) const;

  private:
	LieAlgebra source_;
	int degree_bound_;
	FinDimQuotient target_;
	std::vector<Vector> images_;
};

/// Checks [M_i, M_j] = Σ_k c_ij^k M_k for all basis pairs.
bool images_respect_brackets(LieAlgebra const &L,
                             std::vector<Matrix> const &images);

/// Extends b_i ↦ images[i] to U(L) → M_n on the degree-≤d window. The
/// matrix size n is taken from the images unless given (needed when L = 0).
/// Throws ImagesNotALieMorphism.
AlgebraMorphismWindow extend_lie_morphism(LieAlgebra const &L,
                                          std::vector<Matrix> const &images,
                                          int d, std::size_t n = 0);

/// The Lie algebra li A (commutator bracket) on A's basis.
LieAlgebra commutator_algebra(FinDimQuotient const &A);

/// ν_A: U(li A) → A, a PBW monomial ↦ its product in A.
AlgebraMorphismWindow nu_backadjunction(FinDimQuotient const &A, int d);

struct MultiplicativityWitness
{
	LieAlgebra product;
	std::vector<Monomial> source_window;
	std::vector<TensorElement> images;
	std::size_t source_dim = 0, target_dim = 0, rank = 0;
	bool images_in_window = false;
	bool bijective() const
	{
		return images_in_window && rank == source_dim && rank == target_dim;
	}
};

/// Generator map (v,0) ↦ v⊗1, (0,w) ↦ 1⊗w extended multiplicatively from
/// the degree-≤d window of U(L1×L2) to that of U(L1)⊗U(L2).
MultiplicativityWitness multiplicativity_witness(LieAlgebra const &L1,
                                                 LieAlgebra const &L2, int d);

// ---------------------------------------------------------------------------
// serialization

std::string format_monomial(LieAlgebra const &L, Monomial const &m);
/// e.g. "x*y - z + 1/2".
std::string format_element(LieAlgebra const &L, PbwElement const &a);
std::string format_tensor(LieAlgebra const &L, TensorElement const &t);

} // namespace liehopf
