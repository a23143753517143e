#pragma once

#include "liehopf/linalg.h"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liehopf {

/// Sparse linear combination of basis indices.
using SparseTerms = std::vector<std::pair<int, Rational>>;

/// Finite-dimensional Lie algebra over Q given by structure constants on an
/// ordered basis. Only brackets [b_i, b_j] with i < j are stored; the rest
/// follow from antisymmetry.
class LieAlgebra
{
  public:
	LieAlgebra() = default;
	/// Throws DuplicateBasisName. Bracket keys must satisfy i < j (pairs with
	/// i > j are folded in with a sign flip; i == j must be zero).
	LieAlgebra(std::vector<std::string> names,
	           std::map<std::pair<int, int>, Vector> const &brackets);

	std::size_t dim() const { return names_.size(); }
	std::vector<std::string> const &names() const { return names_; }
	std::string const &name(int i) const { return names_.at(i); }
	std::optional<int> index_of(std::string_view name) const;

	/// [b_i, b_j] as a sparse combination (any i, j).
	SparseTerms basis_bracket_terms(int i, int j) const;
	Vector basis_bracket(int i, int j) const;
	Rational structure_constant(int i, int j, int k) const;
	/// Stored brackets, i < j, nonzero only.
	std::map<std::pair<int, int>, SparseTerms> const &brackets() const
	{
		return brackets_;
	}
	bool is_abelian() const { return brackets_.empty(); }

	friend bool operator==(LieAlgebra const &, LieAlgebra const &) = default;

  private:
	std::vector<std::string> names_;
	std::map<std::pair<int, int>, SparseTerms> brackets_;
};

/// Bilinear extension of the structure constants.
Vector bracket(LieAlgebra const &L, Vector const &v, Vector const &w);

struct JacobiViolation
{
	int i, j, k;
	Vector residual; // [b_i,[b_j,b_k]] + [b_j,[b_k,b_i]] + [b_k,[b_i,b_j]]
};

struct ValidationReport
{
	std::vector<JacobiViolation> violations;
	bool ok() const { return violations.empty(); }
};

ValidationReport check_jacobi(LieAlgebra const &L);

/// L1 × L2 with zero cross brackets. Colliding names from L2 get a numeric
/// suffix; the renamed names are appended to `renamed` when given.
LieAlgebra direct_product(LieAlgebra const &L1, LieAlgebra const &L2,
                          std::vector<std::string> *renamed = nullptr);

bool is_ideal(LieAlgebra const &L, Subspace const &S);

/// Smallest ideal containing S.
Subspace ideal_closure(LieAlgebra const &L, Subspace const &S);
/// [L, L].
Subspace derived_ideal(LieAlgebra const &L);

struct Quotient
{
	LieAlgebra algebra;
	/// (dim L − dim J) × dim L matrix of the projection L → L/J.
	Matrix projection;
	/// Original basis indices whose images form the quotient basis.
	std::vector<int> representatives;
};

/// L/J with basis the images of the non-pivot basis vectors of J's echelon
/// form. Throws NotAnIdeal.
Quotient quotient(LieAlgebra const &L, Subspace const &J);

/// Ordered basis F, F', F'' with F ∪ F' spanning a complement H of the ideal
/// J and F'' spanning J.
struct OrderedAdaptedBasis
{
	std::vector<Vector> F, F1, F2;

	std::size_t complement_dim() const { return F.size() + F1.size(); }
	/// All vectors in total order F, F', F''.
	std::vector<Vector> ordered() const;
};

/// Completes F to a complement H ⊇ span F of J by greedy selection of
/// standard basis vectors (lowest index first). Throws NotAnIdeal, and
/// DependentModuloIdeal if F is dependent modulo J.
OrderedAdaptedBasis adapted_basis(LieAlgebra const &L, Subspace const &J,
                                  std::vector<Vector> const &F);

/// The same Lie algebra written in the basis given by the columns of
/// `basis` (which must be invertible), with the given names.
LieAlgebra change_basis(LieAlgebra const &L, std::vector<Vector> const &basis,
                        std::vector<std::string> names);

/// Checks that a linear map between Lie algebras (columns = images of the
/// source basis) preserves brackets.
bool is_lie_morphism(LieAlgebra const &source, LieAlgebra const &target,
                     Matrix const &map);

/// Matrices of ad b_i in the basis of L (column j holds [b_i, b_j]).
std::vector<Matrix> adjoint_matrices(LieAlgebra const &L);

/// Human-readable linear combination like "2*x - 1/2*z".
std::string format_vector(LieAlgebra const &L, Vector const &v);

// ---------------------------------------------------------------------------
// .lie text format

struct StageSpec
{
	std::string name;
	std::vector<Vector> generators;
	int line = 0;
};

struct LieDocument
{
	LieAlgebra algebra;
	/// Positive weights per basis element; empty if no `weight` line.
	std::vector<int> weights;
	/// `stage` lines in file order (largest ideal first).
	std::vector<StageSpec> stages;
};

/// Parses the `.lie` format, including optional `weight` and `stage` lines.
/// Throws ParseError with the offending line number.
LieDocument parse_lie_document(std::string_view text);
LieAlgebra parse_lie(std::string_view text);

/// Parses a linear combination of basis names such as "2*x + y - 1/3*z".
Vector parse_vector(LieAlgebra const &L, std::string_view text, int line = 0);

} // namespace liehopf
