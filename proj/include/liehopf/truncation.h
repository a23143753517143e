#pragma once

#include "liehopf/pbw.h"

#include <map>
#include <vector>

namespace liehopf {

/// Element of a graded truncation: PBW terms of weight below the cutoff.
using TruncElement = PbwElement;

/// U(L) modulo the span of PBW monomials of weight ≥ N, for a Lie algebra
/// graded by positive weights with [b_i, b_j] of weight w_i + w_j. Rewriting
/// preserves weight, so that span is a two-sided ideal and a coideal and the
/// quotient is a finite-dimensional Hopf algebra stage.
class GradedTruncation
{
  public:
	/// Throws WeightsNotAdditive, or InvalidArgument if N < 1 or the weight
	/// list has the wrong length / a non-positive entry.
	GradedTruncation(LieAlgebra L, std::vector<int> weights, int cutoff,
	                 RewriteOptions options = {});

	Envelope const &envelope() const { return E_; }
	LieAlgebra const &algebra() const { return E_.algebra(); }
	std::vector<int> const &weights() const { return weights_; }
	int cutoff() const { return cutoff_; }

	/// PBW monomials of weight < N, graded-lex sorted.
	std::vector<Monomial> const &basis() const { return basis_; }
	std::size_t dim() const { return basis_.size(); }
	/// Index of a basis monomial, or −1.
	int index_of(Monomial const &m) const;

	int weight(Monomial const &m) const;
	/// Drops terms of weight ≥ N.
	TruncElement truncate(PbwElement const &a) const;
	TensorElement truncate(TensorElement const &t) const;

	/// Product of basis monomials i, j (table lookup).
	TruncElement const &basis_product(std::size_t i, std::size_t j) const
	{
		return table_[i][j];
	}
	TruncElement mul(TruncElement const &a, TruncElement const &b) const;
	TruncElement power(TruncElement const &a, unsigned k) const;
	/// Inverse of an element with nonzero counit. Throws InvalidArgument.
	TruncElement inverse(TruncElement const &u) const;

	/// Throws DegreeOutOfWindow if a has terms of weight ≥ N.
	void check_element(TruncElement const &a) const;

  private:
	Envelope E_;
	std::vector<int> weights_;
	int cutoff_;
	std::vector<Monomial> basis_;
	std::map<Monomial, int, GradedLex> index_;
	std::vector<std::vector<TruncElement>> table_;
};

GradedTruncation build_truncation(LieAlgebra const &L,
                                  std::vector<int> const &weights, int N);

/// Σ_{k<N} a^k / k!. Throws NonzeroConstantTerm.
TruncElement exp_trunc(GradedTruncation const &T, TruncElement const &a);
/// Σ_{k≥1} (−1)^{k+1} (u−1)^k / k. Throws CounitNotOne.
TruncElement log_trunc(GradedTruncation const &T, TruncElement const &u);
/// log(exp a · exp b). Throws NotPrimitive.
TruncElement bch(GradedTruncation const &T, TruncElement const &a,
                 TruncElement const &b);

/// Δ in the tensor square truncated at total weight < N.
TensorElement coproduct_trunc(GradedTruncation const &T, TruncElement const &a);
bool is_grouplike_trunc(GradedTruncation const &T, TruncElement const &u);
bool is_primitive_trunc(GradedTruncation const &T, TruncElement const &a);

} // namespace liehopf
