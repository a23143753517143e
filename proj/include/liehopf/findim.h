#pragma once

#include "liehopf/linalg.h"

#include <optional>
#include <string>
#include <vector>

namespace liehopf {

/// A finite-dimensional unital associative algebra over Q, given either by a
/// multiplication table on a basis or by a basis of matrices closed under
/// products. Elements are coordinate vectors.
class FinDimQuotient
{
  public:
	FinDimQuotient() = default;

	/// table[i][j] = coordinates of b_i b_j. Throws InvalidArgument if the
	/// table is not associative or `unit` is not a two-sided identity.
	static FinDimQuotient from_table(std::vector<std::vector<Vector>> table,
	                                 Vector unit,
	                                 std::vector<std::string> names = {});
	/// Basis matrices of a subalgebra of M_n containing the identity. Throws
	/// ResultOutsideAlgebra if some product leaves the span.
	static FinDimQuotient from_matrices(std::vector<Matrix> basis,
	                                    std::vector<std::string> names = {});
	/// M_n with the elementary basis E_ij in row-major order.
	static FinDimQuotient full_matrix_algebra(std::size_t n);

	std::size_t dim() const { return table_.size(); }
	Vector const &unit() const { return unit_; }
	Vector const &basis_product(std::size_t i, std::size_t j) const
	{
		return table_[i][j];
	}
	std::vector<std::string> const &names() const { return names_; }

	Vector mul(Vector const &a, Vector const &b) const;
	/// Matrix of y ↦ a·y.
	Matrix left_multiplication(Vector const &a) const;

	bool is_commutative() const;
	bool is_associative() const;

	bool has_matrices() const { return !matrices_.empty() || dim() == 0; }
	std::vector<Matrix> const &matrices() const { return matrices_; }
	std::size_t matrix_size() const { return matrix_size_; }
	Matrix to_matrix(Vector const &a) const;
	/// Coordinates of m in the matrix basis, if m lies in the span.
	std::optional<Vector> coordinates(Matrix const &m) const;

  private:
	std::vector<std::vector<Vector>> table_;
	Vector unit_;
	std::vector<std::string> names_;
	std::vector<Matrix> matrices_;
	std::size_t matrix_size_ = 0;
	Subspace matrix_span_;
};

} // namespace liehopf
