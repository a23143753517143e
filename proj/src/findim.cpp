#include "liehopf/findim.h"

#include "liehopf/error.h"

namespace liehopf {

namespace {

std::vector<std::string> default_names(std::size_t n, std::string const &stem)
{
	std::vector<std::string> out;
	for (std::size_t i = 0; i < n; ++i)
		out.push_back(stem + std::to_string(i));
	return out;
}

} // namespace

FinDimQuotient FinDimQuotient::from_table(std::vector<std::vector<Vector>> table,
                                          Vector unit,
                                          std::vector<std::string> names)
{
	std::size_t const n = table.size();
	for (auto const &row : table)
	{
		if (row.size() != n)
			throw Error(ErrorCode::DimensionMismatch, "multiplication table");
		for (auto const &v : row)
			if (v.size() != n)
				throw Error(ErrorCode::DimensionMismatch, "multiplication table");
	}
	if (unit.size() != n)
		throw Error(ErrorCode::DimensionMismatch, "unit");
	FinDimQuotient A;
	A.table_ = std::move(table);
	A.unit_ = std::move(unit);
	A.names_ = names.empty() ? default_names(n, "a") : std::move(names);
	for (std::size_t i = 0; i < n; ++i)
	{
		Vector e = unit_vector(n, i);
		if (A.mul(A.unit_, e) != e || A.mul(e, A.unit_) != e)
			throw Error(ErrorCode::InvalidArgument, "unit is not an identity");
	}
	if (!A.is_associative())
		throw Error(ErrorCode::InvalidArgument, "table is not associative");
	return A;
}

FinDimQuotient FinDimQuotient::from_matrices(std::vector<Matrix> basis,
                                             std::vector<std::string> names)
{
	FinDimQuotient A;
	std::size_t const n = basis.size();
	if (n == 0)
		throw Error(ErrorCode::InvalidArgument, "empty matrix basis");
	A.matrix_size_ = basis.front().rows();
	std::vector<Vector> flat;
	for (auto const &m : basis)
	{
		if (m.rows() != A.matrix_size_ || m.cols() != A.matrix_size_)
			throw Error(ErrorCode::DimensionMismatch, "matrix basis");
		flat.push_back(m.flatten());
	}
	A.matrices_ = std::move(basis);
	A.matrix_span_ =
	    Subspace::span(A.matrix_size_ * A.matrix_size_, std::span<Vector const>(flat));
	if (A.matrix_span_.dim() != n)
		throw Error(ErrorCode::InvalidArgument, "matrix basis is dependent");
	A.names_ = names.empty() ? default_names(n, "m") : std::move(names);
	auto unit = A.coordinates(Matrix::identity(A.matrix_size_));
	if (!unit)
		throw Error(ErrorCode::ResultOutsideAlgebra, "identity not in span");
	A.unit_ = *unit;
	A.table_.assign(n, std::vector<Vector>(n));
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			auto c = A.coordinates(A.matrices_[i] * A.matrices_[j]);
			if (!c)
				throw Error(ErrorCode::ResultOutsideAlgebra,
				            "span not closed under products");
			A.table_[i][j] = std::move(*c);
		}
	return A;
}

FinDimQuotient FinDimQuotient::full_matrix_algebra(std::size_t n)
{
	std::vector<Matrix> basis;
	std::vector<std::string> names;
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
		{
			basis.push_back(Matrix::unit(n, i, j));
			names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
		}
	return from_matrices(std::move(basis), std::move(names));
}

Vector FinDimQuotient::mul(Vector const &a, Vector const &b) const
{
	std::size_t const n = dim();
	if (a.size() != n || b.size() != n)
		throw Error(ErrorCode::DimensionMismatch, "algebra product");
	Vector r(n);
	for (std::size_t i = 0; i < n; ++i)
	{
		if (is_zero(a[i]))
			continue;
		for (std::size_t j = 0; j < n; ++j)
		{
			if (is_zero(b[j]))
				continue;
			Rational c = a[i] * b[j];
			auto const &p = table_[i][j];
			for (std::size_t k = 0; k < n; ++k)
				if (!is_zero(p[k]))
					r[k] += c * p[k];
		}
	}
	return r;
}

Matrix FinDimQuotient::left_multiplication(Vector const &a) const
{
	std::size_t const n = dim();
	Matrix m(n, n);
	for (std::size_t j = 0; j < n; ++j)
	{
		Vector col = mul(a, unit_vector(n, j));
		for (std::size_t i = 0; i < n; ++i)
			m(i, j) = col[i];
	}
	return m;
}

bool FinDimQuotient::is_commutative() const
{
	for (std::size_t i = 0; i < dim(); ++i)
		for (std::size_t j = i + 1; j < dim(); ++j)
			if (table_[i][j] != table_[j][i])
				return false;
	return true;
}

bool FinDimQuotient::is_associative() const
{
	std::size_t const n = dim();
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			for (std::size_t k = 0; k < n; ++k)
			{
				Vector ei = unit_vector(n, i), ek = unit_vector(n, k);
				if (mul(table_[i][j], ek) != mul(ei, table_[j][k]))
					return false;
			}
	return true;
}

Matrix FinDimQuotient::to_matrix(Vector const &a) const
{
	if (matrices_.empty())
		throw Error(ErrorCode::InvalidArgument, "algebra has no matrix form");
	if (a.size() != dim())
		throw Error(ErrorCode::DimensionMismatch, "to_matrix");
	Matrix m(matrix_size_, matrix_size_);
	for (std::size_t i = 0; i < dim(); ++i)
		if (!is_zero(a[i]))
			m = m + a[i] * matrices_[i];
	return m;
}

std::optional<Vector> FinDimQuotient::coordinates(Matrix const &m) const
{
	if (matrices_.empty())
		throw Error(ErrorCode::InvalidArgument, "algebra has no matrix form");
	Vector flat = m.flatten();
	if (!matrix_span_.contains(flat))
		return std::nullopt;
	std::vector<Vector> cols;
	for (auto const &b : matrices_)
		cols.push_back(b.flatten());
	return solve(Matrix::from_columns(flat.size(), cols), flat);
}

} // namespace liehopf
