#include "liehopf/linalg.h"

#include "liehopf/error.h"

#include <utility>

namespace liehopf {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i)
{
	Vector v(n);
	v[i] = 1;
	return v;
}

bool is_zero(Vector const &v)
{
	for (auto const &c : v)
		if (!is_zero(c))
			return false;
	return true;
}

namespace {

void check_same_size(Vector const &a, Vector const &b)
{
	if (a.size() != b.size())
		throw Error(ErrorCode::DimensionMismatch,
		            std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

} // namespace

Vector operator+(Vector const &a, Vector const &b)
{
	check_same_size(a, b);
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] + b[i];
	return r;
}

Vector operator-(Vector const &a, Vector const &b)
{
	check_same_size(a, b);
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = a[i] - b[i];
	return r;
}

Vector operator-(Vector const &a)
{
	Vector r(a.size());
	for (std::size_t i = 0; i < a.size(); ++i)
		r[i] = -a[i];
	return r;
}

Vector operator*(Rational const &s, Vector const &v)
{
	Vector r(v.size());
	for (std::size_t i = 0; i < v.size(); ++i)
		r[i] = s * v[i];
	return r;
}

Matrix Matrix::identity(std::size_t n)
{
	Matrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<Vector const> cols)
{
	Matrix m(rows, cols.size());
	for (std::size_t j = 0; j < cols.size(); ++j)
	{
		if (cols[j].size() != rows)
			throw Error(ErrorCode::DimensionMismatch, "column length");
		for (std::size_t i = 0; i < rows; ++i)
			m(i, j) = cols[j][i];
	}
	return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<Vector const> rows)
{
	Matrix m(rows.size(), cols);
	for (std::size_t i = 0; i < rows.size(); ++i)
	{
		if (rows[i].size() != cols)
			throw Error(ErrorCode::DimensionMismatch, "row length");
		for (std::size_t j = 0; j < cols; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t i, std::size_t j)
{
	Matrix m(n, n);
	m(i, j) = 1;
	return m;
}

Matrix Matrix::unflatten(std::size_t rows, std::size_t cols, Vector const &v)
{
	if (v.size() != rows * cols)
		throw Error(ErrorCode::DimensionMismatch, "unflatten");
	Matrix m(rows, cols);
	m.data_ = v;
	return m;
}

Vector Matrix::row(std::size_t i) const
{
	return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

Vector Matrix::column(std::size_t j) const
{
	Vector v(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		v[i] = (*this)(i, j);
	return v;
}

Matrix Matrix::transpose() const
{
	Matrix t(cols_, rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			t(j, i) = (*this)(i, j);
	return t;
}

Rational Matrix::trace() const
{
	Rational t = 0;
	for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
		t += (*this)(i, i);
	return t;
}

bool Matrix::is_zero() const { return liehopf::is_zero(data_); }

Vector Matrix::operator*(Vector const &v) const
{
	if (v.size() != cols_)
		throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
	Vector r(rows_);
	for (std::size_t i = 0; i < rows_; ++i)
		for (std::size_t j = 0; j < cols_; ++j)
			if (!liehopf::is_zero(v[j]))
				r[i] += (*this)(i, j) * v[j];
	return r;
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
	if (a.cols_ != b.rows_)
		throw Error(ErrorCode::DimensionMismatch, "matrix product");
	Matrix r(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			auto const &aik = a(i, k);
			if (is_zero(aik))
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				if (!is_zero(b(k, j)))
					r(i, j) += aik * b(k, j);
		}
	return r;
}

Matrix operator+(Matrix const &a, Matrix const &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw Error(ErrorCode::DimensionMismatch, "matrix sum");
	Matrix r = a;
	for (std::size_t i = 0; i < r.data_.size(); ++i)
		r.data_[i] += b.data_[i];
	return r;
}

Matrix operator-(Matrix const &a, Matrix const &b)
{
	if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
		throw Error(ErrorCode::DimensionMismatch, "matrix difference");
	Matrix r = a;
	for (std::size_t i = 0; i < r.data_.size(); ++i)
		r.data_[i] -= b.data_[i];
	return r;
}

Matrix operator*(Rational const &s, Matrix const &a)
{
	Matrix r = a;
	for (auto &c : r.data_)
		c *= s;
	return r;
}

Matrix commutator(Matrix const &a, Matrix const &b) { return a * b - b * a; }

Echelon rref(Matrix m)
{
	Echelon e;
	std::size_t r = 0;
	for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c)
	{
		std::size_t p = r;
		while (p < m.rows() && is_zero(m(p, c)))
			++p;
		if (p == m.rows())
			continue;
		if (p != r)
			for (std::size_t j = 0; j < m.cols(); ++j)
				std::swap(m(p, j), m(r, j));
		Rational inv = 1 / m(r, c);
		for (std::size_t j = c; j < m.cols(); ++j)
			m(r, j) *= inv;
		for (std::size_t i = 0; i < m.rows(); ++i)
		{
			if (i == r || is_zero(m(i, c)))
				continue;
			Rational f = m(i, c);
			for (std::size_t j = c; j < m.cols(); ++j)
				if (!is_zero(m(r, j)))
					m(i, j) -= f * m(r, j);
		}
		e.pivots.push_back(c);
		++r;
	}
	e.reduced = std::move(m);
	return e;
}

std::size_t rank(Matrix const &m) { return rref(m).pivots.size(); }

std::vector<Vector> nullspace(Matrix const &m)
{
	auto e = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (auto p : e.pivots)
		is_pivot[p] = true;
	std::vector<Vector> out;
	for (std::size_t free = 0; free < m.cols(); ++free)
	{
		if (is_pivot[free])
			continue;
		Vector v(m.cols());
		v[free] = 1;
		for (std::size_t r = 0; r < e.pivots.size(); ++r)
			v[e.pivots[r]] = -e.reduced(r, free);
		out.push_back(std::move(v));
	}
	return out;
}

std::optional<Vector> solve(Matrix const &m, Vector const &b)
{
	if (b.size() != m.rows())
		throw Error(ErrorCode::DimensionMismatch, "solve");
	Matrix aug(m.rows(), m.cols() + 1);
	for (std::size_t i = 0; i < m.rows(); ++i)
	{
		for (std::size_t j = 0; j < m.cols(); ++j)
			aug(i, j) = m(i, j);
		aug(i, m.cols()) = b[i];
	}
	auto e = rref(std::move(aug));
	Vector x(m.cols());
	for (std::size_t r = 0; r < e.pivots.size(); ++r)
	{
		if (e.pivots[r] == m.cols())
			return std::nullopt;
		x[e.pivots[r]] = e.reduced(r, m.cols());
	}
	return x;
}

std::optional<Matrix> inverse(Matrix const &m)
{
	if (m.rows() != m.cols())
		throw Error(ErrorCode::DimensionMismatch, "inverse of non-square");
	std::size_t n = m.rows();
	Matrix aug(n, 2 * n);
	for (std::size_t i = 0; i < n; ++i)
	{
		for (std::size_t j = 0; j < n; ++j)
			aug(i, j) = m(i, j);
		aug(i, n + i) = 1;
	}
	auto e = rref(std::move(aug));
	if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
		return n == 0 ? std::optional<Matrix>(Matrix()) : std::nullopt;
	Matrix inv(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			inv(i, j) = e.reduced(i, n + j);
	return inv;
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<Vector const> vectors)
{
	Subspace s(ambient_dim);
	if (vectors.empty())
		return s;
	auto e = rref(Matrix::from_rows(ambient_dim, vectors));
	for (std::size_t r = 0; r < e.pivots.size(); ++r)
		s.basis_.push_back(e.reduced.row(r));
	s.pivots_ = std::move(e.pivots);
	return s;
}

Subspace Subspace::whole(std::size_t ambient_dim)
{
	std::vector<Vector> units;
	for (std::size_t i = 0; i < ambient_dim; ++i)
		units.push_back(unit_vector(ambient_dim, i));
	return span(ambient_dim, units);
}

Vector Subspace::reduce(Vector v) const
{
	if (v.size() != ambient_)
		throw Error(ErrorCode::DimensionMismatch, "subspace reduce");
	for (std::size_t r = 0; r < basis_.size(); ++r)
	{
		Rational c = v[pivots_[r]];
		if (is_zero(c))
			continue;
		for (std::size_t j = 0; j < ambient_; ++j)
			if (!is_zero(basis_[r][j]))
				v[j] -= c * basis_[r][j];
	}
	return v;
}

bool Subspace::contains(Vector const &v) const
{
	return liehopf::is_zero(reduce(v));
}

bool Subspace::contains(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		throw Error(ErrorCode::DimensionMismatch, "subspace containment");
	for (auto const &v : other.basis_)
		if (!contains(v))
			return false;
	return true;
}

std::optional<Vector> Subspace::coordinates(Vector const &v) const
{
	if (!contains(v))
		return std::nullopt;
	Vector c(basis_.size());
	for (std::size_t r = 0; r < basis_.size(); ++r)
		c[r] = v[pivots_[r]];
	return c;
}

Subspace Subspace::sum(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		throw Error(ErrorCode::DimensionMismatch, "subspace sum");
	std::vector<Vector> all = basis_;
	all.insert(all.end(), other.basis_.begin(), other.basis_.end());
	return span(ambient_, all);
}

Subspace Subspace::intersection(Subspace const &other) const
{
	if (other.ambient_ != ambient_)
		throw Error(ErrorCode::DimensionMismatch, "subspace intersection");
	// solve sum a_i u_i = sum b_j w_j
	std::vector<Vector> cols = basis_;
	for (auto const &w : other.basis_)
		cols.push_back(-w);
	if (cols.empty())
		return Subspace(ambient_);
	auto kernel = nullspace(Matrix::from_columns(ambient_, cols));
	std::vector<Vector> vs;
	for (auto const &k : kernel)
	{
		Vector v(ambient_);
		for (std::size_t i = 0; i < basis_.size(); ++i)
			if (!is_zero(k[i]))
				v = v + k[i] * basis_[i];
		vs.push_back(std::move(v));
	}
	return span(ambient_, vs);
}

} // namespace liehopf
