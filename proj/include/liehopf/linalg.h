#pragma once

#include "liehopf/rational.h"

#include <cstddef>
#include <functional>
#include <iterator>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace liehopf {

/// Coordinates with respect to some fixed ordered basis.
using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(Vector const &v);
Vector operator+(Vector const &a, Vector const &b);
Vector operator-(Vector const &a, Vector const &b);
Vector operator-(Vector const &a);
Vector operator*(Rational const &s, Vector const &v);

/// Dense row-major rational matrix.
class Matrix
{
  public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols)
	    : rows_(rows), cols_(cols), data_(rows * cols)
	{}

	static Matrix identity(std::size_t n);
	static Matrix from_columns(std::size_t rows, std::span<Vector const> cols);
	static Matrix from_rows(std::size_t cols, std::span<Vector const> rows);
	/// Elementary matrix E_{ij} (0-based).
	static Matrix unit(std::size_t n, std::size_t i, std::size_t j);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Rational &operator()(std::size_t i, std::size_t j)
	{
		return data_[i * cols_ + j];
	}
	Rational const &operator()(std::size_t i, std::size_t j) const
	{
		return data_[i * cols_ + j];
	}

	Vector row(std::size_t i) const;
	Vector column(std::size_t j) const;
	Matrix transpose() const;
	Rational trace() const;
	bool is_zero() const;
	/// Row-major flattening, used when matrices are treated as vectors.
	Vector flatten() const { return data_; }
	static Matrix unflatten(std::size_t rows, std::size_t cols, Vector const &v);

	Vector operator*(Vector const &v) const;
	friend Matrix operator*(Matrix const &a, Matrix const &b);
	friend Matrix operator+(Matrix const &a, Matrix const &b);
	friend Matrix operator-(Matrix const &a, Matrix const &b);
	friend Matrix operator*(Rational const &s, Matrix const &a);
	friend bool operator==(Matrix const &a, Matrix const &b) = default;

  private:
	std::size_t rows_ = 0, cols_ = 0;
	std::vector<Rational> data_;
};

Matrix commutator(Matrix const &a, Matrix const &b);

struct Echelon
{
	Matrix reduced;                  // reduced row-echelon form
	std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(Matrix const &m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(Matrix const &m);
/// Some x with m x = b, if one exists.
std::optional<Vector> solve(Matrix const &m, Vector const &b);
/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(Matrix const &m);

/// A linear subspace of Q^n kept in canonical reduced row-echelon form, so
/// two subspaces are equal iff their stored bases are equal.
class Subspace
{
  public:
	explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

	static Subspace span(std::size_t ambient_dim,
	                     std::span<Vector const> vectors);
	static Subspace whole(std::size_t ambient_dim);

	std::size_t ambient_dim() const { return ambient_; }
	std::size_t dim() const { return basis_.size(); }
	std::vector<Vector> const &basis() const { return basis_; }
	std::vector<std::size_t> const &pivots() const { return pivots_; }

	/// v minus its component along the echelon basis (zero iff v ∈ this).
	Vector reduce(Vector v) const;
	bool contains(Vector const &v) const;
	bool contains(Subspace const &other) const;
	/// Coordinates of v with respect to basis(); nullopt if v ∉ this.
	std::optional<Vector> coordinates(Vector const &v) const;

	Subspace sum(Subspace const &other) const;
	Subspace intersection(Subspace const &other) const;

	friend bool operator==(Subspace const &, Subspace const &) = default;

  private:
	std::size_t ambient_;
	std::vector<Vector> basis_;
	std::vector<std::size_t> pivots_;
};

/// Incremental Gaussian elimination on sparse vectors keyed by an ordered
/// type. Tracks, for each inserted vector, a caller-provided tag so that a
/// dependent insertion yields the linear relation among tags.
template <class Key, class Compare = std::less<Key>> class SparseEchelon
{
  public:
	using Row = std::map<Key, Rational, Compare>;
	using Relation = std::map<std::size_t, Rational>;

	/// Inserts v. Returns true if v was independent of everything inserted so
	/// far. Otherwise, if relation != nullptr, stores coefficients c_t with
	/// c_tag = 1 and sum_t c_t v_t = 0.
	bool insert(Row v, std::size_t tag, Relation *relation = nullptr)
	{
		Relation combo;
		combo[tag] = 1;
		reduce(v, combo);
		if (v.empty())
		{
			if (relation)
				*relation = std::move(combo);
			return false;
		}
		auto lead = v.begin();
		Rational inv = 1 / lead->second;
		for (auto &[k, c] : v)
			c *= inv;
		for (auto &[k, c] : combo)
			c *= inv;
		Key key = lead->first;
		rows_.emplace(key, Entry{std::move(v), std::move(combo)});
		return true;
	}

	bool contains(Row v) const
	{
		Relation dummy;
		reduce(v, dummy);
		return v.empty();
	}

	std::size_t rank() const { return rows_.size(); }

  private:
	struct Entry
	{
		Row row;
		Relation combo;
	};

	void reduce(Row &v, Relation &combo) const
	{
		auto it = v.begin();
		while (it != v.end())
		{
			auto found = rows_.find(it->first);
			if (found == rows_.end())
			{
				++it;
				continue;
			}
			Rational c = it->second;
			Key key = it->first;
			for (auto const &[k, a] : found->second.row)
			{
				auto &slot = v[k];
				slot -= c * a;
			}
			for (auto const &[t, a] : found->second.combo)
			{
				auto &slot = combo[t];
				slot -= c * a;
				if (is_zero(slot))
					combo.erase(t);
			}
			// pivot rows only touch keys >= key, and key itself cancels
			for (auto jt = v.lower_bound(key); jt != v.end();)
				jt = is_zero(jt->second) ? v.erase(jt) : std::next(jt);
			it = v.upper_bound(key);
		}
	}

	std::map<Key, Entry, Compare> rows_;
};

} // namespace liehopf
