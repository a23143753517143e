#pragma once

#include "liehopf/linalg.h"

#include <map>
#include <string>
#include <vector>

namespace liehopf {

/// Exponent vector of a monomial ω_1^{e_1}⋯ω_n^{e_n}.
using Exponent = std::vector<int>;

/// Polynomial over Q in a fixed number of variables.
class Polynomial
{
  public:
	using Terms = std::map<Exponent, Rational>;

	explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
	static Polynomial constant(std::size_t nvars, Rational const &c);
	static Polynomial variable(std::size_t nvars, std::size_t j);
	/// Σ_j a_j ω_j.
	static Polynomial linear(Vector const &a);

	std::size_t nvars() const { return nvars_; }
	Terms const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// Total degree; −1 for zero.
	int degree() const;
	Rational coefficient(Exponent const &e) const;
	void add_term(Exponent const &e, Rational const &c);

	Rational eval(Vector const &point) const;
	/// p(Aω') for an nvars × m matrix A: a polynomial in m variables.
	Polynomial substitute(Matrix const &A) const;

	Polynomial &operator+=(Polynomial const &o);
	Polynomial &operator-=(Polynomial const &o);
	Polynomial &operator*=(Rational const &c);
	friend Polynomial operator+(Polynomial a, Polynomial const &b) { return a += b; }
	friend Polynomial operator-(Polynomial a, Polynomial const &b) { return a -= b; }
	friend Polynomial operator*(Rational const &c, Polynomial a) { return a *= c; }
	friend Polynomial operator*(Polynomial const &a, Polynomial const &b);
	friend bool operator==(Polynomial const &, Polynomial const &) = default;

	/// e.g. "w1^2 - 2*w1*w2 + 1/3" with the given variable names.
	std::string format(std::vector<std::string> const &names) const;

  private:
	void check_same(Polynomial const &o) const;

	std::size_t nvars_;
	Terms terms_;
};

} // namespace liehopf
