#include "liehopf/polynomial.h"

#include "liehopf/error.h"

#include <algorithm>
#include <numeric>

namespace liehopf {

Polynomial Polynomial::constant(std::size_t nvars, Rational const &c)
{
	Polynomial p(nvars);
	p.add_term(Exponent(nvars, 0), c);
	return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t j)
{
	Polynomial p(nvars);
	Exponent e(nvars, 0);
	e.at(j) = 1;
	p.add_term(e, 1);
	return p;
}

Polynomial Polynomial::linear(Vector const &a)
{
	Polynomial p(a.size());
	for (std::size_t j = 0; j < a.size(); ++j)
	{
		Exponent e(a.size(), 0);
		e[j] = 1;
		p.add_term(e, a[j]);
	}
	return p;
}

int Polynomial::degree() const
{
	int d = -1;
	for (auto const &[e, c] : terms_)
		d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
	return d;
}

Rational Polynomial::coefficient(Exponent const &e) const
{
	auto it = terms_.find(e);
	return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(Exponent const &e, Rational const &c)
{
	if (e.size() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "exponent length");
	if (liehopf::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(e, c);
	if (!inserted)
	{
		it->second += c;
		if (liehopf::is_zero(it->second))
			terms_.erase(it);
	}
}

void Polynomial::check_same(Polynomial const &o) const
{
	if (o.nvars_ != nvars_)
		throw Error(ErrorCode::DimensionMismatch,
		            "polynomials in different numbers of variables");
}

Rational Polynomial::eval(Vector const &point) const
{
	if (point.size() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "evaluation point");
	Rational sum = 0;
	for (auto const &[e, c] : terms_)
	{
		Rational t = c;
		for (std::size_t j = 0; j < nvars_; ++j)
			for (int k = 0; k < e[j]; ++k)
				t *= point[j];
		sum += t;
	}
	return sum;
}

Polynomial Polynomial::substitute(Matrix const &A) const
{
	if (A.rows() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "substitution matrix");
	std::size_t const m = A.cols();
	std::vector<std::vector<Polynomial>> powers(nvars_);
	Polynomial out(m);
	for (auto const &[e, c] : terms_)
	{
		Polynomial t = constant(m, c);
		for (std::size_t j = 0; j < nvars_; ++j)
		{
			auto &pw = powers[j];
			if (pw.empty())
				pw.push_back(constant(m, 1));
			while (static_cast<int>(pw.size()) <= e[j])
				pw.push_back(pw.back() * linear(A.row(j)));
			if (e[j] > 0)
				t = t * pw[e[j]];
		}
		out += t;
	}
	return out;
}

Polynomial &Polynomial::operator+=(Polynomial const &o)
{
	check_same(o);
	for (auto const &[e, c] : o.terms_)
		add_term(e, c);
	return *this;
}

Polynomial &Polynomial::operator-=(Polynomial const &o)
{
	check_same(o);
	for (auto const &[e, c] : o.terms_)
		add_term(e, -c);
	return *this;
}

Polynomial &Polynomial::operator*=(Rational const &c)
{
	if (liehopf::is_zero(c))
		terms_.clear();
	for (auto &[e, a] : terms_)
		a *= c;
	return *this;
}

Polynomial operator*(Polynomial const &a, Polynomial const &b)
{
	a.check_same(b);
	Polynomial out(a.nvars_);
	Exponent e(a.nvars_);
	for (auto const &[ea, ca] : a.terms_)
		for (auto const &[eb, cb] : b.terms_)
		{
			for (std::size_t j = 0; j < e.size(); ++j)
				e[j] = ea[j] + eb[j];
			out.add_term(e, ca * cb);
		}
	return out;
}

std::string Polynomial::format(std::vector<std::string> const &names) const
{
	if (names.size() != nvars_)
		throw Error(ErrorCode::DimensionMismatch, "variable names");
	if (terms_.empty())
		return "0";
	// Highest total degree first, then lexicographically largest exponent.
	std::vector<std::pair<Exponent, Rational>> sorted(terms_.begin(), terms_.end());
	std::stable_sort(sorted.begin(), sorted.end(), [](auto const &a, auto const &b) {
		int da = std::accumulate(a.first.begin(), a.first.end(), 0);
		int db = std::accumulate(b.first.begin(), b.first.end(), 0);
		if (da != db)
			return da > db;
		return a.first > b.first;
	});
	std::string out;
	for (auto const &[e, coeff] : sorted)
	{
		std::string body;
		for (std::size_t j = 0; j < nvars_; ++j)
		{
			if (e[j] == 0)
				continue;
			if (!body.empty())
				body += "*";
			body += names[j];
			if (e[j] > 1)
				body += "^" + std::to_string(e[j]);
		}
		Rational c = coeff;
		if (out.empty())
		{
			if (sgn(c) < 0)
				out += "-";
		}
		else
			out += sgn(c) < 0 ? " - " : " + ";
		c = abs(c);
		if (body.empty())
			out += to_string(c);
		else if (c == 1)
			out += body;
		else
			out += to_string(c) + "*" + body;
	}
	return out;
}

} // namespace liehopf
