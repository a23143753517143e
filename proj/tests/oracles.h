#pragma once

// Reference computations that share no code with the library beyond the
// structure constants they are given.

#include "liehopf/lie_algebra.h"
#include "liehopf/pbw.h"

#include <map>
#include <string>
#include <vector>

namespace oracle {

using liehopf::Rational;
using Word = std::string; // letters 'a' + i
using Poly = std::map<Word, Rational>;

inline void add_to(Poly &p, Word const &w, Rational const &c)
{
	Rational &slot = p[w];
	slot += c;
	if (slot == 0)
		p.erase(w);
}

/// Normal forms in the free associative algebra on the basis letters modulo
/// the two-sided ideal generated by ba − ab − [b,a] (b > a). Works by
/// recursive left insertion: g·(m₁m₂…) is either already sorted or equals
/// m₁·(g m₂…) + [g,m₁] m₂….
class FreeAlgebraReduction
{
  public:
	explicit FreeAlgebraReduction(liehopf::LieAlgebra const &L) : L_(L) {}

	Poly normal_form(Word const &w)
	{
		if (w.size() <= 1)
			return Poly{{w, 1}};
		Poly rest = normal_form(w.substr(1));
		Poly out;
		for (auto const &[m, c] : rest)
			for (auto const &[m2, c2] : insert(w[0], m))
				add_to(out, m2, c * c2);
		return out;
	}

	liehopf::PbwElement as_pbw(Poly const &p) const
	{
		liehopf::PbwElement e;
		for (auto const &[w, c] : p)
		{
			liehopf::Monomial m;
			for (char ch : w)
				m.push_back(ch - 'a');
			e.add_term(m, c);
		}
		return e;
	}

  private:
	// Normal form of g·m for a sorted word m.
	Poly const &insert(char g, Word const &m)
	{
		auto key = std::string(1, g) + "|" + m;
		if (auto it = memo_.find(key); it != memo_.end())
			return it->second;
		Poly out;
		if (m.empty() || g <= m[0])
			out[std::string(1, g) + m] = 1;
		else
		{
			Word tail = m.substr(1);
			for (auto const &[w, c] : insert(g, tail))
				for (auto const &[w2, c2] : insert(m[0], w))
					add_to(out, w2, c * c2);
			auto br = L_.basis_bracket(g - 'a', m[0] - 'a');
			for (std::size_t k = 0; k < br.size(); ++k)
			{
				if (br[k] == 0)
					continue;
				Word w = std::string(1, static_cast<char>('a' + k)) + tail;
				for (auto const &[w2, c2] : normal_form(w))
					add_to(out, w2, br[k] * c2);
			}
		}
		return memo_[key] = out;
	}

	liehopf::LieAlgebra L_;
	std::map<std::string, Poly> memo_;
};

/// Degree-truncated free associative algebra over letters of degree 1.
class TruncatedFreeAlgebra
{
  public:
	explicit TruncatedFreeAlgebra(std::size_t max_degree) : max_(max_degree) {}

	Poly mul(Poly const &a, Poly const &b) const
	{
		Poly out;
		for (auto const &[u, c] : a)
			for (auto const &[v, d] : b)
				if (u.size() + v.size() <= max_)
					add_to(out, u + v, c * d);
		return out;
	}

	Poly exp(Poly const &a) const
	{
		Poly out{{"", 1}}, term{{"", 1}};
		for (std::size_t k = 1; k <= max_; ++k)
		{
			term = scale(mul(term, a), Rational(1, k));
			out = sum(out, term);
		}
		return out;
	}

	Poly log(Poly const &u) const
	{
		Poly a = sum(u, Poly{{"", -1}});
		Poly out, power{{"", 1}};
		for (std::size_t k = 1; k <= max_; ++k)
		{
			power = mul(power, a);
			out = sum(out, scale(power, Rational(k % 2 ? 1 : -1, k)));
		}
		return out;
	}

	static Poly commutator(Poly const &a, Poly const &b, std::size_t max)
	{
		TruncatedFreeAlgebra T(max);
		return sum(T.mul(a, b), scale(T.mul(b, a), -1));
	}

	static Poly sum(Poly a, Poly const &b)
	{
		for (auto const &[w, c] : b)
			add_to(a, w, c);
		return a;
	}

	static Poly scale(Poly a, Rational const &s)
	{
		if (s == 0)
			return {};
		for (auto &[w, c] : a)
			c *= s;
		return a;
	}

  private:
	std::size_t max_;
};

/// Coefficients of log(e^x e^y) on x, y, [x,y], [x,[x,y]], [y,[x,y]],
/// obtained by matching words in the free algebra truncated at degree 3.
inline std::vector<Rational> bch_class3_coefficients()
{
	using T = TruncatedFreeAlgebra;
	T free(3);
	Poly x{{"a", 1}}, y{{"b", 1}};
	Poly series = free.log(free.mul(free.exp(x), free.exp(y)));
	Poly xy = T::commutator(x, y, 3);
	std::vector<Poly> lie_basis{x, y, xy, T::commutator(x, xy, 3),
	                            T::commutator(y, xy, 3)};

	std::vector<Word> words;
	for (auto const &[w, c] : series)
		words.push_back(w);
	for (auto const &p : lie_basis)
		for (auto const &[w, c] : p)
			words.push_back(w);
	std::sort(words.begin(), words.end());
	words.erase(std::unique(words.begin(), words.end()), words.end());

	liehopf::Matrix A(words.size(), lie_basis.size());
	liehopf::Vector rhs(words.size());
	for (std::size_t r = 0; r < words.size(); ++r)
	{
		for (std::size_t j = 0; j < lie_basis.size(); ++j)
			if (auto it = lie_basis[j].find(words[r]); it != lie_basis[j].end())
				A(r, j) = it->second;
		if (auto it = series.find(words[r]); it != series.end())
			rhs[r] = it->second;
	}
	auto sol = liehopf::solve(A, rhs);
	return sol ? *sol : std::vector<Rational>{};
}

} // namespace oracle
