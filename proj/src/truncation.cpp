#include "liehopf/truncation.h"

#include "liehopf/error.h"

#include <algorithm>

namespace liehopf {

GradedTruncation::GradedTruncation(LieAlgebra L, std::vector<int> weights,
                                   int cutoff, RewriteOptions options)
    : E_(std::move(L), options), weights_(std::move(weights)), cutoff_(cutoff)
{
	LieAlgebra const &A = E_.algebra();
	if (cutoff_ < 1)
		throw Error(ErrorCode::InvalidArgument, "cutoff must be at least 1");
	if (weights_.size() != A.dim())
		throw Error(ErrorCode::DimensionMismatch, "one weight per basis element");
	for (int w : weights_)
		if (w <= 0)
			throw Error(ErrorCode::InvalidArgument, "weights must be positive");
	for (auto const &[key, terms] : A.brackets())
		for (auto const &[k, c] : terms)
			if (weights_[k] != weights_[key.first] + weights_[key.second])
				throw Error(ErrorCode::WeightsNotAdditive,
				            "[" + A.name(key.first) + "," + A.name(key.second) +
				                "] has a term " + A.name(k) + " of weight " +
				                std::to_string(weights_[k]));

	// Non-decreasing index sequences of total weight < N.
	std::vector<std::pair<Monomial, int>> stack{{{}, 0}};
	while (!stack.empty())
	{
		auto [m, w] = std::move(stack.back());
		stack.pop_back();
		int start = m.empty() ? 0 : m.back();
		for (int i = start; i < static_cast<int>(A.dim()); ++i)
			if (w + weights_[i] < cutoff_)
			{
				Monomial next = m;
				next.push_back(i);
				stack.emplace_back(std::move(next), w + weights_[i]);
			}
		basis_.push_back(std::move(m));
	}
	std::sort(basis_.begin(), basis_.end(), GradedLex{});
	for (std::size_t i = 0; i < basis_.size(); ++i)
		index_.emplace(basis_[i], static_cast<int>(i));

	std::vector<int> wt(basis_.size());
	for (std::size_t i = 0; i < basis_.size(); ++i)
		wt[i] = weight(basis_[i]);
	table_.assign(basis_.size(), std::vector<TruncElement>(basis_.size()));
	for (std::size_t i = 0; i < basis_.size(); ++i)
		for (std::size_t j = 0; j < basis_.size(); ++j)
		{
			if (wt[i] + wt[j] >= cutoff_)
				continue;
			Monomial word = basis_[i];
			word.insert(word.end(), basis_[j].begin(), basis_[j].end());
			table_[i][j] = truncate(E_.straighten(word));
		}
}

int GradedTruncation::index_of(Monomial const &m) const
{
	auto it = index_.find(m);
	return it == index_.end() ? -1 : it->second;
}

int GradedTruncation::weight(Monomial const &m) const
{
	int w = 0;
	for (int i : m)
		w += weights_.at(i);
	return w;
}

TruncElement GradedTruncation::truncate(PbwElement const &a) const
{
	E_.check_element(a);
	TruncElement out;
	for (auto const &[m, c] : a.terms())
		if (weight(m) < cutoff_)
			out.add_term(m, c);
	return out;
}

TensorElement GradedTruncation::truncate(TensorElement const &t) const
{
	TensorElement out;
	for (auto const &[k, c] : t.terms())
		if (weight(k.first) + weight(k.second) < cutoff_)
			out.add_term(k.first, k.second, c);
	return out;
}

void GradedTruncation::check_element(TruncElement const &a) const
{
	E_.check_element(a);
	for (auto const &[m, c] : a.terms())
		if (weight(m) >= cutoff_)
			throw Error(ErrorCode::DegreeOutOfWindow,
			            format_monomial(algebra(), m) + " has weight ≥ cutoff " +
			                std::to_string(cutoff_));
}

TruncElement GradedTruncation::mul(TruncElement const &a,
                                   TruncElement const &b) const
{
	check_element(a);
	check_element(b);
	TruncElement out;
	for (auto const &[ma, ca] : a.terms())
	{
		int i = index_of(ma);
		for (auto const &[mb, cb] : b.terms())
		{
			auto const &p = table_[i][index_of(mb)];
			if (p.is_zero())
				continue;
			Rational c = ca * cb;
			for (auto const &[m, cp] : p.terms())
				out.add_term(m, c * cp);
		}
	}
	return out;
}

TruncElement GradedTruncation::power(TruncElement const &a, unsigned k) const
{
	TruncElement r = PbwElement::unit();
	for (unsigned i = 0; i < k && !r.is_zero(); ++i)
		r = mul(r, a);
	return r;
}

TruncElement GradedTruncation::inverse(TruncElement const &u) const
{
	Rational c = counit(u);
	if (is_zero(c))
		throw Error(ErrorCode::InvalidArgument, "counit zero: not invertible");
	// u = c(1 + a) with ε(a) = 0, and a^N = 0.
	TruncElement a = (1 / c) * u - PbwElement::unit();
	TruncElement sum = PbwElement::unit(), term = PbwElement::unit();
	while (!(term = mul(term, -a)).is_zero())
		sum += term;
	return (1 / c) * sum;
}

GradedTruncation build_truncation(LieAlgebra const &L,
                                  std::vector<int> const &weights, int N)
{
	return GradedTruncation(L, weights, N);
}

TruncElement exp_trunc(GradedTruncation const &T, TruncElement const &a)
{
	T.check_element(a);
	if (!is_zero(counit(a)))
		throw Error(ErrorCode::NonzeroConstantTerm,
		            "exp needs an element with zero constant term");
	TruncElement sum = PbwElement::unit(), term = PbwElement::unit();
	for (int k = 1; !(term = T.mul(term, a)).is_zero(); ++k)
	{
		term *= Rational(1, k);
		sum += term;
	}
	return sum;
}

TruncElement log_trunc(GradedTruncation const &T, TruncElement const &u)
{
	T.check_element(u);
	if (counit(u) != 1)
		throw Error(ErrorCode::CounitNotOne, "log needs counit 1");
	TruncElement a = u - PbwElement::unit();
	TruncElement sum, power = PbwElement::unit();
	for (int k = 1; !(power = T.mul(power, a)).is_zero(); ++k)
		sum += Rational(k % 2 ? 1 : -1, k) * power;
	return sum;
}

TruncElement bch(GradedTruncation const &T, TruncElement const &a,
                 TruncElement const &b)
{
	if (!is_primitive_trunc(T, a) || !is_primitive_trunc(T, b))
		throw Error(ErrorCode::NotPrimitive, "bch needs primitive arguments");
	return log_trunc(T, T.mul(exp_trunc(T, a), exp_trunc(T, b)));
}

TensorElement coproduct_trunc(GradedTruncation const &T, TruncElement const &a)
{
	T.check_element(a);
	return T.truncate(T.envelope().coproduct(a));
}

bool is_grouplike_trunc(GradedTruncation const &T, TruncElement const &u)
{
	return counit(u) == 1 &&
	       coproduct_trunc(T, u) == T.truncate(TensorElement::pure(u, u));
}

bool is_primitive_trunc(GradedTruncation const &T, TruncElement const &a)
{
	PbwElement const one = PbwElement::unit();
	return coproduct_trunc(T, a) ==
	       TensorElement::pure(a, one) + TensorElement::pure(one, a);
}

} // namespace liehopf
