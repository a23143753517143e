#include "liehopf/hopf_checks.h"

#include <array>
#include <functional>

namespace liehopf {

namespace {

using Triple = std::map<std::array<Monomial, 3>, Rational>;

void add(Triple &t, std::array<Monomial, 3> key, Rational const &c)
{
	auto [it, inserted] = t.try_emplace(std::move(key), c);
	if (!inserted)
	{
		it->second += c;
		if (is_zero(it->second))
			t.erase(it);
	}
}

// Collects failures of one identity and turns them into a record.
class Tally
{
  public:
	Tally(LieAlgebra const &L, std::string name) : L_(L), name_(std::move(name))
	{}

	void expect(bool ok, std::function<std::string()> const &where)
	{
		if (ok)
			return;
		if (failures_++ == 0)
			first_ = where();
	}

	CheckRecord record() const
	{
		if (failures_ == 0)
			return make_record(name_, true);
		return make_record(name_, false,
		                   std::to_string(failures_) + " failure(s), first at " +
		                       first_);
	}

	std::string mono(Monomial const &m) const { return format_monomial(L_, m); }

  private:
	LieAlgebra const &L_;
	std::string name_;
	std::size_t failures_ = 0;
	std::string first_;
};

} // namespace

std::vector<CheckRecord> hopf_axioms(Envelope const &E, int d)
{
	LieAlgebra const &L = E.algebra();
	auto const window = pbw_window(E.dim(), d);
	auto M = [](Monomial const &m) { return PbwElement::monomial(m); };

	std::map<Monomial, TensorElement, GradedLex> delta;
	auto coproduct = [&](Monomial const &m) -> TensorElement const & {
		auto it = delta.find(m);
		if (it == delta.end())
			it = delta.emplace(m, E.coproduct(PbwElement::monomial(m))).first;
		return it->second;
	};
	auto coproduct_of = [&](PbwElement const &a) {
		TensorElement out;
		for (auto const &[m, c] : a.terms())
		{
			TensorElement t = coproduct(m);
			t *= c;
			out += t;
		}
		return out;
	};

	std::vector<CheckRecord> out;

	{
		Tally t(L, "relations");
		for (std::size_t i = 0; i < E.dim(); ++i)
			for (std::size_t j = 0; j < E.dim(); ++j)
			{
				auto bi = PbwElement::generator(i), bj = PbwElement::generator(j);
				t.expect(E.commutator(bi, bj) ==
				             PbwElement::from_vector(L.basis_bracket(i, j)),
				         [&] { return "[" + L.name(i) + "," + L.name(j) + "]"; });
			}
		out.push_back(t.record());
	}

	{
		Tally t(L, "associativity");
		for (auto const &a : window)
			for (auto const &b : window)
				for (auto const &c : window)
				{
					if (a.empty() || b.empty() || c.empty() ||
					    static_cast<int>(a.size() + b.size() + c.size()) > d)
						continue;
					t.expect(E.mul(E.mul(M(a), M(b)), M(c)) ==
					             E.mul(M(a), E.mul(M(b), M(c))),
					         [&] {
						         return "(" + t.mono(a) + ", " + t.mono(b) + ", " +
						                t.mono(c) + ")";
					         });
				}
		out.push_back(t.record());
	}

	Tally coassoc(L, "coassociativity"), counit_law(L, "counit"),
	    antipode(L, "antipode"), involution(L, "antipode_involution");
	for (auto const &m : window)
	{
		TensorElement const &D = coproduct(m);
		auto where = [&] { return coassoc.mono(m); };

		Triple left, right;
		for (auto const &[k, c] : D.terms())
		{
			for (auto const &[k2, c2] : coproduct(k.first).terms())
				add(left, {k2.first, k2.second, k.second}, c * c2);
			for (auto const &[k2, c2] : coproduct(k.second).terms())
				add(right, {k.first, k2.first, k2.second}, c * c2);
		}
		coassoc.expect(left == right, where);

		PbwElement eps_left, eps_right;
		for (auto const &[k, c] : D.terms())
		{
			if (k.first.empty())
				eps_left.add_term(k.second, c);
			if (k.second.empty())
				eps_right.add_term(k.first, c);
		}
		counit_law.expect(eps_left == M(m) && eps_right == M(m), where);

		PbwElement s_left, s_right;
		for (auto const &[k, c] : D.terms())
		{
			s_left += c * E.mul(E.antipode(M(k.first)), M(k.second));
			s_right += c * E.mul(M(k.first), E.antipode(M(k.second)));
		}
		PbwElement const expected = PbwElement::scalar(m.empty() ? 1 : 0);
		antipode.expect(s_left == expected && s_right == expected, where);

		involution.expect(E.antipode(E.antipode(M(m))) == M(m), where);
	}
	out.push_back(coassoc.record());
	out.push_back(counit_law.record());
	out.push_back(antipode.record());
	out.push_back(involution.record());

	Tally delta_mul(L, "coproduct_multiplicative"),
	    eps_mul(L, "counit_multiplicative"),
	    anti(L, "antipode_anti_multiplicative");
	for (auto const &a : window)
		for (auto const &b : window)
		{
			if (static_cast<int>(a.size() + b.size()) > d)
				continue;
			auto where = [&] { return "(" + anti.mono(a) + ", " + anti.mono(b) + ")"; };
			PbwElement ab = E.mul(M(a), M(b));
			delta_mul.expect(coproduct_of(ab) ==
			                     tensor_mul(E, E, coproduct(a), coproduct(b)),
			                 where);
			eps_mul.expect(counit(ab) == counit(M(a)) * counit(M(b)), where);
			anti.expect(E.antipode(ab) ==
			                E.mul(E.antipode(M(b)), E.antipode(M(a))),
			            where);
		}
	out.push_back(delta_mul.record());
	out.push_back(eps_mul.record());
	out.push_back(anti.record());
	return out;
}

} // namespace liehopf
