// Acceptance gate: one line per criterion, exit status 0 iff all pass.

#include "liehopf/abelian_dual.h"
#include "liehopf/corpus.h"
#include "liehopf/hopf_checks.h"
#include "liehopf/tower.h"
#include "liehopf/truncation.h"

#include "oracles.h"

#include <fmt/core.h>

#include <chrono>
#include <functional>
#include <random>
#include <string>

using namespace liehopf;

namespace {

struct Outcome
{
	bool ok = true;
	std::string detail;
};

Rational small_rational(std::mt19937 &rng, int lo = -3, int hi = 3)
{
	std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
	Rational q(num(rng), den(rng));
	q.canonicalize();
	return q;
}

Vector random_vector(std::mt19937 &rng, std::size_t d)
{
	Vector v(d);
	for (auto &x : v)
		x = small_rational(rng);
	return v;
}

Vector nonzero_vector(std::mt19937 &rng, std::size_t d)
{
	Vector v = random_vector(rng, d);
	if (is_zero(v))
		v[0] = 1;
	return v;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
	std::size_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

PbwElement random_window_element(std::mt19937 &rng, std::vector<Monomial> const &w)
{
	std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
	PbwElement u;
	for (int k = 0; k < 3; ++k)
		u += PbwElement::monomial(w[pick(rng)], small_rational(rng));
	return u;
}

// 1. straighten() against the free-algebra reduction oracle.
Outcome pbw_oracle(RewriteRule rule)
{
	std::mt19937 rng(101);
	Outcome o;
	std::size_t words = 0, mismatches = 0;
	for (auto const &doc : {corpus::heisenberg(), corpus::sl2(), corpus::solvable2()})
	{
		Envelope E(doc.algebra, {RewriteStrategy::LeftmostDescent, rule});
		oracle::FreeAlgebraReduction ref(doc.algebra);
		std::uniform_int_distribution<int> len(0, 6),
		    letter(0, static_cast<int>(doc.algebra.dim()) - 1);
		for (int t = 0; t < 200; ++t, ++words)
		{
			std::vector<int> w(len(rng));
			oracle::Word word;
			for (auto &c : w)
			{
				c = letter(rng);
				word.push_back(static_cast<char>('a' + c));
			}
			if (E.straighten(w) != ref.as_pbw(ref.normal_form(word)))
				++mismatches;
		}
	}
	o.ok = mismatches == 0;
	o.detail = fmt::format("{} words, {} mismatches", words, mismatches);
	return o;
}

// 2. Window dimensions C(dim + d, d).
Outcome pbw_dimension()
{
	Outcome o;
	std::size_t checked = 0;
	for (auto const &[name, doc] : corpus::algebras())
		for (int d = 0; d <= 5; ++d, ++checked)
		{
			auto w = pbw_window(doc.algebra.dim(), d);
			bool sorted_distinct = std::adjacent_find(w.begin(), w.end(), [](auto const &a, auto const &b) {
				                       return !GradedLex{}(a, b);
			                       }) == w.end();
			bool pbw = std::all_of(w.begin(), w.end(), is_pbw_monomial);
			if (w.size() != binomial(doc.algebra.dim() + d, d) || !sorted_distinct || !pbw)
			{
				o.ok = false;
				o.detail = fmt::format("{} at degree {}", name, d);
			}
		}
	if (o.ok)
		o.detail = fmt::format("{} windows", checked);
	return o;
}

// 3. Hopf axioms on degree-4 windows.
Outcome hopf_suite(RewriteRule rule)
{
	Outcome o;
	std::size_t records = 0;
	for (auto const &doc : {corpus::heisenberg(), corpus::sl2(), corpus::abelian(3)})
		for (auto const &r : hopf_axioms(Envelope(doc.algebra, {RewriteStrategy::LeftmostDescent, rule}), 4))
		{
			++records;
			if (r.status != Status::Pass && o.ok)
			{
				o.ok = false;
				o.detail = r.name + ": " + r.witness;
			}
		}
	if (o.ok)
		o.detail = fmt::format("{} identities on 3 algebras", records);
	return o;
}

// 4. dim P = dim L on degree-4 windows.
Outcome primitive_dimension()
{
	Outcome o;
	for (auto const &[name, doc] : corpus::algebras())
	{
		auto P = primitive_space(Envelope(doc.algebra), 4);
		if (P.space.dim() != doc.algebra.dim())
		{
			o.ok = false;
			o.detail = fmt::format("{}: dim P = {}", name, P.space.dim());
		}
	}
	if (o.ok)
		o.detail = fmt::format("{} algebras", corpus::algebras().size());
	return o;
}

// 5. U(L)J equals ker U(p) on the degree-4 window of U(heis).
Outcome membership_kernel()
{
	auto L = corpus::heisenberg().algebra;
	Envelope E(L);
	Subspace J = Subspace::span(3, std::vector<Vector>{Vector{0, 0, 1}});
	auto ulj = ulj_window(E, J, 4), ker = quotient_kernel_window(E, J, 4);
	Outcome o;
	o.ok = ulj.monomials == ker.monomials && ulj.space.dim() == ker.space.dim() &&
	       ulj.space.contains(ker.space) && ker.space.contains(ulj.space);
	o.detail = fmt::format("rank {} vs {}", ulj.space.dim(), ker.space.dim());
	return o;
}

// 6. Factorization through the Heisenberg tower.
Outcome tower_factorization()
{
	Tower T = make_tower(corpus::heisenberg_tower());
	Outcome o;
	for (auto const &r : tower_checks(T, 4))
		if (r.status != Status::Pass)
		{
			o.ok = false;
			o.detail = r.name;
		}
	std::size_t reps = 0;
	for (auto const &rep : corpus::heisenberg_representations())
	{
		++reps;
		auto F = factor_through_tower(T, rep.images, 4);
		if (!factorization_agrees(T, F, rep.images, 4))
		{
			o.ok = false;
			o.detail = rep.name;
		}
	}
	std::mt19937 rng(606);
	auto window = pbw_window(3, 3);
	for (int t = 0; t < 20; ++t)
	{
		auto a = thread_of(T, random_window_element(rng, window));
		auto b = thread_of(T, random_window_element(rng, window));
		if (!check_thread(T, thread_mul(T, a, b)))
		{
			o.ok = false;
			o.detail = "thread product";
		}
	}
	if (o.ok)
		o.detail = fmt::format("{} representations, 20 thread products", reps);
	return o;
}

// 7. U(heis × K) → U(heis) ⊗ U(K) bijective on degree-3 windows.
Outcome multiplicativity()
{
	auto w = multiplicativity_witness(corpus::heisenberg().algebra,
	                                  corpus::abelian(1).algebra, 3);
	return {w.bijective(), fmt::format("rank {}, dims {} / {}", w.rank, w.source_dim,
	                                   w.target_dim)};
}

// 8. exp/log inverse, BCH coefficients, grouplike exponentials.
Outcome exp_log_bch()
{
	Outcome o;
	auto doc = corpus::free_nilpotent3();
	GradedTruncation T(doc.algebra, doc.weights, 5);
	std::mt19937 rng(808);
	std::bernoulli_distribution keep(0.5);
	for (int t = 0; t < 50; ++t)
	{
		TruncElement a;
		for (auto const &m : T.basis())
			if (!m.empty() && keep(rng))
				a.add_term(m, small_rational(rng));
		if (log_trunc(T, exp_trunc(T, a)) != a)
		{
			o.ok = false;
			o.detail = "log(exp a) != a";
		}
		auto u = PbwElement::unit() + a;
		if (exp_trunc(T, log_trunc(T, u)) != u)
		{
			o.ok = false;
			o.detail = "exp(log u) != u";
		}
		auto x = T.truncate(PbwElement::from_vector(random_vector(rng, doc.algebra.dim())));
		if (!is_grouplike_trunc(T, exp_trunc(T, x)))
		{
			o.ok = false;
			o.detail = "exp of a primitive is not grouplike";
		}
	}
	auto expected = oracle::bch_class3_coefficients();
	std::vector<Rational> stated{1, 1, Rational(1, 2), Rational(1, 12), Rational(-1, 12)};
	GradedTruncation T4(doc.algebra, doc.weights, 4);
	auto z = bch(T4, PbwElement::generator(0), PbwElement::generator(1));
	TruncElement want;
	for (int i = 0; i < 5; ++i)
		want.add_term({i}, expected.at(i));
	if (expected != stated || z != want)
	{
		o.ok = false;
		o.detail = "bch(x, y) = " + format_element(doc.algebra, z);
	}
	if (o.ok)
		o.detail = "50 elements, bch = " + format_element(doc.algebra, z);
	return o;
}

// 9. Abelian duality: γ, q as a Hopf morphism, primitive / grouplike tests.
Outcome abelian_suite()
{
	Outcome o;
	auto fail = [&](std::string what) {
		if (o.ok)
			o.detail = std::move(what);
		o.ok = false;
	};
	std::mt19937 rng(909);

	for (std::size_t d = 1; d <= 3; ++d)
	{
		auto L = corpus::abelian(d).algebra;
		Envelope E(L);
		auto window = pbw_window(d, 4);
		for (auto const &m : window)
		{
			auto u = PbwElement::monomial(m);
			auto f = q_map(L, u);
			if (gamma_left(f) != gamma_right(f))
				fail("gamma not coassociative");
			if (gamma(f) != q_tensor(L, E.coproduct(u)))
				fail("gamma o q != (q x q) o Delta at " + format_monomial(L, m));
			if (f.eval(Vector(d)) != ExpRational(counit(u)))
				fail("eval_0 o q != counit at " + format_monomial(L, m));
		}
		auto low = pbw_window(d, 2);
		for (int t = 0; t < 20; ++t)
		{
			auto u = random_window_element(rng, low), v = random_window_element(rng, low);
			if (q_map(L, E.mul(u, v)) != q_map(L, u) * q_map(L, v))
				fail("q not multiplicative");
		}
	}

	// Family with known answers: (function, primitive, grouplike).
	int cases = 0;
	for (int t = 0; t < 100; ++t, ++cases)
	{
		std::size_t d = 1 + t % 3;
		auto l = nonzero_vector(rng, d), m = nonzero_vector(rng, d);
		ExpPolyFunction f(d);
		bool primitive = false, grouplike = false;
		switch (t % 7)
		{
		case 0: f = nu_embed(l), primitive = true; break;
		case 1: f = ExpPolyFunction::exponential(l), grouplike = true; break;
		case 2: f = ExpPolyFunction::constant(d, 1), grouplike = true; break;
		case 3: f = nu_embed(l) * nu_embed(l) + nu_embed(m); break;
		case 4: f = ExpPolyFunction::exponential(l) + nu_embed(m); break;
		case 5: f = Rational(2) * ExpPolyFunction::exponential(m); break;
		default: f = nu_embed(l) + ExpPolyFunction::constant(d, 1);
		}
		if (is_primitive_fn(f) != primitive || is_grouplike_fn(f) != grouplike)
			fail("predicate mismatch on " + f.format());
	}
	if (o.ok)
		o.detail = fmt::format("degree-4 inputs on abelian 1..3, {} predicate cases", cases);
	return o;
}

// 10. The algebra A₂.
Outcome a2_suite()
{
	Outcome o;
	std::mt19937 rng(1010);
	for (int t = 0; t < 100; ++t)
	{
		A2Element a{small_rational(rng), small_rational(rng)};
		A2Element b{small_rational(rng), small_rational(rng)};
		if (t % 4 == 0)
			a.y = 0;
		if (a2_matrix(a2_mul(a, b)) != a2_matrix(a) * a2_matrix(b))
			o = {false, "a2_matrix not multiplicative"};
		// Units are the elements with an invertible regular representation.
		bool invertible = inverse(a2_matrix(a)).has_value();
		if (a2_is_unit(a) != invertible || a2_is_unit(a) == is_zero(a.y))
			o = {false, "unit test disagrees"};
	}
	if (radical_commutative(a2_algebra()) !=
	    Subspace::span(2, std::vector<Vector>{Vector{1, 0}}))
		o = {false, "radical is not K x {0}"};
	for (std::size_t n = 0; n <= 8; ++n)
	{
		auto census = a2_morphism_census(n);
		if (census.size() != n)
			o = {false, fmt::format("census({}) has {} morphisms", n, census.size())};
		for (auto const &f : census)
			if (!f.is_morphism || !f.radical_condition)
				o = {false, fmt::format("property (iv) fails for n = {}", n)};
	}
	if (o.ok)
		o.detail = "100 pairs, census n <= 8";
	return o;
}

// 11. The broken straightening rule must make 1 and 3 fail.
Outcome mutation()
{
	auto c1 = pbw_oracle(RewriteRule::SignErrorAtFront);
	auto c3 = hopf_suite(RewriteRule::SignErrorAtFront);
	return {!c1.ok && !c3.ok,
	        fmt::format("criterion 1 {} ({}), criterion 3 {} ({})",
	                    c1.ok ? "still passes" : "fails", c1.detail,
	                    c3.ok ? "still passes" : "fails", c3.detail)};
}

} // namespace

int main()
{
	struct Criterion
	{
		int id;
		std::string name;
		double bound;
		std::function<Outcome()> run;
	};
	std::vector<Criterion> criteria{
	    {1, "PBW oracle equivalence", 10, [] { return pbw_oracle(RewriteRule::Standard); }},
	    {2, "PBW window dimensions", 1, pbw_dimension},
	    {3, "Hopf axioms", 30, [] { return hopf_suite(RewriteRule::Standard); }},
	    {4, "primitive space dimension", 30, primitive_dimension},
	    {5, "U(L)J membership vs quotient kernel", 5, membership_kernel},
	    {6, "tower factorization", 5, tower_factorization},
	    {7, "multiplicativity bijection", 5, multiplicativity},
	    {8, "exp / log / BCH", 20, exp_log_bch},
	    {9, "abelian dual Hopf algebra", 10, abelian_suite},
	    {10, "A2 example", 5, a2_suite},
	    {11, "mutation smoke test", 10, mutation},
	};

	int failures = 0;
	for (auto const &c : criteria)
	{
		auto start = std::chrono::steady_clock::now();
		Outcome o;
		try
		{
			o = c.run();
		}
		catch (std::exception const &e)
		{
			o = {false, std::string("exception: ") + e.what()};
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		bool ok = o.ok && secs < c.bound;
		failures += !ok;
		fmt::print("{}  {:>2}  {:<38} {:7.3f}s (< {}s)  {}\n", ok ? "PASS" : "FAIL", c.id,
		           c.name, secs, c.bound, o.detail);
	}
	fmt::print("{} of {} criteria passed\n", criteria.size() - failures, criteria.size());
	return failures == 0 ? 0 : 1;
}
