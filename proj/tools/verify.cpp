#include "verify.h"

#include "liehopf/abelian_dual.h"
#include "liehopf/hopf_checks.h"
#include "liehopf/representations.h"
#include "liehopf/tower.h"
#include "liehopf/truncation.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <string_view>

namespace liehopf::cli {

namespace {

using Rng = std::mt19937_64;

Rational small_rational(Rng &rng, int lo = -3, int hi = 3)
{
	std::uniform_int_distribution<int> num(lo, hi), den(1, 3);
	Rational q(num(rng), den(rng));
	q.canonicalize();
	return q;
}

std::uint64_t fnv1a(std::string_view s)
{
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : s)
		h = (h ^ c) * 1099511628211ull;
	return h;
}

// Linear forms and exponentials of linear forms, read off a canonical form.
bool is_linear_form(ExpPolyFunction const &f)
{
	auto const &s = f.summands();
	if (s.empty())
		return true;
	if (s.size() != 1 || !is_zero(s.begin()->first))
		return false;
	for (auto const &[e, c] : s.begin()->second.terms())
		if (std::accumulate(e.begin(), e.end(), 0) != 1)
			return false;
	return true;
}

bool is_exponential_form(ExpPolyFunction const &f)
{
	auto const &s = f.summands();
	return s.size() == 1 && s.begin()->second == Polynomial::constant(f.dim(), 1);
}

std::size_t binomial(std::size_t n, std::size_t k)
{
	std::size_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

PbwElement random_element(Rng &rng, std::vector<Monomial> const &window,
                          int terms = 3)
{
	std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
	PbwElement u;
	for (int k = 0; k < terms; ++k)
		u += PbwElement::monomial(window[pick(rng)], small_rational(rng));
	return u;
}

class Suites
{
  public:
	Suites(VerifyOptions const &opts) : opts_(opts)
	{
		for (auto &e : corpus::algebras())
			if (opts.algebras.empty() ||
			    std::count(opts.algebras.begin(), opts.algebras.end(), e.name))
				algebras_.push_back(std::move(e));
		for (auto const &e : opts.extra)
			algebras_.push_back(e);
	}

	void run(std::string const &suite, Report &report)
	{
		report_ = &report;
		// Each suite draws from its own stream so selections do not shift
		// one another's random inputs.
		rng_.seed(opts_.seed ^ fnv1a(suite));
		if (suite == "pbw")
			pbw();
		else if (suite == "hopf")
			hopf();
		else if (suite == "primitives")
			primitives();
		else if (suite == "membership")
			membership();
		else if (suite == "multiplicativity")
			multiplicativity();
		else if (suite == "truncation")
			truncation();
		else if (suite == "representations")
			representations();
		else if (suite == "tower")
			tower();
		else if (suite == "abelian")
			abelian();
		else if (suite == "a2")
			a2();
	}

  private:
	void add(std::string name, bool ok, std::string witness = {})
	{
		report_->add(make_record(std::move(name), ok, std::move(witness)));
	}

	Envelope envelope(LieAlgebra const &L,
	                  RewriteStrategy s = RewriteStrategy::LeftmostDescent) const
	{
		return Envelope(L, {s, opts_.rule, opts_.seed});
	}

	void pbw()
	{
		for (auto const &[name, doc] : algebras_)
		{
			LieAlgebra const &L = doc.algebra;
			std::string const p = "pbw." + name + ".";
			add(p + "jacobi", check_jacobi(L).ok());

			bool dims = true;
			std::string where;
			for (int d = 0; d <= 5 && dims; ++d)
				if (pbw_window(L.dim(), d).size() != binomial(L.dim() + d, d))
				{
					dims = false;
					where = "degree " + std::to_string(d);
				}
			add(p + "window_dimension", dims, where);

			Envelope left = envelope(L), right = envelope(L, RewriteStrategy::RightmostDescent),
			         random = envelope(L, RewriteStrategy::Random);
			bool relations = true;
			where.clear();
			for (int i = 0; i < static_cast<int>(L.dim()); ++i)
				for (int j = i + 1; j < static_cast<int>(L.dim()); ++j)
				{
					auto expected = PbwElement::monomial({i, j}) -
					                PbwElement::from_vector(L.basis_bracket(i, j));
					if (left.straighten(std::vector{j, i}) != expected && relations)
					{
						relations = false;
						where = L.name(j) + "*" + L.name(i);
					}
				}
			add(p + "relations", relations, where);

			bool confluent = true;
			where.clear();
			std::uniform_int_distribution<int> len(0, 6),
			    letter(0, std::max(0, static_cast<int>(L.dim()) - 1));
			for (int t = 0; t < 50 && L.dim() > 0; ++t)
			{
				std::vector<int> w(len(rng_));
				for (auto &c : w)
					c = letter(rng_);
				auto a = left.straighten(w);
				if ((a != right.straighten(w) || a != random.straighten(w)) && confluent)
				{
					confluent = false;
					for (int c : w)
						where += (where.empty() ? "" : "*") + L.name(c);
				}
			}
			add(p + "confluence", confluent, where);

			auto window = pbw_window(L.dim(), 2);
			bool assoc = true;
			for (int t = 0; t < 30; ++t)
			{
				auto a = random_element(rng_, window), b = random_element(rng_, window),
				     c = random_element(rng_, window);
				if (left.mul(left.mul(a, b), c) != left.mul(a, left.mul(b, c)))
					assoc = false;
			}
			add(p + "associativity", assoc);
		}
	}

	void hopf()
	{
		for (auto const &[name, doc] : algebras_)
			report_->append(hopf_axioms(envelope(doc.algebra), opts_.degree),
			                "hopf." + name);
	}

	void primitives()
	{
		for (auto const &[name, doc] : algebras_)
		{
			LieAlgebra const &L = doc.algebra;
			auto P = primitive_space(envelope(L), opts_.degree);
			add("primitives." + name + ".dimension", P.space.dim() == L.dim(),
			    "dim P = " + std::to_string(P.space.dim()));
			bool gens = true;
			for (std::size_t i = 0; i < L.dim(); ++i)
				gens = gens && P.space.contains(window_coordinates(
				                   P.monomials, PbwElement::generator(static_cast<int>(i))));
			add("primitives." + name + ".contains_generators", gens);
		}
	}

	void membership()
	{
		int const d = std::min(opts_.degree, 3);
		for (auto const &[name, doc] : algebras_)
		{
			LieAlgebra const &L = doc.algebra;
			Subspace J = derived_ideal(L);
			if (J.dim() == 0)
				continue;
			Envelope E = envelope(L);
			std::string const p = "membership." + name + ".";
			auto ulj = ulj_window(E, J, d);
			auto ker = quotient_kernel_window(E, J, d);
			add(p + "ulj_equals_quotient_kernel", ulj.space == ker.space,
			    "dims " + std::to_string(ulj.space.dim()) + " vs " +
			        std::to_string(ker.space.dim()));

			auto Up = functor_U_on_quotient(E, J);
			auto window = pbw_window(L.dim(), d);
			bool agree = true;
			for (int t = 0; t < 20; ++t)
			{
				// Mix random elements with elements forced into U(L)J.
				auto u = random_element(rng_, window);
				if (t % 2 == 0)
					u = E.mul(u, PbwElement::from_vector(J.basis().front()));
				if (membership_ULJ(E, u, J) != Up(u).is_zero())
					agree = false;
			}
			add(p + "decision_agrees_with_quotient", agree);
		}
	}

	void multiplicativity()
	{
		int const d = std::min(opts_.degree, 3);
		auto k1 = corpus::abelian(1).algebra;
		for (auto const &[name, doc] : algebras_)
		{
			if (doc.algebra.dim() > 3)
				continue;
			auto w = multiplicativity_witness(doc.algebra, k1, d);
			add("multiplicativity." + name + "_x_abelian1.bijective", w.bijective(),
			    "rank " + std::to_string(w.rank) + ", dims " +
			        std::to_string(w.source_dim) + "/" + std::to_string(w.target_dim));
		}
	}

	void truncation()
	{
		for (auto const &[name, doc] : algebras_)
		{
			if (doc.weights.empty())
				continue;
			LieAlgebra const &L = doc.algebra;
			GradedTruncation T(L, doc.weights, 5, {RewriteStrategy::LeftmostDescent,
			                                       opts_.rule, opts_.seed});
			std::string const p = "truncation." + name + ".";
			std::vector<Monomial> augmented(T.basis().begin() + 1, T.basis().end());

			bool exp_log = true, log_exp = true;
			for (int t = 0; t < 20; ++t)
			{
				auto a = T.truncate(random_element(rng_, augmented));
				if (log_trunc(T, exp_trunc(T, a)) != a)
					exp_log = false;
				auto u = PbwElement::unit() + a;
				if (exp_trunc(T, log_trunc(T, u)) != u)
					log_exp = false;
			}
			add(p + "log_exp_identity", exp_log);
			add(p + "exp_log_identity", log_exp);

			bool grouplike = true;
			for (int t = 0; t < 10; ++t)
			{
				Vector v(L.dim());
				for (auto &c : v)
					c = small_rational(rng_);
				auto x = T.truncate(PbwElement::from_vector(v));
				grouplike = grouplike && is_grouplike_trunc(T, exp_trunc(T, x));
			}
			add(p + "exp_of_primitive_is_grouplike", grouplike);

			if (L.dim() < 2)
				continue;
			auto x = T.truncate(PbwElement::generator(0));
			auto y = T.truncate(PbwElement::generator(1));
			auto z = bch(T, x, y);
			add(p + "bch_is_primitive", is_primitive_trunc(T, z));
			// Up to weight 2: x + y + [x,y]/2.
			PbwElement low;
			for (auto const &[m, c] : z.terms())
				if (T.weight(m) <= 2)
					low += PbwElement::monomial(m, c);
			auto expected = x + y + Rational(1, 2) * T.envelope().commutator(x, y);
			PbwElement expected_low;
			for (auto const &[m, c] : expected.terms())
				if (T.weight(m) <= 2)
					expected_low += PbwElement::monomial(m, c);
			add(p + "bch_low_order", low == expected_low, format_element(L, z));
		}
	}

	void representations()
	{
		auto L = corpus::heisenberg().algebra;
		Envelope E = envelope(L);
		int const d = std::min(opts_.degree, 3);
		for (auto const &rep : corpus::heisenberg_representations())
		{
			auto q = rep_quotient(L, rep.images);
			std::string const p = "representations.heisenberg." + rep.name + ".";
			add(p + "window_multiplicative", q.window(d).check_multiplicative(E));
			bool closed = true;
			auto const &A = q.algebra;
			for (std::size_t i = 0; i < A.dim(); ++i)
				for (std::size_t j = 0; j < A.dim(); ++j)
					closed = closed && A.coordinates(A.matrices()[i] * A.matrices()[j]).has_value();
			add(p + "closed_under_products", closed,
			    "dim " + std::to_string(A.dim()));
			// Nilpotent images are summed exactly, the rest within tolerance.
			bool inside = true;
			for (auto const &g : q.generator_images)
			{
				auto e = matrix_exp(A, g);
				inside = inside && (e.exact || e.residual <= matrix_exp_tolerance);
			}
			add(p + "exp_of_generators_in_algebra", inside);
		}
	}

	void tower()
	{
		auto doc = corpus::heisenberg_tower();
		Tower T = make_tower(doc, {RewriteStrategy::LeftmostDescent, opts_.rule, opts_.seed});
		int const d = std::min(opts_.degree, 3);
		report_->append(tower_checks(T, d), "tower.heis_tower");
		for (auto const &rep : corpus::heisenberg_representations())
		{
			auto F = factor_through_tower(T, rep.images, d);
			add("tower.heis_tower.factorization." + rep.name,
			    factorization_agrees(T, F, rep.images, d),
			    "stage " + std::to_string(F.stage));
		}
		auto window = pbw_window(T.base().dim(), 2);
		bool threads = true;
		for (int t = 0; t < 10; ++t)
		{
			auto a = thread_of(T, random_element(rng_, window));
			auto b = thread_of(T, random_element(rng_, window));
			threads = threads && check_thread(T, thread_mul(T, a, b));
		}
		add("tower.heis_tower.thread_products", threads);
	}

	ExpPolyFunction random_fn(std::size_t d)
	{
		std::uniform_int_distribution<int> nsum(1, 3), nterms(1, 3), deg(0, 2),
		    var(0, static_cast<int>(d) - 1), coin(0, 2);
		ExpPolyFunction f(d);
		for (int s = nsum(rng_); s > 0; --s)
		{
			Vector l(d);
			if (coin(rng_) != 0)
				for (auto &c : l)
					c = small_rational(rng_, -1, 1);
			Polynomial p(d);
			for (int t = nterms(rng_); t > 0; --t)
			{
				Exponent e(d, 0);
				for (int k = deg(rng_); k > 0; --k)
					++e[var(rng_)];
				p.add_term(e, small_rational(rng_));
			}
			f.add_summand(l, p);
		}
		return f;
	}

	void abelian()
	{
		bool coassoc = true, multiplicative = true, convolution = true;
		for (int t = 0; t < 30; ++t)
		{
			std::size_t d = 1 + t % 3;
			auto f = random_fn(d), g = random_fn(d);
			coassoc = coassoc && gamma_left(f) == gamma_right(f);
			multiplicative = multiplicative && gamma(f * g) == gamma(f) * gamma(g);
			for (int side : {0, 1})
				convolution = convolution &&
				              convolve_antipode(gamma(f), d, side) == counit_fn(f);
		}
		add("abelian.gamma_coassociative", coassoc);
		add("abelian.gamma_multiplicative", multiplicative);
		add("abelian.antipode_convolution", convolution);

		bool morphism = true, coproduct = true, counit_ok = true, antipode = true;
		for (std::size_t d = 1; d <= 3; ++d)
		{
			auto L = corpus::abelian(d).algebra;
			Envelope E = envelope(L);
			auto window = pbw_window(d, 2);
			for (int t = 0; t < 10; ++t)
			{
				auto u = random_element(rng_, window), v = random_element(rng_, window);
				morphism = morphism && q_map(L, E.mul(u, v)) == q_map(L, u) * q_map(L, v);
				coproduct = coproduct && gamma(q_map(L, u)) == q_tensor(L, E.coproduct(u));
				counit_ok = counit_ok &&
				            q_map(L, u).eval(Vector(d)) == ExpRational(counit(u));
				antipode = antipode && q_map(L, E.antipode(u)) == antipode_fn(q_map(L, u));
			}
		}
		add("abelian.q_multiplicative", morphism);
		add("abelian.q_intertwines_coproduct", coproduct);
		add("abelian.q_intertwines_counit", counit_ok);
		add("abelian.q_intertwines_antipode", antipode);

		bool primitive = true, grouplike = true;
		std::string where;
		std::uniform_int_distribution<int> kind(0, 3);
		for (int t = 0; t < 100; ++t)
		{
			std::size_t d = 1 + t % 3;
			Vector l(d);
			for (auto &c : l)
				c = small_rational(rng_);
			ExpPolyFunction f(d);
			switch (kind(rng_))
			{
			case 0: f = nu_embed(l); break;
			case 1: f = ExpPolyFunction::exponential(l); break;
			case 2: f = nu_embed(l) * nu_embed(l) + nu_embed(l); break;
			default: f = random_fn(d);
			}
			bool const is_linear = is_linear_form(f), is_exp = is_exponential_form(f);
			if (is_primitive_fn(f) != is_linear && primitive)
			{
				primitive = false;
				where = f.format();
			}
			if (is_grouplike_fn(f) != is_exp && grouplike)
			{
				grouplike = false;
				where = f.format();
			}
		}
		add("abelian.primitive_iff_linear", primitive, where);
		add("abelian.grouplike_iff_exponential", grouplike, where);
	}

	void a2()
	{
		bool mult = true, units = true;
		for (int t = 0; t < 100; ++t)
		{
			A2Element a{small_rational(rng_), small_rational(rng_)};
			A2Element b{small_rational(rng_), small_rational(rng_)};
			mult = mult && a2_matrix(a2_mul(a, b)) == a2_matrix(a) * a2_matrix(b);
			bool invertible = inverse(a2_matrix(a)).has_value();
			units = units && a2_is_unit(a) == invertible && a2_is_unit(a) == !is_zero(a.y);
		}
		add("a2.matrix_multiplicative", mult);
		add("a2.units_iff_y_nonzero", units);
		add("a2.radical", radical_commutative(a2_algebra()) ==
		                      Subspace::span(2, std::vector<Vector>{Vector{1, 0}}));
		bool count = true, property = true;
		for (std::size_t n = 0; n <= 8; ++n)
		{
			auto census = a2_morphism_census(n);
			count = count && census.size() == n;
			for (auto const &f : census)
				property = property && f.is_morphism && f.radical_condition;
		}
		add("a2.census_count", count);
		add("a2.census_radical_preimage_in_kernel", property);
	}

	VerifyOptions const &opts_;
	std::vector<corpus::Entry> algebras_;
	Report *report_ = nullptr;
	Rng rng_;
};

} // namespace

std::vector<std::string> const &suite_names()
{
	static std::vector<std::string> const names{
	    "pbw",        "hopf",           "primitives",      "membership",
	    "multiplicativity", "truncation", "representations", "tower",
	    "abelian",    "a2"};
	return names;
}

Report run_verify(VerifyOptions const &opts)
{
	Report report;
	report.seed = opts.seed;
	Suites suites(opts);
	for (auto const &s : suite_names())
	{
		bool selected = opts.suites.empty() ||
		                std::count(opts.suites.begin(), opts.suites.end(), s);
		if (selected)
			suites.run(s, report);
		else
			report.add({s, Status::Skip, "not selected"});
	}
	report.sort();
	return report;
}

} // namespace liehopf::cli
