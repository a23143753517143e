#include "liehopf/corpus.h"
#include "liehopf/error.h"
#include "liehopf/pbw.h"

#include "oracles.h"

#include "printers.h"

#include <gtest/gtest.h>

#include <random>

using namespace liehopf;

namespace {

PbwElement M(Monomial m, Rational c = 1) { return PbwElement::monomial(m, c); }
PbwElement G(int i) { return PbwElement::generator(i); }

Subspace span1(std::size_t n, Vector v)
{
	return Subspace::span(n, std::vector<Vector>{std::move(v)});
}

std::size_t binomial(std::size_t n, std::size_t k)
{
	std::size_t r = 1;
	for (std::size_t i = 1; i <= k; ++i)
		r = r * (n - k + i) / i;
	return r;
}

Envelope heis() { return Envelope(corpus::heisenberg().algebra); }
Envelope sl2() { return Envelope(corpus::sl2().algebra); }

} // namespace

TEST(Straighten, Examples)
{
	auto H = heis();
	// y x = x y − z
	EXPECT_EQ(H.straighten(std::vector{1, 0}), M({0, 1}) - G(2));
	// y x x = x² y − 2 x z
	EXPECT_EQ(H.straighten(std::vector{1, 0, 0}), M({0, 0, 1}) - M({0, 2}, 2));
	// sl2: f e = e f − h
	EXPECT_EQ(sl2().straighten(std::vector{1, 0}), M({0, 1}) - G(2));
	EXPECT_EQ(H.straighten(std::vector<int>{}), PbwElement::unit());
	EXPECT_THROW(H.straighten(std::vector{0, 3}), Error);
}

TEST(Straighten, MatchesFreeAlgebraOracle)
{
	std::mt19937 rng(11);
	for (auto doc : {corpus::heisenberg(), corpus::sl2(), corpus::solvable2()})
	{
		Envelope E(doc.algebra);
		oracle::FreeAlgebraReduction ref(doc.algebra);
		std::uniform_int_distribution<int> len(0, 6),
		    letter(0, static_cast<int>(doc.algebra.dim()) - 1);
		for (int t = 0; t < 60; ++t)
		{
			std::vector<int> w(len(rng));
			std::string s;
			for (auto &i : w)
			{
				i = letter(rng);
				s += static_cast<char>('a' + i);
			}
			EXPECT_EQ(E.straighten(w), ref.as_pbw(ref.normal_form(s))) << s;
		}
	}
}

TEST(Straighten, ConfluentAcrossStrategies)
{
	std::mt19937 rng(5);
	for (auto doc : {corpus::heisenberg(), corpus::sl2(), corpus::solvable2()})
	{
		Envelope left(doc.algebra);
		Envelope right(doc.algebra, {RewriteStrategy::RightmostDescent});
		std::uniform_int_distribution<int> len(0, 6),
		    letter(0, static_cast<int>(doc.algebra.dim()) - 1);
		for (int t = 0; t < 40; ++t)
		{
			std::vector<int> w(len(rng));
			for (auto &i : w)
				i = letter(rng);
			Envelope random(doc.algebra,
			                {RewriteStrategy::Random, RewriteRule::Standard,
			                 static_cast<std::uint64_t>(t)});
			auto a = left.straighten(w);
			EXPECT_EQ(a, right.straighten(w));
			EXPECT_EQ(a, random.straighten(w));
		}
	}
}

TEST(Straighten, SignErrorBreaksOracleAgreement)
{
	auto L = corpus::heisenberg().algebra;
	Envelope bad(L, {RewriteStrategy::LeftmostDescent,
	                 RewriteRule::SignErrorAtFront});
	oracle::FreeAlgebraReduction ref(L);
	EXPECT_NE(bad.straighten(std::vector{1, 0}),
	          ref.as_pbw(ref.normal_form("ba")));
}

TEST(Mul, UnitAndAssociativity)
{
	auto S = sl2();
	auto a = M({0, 1}) + 3 * G(2);
	EXPECT_EQ(S.mul(PbwElement::unit(), a), a);
	EXPECT_EQ(S.mul(a, PbwElement::unit()), a);
	auto ef = M({0, 1});
	EXPECT_EQ(S.mul(ef, G(2)), S.mul(G(0), S.mul(G(1), G(2))));

	oracle::FreeAlgebraReduction ref(S.algebra());
	EXPECT_EQ(S.mul(ef, G(2)), ref.as_pbw(ref.normal_form("abc")));

	Envelope K(corpus::abelian(1).algebra);
	auto one = PbwElement::unit();
	EXPECT_EQ(K.mul(G(0) + one, G(0) - one), M({0, 0}) - one);

	EXPECT_THROW(K.mul(G(1), G(0)), Error);
}

TEST(Mul, FiltrationDegrees)
{
	std::mt19937 rng(3);
	for (auto const &[name, doc] : corpus::algebras())
	{
		Envelope E(doc.algebra);
		auto window = pbw_window(E.dim(), 2);
		std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
		for (int t = 0; t < 20; ++t)
		{
			auto a = M(window[pick(rng)]), b = M(window[pick(rng)]);
			auto ab = E.mul(a, b);
			EXPECT_LE(ab.degree(), a.degree() + b.degree()) << name;
			EXPECT_LE(E.commutator(a, b).degree(), a.degree() + b.degree() - 1)
			    << name;
		}
	}
}

TEST(Counit, Examples)
{
	EXPECT_EQ(counit(PbwElement::unit()), 1);
	EXPECT_EQ(counit(G(0)), 0);
	EXPECT_EQ(counit(PbwElement::scalar(3) + 2 * G(0) + M({0, 1})), 3);
}

TEST(Coproduct, Examples)
{
	auto H = heis();
	auto one = PbwElement::unit();
	EXPECT_EQ(H.coproduct(G(0)),
	          TensorElement::pure(G(0), one) + TensorElement::pure(one, G(0)));
	EXPECT_EQ(H.coproduct(one), TensorElement::pure(one, one));

	Envelope K(corpus::abelian(1).algebra);
	auto x = G(0), x2 = M({0, 0});
	TensorElement expected = TensorElement::pure(x2, one) +
	                         TensorElement::pure(one, x2) +
	                         TensorElement::pure(2 * x, x);
	EXPECT_EQ(K.coproduct(x2), expected);
}

TEST(Antipode, Examples)
{
	auto H = heis();
	EXPECT_EQ(H.antipode(G(0)), -G(0));
	EXPECT_EQ(H.antipode(PbwElement::unit()), PbwElement::unit());
	EXPECT_EQ(H.antipode(M({0, 1})), M({0, 1}) - G(2));
}

TEST(Primitive, Predicate)
{
	auto H = heis();
	EXPECT_TRUE(H.is_primitive(G(0) + 2 * G(2)));
	EXPECT_TRUE(H.is_primitive(PbwElement{}));
	EXPECT_FALSE(H.is_primitive(PbwElement::unit()));
	Envelope K(corpus::abelian(1).algebra);
	EXPECT_FALSE(K.is_primitive(M({0, 0})));
	// commutators of primitives are primitive
	EXPECT_TRUE(H.is_primitive(H.commutator(G(0), G(1))));
}

TEST(Window, Dimensions)
{
	for (auto const &[name, doc] : corpus::algebras())
		for (int d = 0; d <= 5; ++d)
			EXPECT_EQ(pbw_window(doc.algebra.dim(), d).size(),
			          binomial(doc.algebra.dim() + d, d))
			    << name << " d=" << d;
	EXPECT_EQ(pbw_window(3, 4).size(), 35u);
}

TEST(Window, Coordinates)
{
	auto w = pbw_window(2, 2);
	auto e = M({0, 1}, 3) - G(1);
	EXPECT_EQ(from_window_coordinates(w, window_coordinates(w, e)), e);
	EXPECT_THROW(window_coordinates(w, M({0, 0, 0})), Error);
}

TEST(PrimitiveSpace, Examples)
{
	auto P = primitive_space(sl2(), 4);
	EXPECT_EQ(P.space.dim(), 3u);
	for (auto const &p : P.elements())
		EXPECT_EQ(p.degree(), 1);

	auto K = primitive_space(Envelope(corpus::abelian(1).algebra), 3);
	ASSERT_EQ(K.space.dim(), 1u);
	EXPECT_EQ(K.elements()[0], G(0));

	for (auto const &[name, doc] : corpus::algebras())
		EXPECT_EQ(primitive_space(Envelope(doc.algebra), 1).space.dim(),
		          doc.algebra.dim())
		    << name;
}

TEST(Membership, Examples)
{
	auto H = heis();
	auto J = span1(3, {0, 0, 1});
	EXPECT_TRUE(membership_ULJ(H, M({0, 2}) + G(2), J));
	EXPECT_FALSE(membership_ULJ(H, M({0, 1}), J));
	EXPECT_TRUE(membership_ULJ(H, PbwElement{}, J));
	EXPECT_EQ(membership_defect(H, M({0, 1}) + G(2), J), M({0, 1}));
	EXPECT_THROW(membership_ULJ(sl2(), G(0), span1(3, {1, 0, 0})), Error);
}

TEST(Membership, TwoSidedIdealOnWindow)
{
	auto S = sl2();
	auto docs = corpus::algebras();
	for (auto const &[name, doc] : docs)
	{
		Envelope E(doc.algebra);
		auto J = derived_ideal(doc.algebra);
		auto W = ulj_window(E, J, 3);
		for (auto const &u : W.elements())
		{
			if (u.degree() > 2)
				continue;
			for (std::size_t g = 0; g < E.dim(); ++g)
			{
				EXPECT_TRUE(membership_ULJ(E, E.mul(G(g), u), J)) << name;
				EXPECT_TRUE(membership_ULJ(E, E.mul(u, G(g)), J)) << name;
			}
		}
	}
}

TEST(Membership, NonUnitAdaptedBasis)
{
	// J spanned by a vector that is not a basis vector.
	auto L = parse_lie("basis a b c\nbracket a b = c\nbracket a c = b\n");
	Envelope E(L);
	auto J = span1(3, {0, 1, 1});
	ASSERT_TRUE(is_ideal(L, J));
	auto K = quotient_kernel_window(E, J, 3);
	auto W = ulj_window(E, J, 3);
	EXPECT_EQ(K.space, W.space);
	EXPECT_TRUE(membership_ULJ(E, G(1) + G(2), J));
	EXPECT_TRUE(membership_ULJ(E, E.mul(G(1) + G(2), G(0)), J));
	EXPECT_FALSE(membership_ULJ(E, G(1), J));
}

TEST(QuotientFunctor, Examples)
{
	auto H = heis();
	auto J = span1(3, {0, 0, 1});
	auto p = functor_U_on_quotient(H, J);
	EXPECT_TRUE(p(G(2)).is_zero());
	EXPECT_EQ(p(M({0, 1})), M({0, 1}));
	for (auto const &m : pbw_window(3, 4))
	{
		bool has_z = std::count(m.begin(), m.end(), 2) > 0;
		EXPECT_EQ(p(M(m)).is_zero(), has_z);
	}
	auto id = functor_U_on_quotient(H, Subspace(3));
	for (auto const &m : pbw_window(3, 3))
		EXPECT_EQ(id(M(m)), M(m));
}

TEST(QuotientFunctor, KernelEqualsULJ)
{
	for (auto const &[name, doc] : corpus::algebras())
	{
		Envelope E(doc.algebra);
		auto J = derived_ideal(doc.algebra);
		EXPECT_EQ(ulj_window(E, J, 3).space, quotient_kernel_window(E, J, 3).space)
		    << name;
	}
}

TEST(ExtendLieMorphism, Heisenberg)
{
	auto L = corpus::heisenberg().algebra;
	auto reps = corpus::heisenberg_representations();
	auto f = extend_lie_morphism(L, reps[0].images, 4);
	EXPECT_EQ(f.apply_matrix(M({0, 1})), Matrix::unit(3, 0, 2));
	EXPECT_EQ(f.apply_matrix(PbwElement::unit()), Matrix::identity(3));
	EXPECT_TRUE(f.check_multiplicative(Envelope(L)));
	EXPECT_THROW(f.apply(M({0, 0, 0, 0, 0})), Error);

	auto zero = extend_lie_morphism(L, reps[2].images, 3);
	for (auto const &m : pbw_window(3, 3))
		EXPECT_EQ(zero.apply_matrix(M(m)).is_zero(), !m.empty());

	auto bad = reps[0].images;
	bad[2] = Matrix(3, 3);
	EXPECT_THROW(extend_lie_morphism(L, bad, 2), Error);
	bad = reps[0].images;
	bad[1] = Matrix(2, 2);
	EXPECT_THROW(extend_lie_morphism(L, bad, 2), Error);
}

TEST(ExtendLieMorphism, Sl2Adjoint)
{
	auto L = corpus::sl2().algebra;
	auto f = extend_lie_morphism(L, adjoint_matrices(L), 3);
	EXPECT_TRUE(f.check_multiplicative(Envelope(L)));
}

TEST(NuBackadjunction, MatrixAlgebra)
{
	auto A = FinDimQuotient::full_matrix_algebra(2);
	auto nu = nu_backadjunction(A, 3);
	// basis E11 E12 E21 E22
	EXPECT_EQ(nu.apply(M({1, 2})), A.mul(unit_vector(4, 1), unit_vector(4, 2)));
	EXPECT_EQ(nu.apply(M({1, 2})), unit_vector(4, 0));
	EXPECT_EQ(nu.apply(PbwElement::unit()), A.unit());
	for (int i = 0; i < 4; ++i)
		EXPECT_EQ(nu.apply(G(i)), unit_vector(4, i));
	EXPECT_TRUE(check_jacobi(nu.source()).ok());
	EXPECT_TRUE(nu.check_multiplicative(Envelope(nu.source())));
}

TEST(Multiplicativity, Witness)
{
	auto H = corpus::heisenberg().algebra;
	auto K = corpus::abelian(1).algebra;
	auto w = multiplicativity_witness(H, K, 3);
	EXPECT_TRUE(w.bijective());
	EXPECT_EQ(w.source_dim, binomial(4 + 3, 3));

	auto w2 = multiplicativity_witness(H, K, 2);
	EXPECT_EQ(w2.source_dim, w2.target_dim);

	auto zero = LieAlgebra({}, {});
	auto w0 = multiplicativity_witness(H, zero, 3);
	EXPECT_TRUE(w0.bijective());
	for (std::size_t i = 0; i < w0.source_window.size(); ++i)
		EXPECT_EQ(w0.images[i],
		          TensorElement::pure(M(w0.source_window[i]), PbwElement::unit()));

	// (x,0)·(0,a) ↦ x⊗a
	auto it = std::find(w.source_window.begin(), w.source_window.end(),
	                    Monomial{0, 3});
	ASSERT_NE(it, w.source_window.end());
	EXPECT_EQ(w.images[it - w.source_window.begin()],
	          TensorElement::pure(G(0), G(0)));
}

TEST(Format, Elements)
{
	auto L = corpus::heisenberg().algebra;
	EXPECT_EQ(format_element(L, M({0, 1}) - G(2)), "x*y - z");
	EXPECT_EQ(format_element(L, M({0, 0, 1}, Rational(3, 2)) + PbwElement::scalar(-1)),
	          "3/2*x^2*y - 1");
	EXPECT_EQ(format_element(L, PbwElement{}), "0");
}
