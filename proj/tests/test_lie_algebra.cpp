#include "liehopf/corpus.h"
#include "liehopf/error.h"
#include "liehopf/lie_algebra.h"

#include <gtest/gtest.h>

#include <random>

using namespace liehopf;

namespace {

Vector vec(std::initializer_list<int> xs)
{
	Vector v;
	for (int x : xs)
		v.emplace_back(x);
	return v;
}

Subspace span1(std::size_t n, Vector v)
{
	return Subspace::span(n, std::vector<Vector>{std::move(v)});
}

// Jacobi sum of three vectors expanded directly from the bracket.
Vector jacobi(LieAlgebra const &L, Vector const &a, Vector const &b,
              Vector const &c)
{
	return bracket(L, a, bracket(L, b, c)) + bracket(L, b, bracket(L, c, a)) +
	       bracket(L, c, bracket(L, a, b));
}

Vector random_vector(std::mt19937 &rng, std::size_t n)
{
	std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
	Vector v(n);
	for (auto &x : v)
		x = Rational(num(rng), den(rng));
	for (auto &x : v)
		x.canonicalize();
	return v;
}

} // namespace

TEST(ParseLie, Heisenberg)
{
	auto L = parse_lie("basis x y z\nbracket x y = z\n");
	EXPECT_EQ(L.dim(), 3u);
	EXPECT_EQ(L.basis_bracket(0, 1), vec({0, 0, 1}));
	EXPECT_EQ(L.basis_bracket(1, 0), vec({0, 0, -1}));
	EXPECT_EQ(L.basis_bracket(0, 2), vec({0, 0, 0}));
}

TEST(ParseLie, AbelianWithoutBrackets)
{
	auto L = parse_lie("basis a b");
	EXPECT_EQ(L.dim(), 2u);
	EXPECT_TRUE(L.is_abelian());
}

TEST(ParseLie, Errors)
{
	auto code = [](char const *text) {
		try
		{
			parse_lie(text);
		}
		catch (ParseError const &e)
		{
			return std::pair{e.code(), e.line()};
		}
		return std::pair{ErrorCode::InvalidArgument, -1};
	};
	EXPECT_EQ(code("basis x y z\nbracket x w = z"),
	          std::pair(ErrorCode::UnknownSymbol, 2));
	EXPECT_EQ(code("basis x x"), std::pair(ErrorCode::DuplicateBasisName, 1));
	EXPECT_EQ(code("basis x y z\n# c\nbracket x y = 1/0*z"),
	          std::pair(ErrorCode::MalformedRational, 3));
	EXPECT_EQ(code("basis x y\nbracket x y = \n"),
	          std::pair(ErrorCode::ParseError, 2));
	EXPECT_EQ(code("bracket x y = z"), std::pair(ErrorCode::ParseError, 1));
	EXPECT_EQ(code("basis x y z\nbracket x y = z\nbracket y x = z"),
	          std::pair(ErrorCode::ParseError, 3));
}

TEST(ParseLie, WeightsAndStages)
{
	auto doc = corpus::heisenberg_tower();
	ASSERT_EQ(doc.stages.size(), 2u);
	EXPECT_EQ(doc.stages[0].name, "center");
	EXPECT_EQ(doc.stages[0].generators, std::vector<Vector>{vec({0, 0, 1})});
	EXPECT_TRUE(doc.stages[1].generators.empty());
	EXPECT_EQ(corpus::heisenberg().weights, (std::vector<int>{1, 1, 2}));
	EXPECT_THROW(parse_lie_document("basis x y\nweight x = 0"), ParseError);
	EXPECT_THROW(parse_lie_document("basis x y\nweight x = 1"), ParseError);
}

TEST(ParseLie, Coefficients)
{
	auto L = parse_lie("basis a b c\nbracket a b = 2*a - 1/3*c + b\n");
	Vector expected{2, 1, Rational(-1, 3)};
	EXPECT_EQ(L.basis_bracket(0, 1), expected);
	EXPECT_EQ(parse_vector(L, "2*a + b - 1/3*c"), expected);
}

TEST(Jacobi, CorpusPasses)
{
	for (auto const &[name, doc] : corpus::algebras())
		EXPECT_TRUE(check_jacobi(doc.algebra).ok()) << name;
}

TEST(Jacobi, PerturbedSl2Fails)
{
	auto L = parse_lie("basis e f h\nbracket h e = 2*e\nbracket h f = -2*f\n"
	                   "bracket e f = h + e\n");
	auto report = check_jacobi(L);
	ASSERT_FALSE(report.ok());
	for (auto const &v : report.violations)
	{
		Vector a = unit_vector(3, v.i), b = unit_vector(3, v.j),
		       c = unit_vector(3, v.k);
		EXPECT_EQ(v.residual, jacobi(L, a, b, c));
		EXPECT_FALSE(is_zero(v.residual));
	}
}

TEST(Bracket, BilinearAndAlternating)
{
	auto L = corpus::heisenberg().algebra;
	EXPECT_EQ(bracket(L, vec({1, 0, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
	EXPECT_EQ(bracket(L, vec({2, 1, 0}), vec({0, 1, 0})), vec({0, 0, 2}));
	EXPECT_THROW(bracket(L, vec({1, 0}), vec({0, 1, 0})), Error);

	std::mt19937 rng(7);
	for (auto const &[name, doc] : corpus::algebras())
	{
		auto const &A = doc.algebra;
		for (int t = 0; t < 10; ++t)
		{
			Vector v = random_vector(rng, A.dim()), w = random_vector(rng, A.dim()),
			       u = random_vector(rng, A.dim());
			EXPECT_EQ(bracket(A, v, w), -bracket(A, w, v)) << name;
			EXPECT_TRUE(is_zero(bracket(A, v, v))) << name;
			EXPECT_TRUE(is_zero(jacobi(A, v, w, u))) << name;
		}
	}
}

TEST(DirectProduct, DimensionAndCrossBrackets)
{
	auto H = corpus::heisenberg().algebra;
	auto A2 = parse_lie("basis a b");
	auto P = direct_product(H, A2);
	EXPECT_EQ(P.dim(), 5u);
	EXPECT_TRUE(is_zero(P.basis_bracket(0, 3)));
	EXPECT_EQ(P.basis_bracket(0, 1), vec({0, 0, 1, 0, 0}));

	auto S = corpus::sl2().algebra;
	EXPECT_TRUE(check_jacobi(direct_product(S, H)).ok());

	std::vector<std::string> renamed;
	auto HH = direct_product(H, H, &renamed);
	EXPECT_EQ(HH.dim(), 6u);
	EXPECT_EQ(renamed.size(), 3u);
	EXPECT_EQ(HH.name(3), "x_2");
	EXPECT_EQ(HH.basis_bracket(3, 4), unit_vector(6, 5));
}

TEST(Ideals, MembershipExamples)
{
	auto H = corpus::heisenberg().algebra;
	auto S = corpus::sl2().algebra;
	EXPECT_TRUE(is_ideal(H, span1(3, vec({0, 0, 1}))));
	EXPECT_FALSE(is_ideal(S, span1(3, vec({1, 0, 0}))));
	EXPECT_TRUE(is_ideal(S, Subspace::whole(3)));
	EXPECT_TRUE(is_ideal(S, Subspace(3)));
}

TEST(Ideals, ClosureIsIdeal)
{
	for (auto const &[name, doc] : corpus::algebras())
	{
		auto const &L = doc.algebra;
		for (std::size_t i = 0; i < L.dim(); ++i)
		{
			auto I = ideal_closure(L, span1(L.dim(), unit_vector(L.dim(), i)));
			EXPECT_TRUE(is_ideal(L, I)) << name;
			EXPECT_TRUE(I.contains(unit_vector(L.dim(), i)));
		}
		EXPECT_TRUE(is_ideal(L, derived_ideal(L))) << name;
	}
	EXPECT_EQ(ideal_closure(corpus::sl2().algebra, span1(3, vec({1, 0, 0}))).dim(),
	          3u);
}

TEST(Quotient, Examples)
{
	auto H = corpus::heisenberg().algebra;
	auto q = quotient(H, span1(3, vec({0, 0, 1})));
	EXPECT_EQ(q.algebra.dim(), 2u);
	EXPECT_TRUE(q.algebra.is_abelian());
	EXPECT_EQ(q.algebra.names(), (std::vector<std::string>{"x", "y"}));

	auto whole = quotient(H, Subspace::whole(3));
	EXPECT_EQ(whole.algebra.dim(), 0u);

	auto same = quotient(H, Subspace(3));
	EXPECT_EQ(same.projection, Matrix::identity(3));
	EXPECT_EQ(same.algebra, H);

	auto S = corpus::sl2().algebra;
	EXPECT_THROW(quotient(S, span1(3, vec({1, 0, 0}))), Error);
}

TEST(Quotient, ProjectionIsLieMorphism)
{
	for (auto const &[name, doc] : corpus::algebras())
	{
		auto const &L = doc.algebra;
		auto J = derived_ideal(L);
		auto q = quotient(L, J);
		EXPECT_EQ(q.algebra.dim(), L.dim() - J.dim());
		EXPECT_TRUE(is_lie_morphism(L, q.algebra, q.projection)) << name;
		for (auto const &v : J.basis())
			EXPECT_TRUE(is_zero(q.projection * v));
		EXPECT_EQ(rank(q.projection), q.algebra.dim());
	}
}

TEST(AdaptedBasis, Examples)
{
	auto H = corpus::heisenberg().algebra;
	auto J = span1(3, vec({0, 0, 1}));
	auto b = adapted_basis(H, J, {vec({1, 0, 0})});
	EXPECT_EQ(b.F, std::vector<Vector>{vec({1, 0, 0})});
	EXPECT_EQ(b.F1, std::vector<Vector>{vec({0, 1, 0})});
	EXPECT_EQ(b.F2, std::vector<Vector>{vec({0, 0, 1})});

	auto none = adapted_basis(H, Subspace(3), {});
	EXPECT_TRUE(none.F.empty());
	EXPECT_EQ(none.F1.size(), 3u);
	EXPECT_TRUE(none.F2.empty());

	auto all = adapted_basis(H, Subspace::whole(3), {});
	EXPECT_TRUE(all.F.empty() && all.F1.empty());
	EXPECT_EQ(all.F2.size(), 3u);

	EXPECT_THROW(adapted_basis(H, J, {vec({0, 0, 2})}), Error);
	EXPECT_THROW(adapted_basis(H, J, {vec({1, 0, 0}), vec({1, 0, 1})}), Error);
	EXPECT_THROW(adapted_basis(corpus::sl2().algebra, span1(3, vec({1, 0, 0})), {}),
	             Error);
}

TEST(AdaptedBasis, Properties)
{
	for (auto const &[name, doc] : corpus::algebras())
	{
		auto const &L = doc.algebra;
		auto J = derived_ideal(L);
		auto b = adapted_basis(L, J, {});
		auto all = b.ordered();
		EXPECT_EQ(rank(Matrix::from_columns(L.dim(), all)), L.dim()) << name;
		EXPECT_EQ(Subspace::span(L.dim(), b.F2), J);
		std::vector<Vector> H = b.F;
		H.insert(H.end(), b.F1.begin(), b.F1.end());
		EXPECT_EQ(Subspace::span(L.dim(), H).intersection(J).dim(), 0u);
	}
}

TEST(ChangeBasis, PreservesBrackets)
{
	auto S = corpus::sl2().algebra;
	std::vector<Vector> basis{vec({1, 1, 0}), vec({1, -1, 0}), vec({0, 0, 1})};
	auto T = change_basis(S, basis, {"a", "b", "c"});
	EXPECT_TRUE(check_jacobi(T).ok());
	Matrix B = Matrix::from_columns(3, basis);
	EXPECT_TRUE(is_lie_morphism(T, S, B));
}

TEST(Adjoint, IsRepresentation)
{
	auto S = corpus::sl2().algebra;
	auto ad = adjoint_matrices(S);
	for (int i = 0; i < 3; ++i)
		for (int j = 0; j < 3; ++j)
		{
			Matrix expected(3, 3);
			for (auto const &[k, c] : S.basis_bracket_terms(i, j))
				expected = expected + c * ad[k];
			EXPECT_EQ(commutator(ad[i], ad[j]), expected);
		}
}
