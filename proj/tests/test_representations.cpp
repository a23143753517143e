#include "liehopf/corpus.h"
#include "liehopf/error.h"
#include "liehopf/representations.h"

#include <gtest/gtest.h>

#include <cmath>

using namespace liehopf;

TEST(RepQuotient, HeisenbergStandard)
{
	auto L = corpus::heisenberg().algebra;
	auto reps = corpus::heisenberg_representations();
	auto Q = rep_quotient(L, reps[0].images);
	EXPECT_EQ(Q.algebra.dim(), 4u);
	std::vector<Matrix> expected_span{Matrix::identity(3), Matrix::unit(3, 0, 1),
	                                  Matrix::unit(3, 1, 2), Matrix::unit(3, 0, 2)};
	for (auto const &m : expected_span)
		EXPECT_TRUE(Q.algebra.coordinates(m));
	EXPECT_TRUE(Q.window(3).check_multiplicative(Envelope(L)));
}

TEST(RepQuotient, ZeroAndAdjoint)
{
	auto L = corpus::heisenberg().algebra;
	auto zero = rep_quotient(L, corpus::heisenberg_representations()[2].images);
	EXPECT_EQ(zero.algebra.dim(), 1u);

	auto S = corpus::sl2().algebra;
	auto ad = rep_quotient(S, adjoint_matrices(S));
	EXPECT_EQ(ad.algebra.dim(), 9u);
	EXPECT_TRUE(ad.window(2).check_multiplicative(Envelope(S)));
}

TEST(RepQuotient, ClosedUnderProducts)
{
	auto L = corpus::heisenberg().algebra;
	for (auto const &rep : corpus::heisenberg_representations())
	{
		auto Q = rep_quotient(L, rep.images);
		auto const &A = Q.algebra;
		for (std::size_t i = 0; i < A.dim(); ++i)
			for (std::size_t j = 0; j < A.dim(); ++j)
				EXPECT_EQ(A.to_matrix(A.basis_product(i, j)),
				          A.matrices()[i] * A.matrices()[j])
				    << rep.name;
		EXPECT_TRUE(Q.window(3).check_multiplicative(Envelope(L))) << rep.name;
	}
}

TEST(RepQuotient, Errors)
{
	auto L = corpus::heisenberg().algebra;
	auto bad = corpus::heisenberg_representations()[0].images;
	bad[2] = Matrix(3, 3);
	EXPECT_THROW(rep_quotient(L, bad), Error);
	try
	{
		rep_quotient(corpus::sl2().algebra,
		             adjoint_matrices(corpus::sl2().algebra), 1);
		FAIL();
	}
	catch (Error const &e)
	{
		EXPECT_EQ(e.code(), ErrorCode::ClosureExceedsBound);
	}
}

TEST(MatrixExp, NilpotentIsExact)
{
	auto A = FinDimQuotient::full_matrix_algebra(2);
	auto zero = matrix_exp(A, Vector(4));
	ASSERT_TRUE(zero.exact);
	EXPECT_EQ(A.to_matrix(*zero.exact), Matrix::identity(2));

	auto e12 = matrix_exp(A, unit_vector(4, 1));
	ASSERT_TRUE(e12.exact);
	EXPECT_EQ(A.to_matrix(*e12.exact), Matrix::identity(2) + Matrix::unit(2, 0, 1));

	auto L = corpus::heisenberg().algebra;
	auto Q = rep_quotient(L, corpus::heisenberg_representations()[0].images);
	auto x = *Q.algebra.coordinates(Matrix::unit(3, 0, 1) + Matrix::unit(3, 1, 2));
	auto ex = matrix_exp(Q.algebra, x);
	ASSERT_TRUE(ex.exact);
	Matrix expected = Matrix::identity(3) + Matrix::unit(3, 0, 1) +
	                  Matrix::unit(3, 1, 2) + Rational(1, 2) * Matrix::unit(3, 0, 2);
	EXPECT_EQ(Q.algebra.to_matrix(*ex.exact), expected);
}

TEST(MatrixExp, DiagonalWithinTolerance)
{
	auto D = FinDimQuotient::from_matrices({Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1)});
	auto r = matrix_exp(D, Vector{1, 2});
	EXPECT_FALSE(r.exact);
	ASSERT_EQ(r.coords.size(), 2u);
	EXPECT_NEAR(r.coords[0], std::exp(1.0), 1e-12);
	EXPECT_NEAR(r.coords[1], std::exp(2.0), 1e-12 * std::exp(2.0));
	EXPECT_LE(r.residual, matrix_exp_tolerance);
}

TEST(MatrixExp, IdempotentArgument)
{
	// N = E11 + E12 satisfies N² = N, so exp(tN) = I + (e^t − 1) N.
	auto A = FinDimQuotient::from_matrices(
	    {Matrix::identity(2), Matrix::unit(2, 0, 0) + Matrix::unit(2, 0, 1)});
	auto r = matrix_exp(A, Vector{0, 1});
	EXPECT_FALSE(r.exact);
	EXPECT_NEAR(r.coords[0], 1.0, 1e-12);
	EXPECT_NEAR(r.coords[1], std::exp(1.0) - 1, 1e-12);
	EXPECT_LE(r.residual, matrix_exp_tolerance);
}
