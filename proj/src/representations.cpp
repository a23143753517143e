#include "liehopf/representations.h"

#include "liehopf/error.h"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>

namespace liehopf {

AlgebraMorphismWindow RepQuotient::window(int d) const
{
	return AlgebraMorphismWindow(source, d, algebra, generator_images);
}

RepQuotient rep_quotient(LieAlgebra const &L, std::vector<Matrix> const &images,
                         std::optional<std::size_t> max_passes)
{
	if (images.size() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "one image per generator");
	std::size_t const n = images.empty() ? 1 : images.front().rows();
	for (auto const &m : images)
		if (m.rows() != n || m.cols() != n)
			throw Error(ErrorCode::DimensionMismatch,
			            "images must be square of one size");
	if (!images_respect_brackets(L, images))
		throw Error(ErrorCode::ImagesNotALieMorphism,
		            "commutators of images differ from brackets");

	std::size_t const cap = max_passes.value_or(n * n + 1);
	std::vector<Vector> gens{Matrix::identity(n).flatten()};
	for (auto const &m : images)
		gens.push_back(m.flatten());
	Subspace span = Subspace::span(n * n, gens);

	RepQuotient out;
	while (true)
	{
		if (out.passes == cap)
			throw Error(ErrorCode::ClosureExceedsBound,
			            "span closure did not stabilize within " +
			                std::to_string(cap) + " passes");
		++out.passes;
		std::vector<Vector> next = span.basis();
		for (auto const &b : span.basis())
			for (auto const &g : images)
				next.push_back((Matrix::unflatten(n, n, b) * g).flatten());
		Subspace grown = Subspace::span(n * n, next);
		if (grown.dim() == span.dim())
			break;
		span = std::move(grown);
	}

	std::vector<Matrix> basis;
	for (auto const &v : span.basis())
		basis.push_back(Matrix::unflatten(n, n, v));
	out.source = L;
	out.algebra = FinDimQuotient::from_matrices(std::move(basis));
	for (auto const &m : images)
		out.generator_images.push_back(*out.algebra.coordinates(m));
	return out;
}

namespace {

Eigen::MatrixXd to_double(Matrix const &m)
{
	Eigen::MatrixXd d(m.rows(), m.cols());
	for (std::size_t i = 0; i < m.rows(); ++i)
		for (std::size_t j = 0; j < m.cols(); ++j)
			d(i, j) = m(i, j).get_d();
	return d;
}

} // namespace

MatrixExp matrix_exp(FinDimQuotient const &A, Vector const &a)
{
	Matrix const X = A.to_matrix(a);
	std::size_t const n = X.rows();
	MatrixExp out;

	std::vector<Matrix> powers{Matrix::identity(n)};
	for (std::size_t k = 1; k <= n && !powers.back().is_zero(); ++k)
		powers.push_back(powers.back() * X);
	if (powers.back().is_zero())
	{
		Matrix sum(n, n);
		Rational factorial = 1;
		for (std::size_t k = 0; k + 1 < powers.size(); ++k)
		{
			if (k > 0)
				factorial *= k;
			sum = sum + (1 / factorial) * powers[k];
		}
		out.exact = *A.coordinates(sum);
		for (auto const &c : *out.exact)
			out.coords.push_back(c.get_d());
		return out;
	}

	Eigen::MatrixXd expX = to_double(X).exp();
	Eigen::MatrixXd B(n * n, A.dim());
	for (std::size_t j = 0; j < A.dim(); ++j)
	{
		Eigen::MatrixXd b = to_double(A.matrices()[j]);
		for (std::size_t r = 0; r < n; ++r)
			for (std::size_t c = 0; c < n; ++c)
				B(r * n + c, j) = b(r, c);
	}
	Eigen::VectorXd target(n * n);
	for (std::size_t r = 0; r < n; ++r)
		for (std::size_t c = 0; c < n; ++c)
			target(r * n + c) = expX(r, c);
	Eigen::VectorXd coords = B.colPivHouseholderQr().solve(target);
	Eigen::VectorXd fit = B * coords;

	for (Eigen::Index i = 0; i < target.size(); ++i)
	{
		double scale = std::max(1.0, std::abs(target(i)));
		out.residual = std::max(out.residual, std::abs(fit(i) - target(i)) / scale);
	}
	if (out.residual > matrix_exp_tolerance)
		throw Error(ErrorCode::ResultOutsideAlgebra,
		            "exponential leaves the algebra (residual " +
		                std::to_string(out.residual) + ")");
	out.coords.assign(coords.data(), coords.data() + coords.size());
	return out;
}

} // namespace liehopf
