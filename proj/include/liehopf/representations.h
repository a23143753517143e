#pragma once

#include "liehopf/findim.h"
#include "liehopf/pbw.h"

#include <optional>
#include <vector>

namespace liehopf {

/// The unital matrix algebra generated by the images of a representation,
/// with the images of the Lie algebra basis in its coordinates.
struct RepQuotient
{
	LieAlgebra source;
	FinDimQuotient algebra;
	std::vector<Vector> generator_images;
	/// Closure passes until the span stopped growing.
	std::size_t passes = 0;

	/// The quotient map U(source) → algebra on the degree-≤d window.
	AlgebraMorphismWindow window(int d) const;
};

/// Span closure of {I} ∪ images under multiplication by the images. Throws
/// ImagesNotALieMorphism, DimensionMismatch, and ClosureExceedsBound when
/// more than `max_passes` passes are needed (default n² + 1).
RepQuotient rep_quotient(LieAlgebra const &L, std::vector<Matrix> const &images,
                         std::optional<std::size_t> max_passes = {});

struct MatrixExp
{
	/// Set when the argument is nilpotent and the series was summed exactly.
	std::optional<Vector> exact;
	/// Coordinates in the algebra basis (rounded copy of `exact` when set).
	std::vector<double> coords;
	/// Largest entrywise residual of the re-expansion (0 when exact).
	double residual = 0;
};

inline constexpr double matrix_exp_tolerance = 1e-12;

/// exp of an element of a matrix-form algebra. Nilpotent arguments (X^k = 0
/// for some k ≤ n) are summed exactly. Otherwise the exponential is
/// evaluated in double precision and re-expanded in the algebra basis by
/// least squares; a residual above 1e-12 (relative to max(1, |entry|))
/// throws ResultOutsideAlgebra.
MatrixExp matrix_exp(FinDimQuotient const &A, Vector const &a);

} // namespace liehopf
