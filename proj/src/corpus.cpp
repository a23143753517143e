#include "liehopf/corpus.h"

namespace liehopf::corpus {

namespace {

constexpr char const *heisenberg_text = R"(
basis x y z
bracket x y = z
weight x = 1
weight y = 1
weight z = 2
)";

constexpr char const *sl2_text = R"(
basis e f h
bracket h e = 2*e
bracket h f = -2*f
bracket e f = h
)";

constexpr char const *solvable2_text = R"(
basis a b
bracket a b = b
)";

constexpr char const *freenil3_text = R"(
basis x y z u v
bracket x y = z
bracket x z = u
bracket y z = v
weight x = 1
weight y = 1
weight z = 2
weight u = 3
weight v = 3
)";

constexpr char const *freenil4_text = R"(
basis x y z u v p q r
bracket x y = z
bracket x z = u
bracket y z = v
bracket x u = p
bracket y u = q
bracket x v = q
bracket y v = r
weight x = 1
weight y = 1
weight z = 2
weight u = 3
weight v = 3
weight p = 4
weight q = 4
weight r = 4
)";

constexpr char const *heis_tower_text = R"(
basis x y z
bracket x y = z
stage center = span(z)
stage zero = span()
)";

} // namespace

LieDocument heisenberg() { return parse_lie_document(heisenberg_text); }
LieDocument sl2() { return parse_lie_document(sl2_text); }
LieDocument solvable2() { return parse_lie_document(solvable2_text); }
LieDocument free_nilpotent3() { return parse_lie_document(freenil3_text); }
LieDocument free_nilpotent4() { return parse_lie_document(freenil4_text); }
LieDocument heisenberg_tower() { return parse_lie_document(heis_tower_text); }

LieDocument abelian(std::size_t n)
{
	std::vector<std::string> names;
	if (n == 1)
		names.push_back("x");
	else
		for (std::size_t i = 1; i <= n; ++i)
			names.push_back("x" + std::to_string(i));
	LieDocument doc;
	doc.algebra = LieAlgebra(names, {});
	doc.weights.assign(n, 1);
	return doc;
}

std::vector<Entry> algebras()
{
	return {
	    {"abelian1", abelian(1)},          {"abelian2", abelian(2)},
	    {"abelian3", abelian(3)},          {"freenil3", free_nilpotent3()},
	    {"freenil4", free_nilpotent4()},   {"heisenberg", heisenberg()},
	    {"sl2", sl2()},                    {"solvable2", solvable2()},
	};
}

Matrix block_diagonal(Matrix const &a, Matrix const &b)
{
	Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t j = 0; j < a.cols(); ++j)
			m(i, j) = a(i, j);
	for (std::size_t i = 0; i < b.rows(); ++i)
		for (std::size_t j = 0; j < b.cols(); ++j)
			m(a.rows() + i, a.cols() + j) = b(i, j);
	return m;
}

std::vector<Representation> heisenberg_representations()
{
	Representation standard{"standard",
	                        {Matrix::unit(3, 0, 1), Matrix::unit(3, 1, 2),
	                         Matrix::unit(3, 0, 2)}};
	Representation abelianized{"abelianized",
	                           {Matrix::unit(2, 0, 0), Matrix::unit(2, 1, 1),
	                            Matrix(2, 2)}};
	Representation zero{"zero", {Matrix(1, 1), Matrix(1, 1), Matrix(1, 1)}};
	Representation sum{"standard+abelianized", {}};
	for (std::size_t i = 0; i < 3; ++i)
		sum.images.push_back(
		    block_diagonal(standard.images[i], abelianized.images[i]));
	return {standard, abelianized, zero, sum};
}

} // namespace liehopf::corpus
