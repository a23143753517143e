#pragma once

#include "liehopf/lie_algebra.h"

#include <string>
#include <vector>

// Small Lie algebras and representations used by the verification suites.
// The same algebras ship as .lie files under data/.
namespace liehopf::corpus {

LieDocument heisenberg();
LieDocument sl2();
LieDocument abelian(std::size_t n);
LieDocument solvable2();
LieDocument free_nilpotent3();
LieDocument free_nilpotent4();
/// Heisenberg with stages span(z) ⊃ 0.
LieDocument heisenberg_tower();

struct Entry
{
	std::string name;
	LieDocument doc;
};

/// abelian1..3, heisenberg, sl2, solvable2, freenil3, freenil4.
std::vector<Entry> algebras();

struct Representation
{
	std::string name;
	std::vector<Matrix> images;
};

/// Standard 3×3, abelianized 2×2 (z ↦ 0), zero, and their block sum.
std::vector<Representation> heisenberg_representations();
Matrix block_diagonal(Matrix const &a, Matrix const &b);

} // namespace liehopf::corpus
