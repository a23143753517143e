#pragma once

#include "liehopf/corpus.h"
#include "liehopf/pbw.h"
#include "liehopf/report.h"

#include <cstdint>
#include <string>
#include <vector>

namespace liehopf::cli {

struct VerifyOptions
{
	std::uint64_t seed = 20240601;
	/// Window degree for the per-algebra suites.
	int degree = 3;
	/// Suite names to run; empty runs everything.
	std::vector<std::string> suites;
	/// Straightening rule for every envelope built by the suites. The
	/// broken rule is a fixture for checking that failures are reported.
	RewriteRule rule = RewriteRule::Standard;
	/// Restricts the per-algebra suites to these corpus names (empty = all).
	std::vector<std::string> algebras;
	/// Extra algebras (e.g. loaded from files) appended to the corpus.
	std::vector<corpus::Entry> extra;
};

/// pbw, hopf, primitives, membership, multiplicativity, truncation,
/// representations, tower, abelian, a2.
std::vector<std::string> const &suite_names();

/// Runs the selected suites; unselected suites get one skip record each.
/// Records are sorted by name.
Report run_verify(VerifyOptions const &opts);

} // namespace liehopf::cli
