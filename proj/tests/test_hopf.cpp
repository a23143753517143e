#include "liehopf/corpus.h"
#include "liehopf/hopf_checks.h"

#include "printers.h"

#include <gtest/gtest.h>

using namespace liehopf;

namespace {

void expect_all_pass(std::vector<CheckRecord> const &records,
                     std::string const &name)
{
	EXPECT_EQ(records.size(), 9u);
	for (auto const &r : records)
		EXPECT_EQ(r.status, Status::Pass) << name << ": " << r.name << " "
		                                  << r.witness;
}

} // namespace

TEST(HopfAxioms, CorpusDegreeThree)
{
	for (auto const &[name, doc] : corpus::algebras())
		expect_all_pass(hopf_axioms(Envelope(doc.algebra), 3), name);
}

TEST(HopfAxioms, Sl2DegreeFour)
{
	expect_all_pass(hopf_axioms(Envelope(corpus::sl2().algebra), 4), "sl2");
}

TEST(HopfAxioms, SignErrorIsDetected)
{
	Envelope bad(corpus::heisenberg().algebra,
	             {RewriteStrategy::LeftmostDescent, RewriteRule::SignErrorAtFront});
	std::size_t failures = 0;
	for (auto const &r : hopf_axioms(bad, 4))
		if (r.status == Status::Fail)
			++failures;
	EXPECT_GT(failures, 0u);
}
