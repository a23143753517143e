#pragma once

#include "liehopf/pbw.h"
#include "liehopf/report.h"

#include <string>
#include <vector>

namespace liehopf {

/// One stage U(L/J) of a tower.
struct TowerStage
{
	std::string name;
	Subspace ideal;
	Quotient quotient;
	Envelope envelope;
};

/// A finite inverse system U(L/J_1) ← U(L/J_2) ← … for a decreasing chain
/// of ideals J_1 ⊇ J_2 ⊇ …, with bonding maps induced by L/J_l → L/J_k.
class Tower
{
  public:
	LieAlgebra const &base() const { return base_; }
	Envelope const &base_envelope() const { return E_; }
	std::size_t size() const { return stages_.size(); }
	TowerStage const &stage(std::size_t k) const { return stages_.at(k); }

	/// Generator matrix of L/J_l → L/J_k for k ≤ l.
	Matrix bonding_matrix(std::size_t k, std::size_t l) const;
	/// U(L/J_l) → U(L/J_k).
	PbwElement bond(std::size_t k, std::size_t l, PbwElement const &u) const;
	/// U(L) → U(L/J_k).
	PbwElement project(std::size_t k, PbwElement const &u) const;

  private:
	friend Tower make_tower(LieAlgebra const &,
	                        std::vector<std::pair<std::string, Subspace>> const &,
	                        RewriteOptions);
	Tower(LieAlgebra L, RewriteOptions options) : base_(L), E_(std::move(L), options)
	{}

	LieAlgebra base_;
	Envelope E_;
	std::vector<TowerStage> stages_;
};

/// Throws NotAnIdeal, and ChainNotDecreasing unless J_{k+1} ⊆ J_k.
Tower make_tower(LieAlgebra const &L,
                 std::vector<std::pair<std::string, Subspace>> const &chain,
                 RewriteOptions options = {});
/// Tower from the `stage` lines of a document.
Tower make_tower(LieDocument const &doc, RewriteOptions options = {});

/// bond(k,l)∘bond(l,m) = bond(k,m), bond(k,k) = id, bonding maps are unital
/// and multiplicative, and bond(k,l)∘project(l) = project(k), all on
/// degree-≤d windows.
std::vector<CheckRecord> tower_checks(Tower const &T, int d);

/// One element per stage, largest ideal first.
struct Thread
{
	std::vector<PbwElement> entries;
};

/// The thread of projections of u ∈ U(L).
Thread thread_of(Tower const &T, PbwElement const &u);
/// bond(k, k+1, e_{k+1}) = e_k for every k. Throws StageMismatch.
bool check_thread(Tower const &T, Thread const &t);
/// Stage-wise product. Throws StageMismatch.
Thread thread_mul(Tower const &T, Thread const &a, Thread const &b);

struct Factorization
{
	std::size_t stage;
	/// Images of the basis of L/J_stage.
	std::vector<Matrix> quotient_images;
	AlgebraMorphismWindow extension;
};

/// Finds the first stage whose ideal lies in ker f and extends the induced
/// map L/J → M_n over U(L/J) on the degree-≤d window. Throws
/// ImagesNotALieMorphism and NoStageContained.
Factorization factor_through_tower(Tower const &T,
                                   std::vector<Matrix> const &images, int d);

/// extension(project(u)) equals the direct extension of f on every
/// monomial of the degree-≤d window.
bool factorization_agrees(Tower const &T, Factorization const &F,
                          std::vector<Matrix> const &images, int d);

} // namespace liehopf
