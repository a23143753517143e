#include "liehopf/tower.h"

#include "liehopf/error.h"

namespace liehopf {

Tower make_tower(LieAlgebra const &L,
                 std::vector<std::pair<std::string, Subspace>> const &chain,
                 RewriteOptions options)
{
	if (chain.empty())
		throw Error(ErrorCode::InvalidArgument, "a tower needs at least one stage");
	Tower T(L, options);
	for (std::size_t k = 0; k < chain.size(); ++k)
	{
		auto const &[name, J] = chain[k];
		if (J.ambient_dim() != L.dim())
			throw Error(ErrorCode::DimensionMismatch, "stage " + name);
		if (!is_ideal(L, J))
			throw Error(ErrorCode::NotAnIdeal, "stage " + name);
		if (k > 0 && !chain[k - 1].second.contains(J))
			throw Error(ErrorCode::ChainNotDecreasing,
			            "stage " + name + " is not contained in stage " +
			                chain[k - 1].first);
		Quotient q = quotient(L, J);
		Envelope E(q.algebra, options);
		T.stages_.push_back({name, J, std::move(q), std::move(E)});
	}
	return T;
}

Tower make_tower(LieDocument const &doc, RewriteOptions options)
{
	std::vector<std::pair<std::string, Subspace>> chain;
	for (auto const &s : doc.stages)
		chain.emplace_back(s.name,
		                   Subspace::span(doc.algebra.dim(), s.generators));
	return make_tower(doc.algebra, chain, options);
}

Matrix Tower::bonding_matrix(std::size_t k, std::size_t l) const
{
	if (k > l || l >= size())
		throw Error(ErrorCode::StageMismatch,
		            "no bonding map from stage " + std::to_string(l) +
		                " to stage " + std::to_string(k));
	auto const &target = stage(k).quotient;
	auto const &reps = stage(l).quotient.representatives;
	std::vector<Vector> cols;
	for (int r : reps)
		cols.push_back(target.projection.column(r));
	return Matrix::from_columns(target.algebra.dim(), cols);
}

PbwElement Tower::bond(std::size_t k, std::size_t l, PbwElement const &u) const
{
	return map_generators(stage(k).envelope, bonding_matrix(k, l), u);
}

PbwElement Tower::project(std::size_t k, PbwElement const &u) const
{
	return map_generators(stage(k).envelope, stage(k).quotient.projection, u);
}

std::vector<CheckRecord> tower_checks(Tower const &T, int d)
{
	bool compose = true, identity = true, morphism = true, projections = true;
	std::string where_compose, where_morphism, where_projection;

	for (std::size_t m = 0; m < T.size(); ++m)
	{
		auto const window = pbw_window(T.stage(m).quotient.algebra.dim(), d);
		for (auto const &mono : window)
		{
			PbwElement u = PbwElement::monomial(mono);
			if (T.bond(m, m, u) != u)
				identity = false;
			for (std::size_t l = 0; l <= m; ++l)
				for (std::size_t k = 0; k <= l; ++k)
					if (T.bond(k, l, T.bond(l, m, u)) != T.bond(k, m, u) && compose)
					{
						compose = false;
						where_compose = "stages " + std::to_string(k) + "," +
						                std::to_string(l) + "," + std::to_string(m);
					}
		}
		for (std::size_t k = 0; k < m && morphism; ++k)
		{
			Envelope const &src = T.stage(m).envelope;
			if (T.bond(k, m, PbwElement::unit()) != PbwElement::unit())
				morphism = false;
			for (auto const &a : window)
				for (auto const &b : window)
				{
					if (static_cast<int>(a.size() + b.size()) > d)
						continue;
					auto A = PbwElement::monomial(a), B = PbwElement::monomial(b);
					if (T.bond(k, m, src.mul(A, B)) !=
					    T.stage(k).envelope.mul(T.bond(k, m, A), T.bond(k, m, B)))
					{
						morphism = false;
						where_morphism = "stages " + std::to_string(k) + "<-" +
						                 std::to_string(m);
					}
				}
		}
	}
	for (auto const &mono : pbw_window(T.base().dim(), d))
	{
		PbwElement u = PbwElement::monomial(mono);
		for (std::size_t l = 0; l < T.size(); ++l)
			for (std::size_t k = 0; k <= l; ++k)
				if (T.bond(k, l, T.project(l, u)) != T.project(k, u) && projections)
				{
					projections = false;
					where_projection = format_monomial(T.base(), mono);
				}
	}
	return {
	    make_record("bonding_composition", compose, where_compose),
	    make_record("bonding_identity", identity),
	    make_record("bonding_multiplicative", morphism, where_morphism),
	    make_record("projection_compatibility", projections, where_projection),
	};
}

Thread thread_of(Tower const &T, PbwElement const &u)
{
	Thread t;
	for (std::size_t k = 0; k < T.size(); ++k)
		t.entries.push_back(T.project(k, u));
	return t;
}

namespace {

void check_shape(Tower const &T, Thread const &t)
{
	if (t.entries.size() != T.size())
		throw Error(ErrorCode::StageMismatch,
		            "thread has " + std::to_string(t.entries.size()) +
		                " entries for " + std::to_string(T.size()) + " stages");
	for (std::size_t k = 0; k < T.size(); ++k)
		if (t.entries[k].support_dim() > T.stage(k).quotient.algebra.dim())
			throw Error(ErrorCode::StageMismatch,
			            "entry " + std::to_string(k) + " is not in its stage");
}

} // namespace

bool check_thread(Tower const &T, Thread const &t)
{
	check_shape(T, t);
	for (std::size_t k = 0; k + 1 < T.size(); ++k)
		if (T.bond(k, k + 1, t.entries[k + 1]) != t.entries[k])
			return false;
	return true;
}

Thread thread_mul(Tower const &T, Thread const &a, Thread const &b)
{
	check_shape(T, a);
	check_shape(T, b);
	Thread out;
	for (std::size_t k = 0; k < T.size(); ++k)
		out.entries.push_back(T.stage(k).envelope.mul(a.entries[k], b.entries[k]));
	return out;
}

Factorization factor_through_tower(Tower const &T,
                                   std::vector<Matrix> const &images, int d)
{
	LieAlgebra const &L = T.base();
	if (!images_respect_brackets(L, images))
		throw Error(ErrorCode::ImagesNotALieMorphism,
		            "commutators of images differ from brackets");
	std::vector<Vector> flat;
	for (auto const &m : images)
		flat.push_back(m.flatten());
	std::size_t const n = images.empty() ? 1 : images.front().rows();
	std::size_t const rows = n * n;
	Subspace kernel = Subspace::span(
	    L.dim(), nullspace(Matrix::from_columns(rows, flat)));

	for (std::size_t k = 0; k < T.size(); ++k)
	{
		if (!kernel.contains(T.stage(k).ideal))
			continue;
		auto const &q = T.stage(k).quotient;
		std::vector<Matrix> induced;
		for (int r : q.representatives)
			induced.push_back(images[r]);
		auto ext = extend_lie_morphism(q.algebra, induced, d, n);
		return Factorization{k, std::move(induced), std::move(ext)};
	}
	throw Error(ErrorCode::NoStageContained,
	            "no stage ideal lies in the kernel (dim " +
	                std::to_string(kernel.dim()) + ")");
}

bool factorization_agrees(Tower const &T, Factorization const &F,
                          std::vector<Matrix> const &images, int d)
{
	std::size_t const n = F.extension.target().matrix_size();
	auto direct = extend_lie_morphism(T.base(), images, d, n);
	for (auto const &m : pbw_window(T.base().dim(), d))
	{
		PbwElement u = PbwElement::monomial(m);
		if (F.extension.apply_matrix(T.project(F.stage, u)) !=
		    direct.apply_matrix(u))
			return false;
	}
	return true;
}

} // namespace liehopf
