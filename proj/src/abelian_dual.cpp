#include "liehopf/abelian_dual.h"

#include "liehopf/error.h"

namespace liehopf {

// ---------------------------------------------------------------------------
// ExpRational

ExpRational ExpRational::exponential(Rational const &q, Rational const &c)
{
	ExpRational e;
	e.add_term(q, c);
	return e;
}

void ExpRational::add_term(Rational const &q, Rational const &c)
{
	if (is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(q, c);
	if (!inserted)
	{
		it->second += c;
		if (is_zero(it->second))
			terms_.erase(it);
	}
}

bool ExpRational::is_rational() const
{
	return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ExpRational::rational_part() const
{
	auto it = terms_.find(Rational(0));
	return it == terms_.end() ? Rational(0) : it->second;
}

ExpRational &ExpRational::operator+=(ExpRational const &o)
{
	for (auto const &[q, c] : o.terms_)
		add_term(q, c);
	return *this;
}

ExpRational operator*(ExpRational const &a, ExpRational const &b)
{
	ExpRational out;
	for (auto const &[qa, ca] : a.terms_)
		for (auto const &[qb, cb] : b.terms_)
			out.add_term(qa + qb, ca * cb);
	return out;
}

std::string ExpRational::format() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto const &[q, coeff] : terms_)
	{
		Rational c = coeff;
		if (out.empty())
		{
			if (sgn(c) < 0)
				out += "-";
		}
		else
			out += sgn(c) < 0 ? " - " : " + ";
		c = abs(c);
		if (q == 0)
			out += to_string(c);
		else
			out += (c == 1 ? "" : to_string(c) + "*") + "e^(" + to_string(q) + ")";
	}
	return out;
}

// ---------------------------------------------------------------------------
// ExpPolyFunction

ExpPolyFunction ExpPolyFunction::constant(std::size_t dim, Rational const &c)
{
	return polynomial(Polynomial::constant(dim, c));
}

ExpPolyFunction ExpPolyFunction::polynomial(Polynomial p)
{
	ExpPolyFunction f(p.nvars());
	f.add_summand(Vector(p.nvars()), p);
	return f;
}

ExpPolyFunction ExpPolyFunction::exponential(Vector const &l)
{
	ExpPolyFunction f(l.size());
	f.add_summand(l, Polynomial::constant(l.size(), 1));
	return f;
}

ExpPolyFunction ExpPolyFunction::coordinate(std::size_t dim, std::size_t j)
{
	return polynomial(Polynomial::variable(dim, j));
}

void ExpPolyFunction::add_summand(Vector const &l, Polynomial const &p)
{
	if (l.size() != dim_ || p.nvars() != dim_)
		throw Error(ErrorCode::DimensionMismatch, "summand dimension");
	if (p.is_zero())
		return;
	auto [it, inserted] = summands_.try_emplace(l, p);
	if (!inserted)
	{
		it->second += p;
		if (it->second.is_zero())
			summands_.erase(it);
	}
}

void ExpPolyFunction::check_same(ExpPolyFunction const &o) const
{
	if (o.dim_ != dim_)
		throw Error(ErrorCode::DimensionMismatch,
		            "functions on dual spaces of different dimension");
}

ExpRational ExpPolyFunction::eval(DualVector const &w) const
{
	if (w.size() != dim_)
		throw Error(ErrorCode::DimensionMismatch, "evaluation point");
	ExpRational out;
	for (auto const &[l, p] : summands_)
	{
		Rational q = 0;
		for (std::size_t j = 0; j < dim_; ++j)
			q += l[j] * w[j];
		out.add_term(q, p.eval(w));
	}
	return out;
}

ExpPolyFunction ExpPolyFunction::compose(Matrix const &A) const
{
	if (A.rows() != dim_)
		throw Error(ErrorCode::DimensionMismatch, "composition matrix");
	ExpPolyFunction out(A.cols());
	Matrix const At = A.transpose();
	for (auto const &[l, p] : summands_)
		out.add_summand(At * l, p.substitute(A));
	return out;
}

ExpPolyFunction &ExpPolyFunction::operator+=(ExpPolyFunction const &o)
{
	check_same(o);
	for (auto const &[l, p] : o.summands_)
		add_summand(l, p);
	return *this;
}

ExpPolyFunction &ExpPolyFunction::operator-=(ExpPolyFunction const &o)
{
	check_same(o);
	for (auto const &[l, p] : o.summands_)
		add_summand(l, Rational(-1) * p);
	return *this;
}

ExpPolyFunction &ExpPolyFunction::operator*=(Rational const &c)
{
	if (liehopf::is_zero(c))
		summands_.clear();
	for (auto &[l, p] : summands_)
		p *= c;
	return *this;
}

ExpPolyFunction operator*(ExpPolyFunction const &a, ExpPolyFunction const &b)
{
	a.check_same(b);
	ExpPolyFunction out(a.dim_);
	for (auto const &[la, pa] : a.summands_)
		for (auto const &[lb, pb] : b.summands_)
			out.add_summand(la + lb, pa * pb);
	return out;
}

std::string ExpPolyFunction::format(std::vector<std::string> const &names) const
{
	if (summands_.empty())
		return "0";
	std::string out;
	for (auto const &[l, p] : summands_)
	{
		std::string piece;
		if (liehopf::is_zero(l))
			piece = p.format(names);
		else
		{
			std::string e = "exp(" + Polynomial::linear(l).format(names) + ")";
			if (p.degree() == 0)
			{
				Rational c = p.terms().begin()->second;
				if (c == 1)
					piece = e;
				else if (c == -1)
					piece = "-" + e;
				else
					piece = to_string(c) + "*" + e;
			}
			else
				piece = "(" + p.format(names) + ")*" + e;
		}
		if (out.empty())
			out = piece;
		else if (piece.front() == '-')
			out += " - " + piece.substr(1);
		else
			out += " + " + piece;
	}
	return out;
}

std::string ExpPolyFunction::format() const { return format(dual_names(dim_)); }

std::vector<std::string> dual_names(std::size_t d)
{
	std::vector<std::string> out;
	for (std::size_t j = 1; j <= d; ++j)
		out.push_back("w" + std::to_string(j));
	return out;
}

std::vector<std::string> pair_names(std::size_t d)
{
	std::vector<std::string> out;
	for (int side = 1; side <= 2; ++side)
		for (std::size_t j = 1; j <= d; ++j)
			out.push_back("w" + std::to_string(j) + "_" + std::to_string(side));
	return out;
}

// ---------------------------------------------------------------------------
// Hopf structure

ExpPolyFunction fn_add(ExpPolyFunction const &a, ExpPolyFunction const &b)
{
	return a + b;
}

ExpPolyFunction fn_mul(ExpPolyFunction const &a, ExpPolyFunction const &b)
{
	return a * b;
}

ExpRational fn_eval(ExpPolyFunction const &a, DualVector const &w)
{
	return a.eval(w);
}

ExpPolyFunction nu_embed(Vector const &x)
{
	return ExpPolyFunction::polynomial(Polynomial::linear(x));
}

namespace {

// Block matrix with `blocks[r][c]` ∈ {-1, 0, 1} times the d × d identity.
Matrix blocks(std::size_t d, std::vector<std::vector<int>> const &pattern)
{
	std::size_t const R = pattern.size(), C = pattern.front().size();
	Matrix m(R * d, C * d);
	for (std::size_t r = 0; r < R; ++r)
		for (std::size_t c = 0; c < C; ++c)
			for (std::size_t j = 0; j < d; ++j)
				m(r * d + j, c * d + j) = pattern[r][c];
	return m;
}

} // namespace

PairFunction gamma(ExpPolyFunction const &f)
{
	return f.compose(blocks(f.dim(), {{1, 1}}));
}

PairFunction tensor(ExpPolyFunction const &f, ExpPolyFunction const &g)
{
	if (f.dim() != g.dim())
		throw Error(ErrorCode::DimensionMismatch, "tensor factors");
	return f.compose(blocks(f.dim(), {{1, 0}})) *
	       g.compose(blocks(g.dim(), {{0, 1}}));
}

ExpPolyFunction antipode_fn(ExpPolyFunction const &f)
{
	return f.compose(blocks(f.dim(), {{-1}}));
}

ExpPolyFunction counit_fn(ExpPolyFunction const &f)
{
	ExpRational v = f.eval(Vector(f.dim()));
	return ExpPolyFunction::constant(f.dim(), v.rational_part());
}

ExpPolyFunction convolve_antipode(PairFunction const &g, std::size_t d, int side)
{
	if (g.dim() != 2 * d)
		throw Error(ErrorCode::DimensionMismatch, "pair function");
	return g.compose(side == 0 ? blocks(d, {{-1}, {1}}) : blocks(d, {{1}, {-1}}));
}

ExpPolyFunction gamma_left(ExpPolyFunction const &f)
{
	return gamma(f).compose(blocks(f.dim(), {{1, 1, 0}, {0, 0, 1}}));
}

ExpPolyFunction gamma_right(ExpPolyFunction const &f)
{
	return gamma(f).compose(blocks(f.dim(), {{1, 0, 0}, {0, 1, 1}}));
}

bool is_primitive_fn(ExpPolyFunction const &f)
{
	auto one = ExpPolyFunction::constant(f.dim(), 1);
	return gamma(f) == tensor(f, one) + tensor(one, f);
}

bool is_grouplike_fn(ExpPolyFunction const &f)
{
	return f.eval(Vector(f.dim())) == ExpRational(1) && gamma(f) == tensor(f, f);
}

// ---------------------------------------------------------------------------
// q_g

namespace {

void require_abelian(LieAlgebra const &L)
{
	if (!L.is_abelian())
		throw Error(ErrorCode::NotAbelian, "q is defined for abelian algebras");
}

ExpPolyFunction q_monomial(std::size_t d, Monomial const &m, Rational const &c)
{
	Exponent e(d, 0);
	for (int i : m)
		++e.at(i);
	Polynomial p(d);
	p.add_term(e, c);
	return ExpPolyFunction::polynomial(p);
}

} // namespace

ExpPolyFunction q_map(LieAlgebra const &L, PbwElement const &u)
{
	require_abelian(L);
	if (u.support_dim() > L.dim())
		throw Error(ErrorCode::AlgebraMismatch, "element outside the algebra");
	ExpPolyFunction out(L.dim());
	for (auto const &[m, c] : u.terms())
		out += q_monomial(L.dim(), m, c);
	return out;
}

ExpPolyFunction q_map_exp(LieAlgebra const &L, PbwElement const &u,
                          Vector const &x)
{
	if (x.size() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "exponent vector");
	return q_map(L, u) * ExpPolyFunction::exponential(x);
}

PairFunction q_tensor(LieAlgebra const &L, TensorElement const &t)
{
	require_abelian(L);
	PairFunction out(2 * L.dim());
	for (auto const &[k, c] : t.terms())
		out += tensor(q_monomial(L.dim(), k.first, c),
		              q_monomial(L.dim(), k.second, 1));
	return out;
}

// ---------------------------------------------------------------------------
// radical

Subspace radical_commutative(FinDimQuotient const &A)
{
	if (!A.is_commutative())
		throw Error(ErrorCode::NotCommutative, "radical_commutative");
	std::size_t const n = A.dim();
	std::vector<Matrix> left;
	for (std::size_t i = 0; i < n; ++i)
		left.push_back(A.left_multiplication(unit_vector(n, i)));
	Matrix form(n, n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = i; j < n; ++j)
			form(i, j) = form(j, i) = (left[i] * left[j]).trace();
	return Subspace::span(n, nullspace(form));
}

// ---------------------------------------------------------------------------
// A₂

A2Element a2_mul(A2Element const &a, A2Element const &b)
{
	return {a.y * b.x + b.y * a.x, a.y * b.y};
}

Matrix a2_matrix(A2Element const &a)
{
	Matrix m(2, 2);
	m(0, 0) = a.y;
	m(0, 1) = a.x;
	m(1, 1) = a.y;
	return m;
}

bool a2_is_unit(A2Element const &a) { return !is_zero(a.y); }

A2Element a2_inverse(A2Element const &a)
{
	if (!a2_is_unit(a))
		throw Error(ErrorCode::InvalidArgument, "(x, 0) is not invertible");
	return {-a.x / (a.y * a.y), 1 / a.y};
}

FinDimQuotient a2_algebra()
{
	// basis c = (1,0), 1 = (0,1): c·c = 0, c·1 = 1·c = c, 1·1 = 1
	std::vector<std::vector<Vector>> table{{{0, 0}, {1, 0}}, {{1, 0}, {0, 1}}};
	return FinDimQuotient::from_table(table, {0, 1}, {"c", "1"});
}

std::vector<A2Element> a2_idempotents()
{
	// (x,y)² = (2xy, y²) = (x,y) forces y ∈ {0, 1}, and then x(2y − 1) = 0
	// gives x = 0 in both cases.
	return {{0, 0}, {0, 1}};
}

std::vector<A2Morphism> a2_morphism_census(std::size_t n)
{
	if (n > 8)
		throw Error(ErrorCode::InvalidArgument, "census is bounded to n ≤ 8");
	auto const idem = a2_idempotents();
	auto const A = a2_algebra();
	Subspace const radical = radical_commutative(A);
	A2Element const one{0, 1}, zero{0, 0};

	std::vector<A2Morphism> out;
	std::vector<std::size_t> choice(n, 0);
	std::size_t total = 1;
	for (std::size_t i = 0; i < n; ++i)
		total *= idem.size();
	for (std::size_t code = 0; code < total; ++code)
	{
		std::size_t rest = code;
		std::vector<A2Element> images;
		for (std::size_t i = 0; i < n; ++i)
		{
			images.push_back(idem[rest % idem.size()]);
			rest /= idem.size();
		}
		A2Element sum{0, 0};
		bool orthogonal = true;
		for (std::size_t i = 0; i < n; ++i)
		{
			sum = {sum.x + images[i].x, sum.y + images[i].y};
			for (std::size_t j = i + 1; j < n; ++j)
				orthogonal = orthogonal && a2_mul(images[i], images[j]) == zero;
		}
		if (!orthogonal || sum != one)
			continue;

		A2Morphism f;
		f.images = images;
		f.matrix = Matrix(2, n);
		for (std::size_t i = 0; i < n; ++i)
		{
			f.matrix(0, i) = images[i].x;
			f.matrix(1, i) = images[i].y;
		}
		// F(e_i e_j) = δ_ij F(e_i), and F(1, …, 1) = 1.
		f.is_morphism = sum == one;
		for (std::size_t i = 0; i < n; ++i)
			for (std::size_t j = 0; j < n; ++j)
				f.is_morphism = f.is_morphism &&
				                a2_mul(images[i], images[j]) == (i == j ? images[i] : zero);

		// F⁻¹(R) from the nullspace of [F | −R].
		std::vector<Vector> cols;
		for (std::size_t i = 0; i < n; ++i)
			cols.push_back(f.matrix.column(i));
		for (auto const &r : radical.basis())
			cols.push_back(-r);
		std::vector<Vector> preimage;
		for (auto const &v : nullspace(Matrix::from_columns(2, cols)))
			preimage.emplace_back(v.begin(), v.begin() + n);
		Subspace kernel = Subspace::span(n, nullspace(f.matrix));
		f.radical_condition = kernel.contains(Subspace::span(n, preimage));
		out.push_back(std::move(f));
	}
	return out;
}

} // namespace liehopf
