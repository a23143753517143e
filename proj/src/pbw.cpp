#include "liehopf/pbw.h"

#include "liehopf/error.h"

#include <algorithm>
#include <iterator>
#include <random>

namespace liehopf {

bool is_pbw_monomial(Monomial const &m)
{
	return std::is_sorted(m.begin(), m.end());
}

// ---------------------------------------------------------------------------
// PbwElement

PbwElement PbwElement::scalar(Rational const &c)
{
	PbwElement e;
	e.add_term({}, c);
	return e;
}

PbwElement PbwElement::monomial(Monomial m, Rational const &c)
{
	if (!is_pbw_monomial(m))
		throw Error(ErrorCode::InvalidArgument, "monomial is not non-decreasing");
	PbwElement e;
	e.add_term(m, c);
	return e;
}

PbwElement PbwElement::from_vector(Vector const &v)
{
	PbwElement e;
	for (std::size_t i = 0; i < v.size(); ++i)
		e.add_term({static_cast<int>(i)}, v[i]);
	return e;
}

int PbwElement::degree() const
{
	if (terms_.empty())
		return -1;
	return static_cast<int>(std::prev(terms_.end())->first.size());
}

Rational PbwElement::coefficient(Monomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

void PbwElement::add_term(Monomial const &m, Rational const &c)
{
	if (liehopf::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (liehopf::is_zero(it->second))
			terms_.erase(it);
	}
}

std::size_t PbwElement::support_dim() const
{
	std::size_t d = 0;
	for (auto const &[m, c] : terms_)
		for (int i : m)
			d = std::max(d, static_cast<std::size_t>(i) + 1);
	return d;
}

PbwElement &PbwElement::operator+=(PbwElement const &o)
{
	for (auto const &[m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

PbwElement &PbwElement::operator-=(PbwElement const &o)
{
	for (auto const &[m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

PbwElement &PbwElement::operator*=(Rational const &c)
{
	if (liehopf::is_zero(c))
		terms_.clear();
	for (auto &[m, a] : terms_)
		a *= c;
	return *this;
}

// ---------------------------------------------------------------------------
// TensorElement

TensorElement TensorElement::pure(PbwElement const &a, PbwElement const &b)
{
	TensorElement t;
	for (auto const &[ma, ca] : a.terms())
		for (auto const &[mb, cb] : b.terms())
			t.add_term(ma, mb, ca * cb);
	return t;
}

Rational TensorElement::coefficient(Monomial const &a, Monomial const &b) const
{
	auto it = terms_.find({a, b});
	return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add_term(Monomial const &a, Monomial const &b,
                             Rational const &c)
{
	if (liehopf::is_zero(c))
		return;
	auto [it, inserted] = terms_.try_emplace({a, b}, c);
	if (!inserted)
	{
		it->second += c;
		if (liehopf::is_zero(it->second))
			terms_.erase(it);
	}
}

TensorElement &TensorElement::operator+=(TensorElement const &o)
{
	for (auto const &[k, c] : o.terms_)
		add_term(k.first, k.second, c);
	return *this;
}

TensorElement &TensorElement::operator-=(TensorElement const &o)
{
	for (auto const &[k, c] : o.terms_)
		add_term(k.first, k.second, -c);
	return *this;
}

TensorElement &TensorElement::operator*=(Rational const &c)
{
	if (liehopf::is_zero(c))
		terms_.clear();
	for (auto &[k, a] : terms_)
		a *= c;
	return *this;
}

// ---------------------------------------------------------------------------
// Envelope

Envelope::Envelope(LieAlgebra L, RewriteOptions options)
    : L_(std::move(L)), options_(options)
{}

void Envelope::check_element(PbwElement const &a) const
{
	if (a.support_dim() > L_.dim())
		throw Error(ErrorCode::AlgebraMismatch,
		            "element uses generators outside the algebra");
}

PbwElement Envelope::straighten(std::span<int const> word) const
{
	int const n = static_cast<int>(L_.dim());
	for (int i : word)
		if (i < 0 || i >= n)
			throw Error(ErrorCode::AlgebraMismatch,
			            "word letter " + std::to_string(i) + " out of range");

	std::map<Monomial, Rational, GradedLex> pending;
	pending.emplace(Monomial(word.begin(), word.end()), 1);
	PbwElement out;
	std::mt19937_64 rng(options_.seed);
	std::vector<std::size_t> descents;

	while (!pending.empty())
	{
		auto top = std::prev(pending.end());
		Monomial w = top->first;
		Rational c = top->second;
		pending.erase(top);
		if (is_zero(c))
			continue;

		descents.clear();
		for (std::size_t m = 0; m + 1 < w.size(); ++m)
			if (w[m] > w[m + 1])
				descents.push_back(m);
		if (descents.empty())
		{
			out.add_term(w, c);
			continue;
		}
		std::size_t m = descents.front();
		switch (options_.strategy)
		{
		case RewriteStrategy::LeftmostDescent: break;
		case RewriteStrategy::RightmostDescent: m = descents.back(); break;
		case RewriteStrategy::Random:
			m = descents[std::uniform_int_distribution<std::size_t>(
			    0, descents.size() - 1)(rng)];
			break;
		}

		// ... a b ... = ... b a ... + ... [a,b] ...
		int const a = w[m], b = w[m + 1];
		Monomial swapped = w;
		std::swap(swapped[m], swapped[m + 1]);
		pending[swapped] += c;

		Rational sign = 1;
		if (options_.rule == RewriteRule::SignErrorAtFront && m == 0)
			sign = -1;
		for (auto const &[k, s] : L_.basis_bracket_terms(a, b))
		{
			Monomial shorter;
			shorter.reserve(w.size() - 1);
			shorter.insert(shorter.end(), w.begin(), w.begin() + m);
			shorter.push_back(k);
			shorter.insert(shorter.end(), w.begin() + m + 2, w.end());
			pending[shorter] += sign * c * s;
		}
	}
	return out;
}

PbwElement Envelope::mul(PbwElement const &a, PbwElement const &b) const
{
	check_element(a);
	check_element(b);
	PbwElement out;
	Monomial word;
	for (auto const &[ma, ca] : a.terms())
		for (auto const &[mb, cb] : b.terms())
		{
			word = ma;
			word.insert(word.end(), mb.begin(), mb.end());
			Rational c = ca * cb;
			if (is_pbw_monomial(word))
				out.add_term(word, c);
			else
				out += c * straighten(word);
		}
	return out;
}

PbwElement Envelope::power(PbwElement const &a, unsigned k) const
{
	PbwElement r = PbwElement::unit();
	for (unsigned i = 0; i < k; ++i)
		r = mul(r, a);
	return r;
}

PbwElement Envelope::commutator(PbwElement const &a, PbwElement const &b) const
{
	return mul(a, b) - mul(b, a);
}

TensorElement tensor_mul(Envelope const &left, Envelope const &right,
                         TensorElement const &x, TensorElement const &y)
{
	TensorElement out;
	for (auto const &[kx, cx] : x.terms())
		for (auto const &[ky, cy] : y.terms())
		{
			PbwElement l = left.mul(PbwElement::monomial(kx.first),
			                        PbwElement::monomial(ky.first));
			PbwElement r = right.mul(PbwElement::monomial(kx.second),
			                         PbwElement::monomial(ky.second));
			Rational c = cx * cy;
			for (auto const &[ml, cl] : l.terms())
				for (auto const &[mr, cr] : r.terms())
					out.add_term(ml, mr, c * cl * cr);
		}
	return out;
}

PbwElement multiply_out(Envelope const &E, TensorElement const &t)
{
	PbwElement out;
	for (auto const &[k, c] : t.terms())
		out += c * E.mul(PbwElement::monomial(k.first),
		                 PbwElement::monomial(k.second));
	return out;
}

TensorElement Envelope::coproduct(PbwElement const &a) const
{
	check_element(a);
	PbwElement const one = PbwElement::unit();
	TensorElement out;
	for (auto const &[m, c] : a.terms())
	{
		TensorElement prod = TensorElement::pure(one, one);
		for (int i : m)
		{
			PbwElement g = PbwElement::generator(i);
			TensorElement factor =
			    TensorElement::pure(g, one) + TensorElement::pure(one, g);
			prod = tensor_mul(*this, *this, prod, factor);
		}
		prod *= c;
		out += prod;
	}
	return out;
}

PbwElement Envelope::antipode(PbwElement const &a) const
{
	check_element(a);
	PbwElement out;
	for (auto const &[m, c] : a.terms())
	{
		Monomial rev(m.rbegin(), m.rend());
		Rational sign = m.size() % 2 ? -1 : 1;
		out += (sign * c) * straighten(rev);
	}
	return out;
}

bool Envelope::is_primitive(PbwElement const &a) const
{
	PbwElement const one = PbwElement::unit();
	return coproduct(a) ==
	       TensorElement::pure(a, one) + TensorElement::pure(one, a);
}

Rational counit(PbwElement const &a) { return a.coefficient({}); }

// ---------------------------------------------------------------------------
// windows

std::vector<Monomial> pbw_window(std::size_t dim, int d)
{
	std::vector<Monomial> out{Monomial{}};
	std::vector<Monomial> layer{Monomial{}};
	for (int deg = 1; deg <= d; ++deg)
	{
		std::vector<Monomial> next;
		for (auto const &m : layer)
		{
			int start = m.empty() ? 0 : m.back();
			for (int i = start; i < static_cast<int>(dim); ++i)
			{
				Monomial e = m;
				e.push_back(i);
				next.push_back(std::move(e));
			}
		}
		out.insert(out.end(), next.begin(), next.end());
		layer = std::move(next);
	}
	std::sort(out.begin(), out.end(), GradedLex{});
	return out;
}

Vector window_coordinates(std::vector<Monomial> const &window,
                          PbwElement const &a)
{
	Vector v(window.size());
	std::size_t found = 0;
	for (std::size_t i = 0; i < window.size(); ++i)
	{
		v[i] = a.coefficient(window[i]);
		if (!is_zero(v[i]))
			++found;
	}
	if (found != a.terms().size())
		throw Error(ErrorCode::DegreeOutOfWindow, "element outside window");
	return v;
}

PbwElement from_window_coordinates(std::vector<Monomial> const &window,
                                   Vector const &v)
{
	if (v.size() != window.size())
		throw Error(ErrorCode::DimensionMismatch, "window coordinates");
	PbwElement e;
	for (std::size_t i = 0; i < window.size(); ++i)
		e.add_term(window[i], v[i]);
	return e;
}

std::vector<PbwElement> WindowSubspace::elements() const
{
	std::vector<PbwElement> out;
	for (auto const &v : space.basis())
		out.push_back(from_window_coordinates(monomials, v));
	return out;
}

namespace {

using PbwRow = std::map<Monomial, Rational, GradedLex>;
using TensorRow = std::map<TensorElement::Key, Rational, GradedLexPair>;

template <class Row, class Image>
WindowSubspace kernel_on_window(std::vector<Monomial> window, Image &&image)
{
	SparseEchelon<typename Row::key_type, typename Row::key_compare> ech;
	std::vector<Vector> kernel;
	for (std::size_t t = 0; t < window.size(); ++t)
	{
		auto img = image(window[t]);
		Row row(img.terms().begin(), img.terms().end());
		typename decltype(ech)::Relation rel;
		if (!ech.insert(std::move(row), t, &rel))
		{
			Vector v(window.size());
			for (auto const &[tag, c] : rel)
				v[tag] = c;
			kernel.push_back(std::move(v));
		}
	}
	WindowSubspace ws;
	ws.space = Subspace::span(window.size(), kernel);
	ws.monomials = std::move(window);
	return ws;
}

} // namespace

WindowSubspace primitive_space(Envelope const &E, int d)
{
	PbwElement const one = PbwElement::unit();
	return kernel_on_window<TensorRow>(
	    pbw_window(E.dim(), d), [&](Monomial const &m) {
		    PbwElement u = PbwElement::monomial(m);
		    return E.coproduct(u) - TensorElement::pure(u, one) -
		           TensorElement::pure(one, u);
	    });
}

PbwElement map_generators(Envelope const &target, Matrix const &images,
                          PbwElement const &u)
{
	if (images.rows() != target.dim())
		throw Error(ErrorCode::DimensionMismatch, "generator images");
	if (u.support_dim() > images.cols())
		throw Error(ErrorCode::AlgebraMismatch, "element outside source");
	std::vector<PbwElement> gen;
	for (std::size_t i = 0; i < images.cols(); ++i)
		gen.push_back(PbwElement::from_vector(images.column(i)));
	PbwElement out;
	for (auto const &[m, c] : u.terms())
	{
		PbwElement prod = PbwElement::scalar(c);
		for (int i : m)
			prod = target.mul(prod, gen[i]);
		out += prod;
	}
	return out;
}

AdaptedEnvelope adapt(Envelope const &E, Subspace const &J,
                      std::vector<Vector> const &F)
{
	LieAlgebra const &L = E.algebra();
	auto basis = adapted_basis(L, J, F);
	auto ordered = basis.ordered();
	std::vector<std::string> names;
	for (auto const &v : ordered)
		names.push_back(format_vector(L, v));
	auto inv = inverse(Matrix::from_columns(L.dim(), ordered));
	std::size_t const cdim = basis.complement_dim();
	return AdaptedEnvelope{
	    std::move(basis),
	    Envelope(change_basis(L, ordered, std::move(names)), E.options()),
	    std::move(*inv), cdim};
}

namespace {

PbwElement defect_in(AdaptedEnvelope const &A, PbwElement const &u)
{
	PbwElement v = map_generators(A.envelope, A.to_adapted, u);
	PbwElement defect;
	int const cut = static_cast<int>(A.complement_dim);
	for (auto const &[m, c] : v.terms())
		if (m.empty() || m.back() < cut)
			defect.add_term(m, c);
	return defect;
}

} // namespace

PbwElement membership_defect(Envelope const &E, PbwElement const &u,
                             Subspace const &J)
{
	E.check_element(u);
	return defect_in(adapt(E, J), u);
}

bool membership_ULJ(Envelope const &E, PbwElement const &u, Subspace const &J)
{
	return membership_defect(E, u, J).is_zero();
}

QuotientMorphism::QuotientMorphism(Envelope const &E, Subspace const &J)
    : quotient_(liehopf::quotient(E.algebra(), J)),
      target_(quotient_.algebra, E.options())
{}

PbwElement QuotientMorphism::operator()(PbwElement const &u) const
{
	return map_generators(target_, quotient_.projection, u);
}

QuotientMorphism functor_U_on_quotient(Envelope const &E, Subspace const &J)
{
	return QuotientMorphism(E, J);
}

WindowSubspace ulj_window(Envelope const &E, Subspace const &J, int d)
{
	AdaptedEnvelope A = adapt(E, J);
	return kernel_on_window<PbwRow>(
	    pbw_window(E.dim(), d),
	    [&](Monomial const &m) { return defect_in(A, PbwElement::monomial(m)); });
}

WindowSubspace quotient_kernel_window(Envelope const &E, Subspace const &J,
                                      int d)
{
	QuotientMorphism p(E, J);
	return kernel_on_window<PbwRow>(
	    pbw_window(E.dim(), d),
	    [&](Monomial const &m) { return p(PbwElement::monomial(m)); });
}

// ---------------------------------------------------------------------------
// morphisms into finite-dimensional algebras

AlgebraMorphismWindow::AlgebraMorphismWindow(LieAlgebra source,
                                             int degree_bound,
                                             FinDimQuotient target,
                                             std::vector<Vector> images)
    : source_(std::move(source)), degree_bound_(degree_bound),
      target_(std::move(target)), images_(std::move(images))
{
	if (images_.size() != source_.dim())
		throw Error(ErrorCode::DimensionMismatch, "one image per generator");
	for (auto const &v : images_)
		if (v.size() != target_.dim())
			throw Error(ErrorCode::DimensionMismatch, "image coordinates");
}

Vector AlgebraMorphismWindow::apply(Monomial const &m) const
{
	if (static_cast<int>(m.size()) > degree_bound_)
		throw Error(ErrorCode::DegreeOutOfWindow,
		            "degree " + std::to_string(m.size()) + " > " +
		                std::to_string(degree_bound_));
	Vector prod = target_.unit();
	for (int i : m)
	{
		if (i < 0 || i >= static_cast<int>(images_.size()))
			throw Error(ErrorCode::AlgebraMismatch, "generator out of range");
		prod = target_.mul(prod, images_[i]);
	}
	return prod;
}

Vector AlgebraMorphismWindow::apply(PbwElement const &u) const
{
	Vector out(target_.dim());
	for (auto const &[m, c] : u.terms())
		out = out + c * apply(m);
	return out;
}

Matrix AlgebraMorphismWindow::apply_matrix(PbwElement const &u) const
{
	return target_.to_matrix(apply(u));
}

bool AlgebraMorphismWindow::check_multiplicative(Envelope const &E) const
{
	if (apply(Monomial{}) != target_.unit())
		return false;
	auto window = pbw_window(source_.dim(), degree_bound_);
	std::vector<Vector> images;
	for (auto const &m : window)
		images.push_back(apply(m));
	for (std::size_t i = 0; i < window.size(); ++i)
		for (std::size_t j = 0; j < window.size(); ++j)
		{
			if (static_cast<int>(window[i].size() + window[j].size()) >
			    degree_bound_)
				continue;
			PbwElement prod = E.mul(PbwElement::monomial(window[i]),
			                        PbwElement::monomial(window[j]));
			if (apply(prod) != target_.mul(images[i], images[j]))
				return false;
		}
	return true;
}

bool images_respect_brackets(LieAlgebra const &L,
                             std::vector<Matrix> const &images)
{
	if (images.size() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "one image per generator");
	for (std::size_t i = 0; i < L.dim(); ++i)
		for (std::size_t j = i + 1; j < L.dim(); ++j)
		{
			Matrix expected(images[i].rows(), images[i].cols());
			for (auto const &[k, c] : L.basis_bracket_terms(i, j))
				expected = expected + c * images[k];
			if (commutator(images[i], images[j]) != expected)
				return false;
		}
	return true;
}

AlgebraMorphismWindow extend_lie_morphism(LieAlgebra const &L,
                                          std::vector<Matrix> const &images,
                                          int d, std::size_t n)
{
	if (images.size() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "one image per generator");
	if (n == 0)
		n = images.empty() ? 1 : images.front().rows();
	for (auto const &m : images)
		if (m.rows() != n || m.cols() != n)
			throw Error(ErrorCode::DimensionMismatch,
			            "images must be square of one size");
	if (!images_respect_brackets(L, images))
		throw Error(ErrorCode::ImagesNotALieMorphism,
		            "commutators of images differ from brackets");
	std::vector<Vector> coords;
	for (auto const &m : images)
		coords.push_back(m.flatten());
	return AlgebraMorphismWindow(L, d, FinDimQuotient::full_matrix_algebra(n),
	                             std::move(coords));
}

LieAlgebra commutator_algebra(FinDimQuotient const &A)
{
	std::map<std::pair<int, int>, Vector> br;
	for (std::size_t i = 0; i < A.dim(); ++i)
		for (std::size_t j = i + 1; j < A.dim(); ++j)
		{
			Vector v = A.basis_product(i, j) - A.basis_product(j, i);
			if (!is_zero(v))
				br[{static_cast<int>(i), static_cast<int>(j)}] = v;
		}
	return LieAlgebra(A.names(), br);
}

AlgebraMorphismWindow nu_backadjunction(FinDimQuotient const &A, int d)
{
	std::vector<Vector> images;
	for (std::size_t i = 0; i < A.dim(); ++i)
		images.push_back(unit_vector(A.dim(), i));
	return AlgebraMorphismWindow(commutator_algebra(A), d, A, std::move(images));
}

MultiplicativityWitness multiplicativity_witness(LieAlgebra const &L1,
                                                 LieAlgebra const &L2, int d)
{
	MultiplicativityWitness w;
	w.product = direct_product(L1, L2);
	Envelope E1(L1), E2(L2);
	PbwElement const one = PbwElement::unit();
	int const split = static_cast<int>(L1.dim());

	w.source_window = pbw_window(w.product.dim(), d);
	w.source_dim = w.source_window.size();
	auto win1 = pbw_window(L1.dim(), d);
	auto win2 = pbw_window(L2.dim(), d);
	for (auto const &a : win1)
		for (auto const &b : win2)
			if (static_cast<int>(a.size() + b.size()) <= d)
				++w.target_dim;

	SparseEchelon<TensorElement::Key, GradedLexPair> ech;
	w.images_in_window = true;
	for (std::size_t t = 0; t < w.source_window.size(); ++t)
	{
		TensorElement img = TensorElement::pure(one, one);
		for (int g : w.source_window[t])
		{
			TensorElement factor =
			    g < split ? TensorElement::pure(PbwElement::generator(g), one)
			              : TensorElement::pure(one, PbwElement::generator(g - split));
			img = tensor_mul(E1, E2, img, factor);
		}
		for (auto const &[k, c] : img.terms())
			if (static_cast<int>(k.first.size() + k.second.size()) > d)
				w.images_in_window = false;
		ech.insert(TensorRow(img.terms().begin(), img.terms().end()), t);
		w.images.push_back(std::move(img));
	}
	w.rank = ech.rank();
	return w;
}

// ---------------------------------------------------------------------------
// formatting

std::string format_monomial(LieAlgebra const &L, Monomial const &m)
{
	if (m.empty())
		return "1";
	std::string out;
	for (std::size_t i = 0; i < m.size();)
	{
		std::size_t j = i;
		while (j < m.size() && m[j] == m[i])
			++j;
		if (!out.empty())
			out += "*";
		out += m[i] < static_cast<int>(L.dim()) ? L.name(m[i])
		                                        : "#" + std::to_string(m[i]);
		if (j - i > 1)
			out += "^" + std::to_string(j - i);
		i = j;
	}
	return out;
}

namespace {

void append_term(std::string &out, Rational c, std::string const &body)
{
	if (out.empty())
	{
		if (sgn(c) < 0)
			out += "-";
	}
	else
		out += sgn(c) < 0 ? " - " : " + ";
	c = abs(c);
	if (body == "1")
		out += to_string(c);
	else if (c == 1)
		out += body;
	else
		out += to_string(c) + "*" + body;
}

} // namespace

std::string format_element(LieAlgebra const &L, PbwElement const &a)
{
	std::string out;
	for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it)
		append_term(out, it->second, format_monomial(L, it->first));
	return out.empty() ? "0" : out;
}

std::string format_tensor(LieAlgebra const &L, TensorElement const &t)
{
	std::string out;
	for (auto it = t.terms().rbegin(); it != t.terms().rend(); ++it)
		append_term(out, it->second,
		            format_monomial(L, it->first.first) + "⊗" +
		                format_monomial(L, it->first.second));
	return out.empty() ? "0" : out;
}

} // namespace liehopf
