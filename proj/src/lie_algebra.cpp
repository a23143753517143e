#include "liehopf/lie_algebra.h"

#include "liehopf/error.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace liehopf {

LieAlgebra::LieAlgebra(std::vector<std::string> names,
                       std::map<std::pair<int, int>, Vector> const &brackets)
    : names_(std::move(names))
{
	std::set<std::string> seen;
	for (auto const &n : names_)
		if (!seen.insert(n).second)
			throw Error(ErrorCode::DuplicateBasisName, n);
	int const n = static_cast<int>(names_.size());
	std::map<std::pair<int, int>, Vector> folded;
	for (auto const &[key, value] : brackets)
	{
		auto [i, j] = key;
		if (i < 0 || j < 0 || i >= n || j >= n)
			throw Error(ErrorCode::UnknownSymbol, "bracket index out of range");
		if (value.size() != names_.size())
			throw Error(ErrorCode::DimensionMismatch, "bracket value");
		if (i == j)
		{
			if (!is_zero(value))
				throw Error(ErrorCode::InvalidArgument,
				            "nonzero bracket [" + names_[i] + "," + names_[i] +
				                "]");
			continue;
		}
		auto &slot = folded.try_emplace(std::minmax(i, j), Vector(n)).first->second;
		slot = i < j ? slot + value : slot - value;
	}
	for (auto const &[key, value] : folded)
	{
		SparseTerms terms;
		for (int k = 0; k < n; ++k)
			if (!is_zero(value[k]))
				terms.emplace_back(k, value[k]);
		if (!terms.empty())
			brackets_.emplace(key, std::move(terms));
	}
}

std::optional<int> LieAlgebra::index_of(std::string_view name) const
{
	auto it = std::find(names_.begin(), names_.end(), name);
	if (it == names_.end())
		return std::nullopt;
	return static_cast<int>(it - names_.begin());
}

SparseTerms LieAlgebra::basis_bracket_terms(int i, int j) const
{
	if (i == j)
		return {};
	auto it = brackets_.find(std::minmax(i, j));
	if (it == brackets_.end())
		return {};
	if (i < j)
		return it->second;
	SparseTerms neg = it->second;
	for (auto &[k, c] : neg)
		c = -c;
	return neg;
}

Vector LieAlgebra::basis_bracket(int i, int j) const
{
	Vector v(dim());
	for (auto const &[k, c] : basis_bracket_terms(i, j))
		v[k] = c;
	return v;
}

Rational LieAlgebra::structure_constant(int i, int j, int k) const
{
	for (auto const &[kk, c] : basis_bracket_terms(i, j))
		if (kk == k)
			return c;
	return 0;
}

Vector bracket(LieAlgebra const &L, Vector const &v, Vector const &w)
{
	if (v.size() != L.dim() || w.size() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "bracket operands");
	Vector r(L.dim());
	for (auto const &[key, terms] : L.brackets())
	{
		auto [i, j] = key;
		// [v,w] picks up v_i w_j − v_j w_i on the stored pair (i<j)
		Rational c = v[i] * w[j] - v[j] * w[i];
		if (is_zero(c))
			continue;
		for (auto const &[k, s] : terms)
			r[k] += c * s;
	}
	return r;
}

ValidationReport check_jacobi(LieAlgebra const &L)
{
	ValidationReport report;
	int const n = static_cast<int>(L.dim());
	auto e = [&](int i) { return unit_vector(L.dim(), i); };
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			for (int k = j + 1; k < n; ++k)
			{
				Vector s = bracket(L, e(i), L.basis_bracket(j, k)) +
				           bracket(L, e(j), L.basis_bracket(k, i)) +
				           bracket(L, e(k), L.basis_bracket(i, j));
				if (!is_zero(s))
					report.violations.push_back({i, j, k, std::move(s)});
			}
	return report;
}

LieAlgebra direct_product(LieAlgebra const &L1, LieAlgebra const &L2,
                          std::vector<std::string> *renamed)
{
	std::vector<std::string> names = L1.names();
	std::set<std::string> used(names.begin(), names.end());
	for (auto const &n : L2.names())
	{
		std::string candidate = n;
		for (int suffix = 2;
		     used.count(candidate) || (candidate != n && L2.index_of(candidate));
		     ++suffix)
			candidate = n + "_" + std::to_string(suffix);
		if (candidate != n && renamed)
			renamed->push_back(n + " -> " + candidate);
		used.insert(candidate);
		names.push_back(candidate);
	}
	std::size_t const d = names.size(), off = L1.dim();
	std::map<std::pair<int, int>, Vector> br;
	for (auto const &[key, terms] : L1.brackets())
	{
		Vector v(d);
		for (auto const &[k, c] : terms)
			v[k] = c;
		br[key] = v;
	}
	for (auto const &[key, terms] : L2.brackets())
	{
		Vector v(d);
		for (auto const &[k, c] : terms)
			v[k + off] = c;
		br[{key.first + static_cast<int>(off), key.second + static_cast<int>(off)}] =
		    v;
	}
	return LieAlgebra(std::move(names), br);
}

bool is_ideal(LieAlgebra const &L, Subspace const &S)
{
	if (S.ambient_dim() != L.dim())
		throw Error(ErrorCode::DimensionMismatch, "subspace of wrong ambient");
	for (std::size_t i = 0; i < L.dim(); ++i)
		for (auto const &s : S.basis())
			if (!S.contains(bracket(L, unit_vector(L.dim(), i), s)))
				return false;
	return true;
}

Subspace ideal_closure(LieAlgebra const &L, Subspace const &S)
{
	Subspace cur = S;
	while (true)
	{
		std::vector<Vector> gens = cur.basis();
		for (std::size_t i = 0; i < L.dim(); ++i)
			for (auto const &s : cur.basis())
				gens.push_back(bracket(L, unit_vector(L.dim(), i), s));
		Subspace next = Subspace::span(L.dim(), gens);
		if (next.dim() == cur.dim())
			return cur;
		cur = std::move(next);
	}
}

Subspace derived_ideal(LieAlgebra const &L)
{
	std::vector<Vector> gens;
	for (auto const &[key, terms] : L.brackets())
		gens.push_back(L.basis_bracket(key.first, key.second));
	return Subspace::span(L.dim(), gens);
}

Quotient quotient(LieAlgebra const &L, Subspace const &J)
{
	if (!is_ideal(L, J))
		throw Error(ErrorCode::NotAnIdeal, "quotient");
	std::size_t const n = L.dim();
	std::vector<bool> pivot(n, false);
	for (auto p : J.pivots())
		pivot[p] = true;
	Quotient q;
	std::vector<int> slot(n, -1);
	for (std::size_t i = 0; i < n; ++i)
		if (!pivot[i])
		{
			slot[i] = static_cast<int>(q.representatives.size());
			q.representatives.push_back(static_cast<int>(i));
		}
	std::size_t const m = q.representatives.size();
	q.projection = Matrix(m, n);
	for (std::size_t i = 0; i < n; ++i)
		if (!pivot[i])
			q.projection(slot[i], i) = 1;
	for (std::size_t r = 0; r < J.dim(); ++r)
	{
		auto const &v = J.basis()[r];
		std::size_t p = J.pivots()[r];
		for (std::size_t c = 0; c < n; ++c)
			if (!pivot[c] && !is_zero(v[c]))
				q.projection(slot[c], p) = -v[c];
	}
	std::vector<std::string> names;
	for (int r : q.representatives)
		names.push_back(L.name(r));
	std::map<std::pair<int, int>, Vector> br;
	for (std::size_t a = 0; a < m; ++a)
		for (std::size_t b = a + 1; b < m; ++b)
		{
			Vector v = q.projection * L.basis_bracket(q.representatives[a],
			                                          q.representatives[b]);
			if (!is_zero(v))
				br[{static_cast<int>(a), static_cast<int>(b)}] = v;
		}
	q.algebra = LieAlgebra(std::move(names), br);
	return q;
}

std::vector<Vector> OrderedAdaptedBasis::ordered() const
{
	std::vector<Vector> all = F;
	all.insert(all.end(), F1.begin(), F1.end());
	all.insert(all.end(), F2.begin(), F2.end());
	return all;
}

OrderedAdaptedBasis adapted_basis(LieAlgebra const &L, Subspace const &J,
                                  std::vector<Vector> const &F)
{
	if (!is_ideal(L, J))
		throw Error(ErrorCode::NotAnIdeal, "adapted basis");
	OrderedAdaptedBasis out;
	Subspace cur = J;
	for (auto const &f : F)
	{
		if (f.size() != L.dim())
			throw Error(ErrorCode::DimensionMismatch, "adapted basis family");
		if (cur.contains(f))
			throw Error(ErrorCode::DependentModuloIdeal, format_vector(L, f));
		cur = cur.sum(Subspace::span(L.dim(), std::vector<Vector>{f}));
		out.F.push_back(f);
	}
	for (std::size_t i = 0; i < L.dim() && cur.dim() < L.dim(); ++i)
	{
		Vector e = unit_vector(L.dim(), i);
		if (cur.contains(e))
			continue;
		cur = cur.sum(Subspace::span(L.dim(), std::vector<Vector>{e}));
		out.F1.push_back(std::move(e));
	}
	out.F2 = J.basis();
	return out;
}

LieAlgebra change_basis(LieAlgebra const &L, std::vector<Vector> const &basis,
                        std::vector<std::string> names)
{
	Matrix B = Matrix::from_columns(L.dim(), basis);
	auto inv = inverse(B);
	if (basis.size() != L.dim() || !inv)
		throw Error(ErrorCode::InvalidArgument, "change_basis: not a basis");
	std::map<std::pair<int, int>, Vector> br;
	for (std::size_t i = 0; i < basis.size(); ++i)
		for (std::size_t j = i + 1; j < basis.size(); ++j)
		{
			Vector c = *inv * bracket(L, basis[i], basis[j]);
			if (!is_zero(c))
				br[{static_cast<int>(i), static_cast<int>(j)}] = c;
		}
	return LieAlgebra(std::move(names), br);
}

bool is_lie_morphism(LieAlgebra const &source, LieAlgebra const &target,
                     Matrix const &map)
{
	if (map.rows() != target.dim() || map.cols() != source.dim())
		throw Error(ErrorCode::DimensionMismatch, "Lie morphism matrix");
	for (std::size_t i = 0; i < source.dim(); ++i)
		for (std::size_t j = i + 1; j < source.dim(); ++j)
		{
			Vector lhs = map * source.basis_bracket(i, j);
			Vector rhs = bracket(target, map.column(i), map.column(j));
			if (lhs != rhs)
				return false;
		}
	return true;
}

std::vector<Matrix> adjoint_matrices(LieAlgebra const &L)
{
	std::vector<Matrix> out;
	for (std::size_t i = 0; i < L.dim(); ++i)
	{
		std::vector<Vector> cols;
		for (std::size_t j = 0; j < L.dim(); ++j)
			cols.push_back(L.basis_bracket(i, j));
		out.push_back(Matrix::from_columns(L.dim(), cols));
	}
	return out;
}

std::string format_vector(LieAlgebra const &L, Vector const &v)
{
	std::string out;
	for (std::size_t k = 0; k < v.size(); ++k)
	{
		if (is_zero(v[k]))
			continue;
		Rational c = v[k];
		if (out.empty())
		{
			if (sgn(c) < 0)
				out += "-";
		}
		else
			out += sgn(c) < 0 ? " - " : " + ";
		c = abs(c);
		if (c != 1)
			out += to_string(c) + "*";
		out += k < L.dim() ? L.name(k) : "#" + std::to_string(k);
	}
	return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

std::string_view trim(std::string_view s)
{
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
		s.remove_prefix(1);
	while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
		s.remove_suffix(1);
	return s;
}

std::vector<std::string> split_ws(std::string_view s)
{
	std::vector<std::string> out;
	std::istringstream in{std::string(s)};
	std::string tok;
	while (in >> tok)
		out.push_back(tok);
	return out;
}

bool is_identifier(std::string_view s)
{
	if (s.empty() ||
	    !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
		return false;
	for (char c : s)
		if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
		      c == '\''))
			return false;
	return true;
}

// Parses a combination over a plain list of names (used before the algebra
// exists, while bracket lines are being collected).
Vector parse_combination(std::vector<std::string> const &names,
                         std::string_view text, int line)
{
	Vector v(names.size());
	std::string_view s = trim(text);
	if (s.empty())
		throw ParseError(ErrorCode::ParseError, line, "empty linear combination");
	std::size_t pos = 0;
	bool first = true;
	while (pos < s.size())
	{
		int sign = 1;
		while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
			++pos;
		if (pos < s.size() && (s[pos] == '+' || s[pos] == '-'))
		{
			sign = s[pos] == '-' ? -1 : 1;
			++pos;
		}
		else if (!first)
			throw ParseError(ErrorCode::ParseError, line,
			                 "expected '+' or '-' in '" + std::string(s) + "'");
		first = false;
		std::size_t end = pos;
		// a term runs to the next top-level sign (not one inside a p/q)
		while (end < s.size() && s[end] != '+' && s[end] != '-')
			++end;
		std::string_view term = trim(s.substr(pos, end - pos));
		pos = end;
		if (term.empty())
			throw ParseError(ErrorCode::ParseError, line, "dangling sign");
		Rational coeff = sign;
		std::string_view name = term;
		if (auto star = term.find('*'); star != std::string_view::npos)
		{
			std::string_view c = trim(term.substr(0, star));
			name = trim(term.substr(star + 1));
			try
			{
				coeff *= parse_rational(c);
			}
			catch (Error const &)
			{
				throw ParseError(ErrorCode::MalformedRational, line,
				                 "malformed rational '" + std::string(c) + "'");
			}
		}
		else if (!is_identifier(term))
		{
			Rational c;
			try
			{
				c = parse_rational(term);
			}
			catch (Error const &)
			{
				throw ParseError(ErrorCode::MalformedRational, line,
				                 "malformed term '" + std::string(term) + "'");
			}
			if (!is_zero(c))
				throw ParseError(ErrorCode::ParseError, line,
				                 "scalar term '" + std::string(term) +
				                     "' in a vector");
			continue;
		}
		if (!is_identifier(name))
			throw ParseError(ErrorCode::ParseError, line,
			                 "bad symbol '" + std::string(name) + "'");
		auto it = std::find(names.begin(), names.end(), name);
		if (it == names.end())
			throw ParseError(ErrorCode::UnknownSymbol, line,
			                 "unknown basis symbol '" + std::string(name) + "'");
		v[it - names.begin()] += coeff;
	}
	return v;
}

// Splits "a, b, c" at top-level commas.
std::vector<std::string_view> split_commas(std::string_view s)
{
	std::vector<std::string_view> out;
	std::size_t start = 0;
	for (std::size_t i = 0; i <= s.size(); ++i)
		if (i == s.size() || s[i] == ',')
		{
			out.push_back(trim(s.substr(start, i - start)));
			start = i + 1;
		}
	return out;
}

} // namespace

Vector parse_vector(LieAlgebra const &L, std::string_view text, int line)
{
	return parse_combination(L.names(), text, line);
}

LieDocument parse_lie_document(std::string_view text)
{
	std::vector<std::string> names;
	bool have_basis = false;
	std::map<std::pair<int, int>, Vector> brackets;
	std::map<int, int> weights;
	struct PendingStage
	{
		std::string name, body;
		int line;
	};
	std::vector<PendingStage> stages;

	std::istringstream in{std::string(text)};
	std::string raw;
	int line = 0;
	while (std::getline(in, raw))
	{
		++line;
		std::string_view s = raw;
		if (auto hash = s.find('#'); hash != std::string_view::npos)
			s = s.substr(0, hash);
		s = trim(s);
		if (s.empty())
			continue;
		auto words = split_ws(s);
		std::string const &kw = words[0];
		if (!have_basis)
		{
			if (kw != "basis")
				throw ParseError(ErrorCode::ParseError, line,
				                 "first line must be 'basis ...'");
			have_basis = true;
			std::set<std::string> seen;
			for (std::size_t i = 1; i < words.size(); ++i)
			{
				if (!is_identifier(words[i]))
					throw ParseError(ErrorCode::ParseError, line,
					                 "bad basis name '" + words[i] + "'");
				if (!seen.insert(words[i]).second)
					throw ParseError(ErrorCode::DuplicateBasisName, line,
					                 "duplicate basis name '" + words[i] + "'");
				names.push_back(words[i]);
			}
			continue;
		}
		auto eq = s.find('=');
		if (kw == "basis")
			throw ParseError(ErrorCode::ParseError, line, "second 'basis' line");
		if (kw == "bracket")
		{
			auto lhs = split_ws(s.substr(0, eq));
			if (eq == std::string_view::npos || lhs.size() != 3)
				throw ParseError(ErrorCode::ParseError, line,
				                 "expected 'bracket a b = ...'");
			auto find = [&](std::string const &n) {
				auto it = std::find(names.begin(), names.end(), n);
				if (it == names.end())
					throw ParseError(ErrorCode::UnknownSymbol, line,
					                 "unknown basis symbol '" + n + "'");
				return static_cast<int>(it - names.begin());
			};
			int a = find(lhs[1]), b = find(lhs[2]);
			Vector v = parse_combination(names, s.substr(eq + 1), line);
			if (a == b)
			{
				if (!is_zero(v))
					throw ParseError(ErrorCode::ParseError, line,
					                 "[a,a] must be zero");
				continue;
			}
			auto key = std::minmax(a, b);
			if (brackets.count(key))
				throw ParseError(ErrorCode::ParseError, line,
				                 "bracket [" + lhs[1] + "," + lhs[2] +
				                     "] given twice");
			brackets[key] = a < b ? v : -v;
		}
		else if (kw == "weight")
		{
			auto lhs = split_ws(s.substr(0, eq));
			if (eq == std::string_view::npos || lhs.size() != 2)
				throw ParseError(ErrorCode::ParseError, line,
				                 "expected 'weight a = n'");
			auto it = std::find(names.begin(), names.end(), lhs[1]);
			if (it == names.end())
				throw ParseError(ErrorCode::UnknownSymbol, line,
				                 "unknown basis symbol '" + lhs[1] + "'");
			std::string_view w = trim(s.substr(eq + 1));
			int value = 0;
			bool ok = !w.empty();
			for (char c : w)
				ok = ok && std::isdigit(static_cast<unsigned char>(c));
			if (ok && w.size() < 9)
				value = std::stoi(std::string(w));
			if (value <= 0)
				throw ParseError(ErrorCode::ParseError, line,
				                 "weight must be a positive integer");
			weights[static_cast<int>(it - names.begin())] = value;
		}
		else if (kw == "stage")
		{
			auto lhs = split_ws(s.substr(0, eq));
			if (eq == std::string_view::npos || lhs.size() != 2)
				throw ParseError(ErrorCode::ParseError, line,
				                 "expected 'stage name = span(...)'");
			std::string_view rhs = trim(s.substr(eq + 1));
			if (rhs.substr(0, 5) != "span(" || rhs.back() != ')')
				throw ParseError(ErrorCode::ParseError, line,
				                 "stage must be span(...)");
			stages.push_back(
			    {lhs[1], std::string(rhs.substr(5, rhs.size() - 6)), line});
		}
		else
			throw ParseError(ErrorCode::ParseError, line,
			                 "unknown directive '" + kw + "'");
	}
	if (!have_basis)
		throw ParseError(ErrorCode::ParseError, line, "missing 'basis' line");

	LieDocument doc;
	doc.algebra = LieAlgebra(names, brackets);
	if (!weights.empty())
	{
		if (weights.size() != names.size())
			throw ParseError(ErrorCode::ParseError, 0,
			                 "weights must be given for every basis element");
		for (auto const &[i, w] : weights)
			doc.weights.push_back(w);
	}
	for (auto const &st : stages)
	{
		StageSpec spec{st.name, {}, st.line};
		if (!trim(st.body).empty())
			for (auto part : split_commas(st.body))
				spec.generators.push_back(parse_combination(names, part, st.line));
		doc.stages.push_back(std::move(spec));
	}
	return doc;
}

LieAlgebra parse_lie(std::string_view text)
{
	return parse_lie_document(text).algebra;
}

} // namespace liehopf
