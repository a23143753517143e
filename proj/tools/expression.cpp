#include "expression.h"

#include "liehopf/error.h"

#include <cctype>
#include <algorithm>
#include <numeric>

namespace liehopf::cli {

using nlohmann::json;

Mode parse_mode(std::string_view s)
{
	if (s == "pbw")
		return Mode::Pbw;
	if (s == "trunc")
		return Mode::Trunc;
	if (s == "abelian")
		return Mode::Abelian;
	if (s == "a2")
		return Mode::A2;
	throw Error(ErrorCode::InvalidArgument, "unknown mode '" + std::string(s) + "'");
}

std::string_view to_string(Mode m)
{
	switch (m)
	{
	case Mode::Pbw: return "pbw";
	case Mode::Trunc: return "trunc";
	case Mode::Abelian: return "abelian";
	case Mode::A2: return "a2";
	}
	return "?";
}

EvalContext::EvalContext(Mode mode, LieDocument doc, int cutoff)
    : mode_(mode), doc_(std::move(doc))
{
	E_ = std::make_unique<Envelope>(doc_.algebra);
	if (mode_ == Mode::Trunc)
	{
		auto weights = doc_.weights;
		if (weights.empty())
			weights.assign(doc_.algebra.dim(), 1);
		T_ = std::make_unique<GradedTruncation>(doc_.algebra, weights, cutoff);
	}
	if (mode_ == Mode::Abelian && !doc_.algebra.is_abelian())
		throw Error(ErrorCode::NotAbelian, "abelian mode needs an abelian algebra");
}

namespace {

ParseError parse_error(std::string_view expr, std::size_t pos, std::string const &msg)
{
	return ParseError(ErrorCode::ParseError, 0,
	                  msg + " at column " + std::to_string(pos + 1) + " of '" +
	                      std::string(expr) + "'");
}

std::string kind_name(Value const &v)
{
	static char const *const names[] = {"scalar", "PBW element", "tensor",
	                                    "function", "A2 element"};
	return names[v.index()];
}

class Evaluator
{
  public:
	Evaluator(EvalContext const &ctx, std::string_view s) : ctx_(ctx), s_(s) {}

	Value run()
	{
		Value v = sum();
		skip();
		if (pos_ != s_.size())
			throw parse_error(s_, pos_, "unexpected '" + std::string(1, s_[pos_]) + "'");
		return v;
	}

  private:
	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool accept(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c)
		{
			++pos_;
			return true;
		}
		return false;
	}

	void expect(char c)
	{
		if (!accept(c))
			throw parse_error(s_, pos_, std::string("expected '") + c + "'");
	}

	[[noreturn]] void fail(std::string const &msg) const
	{
		throw Error(ErrorCode::InvalidArgument, msg);
	}

	bool trunc() const { return ctx_.mode() == Mode::Trunc; }

	PbwElement pbw(PbwElement u) const
	{
		return trunc() ? ctx_.truncation().truncate(u) : u;
	}

	TensorElement tensor(TensorElement t) const
	{
		return trunc() ? ctx_.truncation().truncate(t) : t;
	}

	// Brings a scalar to the kind of the other operand.
	Value promote(Rational const &c, Value const &like) const
	{
		return std::visit(
		    [&](auto const &o) -> Value {
			    using T = std::decay_t<decltype(o)>;
			    if constexpr (std::is_same_v<T, Rational>)
				    return c;
			    else if constexpr (std::is_same_v<T, PbwElement>)
				    return PbwElement::scalar(c);
			    else if constexpr (std::is_same_v<T, TensorElement>)
				    return TensorElement::pure(PbwElement::scalar(c), PbwElement::unit());
			    else if constexpr (std::is_same_v<T, FnValue>)
				    return FnValue{ExpPolyFunction::constant(o.f.dim(), c), o.blocks};
			    else
				    return A2Element{0, c};
		    },
		    like);
	}

	void unify(Value &a, Value &b) const
	{
		if (auto c = std::get_if<Rational>(&a); c && b.index() != 0)
			a = promote(*c, b);
		else if (auto c = std::get_if<Rational>(&b); c && a.index() != 0)
			b = promote(*c, a);
		if (a.index() != b.index())
			fail("cannot combine " + kind_name(a) + " with " + kind_name(b));
		if (auto fa = std::get_if<FnValue>(&a))
			if (fa->blocks != std::get<FnValue>(b).blocks)
				fail("cannot combine functions on different spaces");
	}

	Value add(Value a, Value b, int sign) const
	{
		unify(a, b);
		Rational s = sign;
		return std::visit(
		    [&](auto const &x) -> Value {
			    using T = std::decay_t<decltype(x)>;
			    auto const &y = std::get<T>(b);
			    if constexpr (std::is_same_v<T, Rational>)
				    return Rational(x + s * y);
			    else if constexpr (std::is_same_v<T, PbwElement>)
				    return x + s * y;
			    else if constexpr (std::is_same_v<T, TensorElement>)
			    {
				    TensorElement t = y;
				    t *= s;
				    return x + t;
			    }
			    else if constexpr (std::is_same_v<T, FnValue>)
				    return FnValue{x.f + s * y.f, x.blocks};
			    else
				    return A2Element{x.x + s * y.x, x.y + s * y.y};
		    },
		    a);
	}

	Value scale(Value v, Rational const &c) const
	{
		std::visit(
		    [&](auto &x) {
			    using T = std::decay_t<decltype(x)>;
			    if constexpr (std::is_same_v<T, FnValue>)
				    x.f *= c;
			    else if constexpr (std::is_same_v<T, A2Element>)
				    x = A2Element{c * x.x, c * x.y};
			    else
				    x *= c;
		    },
		    v);
		return v;
	}

	Value mul(Value a, Value b) const
	{
		if (auto c = std::get_if<Rational>(&a))
			return scale(b, *c);
		if (auto c = std::get_if<Rational>(&b))
			return scale(a, *c);
		unify(a, b);
		return std::visit(
		    [&](auto const &x) -> Value {
			    using T = std::decay_t<decltype(x)>;
			    auto const &y = std::get<T>(b);
			    if constexpr (std::is_same_v<T, PbwElement>)
				    return trunc() ? ctx_.truncation().mul(x, y)
				                   : ctx_.envelope().mul(x, y);
			    else if constexpr (std::is_same_v<T, TensorElement>)
				    return tensor(tensor_mul(ctx_.envelope(), ctx_.envelope(), x, y));
			    else if constexpr (std::is_same_v<T, FnValue>)
				    return FnValue{x.f * y.f, x.blocks};
			    else if constexpr (std::is_same_v<T, A2Element>)
				    return a2_mul(x, y);
			    else
				    return Rational(x * y);
		    },
		    a);
	}

	Value inverse(Value const &v) const
	{
		if (auto c = std::get_if<Rational>(&v))
		{
			if (is_zero(*c))
				fail("division by zero");
			return Rational(1 / *c);
		}
		if (auto u = std::get_if<PbwElement>(&v); u && trunc())
			return ctx_.truncation().inverse(*u);
		if (auto a = std::get_if<A2Element>(&v))
			return a2_inverse(*a);
		fail("no inverse for a " + kind_name(v) + " in " +
		     std::string(to_string(ctx_.mode())) + " mode");
	}

	Value power(Value const &v, long k) const
	{
		if (k < 0)
			return power(inverse(v), -k);
		Value out = promote(Rational(1), v);
		for (long i = 0; i < k; ++i)
			out = mul(out, v);
		return out;
	}

	Value sum()
	{
		Value v = product();
		while (true)
		{
			if (accept('+'))
				v = add(v, product(), 1);
			else if (accept('-'))
				v = add(v, product(), -1);
			else
				return v;
		}
	}

	Value product()
	{
		Value v = unary();
		while (true)
		{
			if (accept('*'))
				v = mul(v, unary());
			else if (accept('/'))
			{
				std::size_t at = pos_;
				Value d = unary();
				if (d.index() != 0)
					throw parse_error(s_, at, "can only divide by a number");
				v = mul(v, inverse(d));
			}
			else
				return v;
		}
	}

	Value unary()
	{
		if (accept('-'))
			return scale(unary(), -1);
		if (accept('+'))
			return unary();
		return power_expr();
	}

	Value power_expr()
	{
		Value base = atom();
		if (!accept('^'))
			return base;
		skip();
		bool negative = accept('-');
		skip();
		std::size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (start == pos_)
			throw parse_error(s_, pos_, "expected an integer exponent");
		long k = std::stol(std::string(s_.substr(start, pos_ - start)));
		return power(base, negative ? -k : k);
	}

	Value atom()
	{
		skip();
		if (pos_ >= s_.size())
			throw parse_error(s_, pos_, "unexpected end of expression");
		char c = s_[pos_];
		if (accept('('))
		{
			Value v = sum();
			if (accept(','))
			{
				Value y = sum();
				expect(')');
				auto px = std::get_if<Rational>(&v), py = std::get_if<Rational>(&y);
				if (ctx_.mode() != Mode::A2 || !px || !py)
					fail("pair literals (x, y) are numbers in a2 mode");
				return A2Element{*px, *py};
			}
			expect(')');
			return v;
		}
		if (std::isdigit(static_cast<unsigned char>(c)))
			return number();
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			std::size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			std::string name(s_.substr(start, pos_ - start));
			if (accept('('))
			{
				std::vector<Value> args;
				if (!accept(')'))
				{
					do
						args.push_back(sum());
					while (accept(','));
					expect(')');
				}
				return call(name, args);
			}
			return symbol(name, start);
		}
		throw parse_error(s_, pos_, "unexpected '" + std::string(1, c) + "'");
	}

	Value number()
	{
		std::size_t start = pos_;
		auto digits = [&] {
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
		};
		digits();
		// p/q is a single literal only when q follows immediately.
		if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
		    std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
		{
			++pos_;
			digits();
		}
		return parse_rational(s_.substr(start, pos_ - start));
	}

	Value symbol(std::string const &name, std::size_t at) const
	{
		LieAlgebra const &L = ctx_.algebra();
		if (ctx_.mode() == Mode::A2)
		{
			if (name == "c")
				return A2Element{1, 0};
			throw parse_error(s_, at, "unknown symbol '" + name + "' (a2 mode knows c)");
		}
		if (auto i = L.index_of(name))
			return pbw(PbwElement::generator(*i));
		if (ctx_.mode() == Mode::Abelian && name.size() > 1 && name[0] == 'w' &&
		    std::all_of(name.begin() + 1, name.end(), ::isdigit))
		{
			std::size_t j = std::stoul(name.substr(1));
			if (j >= 1 && j <= L.dim())
				return FnValue{ExpPolyFunction::coordinate(L.dim(), j - 1), 1};
		}
		throw parse_error(s_, at, "unknown symbol '" + name + "'");
	}

	template <class T>
	T const &arg(std::vector<Value> const &args, std::size_t i,
	             std::string const &fn) const
	{
		if (auto p = std::get_if<T>(&args[i]))
			return *p;
		fail(fn + ": unexpected argument of kind " + kind_name(args[i]));
	}

	PbwElement pbw_arg(std::vector<Value> const &args, std::size_t i,
	                   std::string const &fn) const
	{
		if (auto c = std::get_if<Rational>(&args[i]))
			return PbwElement::scalar(*c);
		return arg<PbwElement>(args, i, fn);
	}

	FnValue fn_arg(std::vector<Value> const &args, std::size_t i,
	               std::string const &fn) const
	{
		if (auto c = std::get_if<Rational>(&args[i]))
			return {ExpPolyFunction::constant(ctx_.algebra().dim(), *c), 1};
		return arg<FnValue>(args, i, fn);
	}

	void arity(std::string const &fn, std::vector<Value> const &args,
	           std::size_t n) const
	{
		if (args.size() != n)
			fail(fn + " takes " + std::to_string(n) + " argument(s)");
	}

	void require(Mode m, std::string const &fn) const
	{
		if (ctx_.mode() != m)
			fail(fn + " requires --mode " + std::string(to_string(m)));
	}

	Value call(std::string const &fn, std::vector<Value> const &args) const
	{
		Mode const mode = ctx_.mode();
		if (fn == "S" || fn == "antipode")
		{
			arity(fn, args, 1);
			if (mode == Mode::Abelian && std::holds_alternative<FnValue>(args[0]))
			{
				auto f = std::get<FnValue>(args[0]);
				return FnValue{antipode_fn(f.f), f.blocks};
			}
			return pbw(ctx_.envelope().antipode(pbw_arg(args, 0, fn)));
		}
		if (fn == "coproduct" || fn == "delta")
		{
			arity(fn, args, 1);
			if (mode == Mode::Abelian && std::holds_alternative<FnValue>(args[0]))
				return call("gamma", args);
			auto u = pbw_arg(args, 0, fn);
			return trunc() ? coproduct_trunc(ctx_.truncation(), u)
			               : ctx_.envelope().coproduct(u);
		}
		if (fn == "counit")
		{
			arity(fn, args, 1);
			if (auto f = std::get_if<FnValue>(&args[0]))
				return f->f.eval(Vector(f->f.dim())).rational_part();
			return counit(pbw_arg(args, 0, fn));
		}
		if (fn == "comm")
		{
			arity(fn, args, 2);
			return pbw(ctx_.envelope().commutator(pbw_arg(args, 0, fn),
			                                      pbw_arg(args, 1, fn)));
		}
		if (fn == "inv")
		{
			arity(fn, args, 1);
			return inverse(args[0]);
		}
		if (fn == "exp")
		{
			arity(fn, args, 1);
			if (mode == Mode::Abelian)
			{
				auto f = fn_arg(args, 0, fn);
				std::size_t const n = f.f.dim();
				auto const &s = f.f.summands();
				Vector l(n);
				bool linear = s.empty();
				if (s.size() == 1 && is_zero(s.begin()->first) && s.begin()->second.degree() == 1)
				{
					linear = true;
					for (auto const &[e, c] : s.begin()->second.terms())
					{
						auto it = std::find(e.begin(), e.end(), 1);
						if (std::accumulate(e.begin(), e.end(), 0) != 1)
							linear = false;
						else
							l[it - e.begin()] = c;
					}
				}
				if (!linear)
					fail("exp: only exponentials of linear forms are representable");
				return FnValue{ExpPolyFunction::exponential(l), f.blocks};
			}
			require(Mode::Trunc, fn);
			return exp_trunc(ctx_.truncation(), pbw_arg(args, 0, fn));
		}
		if (fn == "log")
		{
			arity(fn, args, 1);
			require(Mode::Trunc, fn);
			return log_trunc(ctx_.truncation(), pbw_arg(args, 0, fn));
		}
		if (fn == "bch")
		{
			arity(fn, args, 2);
			require(Mode::Trunc, fn);
			return bch(ctx_.truncation(), pbw_arg(args, 0, fn), pbw_arg(args, 1, fn));
		}
		if (fn == "q")
		{
			arity(fn, args, 1);
			require(Mode::Abelian, fn);
			if (auto t = std::get_if<TensorElement>(&args[0]))
				return FnValue{q_tensor(ctx_.algebra(), *t), 2};
			return FnValue{q_map(ctx_.algebra(), pbw_arg(args, 0, fn)), 1};
		}
		if (fn == "gamma")
		{
			arity(fn, args, 1);
			require(Mode::Abelian, fn);
			auto f = fn_arg(args, 0, fn);
			if (f.blocks != 1)
				fail("gamma: expects a function on the dual space");
			return FnValue{gamma(f.f), 2};
		}
		fail("unknown function '" + fn + "'");
	}

	EvalContext const &ctx_;
	std::string_view s_;
	std::size_t pos_ = 0;
};

json names_of(LieAlgebra const &L, Monomial const &m)
{
	json out = json::array();
	for (int i : m)
		out.push_back(L.name(i));
	return out;
}

std::vector<std::string> fn_names(LieAlgebra const &L, FnValue const &f)
{
	return f.blocks == 2 ? pair_names(L.dim()) : dual_names(f.f.dim());
}

} // namespace

Value EvalContext::evaluate(std::string_view expr) const
{
	return Evaluator(*this, expr).run();
}

std::string EvalContext::format(Value const &v) const
{
	return std::visit(
	    [&](auto const &x) -> std::string {
		    using T = std::decay_t<decltype(x)>;
		    if constexpr (std::is_same_v<T, Rational>)
			    return liehopf::to_string(x);
		    else if constexpr (std::is_same_v<T, PbwElement>)
			    return format_element(algebra(), x);
		    else if constexpr (std::is_same_v<T, TensorElement>)
			    return format_tensor(algebra(), x);
		    else if constexpr (std::is_same_v<T, FnValue>)
			    return x.f.format(fn_names(algebra(), x));
		    else
			    return "(" + liehopf::to_string(x.x) + ", " + liehopf::to_string(x.y) + ")";
	    },
	    v);
}

json EvalContext::to_json(Value const &v) const
{
	LieAlgebra const &L = algebra();
	json out;
	std::visit(
	    [&](auto const &x) {
		    using T = std::decay_t<decltype(x)>;
		    if constexpr (std::is_same_v<T, Rational>)
		    {
			    out["kind"] = "scalar";
			    out["value"] = liehopf::to_string(x);
		    }
		    else if constexpr (std::is_same_v<T, PbwElement>)
		    {
			    out["kind"] = "pbw";
			    out["terms"] = json::array();
			    for (auto const &[m, c] : x.terms())
				    out["terms"].push_back(
				        {{"monomial", names_of(L, m)}, {"coeff", liehopf::to_string(c)}});
		    }
		    else if constexpr (std::is_same_v<T, TensorElement>)
		    {
			    out["kind"] = "tensor";
			    out["terms"] = json::array();
			    for (auto const &[k, c] : x.terms())
				    out["terms"].push_back({{"left", names_of(L, k.first)},
				                            {"right", names_of(L, k.second)},
				                            {"coeff", liehopf::to_string(c)}});
		    }
		    else if constexpr (std::is_same_v<T, FnValue>)
		    {
			    out["kind"] = "function";
			    out["variables"] = fn_names(L, x);
			    out["summands"] = json::array();
			    for (auto const &[l, p] : x.f.summands())
			    {
				    json exponent = json::array(), terms = json::array();
				    for (auto const &q : l)
					    exponent.push_back(liehopf::to_string(q));
				    for (auto const &[e, c] : p.terms())
					    terms.push_back({{"powers", e}, {"coeff", liehopf::to_string(c)}});
				    out["summands"].push_back({{"linear_form", exponent}, {"polynomial", terms}});
			    }
		    }
		    else
		    {
			    out["kind"] = "a2";
			    out["x"] = liehopf::to_string(x.x);
			    out["y"] = liehopf::to_string(x.y);
			    out["unit"] = a2_is_unit(x);
		    }
	    },
	    v);
	out["text"] = format(v);
	return out;
}

PbwElement parse_element(LieDocument const &doc, std::string_view expr)
{
	EvalContext ctx(Mode::Pbw, doc);
	Value v = ctx.evaluate(expr);
	if (auto c = std::get_if<Rational>(&v))
		return PbwElement::scalar(*c);
	if (auto u = std::get_if<PbwElement>(&v))
		return *u;
	throw Error(ErrorCode::InvalidArgument, "'" + std::string(expr) +
	                                            "' is not an element of U(L)");
}

} // namespace liehopf::cli
