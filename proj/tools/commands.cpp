#include "commands.h"

#include "expression.h"
#include "verify.h"

#include "liehopf/error.h"
#include "liehopf/tower.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace liehopf::cli {

using nlohmann::json;

namespace {

struct Options
{
	bool json = false;
	int degree = 3;
	int cutoff = 4;
	std::vector<std::string> mode{"pbw"};
	std::uint64_t seed = VerifyOptions{}.seed;
	std::vector<std::string> suites;
	std::vector<std::string> algebras;
	bool inject_sign_error = false;
	std::vector<std::string> ideal;
	std::vector<std::string> positional;
	std::size_t census_n = 3;
};

// I/O failures are reported with the same exit code as parse errors.
std::string read_file(std::string const &path)
{
	std::ifstream in(path);
	if (!in)
		throw Error(ErrorCode::InvalidArgument, "cannot read '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

LieDocument load(std::string const &path)
{
	return parse_lie_document(read_file(path));
}

json report_json(Report const &r)
{
	json records = json::array();
	for (auto const &c : r.records)
		records.push_back({{"name", c.name},
		                   {"status", std::string(to_string(c.status))},
		                   {"witness", c.witness}});
	return {{"seed", r.seed},
	        {"records", records},
	        {"summary",
	         {{"pass", r.count(Status::Pass)},
	          {"fail", r.count(Status::Fail)},
	          {"skip", r.count(Status::Skip)}}},
	        {"ok", r.ok()}};
}

void print_report(Report const &r, bool as_json, std::ostream &out,
                  bool with_seed = true)
{
	if (as_json)
	{
		out << report_json(r).dump(2) << "\n";
		return;
	}
	if (with_seed)
		out << fmt::format("seed: {}\n", r.seed);
	for (auto const &c : r.records)
	{
		std::string status(to_string(c.status));
		std::transform(status.begin(), status.end(), status.begin(), ::toupper);
		out << fmt::format("{:<4}  {}", status, c.name);
		if (!c.witness.empty())
			out << fmt::format("  ({})", c.witness);
		out << "\n";
	}
	out << fmt::format("summary: {} passed, {} failed, {} skipped\n",
	                   r.count(Status::Pass), r.count(Status::Fail),
	                   r.count(Status::Skip));
}

int cmd_check(Options const &o, std::ostream &out)
{
	if (o.positional.size() != 1)
		throw Error(ErrorCode::InvalidArgument, "check takes one file");
	LieDocument doc = load(o.positional[0]);
	LieAlgebra const &L = doc.algebra;
	Report r;

	auto jacobi = check_jacobi(L);
	std::string witness;
	if (!jacobi.ok())
	{
		auto const &v = jacobi.violations.front();
		witness = fmt::format("[{},[{},{}]] + cyclic = {}", L.name(v.i), L.name(v.j),
		                      L.name(v.k), format_vector(L, v.residual));
	}
	r.add(make_record("jacobi", jacobi.ok(), witness));

	if (doc.weights.empty())
		r.add({"weights", Status::Skip, "no weight line"});
	else
	{
		bool additive = true;
		witness.clear();
		for (auto const &[ij, terms] : L.brackets())
			for (auto const &[k, c] : terms)
				if (doc.weights[k] != doc.weights[ij.first] + doc.weights[ij.second] &&
				    additive)
				{
					additive = false;
					witness = fmt::format("[{},{}] has a {} term", L.name(ij.first),
					                      L.name(ij.second), L.name(k));
				}
		r.add(make_record("weights", additive, witness));
	}
	for (std::size_t s = 0; s < doc.stages.size(); ++s)
	{
		auto const &st = doc.stages[s];
		Subspace J = Subspace::span(L.dim(), st.generators);
		r.add(make_record("stage." + st.name + ".ideal", is_ideal(L, J)));
		if (s > 0)
		{
			Subspace prev = Subspace::span(L.dim(), doc.stages[s - 1].generators);
			r.add(make_record("stage." + st.name + ".decreasing", prev.contains(J)));
		}
	}
	print_report(r, o.json, out, false);
	return r.ok() ? 0 : 1;
}

int cmd_eval(Options const &o, std::ostream &out)
{
	Mode mode = parse_mode(o.mode.at(0));
	int cutoff = o.mode.size() > 1 ? std::stoi(o.mode[1]) : o.cutoff;
	if (cutoff < 1)
		throw Error(ErrorCode::InvalidArgument, "cutoff must be positive");
	std::string expr;
	LieDocument doc;
	if (o.positional.size() == 2)
	{
		doc = load(o.positional[0]);
		expr = o.positional[1];
	}
	else if (o.positional.size() == 1 && mode == Mode::A2)
		expr = o.positional[0];
	else
		throw Error(ErrorCode::InvalidArgument, "eval takes a file and an expression");

	EvalContext ctx(mode, std::move(doc), cutoff);
	Value v = ctx.evaluate(expr);
	if (o.json)
	{
		json j{{"mode", std::string(to_string(mode))},
		       {"expression", expr},
		       {"result", ctx.to_json(v)}};
		if (mode == Mode::Trunc)
			j["cutoff"] = cutoff;
		out << j.dump(2) << "\n";
	}
	else
		out << ctx.format(v) << "\n";
	return 0;
}

int cmd_primitives(Options const &o, std::ostream &out)
{
	if (o.positional.size() != 1)
		throw Error(ErrorCode::InvalidArgument, "primitives takes one file");
	LieDocument doc = load(o.positional[0]);
	Envelope E(doc.algebra);
	auto P = primitive_space(E, o.degree);
	auto elements = P.elements();
	if (o.json)
	{
		EvalContext ctx(Mode::Pbw, doc);
		json basis = json::array();
		for (auto const &u : elements)
			basis.push_back(ctx.to_json(u));
		out << json{{"degree", o.degree},
		            {"dimension", P.space.dim()},
		            {"lie_dimension", doc.algebra.dim()},
		            {"basis", basis}}
		           .dump(2)
		    << "\n";
	}
	else
	{
		out << fmt::format("primitive elements of degree <= {}: dimension {} (dim L = {})\n",
		                   o.degree, P.space.dim(), doc.algebra.dim());
		for (auto const &u : elements)
			out << "  " << format_element(doc.algebra, u) << "\n";
	}
	return 0;
}

int cmd_membership(Options const &o, std::ostream &out)
{
	if (o.positional.size() != 2)
		throw Error(ErrorCode::InvalidArgument, "membership takes a file and an element");
	LieDocument doc = load(o.positional[0]);
	LieAlgebra const &L = doc.algebra;
	std::vector<Vector> gens;
	for (auto const &g : o.ideal)
		gens.push_back(parse_vector(L, g));
	Subspace J = Subspace::span(L.dim(), gens);
	Envelope E(L);
	PbwElement u = parse_element(doc, o.positional[1]);
	PbwElement defect = membership_defect(E, u, J);
	PbwElement image = functor_U_on_quotient(E, J)(u);
	if (o.json)
	{
		EvalContext ctx(Mode::Pbw, doc);
		out << json{{"element", ctx.to_json(u)},
		            {"ideal_dimension", J.dim()},
		            {"member", defect.is_zero()},
		            {"defect_terms", defect.terms().size()},
		            {"quotient_image_zero", image.is_zero()}}
		           .dump(2)
		    << "\n";
	}
	else
	{
		out << fmt::format("{} {} U(L)J (dim J = {})\n", format_element(L, u),
		                   defect.is_zero() ? "is in" : "is not in", J.dim());
		if (!defect.is_zero())
			out << fmt::format("  {} adapted PBW term(s) without a trailing factor from J\n",
			                   defect.terms().size());
	}
	return 0;
}

int cmd_tower(Options const &o, std::ostream &out)
{
	if (o.positional.size() != 1)
		throw Error(ErrorCode::InvalidArgument, "tower takes one file");
	LieDocument doc = load(o.positional[0]);
	Tower T = make_tower(doc);
	Report r;
	r.append(tower_checks(T, o.degree));
	if (o.json)
	{
		json stages = json::array();
		for (std::size_t k = 0; k < T.size(); ++k)
			stages.push_back({{"name", T.stage(k).name},
			                  {"ideal_dimension", T.stage(k).ideal.dim()},
			                  {"quotient_dimension", T.stage(k).quotient.algebra.dim()},
			                  {"window_dimension",
			                   pbw_window(T.stage(k).quotient.algebra.dim(), o.degree).size()}});
		json j = report_json(r);
		j.erase("seed");
		j["stages"] = stages;
		j["degree"] = o.degree;
		out << j.dump(2) << "\n";
	}
	else
	{
		for (std::size_t k = 0; k < T.size(); ++k)
			out << fmt::format("stage {} '{}': dim J = {}, dim L/J = {}, window {}\n", k,
			                   T.stage(k).name, T.stage(k).ideal.dim(),
			                   T.stage(k).quotient.algebra.dim(),
			                   pbw_window(T.stage(k).quotient.algebra.dim(), o.degree).size());
		print_report(r, false, out, false);
	}
	return r.ok() ? 0 : 1;
}

int cmd_census(Options const &o, std::ostream &out)
{
	auto census = a2_morphism_census(o.census_n);
	bool ok = census.size() == o.census_n;
	auto pair = [](A2Element const &e) {
		return "(" + liehopf::to_string(e.x) + ", " + liehopf::to_string(e.y) + ")";
	};
	json list = json::array();
	for (auto const &f : census)
	{
		ok = ok && f.is_morphism && f.radical_condition;
		json images = json::array();
		for (auto const &e : f.images)
			images.push_back(pair(e));
		list.push_back({{"images", images},
		                {"morphism", f.is_morphism},
		                {"radical_preimage_in_kernel", f.radical_condition}});
	}
	if (o.json)
		out << json{{"n", o.census_n}, {"count", census.size()}, {"morphisms", list}}.dump(2)
		    << "\n";
	else
	{
		out << fmt::format("unital morphisms K^{} -> A2: {}\n", o.census_n, census.size());
		for (auto const &f : census)
		{
			std::string images;
			for (auto const &e : f.images)
				images += (images.empty() ? "" : " ") + pair(e);
			out << fmt::format("  {}  morphism={} radical-condition={}\n", images,
			                   f.is_morphism, f.radical_condition);
		}
	}
	return ok ? 0 : 1;
}

int cmd_verify(Options const &o, std::ostream &out)
{
	VerifyOptions v;
	v.seed = o.seed;
	v.degree = o.degree;
	v.algebras = o.algebras;
	v.rule = o.inject_sign_error ? RewriteRule::SignErrorAtFront : RewriteRule::Standard;
	for (auto const &s : o.suites)
	{
		if (s == "all")
			continue;
		auto const &names = suite_names();
		if (std::find(names.begin(), names.end(), s) == names.end())
			throw Error(ErrorCode::InvalidArgument, "unknown suite '" + s + "'");
		v.suites.push_back(s);
	}
	for (auto const &path : o.positional)
		v.extra.push_back({std::filesystem::path(path).stem().string(), load(path)});
	Report r = run_verify(v);
	print_report(r, o.json, out);
	return r.ok() ? 0 : 1;
}

} // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Exact computations in enveloping algebras of Lie algebras", "liehopf"};
	app.require_subcommand(1);
	Options o;

	auto common = [&](CLI::App *sub) {
		sub->add_flag("--json", o.json, "Machine-readable output");
	};

	auto *check = app.add_subcommand("check", "Parse a .lie file and validate it");
	check->add_option("file", o.positional)->required();
	common(check);

	auto *eval = app.add_subcommand("eval", "Evaluate an expression");
	eval->add_option("args", o.positional, "[file] expression")->required();
	eval->add_option("--mode", o.mode, "pbw | trunc [N] | abelian | a2")
	    ->expected(1, 2);
	eval->add_option("--cutoff", o.cutoff, "Weight cutoff N for trunc mode")
	    ->check(CLI::PositiveNumber);
	common(eval);

	auto *prim = app.add_subcommand("primitives", "Primitive elements on a degree window");
	prim->add_option("file", o.positional)->required();
	prim->add_option("--degree", o.degree)->check(CLI::PositiveNumber);
	common(prim);

	auto *mem = app.add_subcommand("membership", "Decide u in U(L)J");
	mem->add_option("args", o.positional, "file element")->required();
	mem->add_option("--ideal", o.ideal, "Generator of J (repeatable)")->required()->allow_extra_args(false);
	common(mem);

	auto *tower = app.add_subcommand("tower", "Build the tower of stage quotients");
	tower->add_option("file", o.positional)->required();
	tower->add_option("--degree", o.degree)->check(CLI::PositiveNumber);
	common(tower);

	auto *census = app.add_subcommand("census-a2", "Unital morphisms K^n -> A2");
	census->add_option("n", o.census_n)->check(CLI::Range(0, 8));
	common(census);

	auto *verify = app.add_subcommand("verify", "Run the verification suites");
	verify->add_option("files", o.positional, "Extra .lie files");
	verify->add_option("--suite", o.suites, "Suite selector (repeatable)")
	    ->delimiter(',')
	    ->allow_extra_args(false);
	verify->add_option("--algebra", o.algebras, "Restrict to corpus algebras")
	    ->delimiter(',')
	    ->allow_extra_args(false);
	verify->add_option("--seed", o.seed);
	verify->add_option("--degree", o.degree)->check(CLI::PositiveNumber);
	verify->add_flag("--inject-sign-error", o.inject_sign_error,
	                 "Test fixture: break the straightening rule");
	common(verify);

	std::reverse(args.begin(), args.end());
	try
	{
		app.parse(args);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e, out, err);
		return code == 0 ? 0 : 2;
	}

	try
	{
		if (check->parsed())
			return cmd_check(o, out);
		if (eval->parsed())
			return cmd_eval(o, out);
		if (prim->parsed())
			return cmd_primitives(o, out);
		if (mem->parsed())
			return cmd_membership(o, out);
		if (tower->parsed())
			return cmd_tower(o, out);
		if (census->parsed())
			return cmd_census(o, out);
		return cmd_verify(o, out);
	}
	catch (Error const &e)
	{
		err << "error: " << e.what() << "\n";
		return 2;
	}
}

} // namespace liehopf::cli
