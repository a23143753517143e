#include "liehopf/rational.h"

#include "liehopf/error.h"

#include <cctype>

namespace liehopf {

std::string_view to_string(ErrorCode code)
{
	switch (code)
	{
	case ErrorCode::UnknownSymbol: return "UnknownSymbol";
	case ErrorCode::DuplicateBasisName: return "DuplicateBasisName";
	case ErrorCode::MalformedRational: return "MalformedRational";
	case ErrorCode::ParseError: return "ParseError";
	case ErrorCode::DimensionMismatch: return "DimensionMismatch";
	case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
	case ErrorCode::NotAnIdeal: return "NotAnIdeal";
	case ErrorCode::DependentModuloIdeal: return "DependentModuloIdeal";
	case ErrorCode::ImagesNotALieMorphism: return "ImagesNotALieMorphism";
	case ErrorCode::ClosureExceedsBound: return "ClosureExceedsBound";
	case ErrorCode::WeightsNotAdditive: return "WeightsNotAdditive";
	case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
	case ErrorCode::CounitNotOne: return "CounitNotOne";
	case ErrorCode::NotPrimitive: return "NotPrimitive";
	case ErrorCode::ResultOutsideAlgebra: return "ResultOutsideAlgebra";
	case ErrorCode::ChainNotDecreasing: return "ChainNotDecreasing";
	case ErrorCode::StageMismatch: return "StageMismatch";
	case ErrorCode::NoStageContained: return "NoStageContained";
	case ErrorCode::NotAbelian: return "NotAbelian";
	case ErrorCode::NotCommutative: return "NotCommutative";
	case ErrorCode::DegreeOutOfWindow: return "DegreeOutOfWindow";
	case ErrorCode::InvalidArgument: return "InvalidArgument";
	}
	return "Unknown";
}

namespace {

bool all_digits(std::string_view s)
{
	if (s.empty())
		return false;
	for (char c : s)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
	std::string_view body = text;
	bool negative = false;
	if (!body.empty() && (body.front() == '-' || body.front() == '+'))
	{
		negative = body.front() == '-';
		body.remove_prefix(1);
	}
	auto slash = body.find('/');
	std::string_view num = body.substr(0, slash);
	std::string_view den =
	    slash == std::string_view::npos ? "1" : body.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw Error(ErrorCode::MalformedRational,
		            "'" + std::string(text) + "'");
	mpz_class n(std::string(num), 10);
	mpz_class d(std::string(den), 10);
	if (d == 0)
		throw Error(ErrorCode::MalformedRational,
		            "zero denominator in '" + std::string(text) + "'");
	Rational q(n, d);
	q.canonicalize();
	return negative ? Rational(-q) : q;
}

std::string to_string(Rational const &q)
{
	if (q.get_den() == 1)
		return q.get_num().get_str();
	return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace liehopf
