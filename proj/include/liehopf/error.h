#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liehopf {

enum class ErrorCode {
	UnknownSymbol,
	DuplicateBasisName,
	MalformedRational,
	ParseError,
	DimensionMismatch,
	AlgebraMismatch,
	NotAnIdeal,
	DependentModuloIdeal,
	ImagesNotALieMorphism,
	ClosureExceedsBound,
	WeightsNotAdditive,
	NonzeroConstantTerm,
	CounitNotOne,
	NotPrimitive,
	ResultOutsideAlgebra,
	ChainNotDecreasing,
	StageMismatch,
	NoStageContained,
	NotAbelian,
	NotCommutative,
	DegreeOutOfWindow,
	InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
  public:
	Error(ErrorCode code, std::string const &what)
	    : std::runtime_error(std::string(to_string(code)) + ": " + what),
	      code_(code)
	{}

	ErrorCode code() const noexcept { return code_; }

  private:
	ErrorCode code_;
};

// parse errors carry the 1-based source line (0 when not line-oriented)
class ParseError : public Error
{
  public:
	ParseError(ErrorCode code, int line, std::string const &what)
	    : Error(code, line > 0 ? "line " + std::to_string(line) + ": " + what
	                           : what),
	      line_(line)
	{}

	int line() const noexcept { return line_; }

  private:
	int line_;
};

} // namespace liehopf
