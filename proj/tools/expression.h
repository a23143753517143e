#pragma once

#include "liehopf/abelian_dual.h"
#include "liehopf/pbw.h"
#include "liehopf/truncation.h"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace liehopf::cli {

enum class Mode { Pbw, Trunc, Abelian, A2 };

Mode parse_mode(std::string_view s);
std::string_view to_string(Mode m);

/// A function on (Q^d)^blocks.
struct FnValue
{
	ExpPolyFunction f;
	int blocks = 1;
};

using Value = std::variant<Rational, PbwElement, TensorElement, FnValue, A2Element>;

/// Everything an expression may refer to. `algebra` is unused in a2 mode.
class EvalContext
{
  public:
	/// Throws WeightsNotAdditive / InvalidArgument when trunc mode cannot be
	/// set up (missing weights are taken as all 1).
	EvalContext(Mode mode, LieDocument doc, int cutoff = 4);
	explicit EvalContext(Mode mode) : EvalContext(mode, LieDocument{}) {}

	Mode mode() const { return mode_; }
	LieAlgebra const &algebra() const { return doc_.algebra; }
	Envelope const &envelope() const { return *E_; }
	GradedTruncation const &truncation() const { return *T_; }

	Value evaluate(std::string_view expr) const;

	std::string format(Value const &v) const;
	nlohmann::json to_json(Value const &v) const;

  private:
	Mode mode_;
	LieDocument doc_;
	std::unique_ptr<Envelope> E_;
	std::unique_ptr<GradedTruncation> T_;
};

/// Parses an element of U(L) in pbw mode (used by membership and friends).
PbwElement parse_element(LieDocument const &doc, std::string_view expr);

} // namespace liehopf::cli
