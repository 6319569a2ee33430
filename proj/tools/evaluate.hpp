#ifndef DEGEN_TOOLS_EVALUATE_HPP
#define DEGEN_TOOLS_EVALUATE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degen/eval_result.hpp"
#include "degen/polyexp.hpp"
#include "degen/quadrature.hpp"

namespace degen::cli
{

class UnknownFunction : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Bad or missing arguments; reported as a usage error.
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter name to its textual value ("1/2", "0.25", "inf", ...).
using ArgMap = std::map<std::string, std::string, std::less<>>;

struct FunctionInfo
{
    std::string_view name;
    // Parameters in column order; optional ones may be left out.
    std::vector<std::string_view> required;
    std::vector<std::string_view> optional;
    std::string_view summary;
};

const std::vector<FunctionInfo>& function_catalog();
// Throws UnknownFunction.
const FunctionInfo& function_info(std::string_view name);

struct Cell
{
    bool exact = false;
    // Rational or symbolic text when exact.
    std::string text;
    EvalResult numeric;
};

struct EvalOptions
{
    SeriesOptions series;
    QuadratureConfig quadrature;
};

// Evaluates one catalog function. Exact output whenever the inputs allow a
// finite rational answer. Throws DomainError, UnknownFunction, UsageError,
// ParseError, MaxTermsExceeded and MaxDepthExceeded.
Cell evaluate(std::string_view function, const ArgMap& args, const EvalOptions& opt = {});

std::string format_numeric(double v, int digits);
// RFC 4180 quoting: fields holding a comma, quote or line break are quoted.
std::string csv_field(const std::string& s);

} // namespace degen::cli

#endif
