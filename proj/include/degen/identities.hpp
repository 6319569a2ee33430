#ifndef DEGEN_IDENTITIES_HPP
#define DEGEN_IDENTITIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degen/rational.hpp"

namespace degen
{

enum class CheckMode
{
    exact,
    numeric,
};

std::string_view to_string(CheckMode m);

struct SamplePoint
{
    // Parameter name and value, in the order the checker lists them.
    std::vector<std::pair<std::string, std::string>> params;
    std::string residual;
    bool ok = false;
    // Set when the point lies outside the identity's domain; such points
    // are reported but neither pass nor fail.
    std::optional<std::string> domain_error;
};

struct IdentityReport
{
    std::string identity_id;
    CheckMode mode = CheckMode::exact;
    std::vector<SamplePoint> sample_points;
    std::string max_residual;
    bool passed = false;
};

// Stated tolerances for numeric checks.
inline constexpr double kSeriesTolerance = 1e-10;
inline constexpr double kQuadratureTolerance = 1e-8;
inline constexpr double kFiniteDifferenceTolerance = 1e-6;

struct CheckContext
{
    std::uint64_t seed = 7;
    // Replaces the checker's own lambda sample set when present.
    std::optional<Rational> lambda;
    // Added to one constant inside the checked formula (negative controls).
    double perturb = 0.0;
};

using IdentityCheck = IdentityReport (*)(const CheckContext&);

struct RegisteredCheck
{
    std::string_view id;
    std::string_view summary;
    IdentityCheck run;
};

// All checks, sorted by id.
std::span<const RegisteredCheck> identity_registry();
const RegisteredCheck* find_check(std::string_view id);

// Runs the named checks (all when ids is empty) and returns the reports
// sorted by id. Throws std::invalid_argument for an unknown id.
std::vector<IdentityReport> run_checks(const std::vector<std::string>& ids, const CheckContext& ctx,
                                       bool parallel = true);

} // namespace degen

#endif
