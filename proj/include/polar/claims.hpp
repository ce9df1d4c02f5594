#ifndef POLAR_CLAIMS_HPP
#define POLAR_CLAIMS_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace polar {

enum class ClaimStatus { Pass, Fail, NotApplicable };

std::string_view to_string(ClaimStatus s);

using ParamValue = std::variant<long, std::string>;
using ClaimParams = std::vector<std::pair<std::string, ParamValue>>;

/// Verdict for one published identity at one parameter point. lhs is the
/// ground-truth side computed from the constructed objects, rhs the published
/// side; status is Pass exactly when the two renderings agree.
struct ClaimResult {
    std::string claim;
    ClaimParams params;
    ClaimStatus status = ClaimStatus::NotApplicable;
    std::string lhs;
    std::string rhs;
    std::string note;
};

/// Equation labels the auditor covers; every one appears in a full report.
const std::vector<std::string>& registered_claims();

/// Evaluates every registered identity over its natural index range up to
/// max_n (>= 4). Sorted by (claim, params); byte-identical across runs.
std::vector<ClaimResult> run_claims(int max_n);

}  // namespace polar

#endif  // POLAR_CLAIMS_HPP
