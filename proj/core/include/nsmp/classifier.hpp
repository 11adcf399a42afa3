#ifndef NSMP_CLASSIFIER_HPP
#define NSMP_CLASSIFIER_HPP

#include "nsmp/engine.hpp"
#include "nsmp/spattern.hpp"
#include "nsmp/transform.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsmp {

enum class AllowVerdict { Allows, DoesNotAllow };
enum class RequireVerdict { Requires, DoesNotRequire, Unknown };

std::string to_string(AllowVerdict v);
std::string to_string(RequireVerdict v);

struct RefutationBudget {
    std::size_t samples = 200;
    std::uint64_t seed = 1;
};

/// A realization together with a verified nonzero solution of the property
/// system, certifying that the realization lacks the property.
struct Refutation {
    RationalMatrix realization;
    RationalMatrix witness;
};

struct Classification {
    AllowVerdict allow_verdict = AllowVerdict::Allows;
    RequireVerdict require_verdict = RequireVerdict::Unknown;
    /// Rule tags in firing order; the last conclusive tag decided the verdict.
    std::vector<std::string> provenance;
    /// Present for most DoesNotRequire verdicts; digraph-theoretic rules may
    /// conclude without one.
    std::optional<Refutation> refutation;

    bool operator==(const Classification&) const = default;
};

/// Exact and total: Allows iff the largest composite cycle length is at
/// least n - 1.
AllowVerdict allows_nsmp(const SignPattern& p);

/// Rule cascade over the structural criteria, the small-order tables, the
/// reducible direct-sum rules and, last, randomized refutation. Unknown is
/// an honest output for n >= 4 outside all rule classes.
Classification requires_nsmp(const SignPattern& p, const RefutationBudget& budget = {});

/// Rejection-samples realizations until the characteristic polynomial is
/// squarefree (so the matrix has distinct eigenvalues and the property).
/// none when the pattern does not allow the property or the budget runs out.
std::optional<RationalMatrix> construct_distinct_realization(const SignPattern& p,
                                                             std::uint64_t seed,
                                                             std::size_t budget);

/// Targeted plus randomized search for a realization lacking the property.
/// Tries the all-unit realization, eigenvalue coincidences across diagonal
/// blocks, then stratified random samples.
std::optional<Refutation> witness_search(const SignPattern& p, std::size_t samples,
                                         std::uint64_t seed);

/// The relaxed-pattern templates for the order-3 reducible classification:
/// fixed signings of requires_templates require the property, fixed signings
/// of allows_templates allow but do not require it.
struct TemplateLibrary {
    std::vector<SPattern> requires_templates;
    std::vector<SPattern> allows_templates;
    static const TemplateLibrary& instance();
};

/// True iff some image of P under the equivalence group is a fixed signing
/// of T. P and T must be of equal (small) order.
bool orbit_matches_template(const SignPattern& p, const SPattern& t);

struct ClassifiedPattern {
    SignPattern pattern;
    SignPattern canonical;
    std::size_t orbit_size = 1;  // 1 when every pattern is listed individually
    Classification classification;
};

struct ClassificationSummary {
    std::size_t n = 0;
    std::vector<ClassifiedPattern> rows;
    std::map<std::pair<AllowVerdict, RequireVerdict>, std::size_t> verdict_counts;
    std::map<std::string, std::size_t> rule_counts;  // deciding rule per pattern
    std::size_t total_patterns = 0;
};

/// Classifies all 3^(n*n) sign patterns of order n <= 3, or one canonical
/// representative per equivalence orbit when orbits_only is set.
ClassificationSummary classify_all(std::size_t n, const RefutationBudget& budget = {},
                                   bool orbits_only = false);

struct HypothesisViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FigureKind { Fig1Left, Fig1Right, Fig2, Star2Attach, Star3Attach, Cnk };

/// Builds the fixed constructions (Fig1Left, Fig1Right, Fig2, Cnk) or wires
/// a pendant-star gadget onto vertex 1 of the input pattern (Star2Attach,
/// Star3Attach). Throws HypothesisViolated when the composite-cycle
/// hypothesis on the input fails.
SignPattern build_figure_construction(FigureKind kind,
                                      const std::optional<SignPattern>& input = std::nullopt,
                                      std::size_t n = 0);

}  // namespace nsmp

#endif
