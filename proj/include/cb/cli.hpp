#pragma once

// Command-line front end: manifold-expression and Gram-file parsing,
// report structs with text and JSON rendering, and the command runners
// behind the classify / cohomology / survey / s2-bundle / spin-class
// subcommands.

#include "cb/classify.hpp"
#include "cb/exactalg.hpp"
#include "cb/fourmanifold.hpp"
#include "cb/gysin.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cb::cli {

using json = nlohmann::json;

// Grammar: expr := term ('#' term)*; term := [count '*']? block;
// block in {CP2, -CP2, S2xS2, E8, -E8, K3}, case-insensitive.
FourManifold parse_manifold_expression(const std::string& text);

// Plain text format: first line the dimension n, then n rows of n
// whitespace-separated integers. Validated symmetric and |det| = 1.
FourManifold read_gram_file(const std::string& path);

// Comma- or whitespace-separated integer list, e.g. "1,0,-2".
std::vector<Int> parse_integer_vector(const std::string& text);

struct ManifoldSummary {
    std::string label;
    std::size_t rank = 0;
    long long signature = 0;
    bool even = false;
    Mod2Vector wu;

    bool operator==(const ManifoldSummary&) const = default;
};

ManifoldSummary summarize(const FourManifold& m);

struct ClassifyReport {
    ManifoldSummary manifold;
    std::vector<Int> alpha;
    Int divisibility;
    // Absent when alpha is not primitive.
    std::optional<FiveManifoldType> result;

    bool operator==(const ClassifyReport&) const = default;
};

struct CohomologyReport {
    ManifoldSummary manifold;
    std::vector<Int> alpha;
    Int divisibility;
    CohomologyProfile profile;

    bool operator==(const CohomologyReport&) const = default;
};

struct SurveyReport {
    ManifoldSummary manifold;
    long long bound = 0;
    std::size_t primitive_count = 0;
    // Outcomes in fixed order (spin family first), zero counts omitted.
    std::vector<std::pair<FiveManifoldType, std::size_t>> outcomes;

    bool operator==(const SurveyReport&) const = default;
};

struct SpinClassReport {
    ManifoldSummary manifold;
    std::vector<Int> alpha;
    FiveManifoldType result;

    bool operator==(const SpinClassReport&) const = default;
};

ClassifyReport run_classify(const FourManifold& m, const EulerClass& alpha);
CohomologyReport run_cohomology(const FourManifold& m, const EulerClass& alpha);
SurveyReport run_survey(const FourManifold& m, long long bound);
SpinClassReport run_spin_class(const FourManifold& m);

// S^2 x S^1 for p = 0, S^3 for |p| = 1, L(|p|,1) otherwise.
std::string s2_bundle_total_space(long long p);

json to_json(const ClassifyReport& r);
json to_json(const CohomologyReport& r);
json to_json(const SurveyReport& r);
json to_json(const SpinClassReport& r);

ClassifyReport classify_report_from_json(const json& j);
CohomologyReport cohomology_report_from_json(const json& j);
SurveyReport survey_report_from_json(const json& j);
SpinClassReport spin_class_report_from_json(const json& j);

std::string to_text(const ClassifyReport& r);
std::string to_text(const CohomologyReport& r);
std::string to_text(const SurveyReport& r);
std::string to_text(const SpinClassReport& r);

// Exit codes shared by the CLI: 2 parse/validation failure,
// 3 non-primitive Euler class in classify.
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNonPrimitive = 3;

int run_main(int argc, char** argv);

}  // namespace cb::cli
