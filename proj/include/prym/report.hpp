#pragma once

#include <json.hpp>

#include "prym/ks.hpp"

namespace prym {

inline constexpr const char* kToolVersion = "0.1.0";

/// Reference input over F_101: the six nodes and the three forms defining the
/// quartic.  The printed u3 may follow either normalization of the quadratic
/// split; ingestion settles that empirically (see resolve_convention).
struct Fixture {
    std::uint32_t prime;
    std::vector<std::vector<std::int64_t>> nodes;  // 6 x 4
    std::string u2, u3, u4;
};

const Fixture& reference_fixture();

/// "half": the stored u3 already is half the x3-coefficient (F = u2 x3^2 +
/// 2 u3 x3 + u4).  "full": the stored u3 is the whole coefficient, so the
/// model form is u3/2.  "auto" tries both and keeps the reading under which
/// every listed node of F and of the discriminant is singular.
struct ConventionResolution {
    std::string requested;   // half | full | auto
    std::string resolved;    // half | full (empty when neither works)
    bool ambiguous = false;  // both readings pass the gate
};

struct IngestResult {
    std::optional<QuarticModel> model;
    ConventionResolution convention;
    std::string error;  // non-empty when no reading produced a model
};

IngestResult ingest_model(std::uint32_t prime, const std::vector<std::vector<std::int64_t>>& nodes,
                          const std::string& u2, const std::string& u3, const std::string& u4,
                          const std::string& convention);

struct RunConfig {
    std::string command;          // verify-paper | certify | random | stage
    std::string stage;            // discriminant | canonical | ks-rank
    std::uint32_t prime = 101;
    std::uint64_t seed = 0;
    int max_tries = 50;
    std::string convention = "auto";  // u3 reading: auto | half | full
    std::string input_path;
    std::string output_path;
};

/// Exit codes: 0 certified, 1 a mathematical check failed, 2 input/usage error.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

nlohmann::json model_to_json(const QuarticModel& model);
IngestResult model_from_json(const nlohmann::json& j, const std::string& convention_override);

nlohmann::json cert_report_to_json(const CertReport& rep);
nlohmann::json ks_certificate_to_json(const KSCertificate& cert, const QuarticModel& model);
nlohmann::json canonical_curve_to_json(const CanonicalCurve& curve);

int run_verify_paper(const RunConfig& cfg, nlohmann::json& out);
int run_certify(const RunConfig& cfg, nlohmann::json& out);
int run_random(const RunConfig& cfg, nlohmann::json& out);
int run_stage(const RunConfig& cfg, nlohmann::json& out);

/// Full CLI: parses argv, dispatches, prints the report, honors --output.
int run_cli(int argc, const char* const* argv);

}  // namespace prym
