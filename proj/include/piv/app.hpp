#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "piv/painleve.hpp"
#include "piv/types.hpp"

namespace piv::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitSingular = 2;
inline constexpr int kExitUsage = 64;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Command { Solve, Paramspace, Verify };
enum class Format { Csv, Json };

struct RunConfig {
    Command command = Command::Solve;
    std::optional<Real> epsilon1;
    std::optional<Real> nu;
    std::optional<Real> lambda_re;
    std::optional<Real> lambda_im;
    int k = 1;
    int family = 1;
    Real x_lo = -5.0;  ///< x interval for solve/verify, epsilon_1 interval for paramspace
    Real x_hi = 5.0;
    int samples = 201;
    int k_max = 3;
    std::string out;
    Format format = Format::Csv;
    bool strict = false;
    std::string battery;  ///< verify: "default", "single" or "none"; empty picks by flags
    Real b_shift = 0.0;   ///< verify: offset added to b before checking residuals

    /// Throws UsageError on inconsistent settings.
    void validate() const;
    bool has_seed() const noexcept;
    /// Seed from epsilon1 and exactly one of nu or (lambda_re, lambda_im).
    SeedSpec seed_spec() const;
};

struct CommandOutput {
    int exit_code = kExitOk;
    std::string body;        ///< file contents (CSV or JSON)
    std::string diagnostic;  ///< human-readable notes for stderr
};

/// Shortest-round-trip decimal with at most 17 significant digits.
std::string format_number(Real v);

CommandOutput cmd_solve(const RunConfig& config);
CommandOutput cmd_paramspace(const RunConfig& config);
CommandOutput cmd_verify(const RunConfig& config);
CommandOutput run(const RunConfig& config);

struct ParamRecord {
    int family = 1;
    int k = 1;
    Real epsilon1 = 0.0;
    Real a = 0.0;
    Real b = 0.0;
    HierarchyTag hierarchy = HierarchyTag::ConfluentHypergeometric;
    std::string regime;  ///< "real" or "complex"
    std::string kind;    ///< "curve" or "marker"
};

/// One-parameter curves (a_i(eps), b_i(eps)) for every family and k <= k_max,
/// plus hierarchy markers at the special energies inside [eps_lo, eps_hi].
std::vector<ParamRecord> parameter_space(int k_max, Real eps_lo, Real eps_hi, int n);

struct BatteryEntry {
    std::string name;
    SeedSpec spec;
    Real b_shift = 0.0;
};

/// Specs spanning all families, k = 1..3, real and complex regimes.
std::vector<BatteryEntry> default_battery();

struct SuiteResult {
    std::string name;
    bool pass = true;
    Real max_relative = 0.0;
    int points = 0;
    int skipped = 0;
};

struct EntryReport {
    BatteryEntry entry;
    std::vector<SuiteResult> suites;
    bool pass() const noexcept;
};

EntryReport verify_entry(const BatteryEntry& entry, Real x_lo, Real x_hi, int samples);

}  // namespace piv::app
