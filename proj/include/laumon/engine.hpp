#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "laumon/calogero.hpp"
#include "laumon/geometry.hpp"
#include "laumon/params.hpp"

#include "json.hpp"

namespace laumon {

// The full set of convention switches the text leaves implicit, resolved
// once against the convention-insensitive checks and then frozen.
struct ConventionLedger {
    GeomConventions geom;
    CalogeroVariant calogero = CalogeroVariant::CharacterLoopN;

    std::string str() const;
    static ConventionLedger parse(const std::string& s);
};

struct LedgerEvidence {
    ConventionLedger ledger;
    bool pass_m0 = false;
    bool pass_n1 = false;
    bool pass_n2 = false;
    std::string detail;
};

struct LedgerResolution {
    ConventionLedger resolved;
    std::vector<LedgerEvidence> evidence;
};

// Iterates the finite ledger and returns the unique combination that passes
// (i) the m=0 degeneration, (ii) the n=1 degree-1 localization/eigenfunction
// cross-check, (iii) the n=2 degree-1 cross-check (pins the q/q' swap, which
// is invisible at n=1). Throws NonGenericError if zero or several survive.
LedgerResolution resolve_ledger(unsigned seed);

struct RunConfig {
    int n = 1;
    int D = 2;
    Rational m = Rational(0);
    std::vector<Rational> xi;
    Rational eta = Rational(1, 2);
    std::string mode = "verify";  // localization | eigen | verma | verify
    std::optional<ConventionLedger> ledger;  // absent -> resolve automatically
    unsigned seed = 1;
    std::string out_path;
};

struct CheckRecord {
    std::string name;
    bool pass = false;
    std::string lhs, rhs;
    std::string degree;
};

struct Report {
    RunConfig config;
    ConventionLedger ledger;
    std::vector<std::pair<std::string, TruncatedSeries>> series;
    std::vector<CheckRecord> checks;
    std::vector<LedgerEvidence> ledger_evidence;
    nlohmann::json extra = nlohmann::json::object();  // mode-specific payloads
    double seconds = 0.0;

    bool all_pass() const;
    nlohmann::json to_json() const;
};

Report run(const RunConfig& config);

// Small-rational draws (|p|, q <= 20) for randomized suites.
Rational random_rational(std::mt19937_64& rng, bool nonzero = false);
EquivParams random_params(std::mt19937_64& rng, int n, const Rational& m);

// JSON encoders shared by the report and the CLI.
class Intertwiner;
nlohmann::json series_to_json(const TruncatedSeries& s);
nlohmann::json intertwiner_blocks_to_json(const Intertwiner& phi, int D);
nlohmann::json fixed_point_to_json(const FixedPoint& fp);
nlohmann::json character_to_json(const CharacterPolynomial& chi);
nlohmann::json eigen_to_json(const EigenData& e);

} // namespace laumon
