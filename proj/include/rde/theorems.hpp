#pragma once

#include "rde/comparability.hpp"
#include "rde/core_model.hpp"
#include "rde/eta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rde {

enum class SignReq { Any, Zero, Positive };

/// The eight base lag sets.
enum class BaseSet { Beta, Gamma, Delta, Epsilon, B, C, D, E };

/// a, optionally union b, where b may have a subtrahend: a u (b \ minus_b).
struct SetExpr {
    BaseSet a;
    std::optional<BaseSet> b;
    std::optional<BaseSet> minus_b;

    IndexSet eval(const SystemIndexSets& is) const;
    std::string name() const;
};

enum class Conclusion { BothBounded, XBounded, YBounded };

/// External boundedness knowledge a row may require about the y sequence.
enum class BoundInput { None, YAbove, YAboveAndBelow };

struct CompRequirement {
    FactShape shape;
    bool strict = false;  // two-sided affine rows needing M4 > M2 > 0
};

struct TheoremRow {
    int id = 0;
    std::string case_id;  // "", "i", "ii", "iii"
    SignReq alpha = SignReq::Any, A = SignReq::Any, p = SignReq::Any, q = SignReq::Any;
    std::vector<std::pair<SetExpr, SetExpr>> subsets;  // lhs subset of rhs
    std::vector<SetExpr> nonempty;
    std::vector<std::pair<SetExpr, SetExpr>> eta;  // (source, target)
    std::optional<CompRequirement> comparability;
    BoundInput bound_input = BoundInput::None;
    Conclusion conclusion = Conclusion::BothBounded;
    std::string note;
};

/// All 23 hypothesis rows, multi-case statements expanded (36 rows total),
/// ordered by (id, case).
const std::vector<TheoremRow>& theorem_table();

struct EtaEvidence {
    std::string source_name, target_name;
    IndexSet source, target;
    EtaDecision decision;
};

/// How a bound-input requirement was met.
enum class Rigor { Rigorous, UserAsserted, Empirical };

struct TheoremApplication {
    int id = 0;
    std::string case_id;
    Orientation orientation = Orientation::Direct;
    Conclusion conclusion = Conclusion::BothBounded;  // already re-oriented
    std::vector<ComparabilityFact> facts_used;
    std::vector<EtaEvidence> eta_evidence;
    Rigor rigor = Rigor::Rigorous;
    std::vector<std::string> inputs_from;  // e.g. "theorem 10(iii) direct"
    std::string note;
};

/// Boundedness knowledge asserted from outside the engine (per original
/// orientation); `source` distinguishes user assertions from empirical
/// simulator verdicts for rigor marking.
struct AssertedBounds {
    bool x_above = false, x_below = false;
    bool y_above = false, y_below = false;
    Rigor source = Rigor::UserAsserted;
};

struct AnalysisReport {
    RationalSystem system;
    ComparabilityFacts facts;  // original orientation
    std::vector<TheoremApplication> applications;
    bool x_proven = false, y_proven = false;
    Rigor x_rigor = Rigor::Rigorous, y_rigor = Rigor::Rigorous;
    std::vector<std::string> notes;
};

/// Evaluates one row against a system given in the row's own frame; `facts`
/// and `prior` must already be expressed in that frame.
std::optional<TheoremApplication> evaluate_theorem(const RationalSystem& sys,
                                                   const TheoremRow& row,
                                                   const ComparabilityFacts& facts,
                                                   const std::vector<TheoremApplication>& prior,
                                                   const AssertedBounds& bounds = {});

AnalysisReport analyze(const RationalSystem& sys,
                       const std::vector<ComparabilityFact>& user_facts = {},
                       const AssertedBounds& bounds = {});

std::string conclusion_name(Conclusion c);
std::string rigor_name(Rigor r);

}  // namespace rde
