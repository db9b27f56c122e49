#pragma once

#include "rde/core_model.hpp"
#include "rde/simulate.hpp"
#include "rde/theorems.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rde {

struct ParsedDocument {
    RationalSystem system;
    std::vector<ComparabilityFact> user_facts;
    std::optional<InitialConditions> init;
};

struct ParseOutcome {
    std::optional<ParsedDocument> doc;            // present iff violations empty
    std::vector<std::string> violations;          // "<json-pointer>: message"
};

/// Parses a system-definition document. Numbers are read as exact decimals
/// (never through a binary float). Unknown keys are rejected.
ParseOutcome parse_system(const std::string& text);

/// Canonical serialization: every parameter group written explicitly, fixed
/// key order, exact decimal number rendering.
std::string serialize_system(const ParsedDocument& doc);

/// Stand-alone initial-conditions document {"x": [...], "y": [...]}.
ParseOutcome parse_init_only(const std::string& text, int k);

std::string report_json(const AnalysisReport& report);
std::string report_text(const AnalysisReport& report);

/// Full command-line surface; argv excludes the program name. Returns the
/// exit code (0 ok, 1 violations found, 2 input error).
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace rde
