#pragma once

#include "rde/core_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rde {

/// Inequality shapes linking the two sequences. Read in the direct
/// orientation as:
///   OneSidedLinear:  y_n <= M1 * x_n
///   TwoSidedLinear:  M1 * y_n <= x_n <= M2 * y_n
///   OneSidedAffine:  y_n <= M1 * x_n + M2
///   TwoSidedAffine:  x_n <= M1 * y_n + M2 <= M3 * x_n + M4
/// Swapped orientation exchanges the roles of x and y.
enum class FactShape { OneSidedLinear, TwoSidedLinear, OneSidedAffine, TwoSidedAffine };

enum class Orientation { Direct, Swapped };

enum class Provenance { Theorem24, Theorem25, Theorem26, Theorem27, UserAsserted, Empirical, Derived };

struct ComparabilityFact {
    FactShape shape;
    Orientation orientation = Orientation::Direct;
    /// True when the inequality is known to hold for *some* constants that
    /// are not computed; `constants` is then empty.
    bool existential = false;
    /// M1, M2, ... in shape order (1, 2, 2 or 4 entries).
    std::vector<Rational> constants;
    /// TwoSidedAffine only: M4 > M2 > 0 (as opposed to M4 >= M2 >= 0).
    bool strict_affine = false;
    /// Constants were padded (+1 to M2, +2 to M4) to reach the strict form.
    bool padded = false;
    Provenance provenance = Provenance::Derived;
    std::string note;
};

/// Flip orientation; the constants carry over unchanged because the
/// inequality text itself is reinterpreted with x and y exchanged.
ComparabilityFact flip(const ComparabilityFact& fact);

/// At most one fact per (shape, orientation).
class ComparabilityFacts {
public:
    const std::vector<ComparabilityFact>& items() const { return items_; }
    const ComparabilityFact* find(FactShape shape, Orientation orientation) const;
    /// Insert if the slot is free; returns false (no change) otherwise.
    bool insert(ComparabilityFact fact);
    /// Replace or insert.
    void put(ComparabilityFact fact);
    ComparabilityFacts flipped() const;

private:
    std::vector<ComparabilityFact> items_;
};

/// Direct-orientation checks of the four comparability theorems. Each
/// returns a fact iff the theorem's hypotheses hold; constants are the
/// trajectory-independent eventual bounds from the proofs, or existential
/// when a case formula has an empty aggregate.
std::optional<ComparabilityFact> check_thm24(const RationalSystem& sys);
std::optional<ComparabilityFact> check_thm25(const RationalSystem& sys);
std::optional<ComparabilityFact> check_thm26(const RationalSystem& sys);
std::optional<ComparabilityFact> check_thm27(const RationalSystem& sys);

/// Returns a strict two-sided-affine view of `fact`: unchanged if already
/// strict, otherwise padded (+1 to M2, +2 to M4) per the worked example that
/// introduces this normalization.
ComparabilityFact strict_affine_view(const ComparabilityFact& fact);

/// Runs all four checks on sys and on swap_system(sys), merges user facts
/// (user constants win; a theorem covering the same slot keeps its
/// provenance), and closes under the shape implications (two-sided linear
/// gives both one-sided orientations, affine facts weaken likewise).
ComparabilityFacts derive_comparability(const RationalSystem& sys,
                                        const std::vector<ComparabilityFact>& user_facts = {});

std::string shape_name(FactShape shape);
std::string orientation_name(Orientation o);
std::string provenance_name(Provenance p);

}  // namespace rde
