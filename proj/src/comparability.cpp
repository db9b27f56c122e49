#include "rde/comparability.hpp"

#include <cassert>

namespace rde {

namespace {

// max / min over {scalar if > 0} and {coeffs[i-1] : i in lags}; lags only
// contain positive entries by construction. Empty aggregate -> nullopt.
std::optional<Rational> max_plus(const Rational& scalar, const CoefficientVector& coeffs,
                                 const IndexSet& lags) {
    std::optional<Rational> best;
    if (scalar > 0) best = scalar;
    for (int i : lags.members()) {
        const Rational& v = coeffs[i - 1];
        if (!best || v > *best) best = v;
    }
    return best;
}

std::optional<Rational> min_plus_over(const Rational& scalar, const CoefficientVector& coeffs,
                                      const IndexSet& lags) {
    std::optional<Rational> best;
    if (scalar > 0) best = scalar;
    for (int i : lags.members()) {
        const Rational& v = coeffs[i - 1];
        if (!best || v < *best) best = v;
    }
    return best;
}

CoefficientVector entrywise_sum(const CoefficientVector& a, const CoefficientVector& b) {
    CoefficientVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

ComparabilityFact flip(const ComparabilityFact& fact) {
    ComparabilityFact out = fact;
    out.orientation =
        fact.orientation == Orientation::Direct ? Orientation::Swapped : Orientation::Direct;
    return out;
}

const ComparabilityFact* ComparabilityFacts::find(FactShape shape, Orientation orientation) const {
    for (const auto& f : items_)
        if (f.shape == shape && f.orientation == orientation) return &f;
    return nullptr;
}

bool ComparabilityFacts::insert(ComparabilityFact fact) {
    if (find(fact.shape, fact.orientation)) return false;
    items_.push_back(std::move(fact));
    return true;
}

void ComparabilityFacts::put(ComparabilityFact fact) {
    for (auto& f : items_) {
        if (f.shape == fact.shape && f.orientation == fact.orientation) {
            f = std::move(fact);
            return;
        }
    }
    items_.push_back(std::move(fact));
}

ComparabilityFacts ComparabilityFacts::flipped() const {
    ComparabilityFacts out;
    for (const auto& f : items_) out.items_.push_back(flip(f));
    return out;
}

std::optional<ComparabilityFact> check_thm24(const RationalSystem& sys) {
    SystemIndexSets is = index_sets(sys);
    bool hyp = is.delta.subset_of(is.beta) && is.B.subset_of(is.D) &&
               is.epsilon.subset_of(is.gamma) && is.C.subset_of(is.E) &&
               (sys.x_den_const == 0 || sys.y_den_const > 0) &&
               (sys.y_num_const == 0 || sys.x_num_const > 0);
    if (!hyp) return std::nullopt;

    ComparabilityFact fact;
    fact.shape = FactShape::OneSidedLinear;
    fact.provenance = Provenance::Theorem24;

    // Uniform case formula: the x-denominator and y-denominator aggregates
    // are never empty for a valid system; the other two can be.
    auto num1 = max_plus(sys.x_den_const, sys.x_den_x, is.B);
    if (num1) {
        auto c_part = max_plus(0, sys.x_den_y, is.C);
        if (c_part && *c_part > *num1) num1 = c_part;
    } else {
        num1 = max_plus(0, sys.x_den_y, is.C);
    }
    auto num2 = max_plus(sys.y_num_const, sys.y_num_x, is.delta);
    {
        auto e_part = max_plus(0, sys.y_num_y, is.epsilon);
        if (e_part && (!num2 || *e_part > *num2)) num2 = e_part;
    }
    auto den1 = min_plus_over(sys.x_num_const, sys.x_num_x, is.beta);
    {
        auto g_part = min_plus_over(0, sys.x_num_y, is.gamma);
        if (g_part && (!den1 || *g_part < *den1)) den1 = g_part;
    }
    auto den2 = min_plus_over(sys.y_den_const, sys.y_den_x, is.D);
    {
        auto e_part = min_plus_over(0, sys.y_den_y, is.E);
        if (e_part && (!den2 || *e_part < *den2)) den2 = e_part;
    }

    if (num1 && num2 && den1 && den2) {
        fact.constants = {*num1 * *num2 / (*den1 * *den2)};
    } else {
        fact.existential = true;
        fact.note = "constant formula has an empty aggregate; bound exists but is not computed";
    }
    return fact;
}

std::optional<ComparabilityFact> check_thm25(const RationalSystem& sys) {
    SystemIndexSets is = index_sets(sys);
    bool hyp = is.beta == is.delta && is.B == is.D && is.gamma == is.epsilon && is.C == is.E &&
               (sys.x_num_const > 0) == (sys.y_num_const > 0) &&
               (sys.x_den_const > 0) == (sys.y_den_const > 0);
    if (!hyp) return std::nullopt;

    auto direct = check_thm24(sys);
    auto swapped = check_thm24(swap_system(sys));
    assert(direct && swapped);  // implied by the equalities above

    ComparabilityFact fact;
    fact.shape = FactShape::TwoSidedLinear;
    fact.provenance = Provenance::Theorem25;
    if (direct->existential || swapped->existential) {
        fact.existential = true;
    } else {
        Rational m3 = direct->constants[0];   // y <= m3 x
        Rational m2 = swapped->constants[0];  // x <= m2 y
        fact.constants = {Rational(1) / m3, m2};
    }
    return fact;
}

std::optional<ComparabilityFact> check_thm26(const RationalSystem& sys) {
    SystemIndexSets is = index_sets(sys);
    IndexSet beta_or_B = set_union(is.beta, is.B);
    IndexSet gamma_or_C = set_union(is.gamma, is.C);
    bool hyp = is.delta.subset_of(beta_or_B) && is.B.subset_of(is.D) &&
               is.epsilon.subset_of(gamma_or_C) && is.C.subset_of(is.E) &&
               (sys.x_den_const == 0 || sys.y_den_const > 0) &&
               (sys.y_num_const == 0 || sys.x_num_const > 0 || sys.x_den_const > 0);
    if (!hyp) return std::nullopt;

    ComparabilityFact fact;
    fact.shape = FactShape::OneSidedAffine;
    fact.provenance = Provenance::Theorem26;
    fact.note = "eventual bound";

    auto num1 = max_plus(sys.x_den_const, sys.x_den_x, is.B);
    {
        auto c_part = max_plus(0, sys.x_den_y, is.C);
        if (c_part && (!num1 || *c_part > *num1)) num1 = c_part;
    }
    auto num2 = max_plus(sys.y_num_const, sys.y_num_x, is.delta);
    {
        auto e_part = max_plus(0, sys.y_num_y, is.epsilon);
        if (e_part && (!num2 || *e_part > *num2)) num2 = e_part;
    }
    // denominators are the combined-coefficient minima
    auto den1 = min_plus_over(sys.x_num_const + sys.x_den_const,
                              entrywise_sum(sys.x_num_x, sys.x_den_x), beta_or_B);
    {
        auto g_part = min_plus_over(0, entrywise_sum(sys.x_num_y, sys.x_den_y), gamma_or_C);
        if (g_part && (!den1 || *g_part < *den1)) den1 = g_part;
    }
    auto den2 = min_plus_over(sys.y_den_const, sys.y_den_x, is.D);
    {
        auto e_part = min_plus_over(0, sys.y_den_y, is.E);
        if (e_part && (!den2 || *e_part < *den2)) den2 = e_part;
    }

    if (num1 && num2 && den1 && den2) {
        Rational m1 = *num1 * *num2 / (*den1 * *den2);
        fact.constants = {m1, m1};  // y <= M1 (x + 1)
    } else {
        fact.existential = true;
        fact.note = "constant formula has an empty aggregate; bound exists but is not computed";
    }
    return fact;
}

std::optional<ComparabilityFact> check_thm27(const RationalSystem& sys) {
    SystemIndexSets is = index_sets(sys);
    bool hyp = is.delta.subset_of(set_union(is.beta, is.B)) &&
               is.beta.subset_of(set_union(is.delta, is.D)) && is.B == is.D &&
               is.epsilon.subset_of(set_union(is.gamma, is.C)) &&
               is.gamma.subset_of(set_union(is.epsilon, is.E)) && is.C == is.E &&
               (sys.x_den_const > 0) == (sys.y_den_const > 0) &&
               (sys.y_num_const == 0 || sys.x_num_const > 0 || sys.x_den_const > 0) &&
               (sys.x_num_const == 0 || sys.y_num_const > 0 || sys.y_den_const > 0);
    if (!hyp) return std::nullopt;

    auto direct = check_thm26(sys);                // y <= M5 x + M6
    auto swapped = check_thm26(swap_system(sys));  // x <= M1 y + M2
    assert(direct && swapped);                     // implied by the hypotheses above

    ComparabilityFact fact;
    fact.shape = FactShape::TwoSidedAffine;
    fact.provenance = Provenance::Theorem27;
    fact.note = "eventual bound";
    if (direct->existential || swapped->existential) {
        fact.existential = true;
    } else {
        Rational m5 = direct->constants[0], m6 = direct->constants[1];
        Rational m1 = swapped->constants[0], m2 = swapped->constants[1];
        fact.constants = {m1, m2, m1 * m5, m1 * m6 + m2};
        fact.strict_affine = fact.constants[3] > fact.constants[1] && fact.constants[1] > 0;
    }
    return fact;
}

ComparabilityFact strict_affine_view(const ComparabilityFact& fact) {
    assert(fact.shape == FactShape::TwoSidedAffine);
    if (fact.strict_affine) return fact;
    ComparabilityFact out = fact;
    out.strict_affine = true;
    out.padded = true;
    if (!out.constants.empty()) {
        out.constants[1] += 1;
        out.constants[3] += 2;
    }
    if (!out.note.empty()) out.note += "; ";
    out.note += "padded to strict form (+1, +2)";
    return out;
}

ComparabilityFacts derive_comparability(const RationalSystem& sys,
                                        const std::vector<ComparabilityFact>& user_facts) {
    ComparabilityFacts facts;
    RationalSystem swapped = swap_system(sys);

    auto add = [&](std::optional<ComparabilityFact> fact, Orientation o) {
        if (!fact) return;
        fact->orientation = o;
        facts.insert(std::move(*fact));
    };
    add(check_thm24(sys), Orientation::Direct);
    add(check_thm25(sys), Orientation::Direct);
    add(check_thm26(sys), Orientation::Direct);
    add(check_thm27(sys), Orientation::Direct);
    add(check_thm24(swapped), Orientation::Swapped);
    add(check_thm25(swapped), Orientation::Swapped);
    add(check_thm26(swapped), Orientation::Swapped);
    add(check_thm27(swapped), Orientation::Swapped);

    for (const auto& uf : user_facts) {
        const ComparabilityFact* existing = facts.find(uf.shape, uf.orientation);
        if (!existing) {
            ComparabilityFact f = uf;
            f.provenance = Provenance::UserAsserted;
            facts.insert(std::move(f));
        } else if (!uf.existential) {
            // user constants win; the theorem keeps the provenance trail
            ComparabilityFact merged = *existing;
            merged.constants = uf.constants;
            merged.existential = false;
            merged.strict_affine = merged.strict_affine || uf.strict_affine;
            if (!merged.note.empty()) merged.note += "; ";
            merged.note += "constants user-asserted";
            facts.put(std::move(merged));
        }
    }

    // Close under shape implications; only fills empty slots.
    for (Orientation o : {Orientation::Direct, Orientation::Swapped}) {
        Orientation other = o == Orientation::Direct ? Orientation::Swapped : Orientation::Direct;
        if (const ComparabilityFact* tsl = facts.find(FactShape::TwoSidedLinear, o)) {
            // M1 y <= x <= M2 y  gives  y <= (1/M1) x  and  x <= M2 y
            ComparabilityFact one, rev;
            one.shape = rev.shape = FactShape::OneSidedLinear;
            one.orientation = o;
            rev.orientation = other;
            one.provenance = rev.provenance = Provenance::Derived;
            one.note = rev.note = "from two-sided linear fact";
            if (tsl->existential) {
                one.existential = rev.existential = true;
            } else {
                one.constants = {Rational(1) / tsl->constants[0]};
                rev.constants = {tsl->constants[1]};
            }
            facts.insert(std::move(one));
            facts.insert(std::move(rev));
        }
        if (const ComparabilityFact* tsa = facts.find(FactShape::TwoSidedAffine, o)) {
            // x <= M1 y + M2 <= M3 x + M4  gives  x <= M1 y + M2  (other
            // orientation) and  y <= (M3/M1) x + (M4-M2)/M1  (same orientation)
            ComparabilityFact one, rev;
            one.shape = rev.shape = FactShape::OneSidedAffine;
            one.orientation = o;
            rev.orientation = other;
            one.provenance = rev.provenance = Provenance::Derived;
            one.note = rev.note = "from two-sided affine fact";
            if (tsa->existential) {
                one.existential = rev.existential = true;
            } else {
                const auto& m = tsa->constants;
                one.constants = {m[2] / m[0], (m[3] - m[1]) / m[0]};
                rev.constants = {m[0], m[1]};
            }
            facts.insert(std::move(one));
            facts.insert(std::move(rev));
        }
    }
    for (Orientation o : {Orientation::Direct, Orientation::Swapped}) {
        if (const ComparabilityFact* osl = facts.find(FactShape::OneSidedLinear, o)) {
            ComparabilityFact aff;
            aff.shape = FactShape::OneSidedAffine;
            aff.orientation = o;
            aff.provenance = Provenance::Derived;
            aff.note = "from one-sided linear fact";
            if (osl->existential)
                aff.existential = true;
            else
                aff.constants = {osl->constants[0], Rational(0)};
            facts.insert(std::move(aff));
        }
    }
    return facts;
}

std::string shape_name(FactShape shape) {
    switch (shape) {
        case FactShape::OneSidedLinear: return "one_sided_linear";
        case FactShape::TwoSidedLinear: return "two_sided_linear";
        case FactShape::OneSidedAffine: return "one_sided_affine";
        case FactShape::TwoSidedAffine: return "two_sided_affine";
    }
    return "?";
}

std::string orientation_name(Orientation o) {
    return o == Orientation::Direct ? "direct" : "swapped";
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Theorem24: return "theorem_24";
        case Provenance::Theorem25: return "theorem_25";
        case Provenance::Theorem26: return "theorem_26";
        case Provenance::Theorem27: return "theorem_27";
        case Provenance::UserAsserted: return "user_asserted";
        case Provenance::Empirical: return "empirical";
        case Provenance::Derived: return "derived";
    }
    return "?";
}

}  // namespace rde
