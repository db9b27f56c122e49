// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// argv[1] is the corpus directory holding example1.json .. example10.json.

#include "rde/io.hpp"
#include "rde/eta.hpp"
#include "rde/simulate.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace rde;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& label, const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string corpus_dir;

ParsedDocument load_example(int n, std::string& error) {
    std::string path = corpus_dir + "/example" + std::to_string(n) + ".json";
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        error = "cannot read " + path;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ParseOutcome p = parse_system(ss.str());
    if (!p.doc) {
        error = path + " failed to parse";
        for (const auto& v : p.violations) error += "; " + v;
        return {};
    }
    return std::move(*p.doc);
}

bool has_application(const AnalysisReport& rep, int id, const std::string& case_id,
                     Orientation o) {
    for (const auto& a : rep.applications)
        if (a.id == id && a.case_id == case_id && a.orientation == o) return true;
    return false;
}

const ComparabilityFact* fact_by(const AnalysisReport& rep, FactShape shape, Orientation o,
                                 Provenance prov) {
    const ComparabilityFact* f = rep.facts.find(shape, o);
    if (f && f->provenance == prov) return f;
    return nullptr;
}

// --------------------------------------------------------------------------
// 1. corpus reproduction

void criterion1() {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    auto need = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    };

    std::vector<AnalysisReport> reports(11);
    for (int n = 1; n <= 10; ++n) {
        std::string error;
        ParsedDocument doc = load_example(n, error);
        if (!error.empty()) {
            report(1, false, "example corpus reproduction", error);
            return;
        }
        reports[n] = analyze(doc.system, doc.user_facts);
    }

    need(fact_by(reports[1], FactShape::TwoSidedLinear, Orientation::Direct,
                 Provenance::Theorem25) != nullptr,
         "ex1 thm25 fact");
    need(has_application(reports[1], 1, "", Orientation::Direct), "ex1 thm1");
    need(has_application(reports[2], 3, "iii", Orientation::Direct), "ex2 thm3(iii)");
    need(has_application(reports[3], 10, "iii", Orientation::Direct), "ex3 thm10(iii)");
    need(reports[3].x_proven && !reports[3].y_proven, "ex3 x only");
    need(has_application(reports[4], 6, "", Orientation::Direct), "ex4 thm6");
    need(has_application(reports[5], 16, "", Orientation::Direct), "ex5 thm16");
    need(fact_by(reports[6], FactShape::TwoSidedAffine, Orientation::Direct,
                 Provenance::Theorem27) != nullptr,
         "ex6 thm27 fact");
    need(has_application(reports[6], 20, "", Orientation::Direct), "ex6 thm20");
    need(fact_by(reports[7], FactShape::TwoSidedAffine, Orientation::Direct,
                 Provenance::Theorem27) != nullptr,
         "ex7 thm27 fact");
    need(has_application(reports[7], 21, "", Orientation::Direct), "ex7 thm21");
    {
        const ComparabilityFact* f = fact_by(reports[8], FactShape::TwoSidedAffine,
                                             Orientation::Direct, Provenance::Theorem27);
        need(f != nullptr, "ex8 thm27 fact");
        // theorem 22 requires the strict form; the strict view of the fact
        // must be available to it (here the computed constants are already
        // strict, so no padding is needed)
        if (f) need(strict_affine_view(*f).strict_affine, "ex8 strict view");
        need(has_application(reports[8], 22, "i", Orientation::Direct), "ex8 thm22(i)");
    }
    need(fact_by(reports[9], FactShape::OneSidedLinear, Orientation::Swapped,
                 Provenance::Theorem24) != nullptr,
         "ex9 swapped thm24 fact");
    need(has_application(reports[9], 14, "ii", Orientation::Swapped), "ex9 swapped thm14(ii)");
    need(has_application(reports[10], 22, "ii", Orientation::Direct), "ex10 thm22(ii)");

    double elapsed = seconds_since(start);
    need(elapsed < 1.0, "runtime " + std::to_string(elapsed) + "s >= 1s");
    report(1, ok, "example corpus reproduction", detail);
}

// --------------------------------------------------------------------------
// 2. frozen eta values

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    struct Case {
        IndexSet s, t;
        int eta;
    };
    const Case cases[] = {
        {IndexSet{1}, IndexSet{2}, 2},
        {IndexSet{1, 2}, IndexSet{1, 2}, 1},
        {IndexSet{2}, IndexSet{1, 2}, 1},
        {IndexSet{1, 2}, IndexSet{2}, 2},
    };
    bool ok = true;
    std::string detail;
    for (const auto& c : cases) {
        EtaDecision d = eta_decide(EtaQuery{2, c.s, c.t});
        if (!d.holds || d.eta_min != c.eta) {
            ok = false;
            detail += "S=" + c.s.to_string() + " T=" + c.t.to_string() + " gave " +
                      (d.holds ? std::to_string(d.eta_min) : std::string("fails")) + "; ";
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 0.010) {
        ok = false;
        detail += "runtime " + std::to_string(elapsed * 1000) + "ms >= 10ms";
    }
    report(2, ok, "eta reference values", detail);
}

// --------------------------------------------------------------------------
// 3. oracle equivalence for k = 3

void criterion3() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (int smask = 0; smask < 8 && ok; ++smask) {
        for (int tmask = 0; tmask < 8 && ok; ++tmask) {
            std::vector<int> sl, tl;
            for (int i = 1; i <= 3; ++i) {
                if (smask & (1 << (i - 1))) sl.push_back(i);
                if (tmask & (1 << (i - 1))) tl.push_back(i);
            }
            EtaQuery q{3, IndexSet(sl), IndexSet(tl)};
            EtaDecision d = eta_decide(q);
            EtaOracleResult o = eta_oracle(q, 9);
            bool agree;
            if (o.status == EtaOracleResult::Status::determined)
                agree = d.holds && d.eta_min == o.eta_min;
            else
                // max_len 9 exceeds every possible eta at k=3, so an
                // undetermined oracle means the condition fails
                agree = o.status == EtaOracleResult::Status::undetermined && !d.holds;
            if (!agree) {
                ok = false;
                detail = "mismatch at S=" + q.source.to_string() + " T=" + q.target.to_string();
            }
        }
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 5.0) {
        ok = false;
        detail += " runtime " + std::to_string(elapsed) + "s >= 5s";
    }
    report(3, ok, "eta oracle equivalence (64 pairs, k=3)", detail);
}

// --------------------------------------------------------------------------
// 4. swap metamorphic suite

const TheoremRow& table_row(int id, const std::string& case_id) {
    for (const auto& r : theorem_table())
        if (r.id == id && r.case_id == case_id) return r;
    std::abort();
}

// Applicability with comparability requirements neutralized by symmetric
// existential facts of every shape in both orientations.
bool applicable(const RationalSystem& sys, int id, const std::string& case_id) {
    static const ComparabilityFacts symmetric = [] {
        ComparabilityFacts f;
        for (FactShape shape : {FactShape::OneSidedLinear, FactShape::TwoSidedLinear,
                                FactShape::OneSidedAffine, FactShape::TwoSidedAffine}) {
            for (Orientation o : {Orientation::Direct, Orientation::Swapped}) {
                ComparabilityFact fact;
                fact.shape = shape;
                fact.orientation = o;
                fact.existential = true;
                f.insert(fact);
            }
        }
        return f;
    }();
    return evaluate_theorem(sys, table_row(id, case_id), symmetric, {}).has_value();
}

RationalSystem random_system4(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kd(1, 3);
    std::uniform_int_distribution<int> vd(0, 3);
    const Rational values[4] = {Rational(0), Rational(1) / 2, Rational(1), Rational(2)};
    for (;;) {
        RationalSystem s;
        s.k = kd(rng);
        auto vec = [&]() {
            CoefficientVector v(static_cast<std::size_t>(s.k));
            for (auto& e : v) e = values[vd(rng)];
            return v;
        };
        s.x_num_const = values[vd(rng)];
        s.x_den_const = values[vd(rng)];
        s.y_num_const = values[vd(rng)];
        s.y_den_const = values[vd(rng)];
        s.x_num_x = vec();
        s.x_num_y = vec();
        s.x_den_x = vec();
        s.x_den_y = vec();
        s.y_num_x = vec();
        s.y_num_y = vec();
        s.y_den_x = vec();
        s.y_den_y = vec();
        if (validate_system(s).empty()) return s;
    }
}

void criterion4() {
    auto start = std::chrono::steady_clock::now();
    std::vector<RationalSystem> systems;
    for (int n = 1; n <= 10; ++n) {
        std::string error;
        ParsedDocument doc = load_example(n, error);
        if (!error.empty()) {
            report(4, false, "swap metamorphic suite", error);
            return;
        }
        systems.push_back(doc.system);
    }
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 1000; ++i) systems.push_back(random_system4(rng));

    // case permutation for theorem 4 vs theorem 3 under the renaming map
    const std::pair<const char*, const char*> case_map[] = {
        {"i", "ii"}, {"ii", "iii"}, {"iii", "i"}};

    int mismatches = 0;
    std::string detail;
    for (const RationalSystem& sys : systems) {
        RationalSystem sw = swap_system(sys);
        auto expect = [&](bool a, bool b, const std::string& what) {
            if (a != b) {
                ++mismatches;
                if (detail.empty()) detail = "first mismatch: " + what;
            }
        };
        expect(applicable(sys, 2, ""), applicable(sw, 1, ""), "thm2 vs thm1(swap)");
        expect(applicable(sys, 1, ""), applicable(sw, 2, ""), "thm1 vs thm2(swap)");
        expect(applicable(sys, 21, ""), applicable(sw, 20, ""), "thm21 vs thm20(swap)");
        expect(applicable(sys, 20, ""), applicable(sw, 21, ""), "thm20 vs thm21(swap)");
        for (const auto& [from, to] : case_map)
            expect(applicable(sys, 4, from), applicable(sw, 3, to),
                   std::string("thm4(") + from + ") vs thm3(" + to + ")(swap)");
    }
    bool ok = mismatches == 0;
    double elapsed = seconds_since(start);
    if (elapsed >= 30.0) {
        ok = false;
        detail += " runtime " + std::to_string(elapsed) + "s >= 30s";
    }
    if (mismatches > 0) detail += " (" + std::to_string(mismatches) + " mismatches)";
    report(4, ok, "swap metamorphic suite (corpus + 1000 random systems)", detail);
}

// --------------------------------------------------------------------------
// 5. certificate soundness

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

InitialConditions draw_init(std::mt19937_64& rng, int k) {
    InitialConditions init;
    auto draw = [&]() {
        long long scaled = static_cast<long long>(uniform_unit(rng) * 10.0 * 1e6);
        return Rational(scaled) / 1000000;
    };
    for (int i = 0; i < k; ++i) init.x.push_back(draw());
    for (int i = 0; i < k; ++i) init.y.push_back(draw());
    return init;
}

void criterion5() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    int checked = 0;
    for (int n = 1; n <= 10 && ok; ++n) {
        std::string error;
        ParsedDocument doc = load_example(n, error);
        if (!error.empty()) {
            report(5, false, "certificate soundness", error);
            return;
        }
        std::vector<ComparabilityFact> facts;
        if (auto f = check_thm24(doc.system); f && !f->existential) facts.push_back(*f);
        if (auto f = check_thm26(doc.system); f && !f->existential) facts.push_back(*f);
        if (facts.empty()) continue;
        ++checked;

        std::mt19937_64 rng(1000 + n);
        for (int trial = 0; trial < 100 && ok; ++trial) {
            InitialConditions init = draw_init(rng, doc.system.k);
            Trajectory traj = simulate(doc.system, init, 10000, SimMode::Float64);
            for (const auto& f : facts) {
                CertResult r = validate_certificate(traj, f);
                if (r.status == CertStatus::ViolatedAt) {
                    ok = false;
                    detail = "example " + std::to_string(n) + " trial " +
                             std::to_string(trial) + " float " + shape_name(f.shape) +
                             " violated at n=" + std::to_string(r.violated_at);
                }
            }
            Trajectory exact = simulate(doc.system, init, 200, SimMode::ExactRational);
            for (const auto& f : facts) {
                CertResult r = validate_certificate(exact, f);
                if (r.status == CertStatus::ViolatedAt) {
                    ok = false;
                    detail = "example " + std::to_string(n) + " trial " +
                             std::to_string(trial) + " exact " + shape_name(f.shape) +
                             " violated at n=" + std::to_string(r.violated_at);
                }
            }
        }
    }
    if (checked == 0) {
        ok = false;
        detail = "no corpus system satisfied theorem 24 or 26 with concrete constants";
    }
    double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        ok = false;
        detail += " runtime " + std::to_string(elapsed) + "s >= 60s";
    }
    report(5, ok,
           "certificate soundness (" + std::to_string(checked) + " corpus systems, 100 trials)",
           detail);
}

// --------------------------------------------------------------------------
// 6. boundedness / divergence cross-check

void criterion6() {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    auto run = [&](int example, BoundVerdict::Kind want_x, BoundVerdict::Kind want_y) {
        std::string error;
        ParsedDocument doc = load_example(example, error);
        if (!error.empty()) {
            ok = false;
            detail = error;
            return;
        }
        std::mt19937_64 rng(2000 + example);
        for (int trial = 0; trial < 10; ++trial) {
            InitialConditions init = draw_init(rng, doc.system.k);
            Trajectory traj = simulate(doc.system, init, 20000, SimMode::Float64);
            BoundVerdict vx = empirical_bound(traj, 'x', 10000);
            BoundVerdict vy = empirical_bound(traj, 'y', 10000);
            if (vx.kind != want_x || vy.kind != want_y) {
                ok = false;
                detail = "example " + std::to_string(example) + " trial " +
                         std::to_string(trial) + ": x=" + std::to_string(int(vx.kind)) +
                         " y=" + std::to_string(int(vy.kind));
                return;
            }
        }
    };
    run(3, BoundVerdict::Kind::Stabilized, BoundVerdict::Kind::Diverging);
    run(1, BoundVerdict::Kind::Stabilized, BoundVerdict::Kind::Stabilized);
    double elapsed = seconds_since(start);
    if (elapsed >= 60.0) {
        ok = false;
        detail += " runtime " + std::to_string(elapsed) + "s >= 60s";
    }
    report(6, ok, "boundedness/divergence cross-check (examples 3 and 1)", detail);
}

// --------------------------------------------------------------------------
// 7. simulator micro-oracles

void criterion7() {
    bool ok = true;
    std::string detail;

    std::string error;
    ParsedDocument ex3 = load_example(3, error);
    if (error.empty()) {
        InitialConditions ones{CoefficientVector(ex3.system.k, Rational(1)),
                               CoefficientVector(ex3.system.k, Rational(1))};
        Trajectory t = simulate(ex3.system, ones, 2, SimMode::ExactRational);
        if (t.size() < 2 || t.xq[0] != Rational(3) / 2 || t.yq[0] != 3 || t.yq[1] != 5) {
            ok = false;
            detail = "example 3 first steps differ from the hand oracle";
        }
    } else {
        ok = false;
        detail = error;
    }

    ParsedDocument ex1 = load_example(1, error);
    if (error.empty()) {
        InitialConditions ones{CoefficientVector(ex1.system.k, Rational(1)),
                               CoefficientVector(ex1.system.k, Rational(1))};
        Trajectory t = simulate(ex1.system, ones, 1000, SimMode::ExactRational);
        if (t.status != SimStatus::Completed || t.size() != 1000) {
            ok = false;
            detail += " example 1 exact run did not complete";
        } else {
            for (std::size_t i = 0; i < t.size(); ++i)
                if (t.xq[i] != 1 || t.yq[i] != 1) {
                    ok = false;
                    detail += " example 1 left the fixed point at n=" + std::to_string(i + 1);
                    break;
                }
        }
    } else {
        ok = false;
        detail += " " + error;
    }
    report(7, ok, "simulator micro-oracles (exact mode)", detail);
}

// --------------------------------------------------------------------------
// 8. determinism

void criterion8() {
    bool ok = true;
    std::string detail;
    std::string ex1 = corpus_dir + "/example1.json";

    std::ostringstream a1, a2, e1, e2;
    int r1 = run_cli({"analyze", ex1}, a1, e1);
    int r2 = run_cli({"analyze", ex1}, a2, e2);
    if (r1 != 0 || r2 != 0 || a1.str() != a2.str()) {
        ok = false;
        detail = "analyze outputs differ";
    }

    std::ostringstream v1, v2, ve;
    int s1 = run_cli({"verify", ex1, "--trials", "5", "--steps", "500", "--seed", "7"}, v1, ve);
    int s2 = run_cli({"verify", ex1, "--trials", "5", "--steps", "500", "--seed", "7"}, v2, ve);
    if (s1 != s2 || v1.str() != v2.str()) {
        ok = false;
        detail += " verify outputs differ";
    }
    report(8, ok, "determinism of analyze and seeded verify", detail);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <corpus-dir>\n");
        return 2;
    }
    corpus_dir = argv[1];
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
