#include "rde/io.hpp"

#include "rde/eta.hpp"

#include <json.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

namespace rde {

namespace {

// ---------------------------------------------------------------------------
// Exact-number DOM. nlohmann's SAX layer hands over the raw token text of
// every non-integer number, so decimals reach Rational without a double
// round-trip.

struct JValue {
    enum class Type { Null, Bool, Number, String, Array, Object };
    Type type = Type::Null;
    bool boolean = false;
    Rational number;
    bool number_integral = false;
    std::string string;
    std::vector<JValue> array;
    std::vector<std::pair<std::string, JValue>> object;

    const JValue* get(const std::string& key) const {
        for (const auto& [k, v] : object)
            if (k == key) return &v;
        return nullptr;
    }
};

struct ExactSax : nlohmann::json_sax<nlohmann::json> {
    JValue root;
    std::vector<JValue*> stack;  // open containers
    std::string pending_key;
    std::string error;

    JValue& place() {
        if (stack.empty()) return root;
        JValue& top = *stack.back();
        if (top.type == JValue::Type::Array) {
            top.array.emplace_back();
            return top.array.back();
        }
        top.object.emplace_back(pending_key, JValue{});
        return top.object.back().second;
    }

    bool null() override {
        place().type = JValue::Type::Null;
        return true;
    }
    bool boolean(bool val) override {
        JValue& v = place();
        v.type = JValue::Type::Bool;
        v.boolean = val;
        return true;
    }
    bool number_integer(number_integer_t val) override {
        JValue& v = place();
        v.type = JValue::Type::Number;
        v.number = Rational(static_cast<long long>(val));
        v.number_integral = true;
        return true;
    }
    bool number_unsigned(number_unsigned_t val) override {
        JValue& v = place();
        v.type = JValue::Type::Number;
        v.number = Rational(BigInt(static_cast<unsigned long long>(val)));
        v.number_integral = true;
        return true;
    }
    bool number_float(number_float_t, const string_t& raw) override {
        JValue& v = place();
        v.type = JValue::Type::Number;
        v.number = rational_from_decimal(raw);
        v.number_integral = boost::multiprecision::denominator(v.number) == 1;
        return true;
    }
    bool string(string_t& val) override {
        JValue& v = place();
        v.type = JValue::Type::String;
        v.string = val;
        return true;
    }
    bool binary(binary_t&) override {
        error = "binary values are not allowed";
        return false;
    }
    bool start_object(std::size_t) override {
        JValue& v = place();
        v.type = JValue::Type::Object;
        stack.push_back(&v);
        return true;
    }
    bool key(string_t& val) override {
        pending_key = val;
        return true;
    }
    bool end_object() override {
        stack.pop_back();
        return true;
    }
    bool start_array(std::size_t) override {
        JValue& v = place();
        v.type = JValue::Type::Array;
        stack.push_back(&v);
        return true;
    }
    bool end_array() override {
        stack.pop_back();
        return true;
    }
    bool parse_error(std::size_t position, const std::string&,
                     const nlohmann::detail::exception& ex) override {
        error = "parse error at byte " + std::to_string(position) + ": " + ex.what();
        return false;
    }
};

// ---------------------------------------------------------------------------
// Schema checking

struct Checker {
    std::vector<std::string> violations;

    void fail(const std::string& path, const std::string& message) {
        violations.push_back(path + ": " + message);
    }

    const JValue* expect_object(const JValue* v, const std::string& path) {
        if (!v) return nullptr;
        if (v->type != JValue::Type::Object) {
            fail(path, "expected an object");
            return nullptr;
        }
        return v;
    }

    std::optional<Rational> expect_number(const JValue* v, const std::string& path,
                                          bool non_negative = true) {
        if (!v) return std::nullopt;
        if (v->type != JValue::Type::Number) {
            fail(path, "expected a number");
            return std::nullopt;
        }
        if (non_negative && v->number < 0) {
            fail(path, "must be non-negative");
            return std::nullopt;
        }
        return v->number;
    }

    std::optional<CoefficientVector> expect_coeffs(const JValue* v, const std::string& path,
                                                   int k) {
        if (!v) return std::nullopt;
        if (v->type != JValue::Type::Array) {
            fail(path, "expected an array");
            return std::nullopt;
        }
        if (static_cast<int>(v->array.size()) != k) {
            fail(path, "expected length " + std::to_string(k) + ", got " +
                           std::to_string(v->array.size()));
            return std::nullopt;
        }
        CoefficientVector out;
        bool ok = true;
        for (std::size_t i = 0; i < v->array.size(); ++i) {
            auto e = expect_number(&v->array[i], path + "/" + std::to_string(i));
            if (e)
                out.push_back(*e);
            else
                ok = false;
        }
        if (!ok) return std::nullopt;
        return out;
    }

    void reject_unknown(const JValue& obj, const std::string& path,
                        std::initializer_list<const char*> allowed) {
        for (const auto& [key, value] : obj.object) {
            bool known = false;
            for (const char* a : allowed)
                if (key == a) known = true;
            if (!known) fail(path + "/" + key, "unknown key");
        }
    }
};

struct EquationSide {
    Rational constant;
    CoefficientVector x, y;
};

std::optional<EquationSide> parse_side(Checker& c, const JValue* side, const std::string& path,
                                       int k) {
    const JValue* obj = c.expect_object(side, path);
    if (!obj) return std::nullopt;
    c.reject_unknown(*obj, path, {"const", "x", "y"});
    EquationSide out;
    out.constant = 0;
    out.x.assign(k, Rational(0));
    out.y.assign(k, Rational(0));
    bool ok = true;
    if (const JValue* v = obj->get("const")) {
        auto r = c.expect_number(v, path + "/const");
        if (r)
            out.constant = *r;
        else
            ok = false;
    }
    if (const JValue* v = obj->get("x")) {
        auto r = c.expect_coeffs(v, path + "/x", k);
        if (r)
            out.x = *r;
        else
            ok = false;
    }
    if (const JValue* v = obj->get("y")) {
        auto r = c.expect_coeffs(v, path + "/y", k);
        if (r)
            out.y = *r;
        else
            ok = false;
    }
    if (!ok) return std::nullopt;
    return out;
}

std::optional<FactShape> shape_from_name(const std::string& name) {
    if (name == "one_sided_linear") return FactShape::OneSidedLinear;
    if (name == "two_sided_linear") return FactShape::TwoSidedLinear;
    if (name == "one_sided_affine") return FactShape::OneSidedAffine;
    if (name == "two_sided_affine") return FactShape::TwoSidedAffine;
    return std::nullopt;
}

std::size_t constant_count(FactShape shape) {
    switch (shape) {
        case FactShape::OneSidedLinear: return 1;
        case FactShape::TwoSidedLinear: return 2;
        case FactShape::OneSidedAffine: return 2;
        case FactShape::TwoSidedAffine: return 4;
    }
    return 0;
}

std::optional<ComparabilityFact> parse_fact(Checker& c, const JValue& v,
                                            const std::string& path) {
    const JValue* obj = c.expect_object(&v, path);
    if (!obj) return std::nullopt;
    c.reject_unknown(*obj, path, {"shape", "direction", "constants", "strict"});
    ComparabilityFact fact;
    fact.provenance = Provenance::UserAsserted;

    const JValue* shape = obj->get("shape");
    if (!shape || shape->type != JValue::Type::String) {
        c.fail(path + "/shape", "expected a string");
        return std::nullopt;
    }
    auto s = shape_from_name(shape->string);
    if (!s) {
        c.fail(path + "/shape", "unknown shape '" + shape->string + "'");
        return std::nullopt;
    }
    fact.shape = *s;

    const JValue* dir = obj->get("direction");
    if (!dir || dir->type != JValue::Type::String ||
        (dir->string != "direct" && dir->string != "swapped")) {
        c.fail(path + "/direction", "expected \"direct\" or \"swapped\"");
        return std::nullopt;
    }
    fact.orientation = dir->string == "direct" ? Orientation::Direct : Orientation::Swapped;

    if (const JValue* strict = obj->get("strict")) {
        if (strict->type != JValue::Type::Bool) {
            c.fail(path + "/strict", "expected a boolean");
            return std::nullopt;
        }
        if (fact.shape != FactShape::TwoSidedAffine && strict->boolean) {
            c.fail(path + "/strict", "only meaningful for two_sided_affine");
            return std::nullopt;
        }
        fact.strict_affine = strict->boolean;
    }

    const JValue* constants = obj->get("constants");
    if (!constants || (constants->type == JValue::Type::Object && constants->object.empty())) {
        fact.existential = true;
        return fact;
    }
    const JValue* cobj = c.expect_object(constants, path + "/constants");
    if (!cobj) return std::nullopt;
    std::size_t n = constant_count(fact.shape);
    std::vector<const char*> names = {"M1", "M2", "M3", "M4"};
    c.reject_unknown(*cobj, path + "/constants",
                     n == 1 ? std::initializer_list<const char*>{"M1"}
                     : n == 2 ? std::initializer_list<const char*>{"M1", "M2"}
                              : std::initializer_list<const char*>{"M1", "M2", "M3", "M4"});
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        auto r = c.expect_number(cobj->get(names[i]), path + "/constants/" + names[i]);
        if (!cobj->get(names[i])) {
            c.fail(path + "/constants/" + names[i], "missing");
            ok = false;
        } else if (r) {
            fact.constants.push_back(*r);
        } else {
            ok = false;
        }
    }
    if (!ok) return std::nullopt;
    return fact;
}

std::optional<InitialConditions> parse_init(Checker& c, const JValue& v, const std::string& path,
                                            int k) {
    const JValue* obj = c.expect_object(&v, path);
    if (!obj) return std::nullopt;
    c.reject_unknown(*obj, path, {"x", "y"});
    auto xv = c.expect_coeffs(obj->get("x"), path + "/x", k);
    auto yv = c.expect_coeffs(obj->get("y"), path + "/y", k);
    if (!obj->get("x")) c.fail(path + "/x", "missing");
    if (!obj->get("y")) c.fail(path + "/y", "missing");
    if (!xv || !yv) return std::nullopt;
    return InitialConditions{*xv, *yv};
}

std::optional<JValue> parse_dom(const std::string& text, std::vector<std::string>& violations) {
    ExactSax sax;
    if (!nlohmann::json::sax_parse(text, &sax)) {
        violations.push_back("/: " + (sax.error.empty() ? "malformed JSON" : sax.error));
        return std::nullopt;
    }
    return std::move(sax.root);
}

}  // namespace

ParseOutcome parse_system(const std::string& text) {
    ParseOutcome outcome;
    auto dom = parse_dom(text, outcome.violations);
    if (!dom) return outcome;

    Checker c;
    const JValue* root = c.expect_object(&*dom, "");
    if (!root) {
        outcome.violations = std::move(c.violations);
        return outcome;
    }
    c.reject_unknown(*root, "", {"k", "x", "y", "asserted_comparability", "init"});

    int k = 0;
    if (const JValue* kv = root->get("k")) {
        auto r = c.expect_number(kv, "/k");
        if (r && (!kv->number_integral || *r < 1))
            c.fail("/k", "expected a positive integer");
        else if (r)
            k = static_cast<int>(to_double(*r));
    } else {
        c.fail("/k", "missing");
    }

    ParsedDocument doc;
    if (k >= 1) {
        doc.system.k = k;
        const JValue* xv = root->get("x");
        const JValue* yv = root->get("y");
        if (!xv) c.fail("/x", "missing");
        if (!yv) c.fail("/y", "missing");
        if (xv) {
            const JValue* xo = c.expect_object(xv, "/x");
            if (xo) {
                c.reject_unknown(*xo, "/x", {"num", "den"});
                if (auto side = parse_side(c, xo->get("num"), "/x/num", k)) {
                    doc.system.x_num_const = side->constant;
                    doc.system.x_num_x = side->x;
                    doc.system.x_num_y = side->y;
                } else if (!xo->get("num")) {
                    c.fail("/x/num", "missing");
                }
                if (auto side = parse_side(c, xo->get("den"), "/x/den", k)) {
                    doc.system.x_den_const = side->constant;
                    doc.system.x_den_x = side->x;
                    doc.system.x_den_y = side->y;
                } else if (!xo->get("den")) {
                    c.fail("/x/den", "missing");
                }
            }
        }
        if (yv) {
            const JValue* yo = c.expect_object(yv, "/y");
            if (yo) {
                c.reject_unknown(*yo, "/y", {"num", "den"});
                if (auto side = parse_side(c, yo->get("num"), "/y/num", k)) {
                    doc.system.y_num_const = side->constant;
                    doc.system.y_num_x = side->x;
                    doc.system.y_num_y = side->y;
                } else if (!yo->get("num")) {
                    c.fail("/y/num", "missing");
                }
                if (auto side = parse_side(c, yo->get("den"), "/y/den", k)) {
                    doc.system.y_den_const = side->constant;
                    doc.system.y_den_x = side->x;
                    doc.system.y_den_y = side->y;
                } else if (!yo->get("den")) {
                    c.fail("/y/den", "missing");
                }
            }
        }
        if (const JValue* facts = root->get("asserted_comparability")) {
            if (facts->type != JValue::Type::Array) {
                c.fail("/asserted_comparability", "expected an array");
            } else {
                for (std::size_t i = 0; i < facts->array.size(); ++i) {
                    auto f = parse_fact(c, facts->array[i],
                                        "/asserted_comparability/" + std::to_string(i));
                    if (f) doc.user_facts.push_back(std::move(*f));
                }
            }
        }
        if (const JValue* init = root->get("init"))
            doc.init = parse_init(c, *init, "/init", k);
    }

    if (c.violations.empty()) {
        // Model-level validity (zero denominators etc.) reported at the root.
        for (const auto& v : validate_system(doc.system)) c.fail("", v);
    }
    outcome.violations = std::move(c.violations);
    if (outcome.violations.empty()) outcome.doc = std::move(doc);
    return outcome;
}

ParseOutcome parse_init_only(const std::string& text, int k) {
    ParseOutcome outcome;
    auto dom = parse_dom(text, outcome.violations);
    if (!dom) return outcome;
    Checker c;
    auto init = parse_init(c, *dom, "", k);
    outcome.violations = std::move(c.violations);
    if (outcome.violations.empty() && init) {
        outcome.doc = ParsedDocument{};
        outcome.doc->init = std::move(*init);
    }
    return outcome;
}

namespace {

void write_coeffs(std::string& out, const CoefficientVector& v) {
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += decimal_from_rational(v[i]);
    }
    out += "]";
}

void write_side(std::string& out, const char* indent, const Rational& c,
                const CoefficientVector& x, const CoefficientVector& y) {
    out += "{\"const\": " + decimal_from_rational(c) + ", \"x\": ";
    write_coeffs(out, x);
    out += ", \"y\": ";
    write_coeffs(out, y);
    out += "}";
    (void)indent;
}

}  // namespace

std::string serialize_system(const ParsedDocument& doc) {
    const RationalSystem& s = doc.system;
    std::string out = "{\n";
    out += "  \"k\": " + std::to_string(s.k) + ",\n";
    out += "  \"x\": {\n    \"num\": ";
    write_side(out, "    ", s.x_num_const, s.x_num_x, s.x_num_y);
    out += ",\n    \"den\": ";
    write_side(out, "    ", s.x_den_const, s.x_den_x, s.x_den_y);
    out += "\n  },\n  \"y\": {\n    \"num\": ";
    write_side(out, "    ", s.y_num_const, s.y_num_x, s.y_num_y);
    out += ",\n    \"den\": ";
    write_side(out, "    ", s.y_den_const, s.y_den_x, s.y_den_y);
    out += "\n  }";
    if (!doc.user_facts.empty()) {
        out += ",\n  \"asserted_comparability\": [\n";
        for (std::size_t i = 0; i < doc.user_facts.size(); ++i) {
            const ComparabilityFact& f = doc.user_facts[i];
            out += "    {\"shape\": \"" + shape_name(f.shape) + "\", \"direction\": \"" +
                   orientation_name(f.orientation) + "\"";
            if (!f.existential) {
                out += ", \"constants\": {";
                static const char* names[] = {"M1", "M2", "M3", "M4"};
                for (std::size_t j = 0; j < f.constants.size(); ++j) {
                    if (j) out += ", ";
                    out += std::string("\"") + names[j] +
                           "\": " + decimal_from_rational(f.constants[j]);
                }
                out += "}";
            }
            if (f.strict_affine) out += ", \"strict\": true";
            out += "}";
            if (i + 1 < doc.user_facts.size()) out += ",";
            out += "\n";
        }
        out += "  ]";
    }
    if (doc.init) {
        out += ",\n  \"init\": {\"x\": ";
        write_coeffs(out, doc.init->x);
        out += ", \"y\": ";
        write_coeffs(out, doc.init->y);
        out += "}";
    }
    out += "\n}\n";
    return out;
}

namespace {

nlohmann::json fact_json(const ComparabilityFact& f) {
    nlohmann::json j;
    j["shape"] = shape_name(f.shape);
    j["orientation"] = orientation_name(f.orientation);
    j["existential"] = f.existential;
    if (!f.constants.empty()) {
        static const char* names[] = {"M1", "M2", "M3", "M4"};
        nlohmann::json cs;
        for (std::size_t i = 0; i < f.constants.size(); ++i) {
            cs[names[i]] = {{"value", fraction_string(f.constants[i])},
                            {"approx", to_double(f.constants[i])}};
        }
        j["constants"] = cs;
    }
    if (f.shape == FactShape::TwoSidedAffine) {
        j["strict"] = f.strict_affine;
        j["padded"] = f.padded;
    }
    j["provenance"] = provenance_name(f.provenance);
    if (!f.note.empty()) j["note"] = f.note;
    return j;
}

nlohmann::json application_json(const TheoremApplication& a) {
    nlohmann::json j;
    j["theorem"] = a.id;
    if (!a.case_id.empty()) j["case"] = a.case_id;
    j["orientation"] = orientation_name(a.orientation);
    j["conclusion"] = conclusion_name(a.conclusion);
    j["rigor"] = rigor_name(a.rigor);
    if (!a.facts_used.empty()) {
        nlohmann::json fs = nlohmann::json::array();
        for (const auto& f : a.facts_used) fs.push_back(fact_json(f));
        j["facts_used"] = fs;
    }
    if (!a.eta_evidence.empty()) {
        nlohmann::json es = nlohmann::json::array();
        for (const auto& e : a.eta_evidence) {
            nlohmann::json ej;
            ej["source"] = e.source_name;
            ej["source_set"] = e.source.to_string();
            ej["target"] = e.target_name;
            ej["target_set"] = e.target.to_string();
            ej["eta_min"] = e.decision.eta_min;
            if (!e.decision.longest_survivor.empty())
                ej["longest_survivor"] = e.decision.longest_survivor;
            es.push_back(ej);
        }
        j["eta"] = es;
    }
    if (!a.inputs_from.empty()) j["inputs"] = a.inputs_from;
    if (!a.note.empty()) j["note"] = a.note;
    return j;
}

}  // namespace

std::string report_json(const AnalysisReport& report) {
    nlohmann::json j;
    ParsedDocument doc;
    doc.system = report.system;
    j["system"] = nlohmann::json::parse(serialize_system(doc));
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& f : report.facts.items()) fs.push_back(fact_json(f));
    j["facts"] = fs;
    nlohmann::json as = nlohmann::json::array();
    for (const auto& a : report.applications) as.push_back(application_json(a));
    j["applications"] = as;
    nlohmann::json verdict;
    verdict["x"] = report.x_proven ? "proven_bounded" : "unproven";
    verdict["y"] = report.y_proven ? "proven_bounded" : "unproven";
    if (report.x_proven) verdict["x_rigor"] = rigor_name(report.x_rigor);
    if (report.y_proven) verdict["y_rigor"] = rigor_name(report.y_rigor);
    j["verdict"] = verdict;
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& report) {
    std::ostringstream out;
    out << "order k = " << report.system.k << "\n";
    out << "comparability facts:\n";
    if (report.facts.items().empty()) out << "  (none)\n";
    for (const auto& f : report.facts.items()) {
        out << "  " << shape_name(f.shape) << " [" << orientation_name(f.orientation) << "] ";
        if (f.existential) {
            out << "existential";
        } else {
            static const char* names[] = {"M1", "M2", "M3", "M4"};
            for (std::size_t i = 0; i < f.constants.size(); ++i) {
                if (i) out << ", ";
                out << names[i] << " = " << fraction_string(f.constants[i]);
            }
        }
        out << " (" << provenance_name(f.provenance) << ")";
        if (!f.note.empty()) out << " -- " << f.note;
        out << "\n";
    }
    out << "theorem applications:\n";
    if (report.applications.empty()) out << "  (none)\n";
    for (const auto& a : report.applications) {
        out << "  theorem " << a.id;
        if (!a.case_id.empty()) out << " case (" << a.case_id << ")";
        out << " [" << orientation_name(a.orientation) << "] -> " << conclusion_name(a.conclusion)
            << " (" << rigor_name(a.rigor) << ")";
        for (const auto& e : a.eta_evidence)
            out << "\n    eta: " << e.source_name << " " << e.source.to_string() << " -> "
                << e.target_name << " " << e.target.to_string()
                << ", eta_min = " << e.decision.eta_min;
        for (const auto& s : a.inputs_from) out << "\n    uses " << s;
        out << "\n";
    }
    out << "verdict: x " << (report.x_proven ? "proven_bounded" : "unproven") << ", y "
        << (report.y_proven ? "proven_bounded" : "unproven") << "\n";
    for (const auto& n : report.notes) out << "note: " << n << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// CLI

namespace {

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<IndexSet> parse_lag_list(const std::string& text, int k,
                                       std::string& error) {
    std::vector<int> lags;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            int lag = std::stoi(token, &used);
            if (used != token.size() || lag < 1 || lag > k) {
                error = "lag '" + token + "' outside 1.." + std::to_string(k);
                return std::nullopt;
            }
            lags.push_back(lag);
        } catch (const std::exception&) {
            error = "bad lag '" + token + "'";
            return std::nullopt;
        }
    }
    return IndexSet(std::move(lags));
}

// mt19937_64 plus a fixed 53-bit mapping so results do not depend on the
// standard library's distribution implementation.
double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

InitialConditions random_init(std::mt19937_64& rng, int k, bool positive) {
    double lo = positive ? 1e-3 : 0.0;
    InitialConditions init;
    auto draw = [&]() {
        double v = lo + uniform_unit(rng) * (10.0 - lo);
        // keep the value exactly representable as a short decimal so float
        // and exact runs of the same trial see the same start
        long long scaled = static_cast<long long>(v * 1e6);
        return Rational(scaled) / 1000000;
    };
    for (int i = 0; i < k; ++i) init.x.push_back(draw());
    for (int i = 0; i < k; ++i) init.y.push_back(draw());
    return init;
}

int cmd_analyze(const std::string& file, const std::string& report_path, bool text,
                std::ostream& out, std::ostream& err) {
    auto content = read_file(file);
    if (!content) {
        err << "cannot read " << file << "\n";
        return 2;
    }
    ParseOutcome parsed = parse_system(*content);
    if (!parsed.doc) {
        for (const auto& v : parsed.violations) err << v << "\n";
        return 2;
    }
    AnalysisReport report = analyze(parsed.doc->system, parsed.doc->user_facts);
    std::string json = report_json(report);
    if (!report_path.empty()) {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) {
            err << "cannot write " << report_path << "\n";
            return 2;
        }
        f << json;
    }
    if (text)
        out << report_text(report);
    else
        out << json;
    return 0;
}

int cmd_eta(int k, const std::string& source, const std::string& target, std::ostream& out,
            std::ostream& err) {
    std::string error;
    auto s = parse_lag_list(source, k, error);
    if (!s) {
        err << "--source: " << error << "\n";
        return 2;
    }
    auto t = parse_lag_list(target, k, error);
    if (!t) {
        err << "--target: " << error << "\n";
        return 2;
    }
    EtaDecision d = eta_decide(EtaQuery{k, *s, *t});
    if (d.holds) {
        out << "holds, eta_min=" << d.eta_min;
        if (!d.longest_survivor.empty()) {
            out << ", longest survivor:";
            for (int c : d.longest_survivor) out << " " << c;
        }
        out << "\n";
    } else {
        out << "fails";
        if (!d.failure_cycle.empty()) {
            out << ", state cycle avoiding target:";
            for (const auto& st : d.failure_cycle) {
                out << " {";
                for (std::size_t i = 0; i < st.size(); ++i) {
                    if (i) out << ",";
                    out << st[i];
                }
                out << "}";
            }
        }
        out << "\n";
    }
    return 0;
}

int cmd_simulate(const std::string& file, int steps, const std::string& mode,
                 const std::string& init_file, const std::string& out_path, std::ostream&,
                 std::ostream& err) {
    auto content = read_file(file);
    if (!content) {
        err << "cannot read " << file << "\n";
        return 2;
    }
    ParseOutcome parsed = parse_system(*content);
    if (!parsed.doc) {
        for (const auto& v : parsed.violations) err << v << "\n";
        return 2;
    }
    int k = parsed.doc->system.k;
    InitialConditions init;
    if (!init_file.empty()) {
        auto icontent = read_file(init_file);
        if (!icontent) {
            err << "cannot read " << init_file << "\n";
            return 2;
        }
        ParseOutcome pi = parse_init_only(*icontent, k);
        if (!pi.doc) {
            for (const auto& v : pi.violations) err << v << "\n";
            return 2;
        }
        init = *pi.doc->init;
    } else if (parsed.doc->init) {
        init = *parsed.doc->init;
    } else {
        init.x.assign(k, Rational(1));
        init.y.assign(k, Rational(1));
    }
    SimMode m = mode == "exact" ? SimMode::ExactRational : SimMode::Float64;
    Trajectory traj = simulate(parsed.doc->system, init, steps, m);
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        err << "cannot write " << out_path << "\n";
        return 2;
    }
    f << trajectory_csv(traj);
    if (traj.status == SimStatus::ZeroDenominator)
        err << "stopped: zero denominator in " << traj.stop_equation << " at n="
            << traj.stop_index << "\n";
    else if (traj.status == SimStatus::Overflow)
        err << "stopped: overflow at n=" << traj.stop_index << "\n";
    return 0;
}

const char* verdict_name(BoundVerdict::Kind kind) {
    switch (kind) {
        case BoundVerdict::Kind::Stabilized: return "stabilized";
        case BoundVerdict::Kind::Diverging: return "diverging";
        case BoundVerdict::Kind::Inconclusive: return "inconclusive";
    }
    return "?";
}

int cmd_verify(const std::string& file, int trials, int steps, unsigned long long seed,
               bool positive_init, std::ostream& out, std::ostream& err) {
    auto content = read_file(file);
    if (!content) {
        err << "cannot read " << file << "\n";
        return 2;
    }
    ParseOutcome parsed = parse_system(*content);
    if (!parsed.doc) {
        for (const auto& v : parsed.violations) err << v << "\n";
        return 2;
    }
    const RationalSystem& sys = parsed.doc->system;
    AnalysisReport report = analyze(sys, parsed.doc->user_facts);

    std::mt19937_64 rng(seed);
    nlohmann::json trials_json = nlohmann::json::array();
    int violations = 0;
    int burn_in = steps / 2;

    for (int trial = 0; trial < trials; ++trial) {
        InitialConditions init = random_init(rng, sys.k, positive_init);
        Trajectory traj = simulate(sys, init, steps, SimMode::Float64);
        nlohmann::json tj;
        tj["trial"] = trial;
        tj["status"] = traj.status == SimStatus::Completed        ? "completed"
                       : traj.status == SimStatus::ZeroDenominator ? "zero_denominator"
                                                                    : "overflow";
        nlohmann::json certs = nlohmann::json::array();
        for (const auto& fact : report.facts.items()) {
            if (fact.existential) continue;
            CertResult r = validate_certificate(traj, fact);
            nlohmann::json cj;
            cj["shape"] = shape_name(fact.shape);
            cj["orientation"] = orientation_name(fact.orientation);
            cj["status"] = r.status == CertStatus::Holds        ? "holds"
                           : r.status == CertStatus::ViolatedAt ? "violated"
                                                                : "not_applicable";
            if (r.status == CertStatus::ViolatedAt) {
                cj["violated_at"] = r.violated_at;
                ++violations;
            }
            certs.push_back(cj);
        }
        tj["certificates"] = certs;
        if (traj.status == SimStatus::Completed && steps >= 2) {
            BoundVerdict vx = empirical_bound(traj, 'x', burn_in);
            BoundVerdict vy = empirical_bound(traj, 'y', burn_in);
            tj["x_verdict"] = verdict_name(vx.kind);
            tj["y_verdict"] = verdict_name(vy.kind);
            if (report.x_proven && vx.kind == BoundVerdict::Kind::Diverging) {
                tj["x_inconsistent"] = true;
                ++violations;
            }
            if (report.y_proven && vy.kind == BoundVerdict::Kind::Diverging) {
                tj["y_inconsistent"] = true;
                ++violations;
            }
        }
        trials_json.push_back(tj);
    }

    nlohmann::json j;
    j["file"] = file;
    j["seed"] = seed;
    j["steps"] = steps;
    j["burn_in"] = burn_in;
    j["positive_init"] = positive_init;
    j["verdict"] = {{"x", report.x_proven ? "proven_bounded" : "unproven"},
                    {"y", report.y_proven ? "proven_bounded" : "unproven"}};
    j["trials"] = trials_json;
    j["violations"] = violations;
    out << j.dump(2) << "\n";
    return violations > 0 ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"boundedness analysis for k-th order rational difference systems"};
    app.require_subcommand(1);

    std::string file, report_path, init_file, out_path;
    bool text = false, positive_init = false;
    int k = 1, steps = 1000, trials = 10;
    unsigned long long seed = 0;
    std::string source, target, mode = "float";

    auto* analyze_cmd = app.add_subcommand("analyze", "decide which theorems apply");
    analyze_cmd->add_option("file", file, "system definition (JSON)")->required();
    analyze_cmd->add_option("--report", report_path, "write the JSON report here");
    analyze_cmd->add_flag("--text", text, "print a human-readable report");

    auto* eta_cmd = app.add_subcommand("eta", "decide the iteration condition");
    eta_cmd->add_option("--k", k, "order")->required();
    eta_cmd->add_option("--source", source, "comma-separated source lags (may be empty)");
    eta_cmd->add_option("--target", target, "comma-separated target lags (may be empty)");

    auto* sim_cmd = app.add_subcommand("simulate", "generate a trajectory CSV");
    sim_cmd->add_option("file", file, "system definition (JSON)")->required();
    sim_cmd->add_option("--steps", steps, "number of generated terms")->required();
    sim_cmd->add_option("--mode", mode, "float or exact")
        ->check(CLI::IsMember({"float", "exact"}));
    sim_cmd->add_option("--init", init_file, "initial conditions (JSON {\"x\":[],\"y\":[]})");
    sim_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* verify_cmd = app.add_subcommand("verify", "cross-check the report by simulation");
    verify_cmd->add_option("file", file, "system definition (JSON)")->required();
    verify_cmd->add_option("--trials", trials, "number of random trials")->required();
    verify_cmd->add_option("--steps", steps, "steps per trial")->required();
    verify_cmd->add_option("--seed", seed, "RNG seed")->required();
    verify_cmd->add_flag("--positive-init", positive_init,
                         "draw initial conditions from [1e-3, 10] instead of [0, 10]");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    if (analyze_cmd->parsed()) return cmd_analyze(file, report_path, text, out, err);
    if (eta_cmd->parsed()) return cmd_eta(k, source, target, out, err);
    if (sim_cmd->parsed()) return cmd_simulate(file, steps, mode, init_file, out_path, out, err);
    if (verify_cmd->parsed()) return cmd_verify(file, trials, steps, seed, positive_init, out, err);
    err << "no subcommand\n";
    return 2;
}

}  // namespace rde
