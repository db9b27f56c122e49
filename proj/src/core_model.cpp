#include "rde/core_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace rde {

IndexSet::IndexSet(std::initializer_list<int> lags) : IndexSet(std::vector<int>(lags)) {}

IndexSet::IndexSet(std::vector<int> lags) : members_(std::move(lags)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool IndexSet::contains(int lag) const {
    return std::binary_search(members_.begin(), members_.end(), lag);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_union(a.members_.begin(), a.members_.end(),
                   b.members_.begin(), b.members_.end(), std::back_inserter(out));
    IndexSet r;
    r.members_ = std::move(out);
    return r;
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
    std::vector<int> out;
    std::set_difference(a.members_.begin(), a.members_.end(),
                        b.members_.begin(), b.members_.end(), std::back_inserter(out));
    IndexSet r;
    r.members_ = std::move(out);
    return r;
}

std::string IndexSet::to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(members_[i]);
    }
    return s + "}";
}

IndexSet index_set(const CoefficientVector& coeffs) {
    std::vector<int> lags;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] > 0) lags.push_back(static_cast<int>(i) + 1);
    return IndexSet(std::move(lags));
}

SystemIndexSets index_sets(const RationalSystem& sys) {
    return SystemIndexSets{
        index_set(sys.x_num_x), index_set(sys.x_num_y),
        index_set(sys.y_num_x), index_set(sys.y_num_y),
        index_set(sys.x_den_x), index_set(sys.x_den_y),
        index_set(sys.y_den_x), index_set(sys.y_den_y),
    };
}

Rational min_plus(const Rational& a, const Rational& b) {
    if (a > 0 && b > 0) return std::min(a, b);
    if (a > 0) return a;
    if (b > 0) return b;
    throw std::invalid_argument("min_plus: at least one argument must be positive");
}

RationalSystem swap_system(const RationalSystem& sys) {
    RationalSystem out;
    out.k = sys.k;
    out.x_num_const = sys.y_num_const;
    out.x_num_x = sys.y_num_y;  // beta' = epsilon
    out.x_num_y = sys.y_num_x;  // gamma' = delta
    out.x_den_const = sys.y_den_const;
    out.x_den_x = sys.y_den_y;  // B' = E
    out.x_den_y = sys.y_den_x;  // C' = D
    out.y_num_const = sys.x_num_const;
    out.y_num_x = sys.x_num_y;  // delta' = gamma
    out.y_num_y = sys.x_num_x;  // epsilon' = beta
    out.y_den_const = sys.x_den_const;
    out.y_den_x = sys.x_den_y;  // D' = C
    out.y_den_y = sys.x_den_x;  // E' = B
    return out;
}

std::vector<std::string> validate_system(const RationalSystem& sys) {
    std::vector<std::string> violations;
    if (sys.k < 1) violations.push_back("order k must be >= 1");

    auto check_vec = [&](const CoefficientVector& v, const char* name) {
        if (static_cast<int>(v.size()) != sys.k)
            violations.push_back(std::string(name) + ": length " + std::to_string(v.size()) +
                                 " does not match k=" + std::to_string(sys.k));
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] < 0)
                violations.push_back(std::string(name) + "[" + std::to_string(i + 1) +
                                     "]: negative parameter");
    };
    auto check_const = [&](const Rational& c, const char* name) {
        if (c < 0) violations.push_back(std::string(name) + ": negative parameter");
    };

    check_const(sys.x_num_const, "x.num.const");
    check_vec(sys.x_num_x, "x.num.x");
    check_vec(sys.x_num_y, "x.num.y");
    check_const(sys.x_den_const, "x.den.const");
    check_vec(sys.x_den_x, "x.den.x");
    check_vec(sys.x_den_y, "x.den.y");
    check_const(sys.y_num_const, "y.num.const");
    check_vec(sys.y_num_x, "y.num.x");
    check_vec(sys.y_num_y, "y.num.y");
    check_const(sys.y_den_const, "y.den.const");
    check_vec(sys.y_den_x, "y.den.x");
    check_vec(sys.y_den_y, "y.den.y");

    auto all_zero = [](const CoefficientVector& v) {
        for (const auto& e : v)
            if (e > 0) return false;
        return true;
    };
    if (sys.x_den_const == 0 && all_zero(sys.x_den_x) && all_zero(sys.x_den_y))
        violations.push_back("x denominator identically zero");
    if (sys.y_den_const == 0 && all_zero(sys.y_den_x) && all_zero(sys.y_den_y))
        violations.push_back("y denominator identically zero");
    return violations;
}

}  // namespace rde
