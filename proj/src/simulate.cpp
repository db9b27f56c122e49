#include "rde/simulate.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>

namespace rde {

std::size_t Trajectory::size() const {
    return mode == SimMode::Float64 ? x.size() : xq.size();
}

double Trajectory::x_at(std::size_t i) const {
    return mode == SimMode::Float64 ? x[i] : to_double(xq[i]);
}

double Trajectory::y_at(std::size_t i) const {
    return mode == SimMode::Float64 ? y[i] : to_double(yq[i]);
}

namespace {

template <typename T>
struct Params {
    T x_num_const, x_den_const, y_num_const, y_den_const;
    std::vector<T> x_num_x, x_num_y, x_den_x, x_den_y;
    std::vector<T> y_num_x, y_num_y, y_den_x, y_den_y;
};

template <typename T, typename Conv>
Params<T> convert(const RationalSystem& sys, Conv conv) {
    auto cv = [&](const CoefficientVector& v) {
        std::vector<T> out;
        out.reserve(v.size());
        for (const auto& e : v) out.push_back(conv(e));
        return out;
    };
    return Params<T>{conv(sys.x_num_const), conv(sys.x_den_const),
                     conv(sys.y_num_const), conv(sys.y_den_const),
                     cv(sys.x_num_x), cv(sys.x_num_y), cv(sys.x_den_x), cv(sys.x_den_y),
                     cv(sys.y_num_x), cv(sys.y_num_y), cv(sys.y_den_x), cv(sys.y_den_y)};
}

// hist holds k initial values followed by generated ones; the value with lag
// i relative to step n sits at hist[k + n - 1 - i].
template <typename T>
T combine(const T& c, const std::vector<T>& wx, const std::vector<T>& wy,
          const std::vector<T>& hx, const std::vector<T>& hy, int k, int n) {
    T acc = c;
    for (int i = 1; i <= k; ++i) {
        std::size_t at = static_cast<std::size_t>(k + n - 1 - i);
        if (wx[i - 1] != 0) acc += wx[i - 1] * hx[at];
        if (wy[i - 1] != 0) acc += wy[i - 1] * hy[at];
    }
    return acc;
}

}  // namespace

Trajectory simulate(const RationalSystem& sys, const InitialConditions& init, int steps,
                    SimMode mode, const SimOptions& options) {
    assert(static_cast<int>(init.x.size()) == sys.k &&
           static_cast<int>(init.y.size()) == sys.k);
    Trajectory traj;
    traj.mode = mode;
    int k = sys.k;

    if (mode == SimMode::Float64) {
        auto par = convert<double>(sys, [](const Rational& r) { return to_double(r); });
        std::vector<double> hx, hy;
        for (const auto& v : init.x) hx.push_back(to_double(v));
        for (const auto& v : init.y) hy.push_back(to_double(v));
        for (int n = 1; n <= steps; ++n) {
            double den_x = combine(par.x_den_const, par.x_den_x, par.x_den_y, hx, hy, k, n);
            double den_y = combine(par.y_den_const, par.y_den_x, par.y_den_y, hx, hy, k, n);
            if (den_x < options.float_den_floor || den_y < options.float_den_floor) {
                traj.status = SimStatus::ZeroDenominator;
                traj.stop_index = n;
                traj.stop_equation = den_x < options.float_den_floor ? 'x' : 'y';
                break;
            }
            double num_x = combine(par.x_num_const, par.x_num_x, par.x_num_y, hx, hy, k, n);
            double num_y = combine(par.y_num_const, par.y_num_x, par.y_num_y, hx, hy, k, n);
            double vx = num_x / den_x, vy = num_y / den_y;
            if (!(vx <= options.float_overflow) || !(vy <= options.float_overflow)) {
                traj.status = SimStatus::Overflow;
                traj.stop_index = n;
                break;
            }
            hx.push_back(vx);
            hy.push_back(vy);
            traj.x.push_back(vx);
            traj.y.push_back(vy);
        }
    } else {
        std::vector<Rational> hx = init.x, hy = init.y;
        for (int n = 1; n <= steps; ++n) {
            Rational den_x = combine(sys.x_den_const, sys.x_den_x, sys.x_den_y, hx, hy, k, n);
            Rational den_y = combine(sys.y_den_const, sys.y_den_x, sys.y_den_y, hx, hy, k, n);
            if (den_x == 0 || den_y == 0) {
                traj.status = SimStatus::ZeroDenominator;
                traj.stop_index = n;
                traj.stop_equation = den_x == 0 ? 'x' : 'y';
                break;
            }
            Rational num_x = combine(sys.x_num_const, sys.x_num_x, sys.x_num_y, hx, hy, k, n);
            Rational num_y = combine(sys.y_num_const, sys.y_num_x, sys.y_num_y, hx, hy, k, n);
            Rational vx = num_x / den_x, vy = num_y / den_y;
            if (decimal_digit_bound(vx) > options.digit_budget ||
                decimal_digit_bound(vy) > options.digit_budget) {
                traj.status = SimStatus::Overflow;
                traj.stop_index = n;
                break;
            }
            hx.push_back(vx);
            hy.push_back(vy);
            traj.xq.push_back(std::move(vx));
            traj.yq.push_back(std::move(vy));
        }
    }
    return traj;
}

BoundVerdict empirical_bound(const Trajectory& traj, char which, int burn_in) {
    BoundVerdict verdict;
    verdict.burn_in = burn_in;
    if (traj.status != SimStatus::Completed) {
        verdict.reason = traj.status == SimStatus::ZeroDenominator
                             ? "trajectory hit a zero denominator"
                             : "trajectory overflowed";
        return verdict;
    }
    std::size_t n = traj.size();
    if (n == 0 || burn_in <= 0 || static_cast<std::size_t>(burn_in) >= n) {
        verdict.reason = "burn-in outside the trajectory";
        return verdict;
    }
    auto value = [&](std::size_t i) { return which == 'x' ? traj.x_at(i) : traj.y_at(i); };

    double pre_max = value(0);
    std::size_t pre_arg = 0;
    for (std::size_t i = 1; i < static_cast<std::size_t>(burn_in); ++i)
        if (value(i) > pre_max) {
            pre_max = value(i);
            pre_arg = i;
        }
    double post_max = 0;
    for (std::size_t i = burn_in; i < n; ++i) post_max = std::max(post_max, value(i));

    if (post_max <= pre_max * (1 + 1e-9)) {
        verdict.kind = BoundVerdict::Kind::Stabilized;
        verdict.max_value = pre_max;
        verdict.attained_at = static_cast<int>(pre_arg) + 1;
        return verdict;
    }

    if (n >= 20) {
        // maxima of 10 equal windows over the whole trajectory
        double m[10];
        bool growing = true;
        for (int w = 0; w < 10; ++w) {
            std::size_t lo = n * w / 10, hi = n * (w + 1) / 10;
            m[w] = value(lo);
            for (std::size_t i = lo + 1; i < hi; ++i) m[w] = std::max(m[w], value(i));
        }
        for (int w = 5; w < 10 && growing; ++w)
            growing = m[w - 1] > 0 && m[w] >= 1.1 * m[w - 1];
        if (growing) {
            verdict.kind = BoundVerdict::Kind::Diverging;
            char buf[128];
            std::snprintf(buf, sizeof buf,
                          "window maxima grow by >= 1.1x across the last 5 windows (%.6g -> %.6g)",
                          m[4], m[9]);
            verdict.reason = buf;
            return verdict;
        }
    }
    verdict.reason = "running maximum grew after burn-in but no sustained window growth";
    return verdict;
}

CertResult validate_certificate(const Trajectory& traj, const ComparabilityFact& fact) {
    CertResult result;
    if (fact.existential || fact.constants.empty()) {
        result.reason = "fact has no concrete constants";
        return result;
    }

    // In the direct orientation the fact bounds y by x; swapped exchanges the
    // roles. Each check is a list of (lhs, rhs) with lhs <= rhs required.
    bool swapped = fact.orientation == Orientation::Swapped;
    const auto& m = fact.constants;

    auto check_float = [&]() -> std::optional<int> {
        for (std::size_t i = 0; i < traj.size(); ++i) {
            double u = swapped ? traj.y[i] : traj.x[i];
            double v = swapped ? traj.x[i] : traj.y[i];
            bool ok = true;
            switch (fact.shape) {
                case FactShape::OneSidedLinear:
                    ok = v <= to_double(m[0]) * u * (1 + 1e-9);
                    break;
                case FactShape::TwoSidedLinear:
                    ok = to_double(m[0]) * v <= u * (1 + 1e-9) &&
                         u <= to_double(m[1]) * v * (1 + 1e-9);
                    break;
                case FactShape::OneSidedAffine:
                    ok = v <= (to_double(m[0]) * u + to_double(m[1])) * (1 + 1e-9);
                    break;
                case FactShape::TwoSidedAffine: {
                    double mid = to_double(m[0]) * v + to_double(m[1]);
                    ok = u <= mid * (1 + 1e-9) &&
                         mid <= (to_double(m[2]) * u + to_double(m[3])) * (1 + 1e-9);
                    break;
                }
            }
            if (!ok) return static_cast<int>(i) + 1;
        }
        return std::nullopt;
    };

    auto check_exact = [&]() -> std::optional<int> {
        for (std::size_t i = 0; i < traj.size(); ++i) {
            const Rational& u = swapped ? traj.yq[i] : traj.xq[i];
            const Rational& v = swapped ? traj.xq[i] : traj.yq[i];
            bool ok = true;
            switch (fact.shape) {
                case FactShape::OneSidedLinear:
                    ok = v <= m[0] * u;
                    break;
                case FactShape::TwoSidedLinear:
                    ok = m[0] * v <= u && u <= m[1] * v;
                    break;
                case FactShape::OneSidedAffine:
                    ok = v <= m[0] * u + m[1];
                    break;
                case FactShape::TwoSidedAffine: {
                    Rational mid = m[0] * v + m[1];
                    ok = u <= mid && mid <= m[2] * u + m[3];
                    break;
                }
            }
            if (!ok) return static_cast<int>(i) + 1;
        }
        return std::nullopt;
    };

    std::optional<int> bad =
        traj.mode == SimMode::Float64 ? check_float() : check_exact();
    if (bad) {
        result.status = CertStatus::ViolatedAt;
        result.violated_at = *bad;
    } else {
        result.status = CertStatus::Holds;
    }
    return result;
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out;
    bool exact = traj.mode == SimMode::ExactRational;
    out += exact ? "n,x,y,x_num,x_den,y_num,y_den\n" : "n,x,y\n";
    char buf[64];
    for (std::size_t i = 0; i < traj.size(); ++i) {
        out += std::to_string(i + 1);
        std::snprintf(buf, sizeof buf, ",%.17g", traj.x_at(i));
        out += buf;
        std::snprintf(buf, sizeof buf, ",%.17g", traj.y_at(i));
        out += buf;
        if (exact) {
            out += "," + boost::multiprecision::numerator(traj.xq[i]).str();
            out += "," + boost::multiprecision::denominator(traj.xq[i]).str();
            out += "," + boost::multiprecision::numerator(traj.yq[i]).str();
            out += "," + boost::multiprecision::denominator(traj.yq[i]).str();
        }
        out += "\n";
    }
    return out;
}

}  // namespace rde
