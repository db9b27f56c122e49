#pragma once

#include "rde/comparability.hpp"
#include "rde/core_model.hpp"

#include <string>
#include <vector>

namespace rde {

/// Entry [i] holds the value at time i - k + 1, i.e. front() is time 1-k and
/// back() is time 0.
struct InitialConditions {
    std::vector<Rational> x, y;
};

enum class SimMode { Float64, ExactRational };

enum class SimStatus { Completed, ZeroDenominator, Overflow };

struct SimOptions {
    double float_overflow = 1e300;
    double float_den_floor = 1e-300;
    /// Exact mode stops once a value's numerator+denominator exceeds this
    /// many decimal digits (rational trajectories generically grow
    /// Fibonacci-fast in representation size).
    std::size_t digit_budget = 4096;
};

struct Trajectory {
    SimMode mode = SimMode::Float64;
    SimStatus status = SimStatus::Completed;
    int stop_index = 0;       // n at which generation stopped (when not completed)
    char stop_equation = 0;   // 'x' or 'y' for zero denominators

    // generated values x_1..x_N (index 0 holds n=1)
    std::vector<double> x, y;           // float mode
    std::vector<Rational> xq, yq;       // exact mode

    std::size_t size() const;
    double x_at(std::size_t i) const;   // double view in either mode
    double y_at(std::size_t i) const;
};

Trajectory simulate(const RationalSystem& sys, const InitialConditions& init, int steps,
                    SimMode mode, const SimOptions& options = {});

struct BoundVerdict {
    enum class Kind { Stabilized, Diverging, Inconclusive };
    Kind kind = Kind::Inconclusive;
    double max_value = 0;  // stabilized only
    int attained_at = 0;   // 1-based generated index
    int burn_in = 0;
    std::string reason;
};

/// Empirical (never rigorous): stabilized if the running maximum after
/// burn_in stays within the pre-burn-in maximum (relative 1e-9); diverging if
/// the maxima of 10 equal windows over the whole trajectory grow by ratio
/// >= 1.1 across each of the last 5 window boundaries.
BoundVerdict empirical_bound(const Trajectory& traj, char which, int burn_in);

enum class CertStatus { Holds, ViolatedAt, NotApplicable };

struct CertResult {
    CertStatus status = CertStatus::NotApplicable;
    int violated_at = 0;  // 1-based generated index
    std::string reason;
};

/// Checks the fact's inequality at every generated index; relative tolerance
/// 1e-9 in float mode, exact comparison in exact mode. Existential facts are
/// not applicable.
CertResult validate_certificate(const Trajectory& traj, const ComparabilityFact& fact);

/// CSV with header n,x,y (17 significant digits); exact mode adds
/// x_num,x_den,y_num,y_den integer columns.
std::string trajectory_csv(const Trajectory& traj);

}  // namespace rde
