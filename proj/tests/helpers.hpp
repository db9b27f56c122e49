#pragma once

#include "rde/core_model.hpp"

#include <random>

namespace rde {

inline RationalSystem zero_system(int k) {
    RationalSystem s;
    s.k = k;
    CoefficientVector z(static_cast<std::size_t>(k), Rational(0));
    s.x_num_x = s.x_num_y = s.x_den_x = s.x_den_y = z;
    s.y_num_x = s.y_num_y = s.y_den_x = s.y_den_y = z;
    return s;
}

// Worked example used across the unit tests; all four comparability theorems
// apply and the constants were computed by hand:
//   x_n = (2 + 3 x_{n-1} + (1/2) y_{n-2}) / (1 + 2 x_{n-1} + 4 y_{n-2})
//   y_n = (5 +   x_{n-1} + (1/4) y_{n-2}) / (3 + (1/2) x_{n-1} + 2 y_{n-2})
inline RationalSystem worked_system() {
    RationalSystem s = zero_system(2);
    s.x_num_const = 2;
    s.x_num_x = {3, 0};
    s.x_num_y = {0, Rational(1) / 2};
    s.x_den_const = 1;
    s.x_den_x = {2, 0};
    s.x_den_y = {0, 4};
    s.y_num_const = 5;
    s.y_num_x = {1, 0};
    s.y_num_y = {0, Rational(1) / 4};
    s.y_den_const = 3;
    s.y_den_x = {Rational(1) / 2, 0};
    s.y_den_y = {0, 2};
    return s;
}

// Random system with parameters drawn from {0, 1/2, 1, 2} and valid
// denominators; used for property tests.
inline RationalSystem random_system(std::mt19937_64& rng, int max_k = 3) {
    std::uniform_int_distribution<int> kd(1, max_k);
    std::uniform_int_distribution<int> vd(0, 3);
    const Rational values[4] = {Rational(0), Rational(1) / 2, Rational(1), Rational(2)};
    for (;;) {
        RationalSystem s = zero_system(kd(rng));
        auto draw = [&]() { return values[vd(rng)]; };
        auto fill = [&](CoefficientVector& v) {
            for (auto& e : v) e = draw();
        };
        s.x_num_const = draw();
        s.x_den_const = draw();
        s.y_num_const = draw();
        s.y_den_const = draw();
        fill(s.x_num_x);
        fill(s.x_num_y);
        fill(s.x_den_x);
        fill(s.x_den_y);
        fill(s.y_num_x);
        fill(s.y_num_y);
        fill(s.y_den_x);
        fill(s.y_den_y);
        if (validate_system(s).empty()) return s;
    }
}

}  // namespace rde
