#pragma once

#include "rde/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace rde {

/// Coefficients by lag: entry [i-1] multiplies the term with lag i.
using CoefficientVector = std::vector<Rational>;

/// Subset of {1..k}, kept sorted and duplicate-free.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<int> lags);
    explicit IndexSet(std::vector<int> lags);

    bool contains(int lag) const;
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }
    const std::vector<int>& members() const { return members_; }

    bool subset_of(const IndexSet& other) const;
    friend IndexSet set_union(const IndexSet& a, const IndexSet& b);
    friend IndexSet set_difference(const IndexSet& a, const IndexSet& b);
    bool operator==(const IndexSet& other) const = default;

    std::string to_string() const;  // "{1,2}" or "{}"

private:
    std::vector<int> members_;
};

/// Full parameter set of one k-th order system:
///   x_n = (x_num_const + sum x_num_x[i]*x_{n-i} + sum x_num_y[i]*y_{n-i})
///         / (x_den_const + sum x_den_x[j]*x_{n-j} + sum x_den_y[j]*y_{n-j})
/// and the same shape for y_n.
struct RationalSystem {
    int k = 1;
    Rational x_num_const;       // alpha
    CoefficientVector x_num_x;  // beta
    CoefficientVector x_num_y;  // gamma
    Rational x_den_const;       // A
    CoefficientVector x_den_x;  // B
    CoefficientVector x_den_y;  // C
    Rational y_num_const;       // p
    CoefficientVector y_num_x;  // delta
    CoefficientVector y_num_y;  // epsilon
    Rational y_den_const;       // q
    CoefficientVector y_den_x;  // D
    CoefficientVector y_den_y;  // E

    bool operator==(const RationalSystem&) const = default;
};

/// The eight lag sets with positive coefficients, precomputed.
struct SystemIndexSets {
    IndexSet beta, gamma, delta, epsilon;
    IndexSet B, C, D, E;
};

IndexSet index_set(const CoefficientVector& coeffs);
SystemIndexSets index_sets(const RationalSystem& sys);

/// Minimum over the strictly positive arguments; throws std::invalid_argument
/// when both are zero.
Rational min_plus(const Rational& a, const Rational& b);

/// Exchanges the two equations under the renaming used to apply x-results to
/// y: beta<->epsilon, B<->E, gamma<->delta, C<->D, alpha<->p, A<->q.
RationalSystem swap_system(const RationalSystem& sys);

/// Empty list means valid.
std::vector<std::string> validate_system(const RationalSystem& sys);

}  // namespace rde
