#include "doctest.h"
#include "helpers.hpp"
#include "rde/core_model.hpp"

#include <stdexcept>

using namespace rde;

TEST_CASE("IndexSet sorts, deduplicates and prints") {
    IndexSet s{3, 1, 2, 1};
    CHECK(s.members() == std::vector<int>{1, 2, 3});
    CHECK(s.contains(2));
    CHECK(!s.contains(4));
    CHECK(s.to_string() == "{1,2,3}");
    CHECK(IndexSet{}.to_string() == "{}");
    CHECK(IndexSet{}.empty());
}

TEST_CASE("IndexSet subset, union and difference") {
    IndexSet a{1, 3}, b{1, 2, 3}, c{2};
    CHECK(a.subset_of(b));
    CHECK(!b.subset_of(a));
    CHECK(IndexSet{}.subset_of(a));
    CHECK(set_union(a, c) == b);
    CHECK(set_difference(b, a) == c);
    CHECK(set_difference(a, b) == IndexSet{});
}

TEST_CASE("index_set keeps only strictly positive coefficients") {
    CoefficientVector v{Rational(0), Rational(1) / 2, Rational(0), Rational(3)};
    CHECK(index_set(v) == IndexSet{2, 4});
    CHECK(index_set(CoefficientVector{Rational(0), Rational(0)}) == IndexSet{});
}

TEST_CASE("min_plus ignores zero arguments and rejects the empty case") {
    CHECK(min_plus(Rational(3), Rational(5)) == 3);
    CHECK(min_plus(Rational(0), Rational(5)) == 5);
    CHECK(min_plus(Rational(3), Rational(0)) == 3);
    CHECK_THROWS_AS(min_plus(Rational(0), Rational(0)), std::invalid_argument);
}

TEST_CASE("swap_system exchanges the documented parameter groups") {
    RationalSystem s = worked_system();
    RationalSystem w = swap_system(s);
    CHECK(w.x_num_const == s.y_num_const);  // alpha' = p
    CHECK(w.x_num_x == s.y_num_y);          // beta' = epsilon
    CHECK(w.x_num_y == s.y_num_x);          // gamma' = delta
    CHECK(w.x_den_const == s.y_den_const);  // A' = q
    CHECK(w.x_den_x == s.y_den_y);          // B' = E
    CHECK(w.x_den_y == s.y_den_x);          // C' = D
    CHECK(w.y_num_const == s.x_num_const);
    CHECK(w.y_num_x == s.x_num_y);
    CHECK(w.y_num_y == s.x_num_x);
    CHECK(w.y_den_const == s.x_den_const);
    CHECK(w.y_den_x == s.x_den_y);
    CHECK(w.y_den_y == s.x_den_x);
}

TEST_CASE("swap_system is an involution on random systems") {
    std::mt19937_64 rng(20260823);
    for (int i = 0; i < 200; ++i) {
        RationalSystem s = random_system(rng);
        CHECK(swap_system(swap_system(s)) == s);
    }
}

TEST_CASE("index_sets of the swapped system are the swapped index sets") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        RationalSystem s = random_system(rng);
        SystemIndexSets a = index_sets(s);
        SystemIndexSets b = index_sets(swap_system(s));
        CHECK(b.beta == a.epsilon);
        CHECK(b.gamma == a.delta);
        CHECK(b.delta == a.gamma);
        CHECK(b.epsilon == a.beta);
        CHECK(b.B == a.E);
        CHECK(b.C == a.D);
        CHECK(b.D == a.C);
        CHECK(b.E == a.B);
    }
}

TEST_CASE("validate_system accepts the worked example") {
    CHECK(validate_system(worked_system()).empty());
}

TEST_CASE("validate_system rejects bad orders, lengths, signs and zero denominators") {
    RationalSystem s = worked_system();
    s.k = 0;
    CHECK(!validate_system(s).empty());

    s = worked_system();
    s.x_num_x.pop_back();
    auto v = validate_system(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("x.num.x") != std::string::npos);

    s = worked_system();
    s.y_den_y[0] = -1;
    v = validate_system(s);
    REQUIRE(v.size() == 1);
    CHECK(v[0].find("negative") != std::string::npos);

    s = zero_system(2);  // both denominators identically zero
    v = validate_system(s);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == "x denominator identically zero");
    CHECK(v[1] == "y denominator identically zero");
}
