#include "recimap/systems.hpp"

#include "test_helpers.hpp"

#include "doctest.h"

#include <random>

using namespace recimap;

TEST_CASE("three-interval reversing exchange") {
    IETSpec spec{{Scalar(3, 10), Scalar(1, 2), Scalar(1, 5)}, {2, 1, 0}};
    const PAMap T = make_iet(spec);
    // A = [0, 0.3) lands on [0.7, 1), B on [0.2, 0.7), C on [0, 0.2)
    CHECK(T.apply(Scalar(0)) == Scalar(7, 10));
    CHECK(T.apply(Scalar(3, 10)) == Scalar(2, 10));
    CHECK(T.apply(Scalar(8, 10)) == Scalar(0));
    CHECK(T.is_bijection_on(Interval(Scalar(0), Scalar(1))));
}

TEST_CASE("identity permutation gives the identity map") {
    IETSpec spec{{Scalar(1, 4), Scalar(1, 4), Scalar(1, 2)}, {0, 1, 2}};
    CHECK(make_iet(spec) == PAMap::identity(Interval(Scalar(0), Scalar(1))));
}

TEST_CASE("four-interval exchange matches its picture") {
    // lengths 1/9, 2/9, 4/9, 2/9 with image row D, A, C, B
    IETSpec spec{{Scalar(1, 9), Scalar(2, 9), Scalar(4, 9), Scalar(2, 9)}, {1, 3, 2, 0}};
    const PAMap T = make_iet(spec);
    CHECK(image_set(T, IntervalSet(Interval(Scalar(0), Scalar(1, 9)))) ==
          IntervalSet(Interval(Scalar(2, 9), Scalar(3, 9))));
    CHECK(image_set(T, IntervalSet(Interval(Scalar(1, 9), Scalar(3, 9)))) ==
          IntervalSet(Interval(Scalar(7, 9), Scalar(1))));
    CHECK(image_set(T, IntervalSet(Interval(Scalar(3, 9), Scalar(7, 9)))) ==
          IntervalSet(Interval(Scalar(3, 9), Scalar(7, 9))));
    CHECK(image_set(T, IntervalSet(Interval(Scalar(7, 9), Scalar(1)))) ==
          IntervalSet(Interval(Scalar(0), Scalar(2, 9))));
}

TEST_CASE("make_iet validates its spec") {
    CHECK_THROWS_AS(make_iet({{Scalar(1, 2), Scalar(1, 3)}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_iet({{Scalar(1, 2), Scalar(1, 2)}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_iet({{Scalar(3, 2), Scalar(-1, 2)}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("scaling involution basics") {
    const ScalingInvolution phi = make_scaling_involution(Scalar(1, 3));
    CHECK(phi.rho == Scalar(2));
    CHECK(phi.as_map.slope_at(Scalar(1, 10)) == Scalar(2));
    CHECK(phi.as_map.slope_at(Scalar(1, 2)) == Scalar(1, 2));
    CHECK(make_scaling_involution(Scalar(1, 4)).rho == Scalar(3));
    CHECK_THROWS_AS(make_scaling_involution(Scalar(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(make_scaling_involution(Scalar(0)), std::invalid_argument);
    CHECK_THROWS_AS(make_scaling_involution(Scalar(-1, 3)), std::invalid_argument);
}

TEST_CASE("nonsurjective example composes to its picture") {
    // image row C, A, D, B at 0, 1/6, 1/3, 5/6, 1; after the involution the
    // image row of F reads D, B, C, A at 0, 1/4, 1/3, 2/3, 1.
    IETSpec spec{{Scalar(1, 6), Scalar(1, 6), Scalar(1, 6), Scalar(1, 2)}, {1, 3, 0, 2}};
    const ReciprocalSystem sys = make_reciprocal(spec, Scalar(1, 3));
    const auto img = [&](long long n1, long long d1, long long n2, long long d2) {
        return image_set(sys.F, IntervalSet(Interval(Scalar(n1, d1), Scalar(n2, d2))));
    };
    CHECK(img(0, 1, 1, 6) == IntervalSet(Interval(Scalar(2, 3), Scalar(1))));
    CHECK(img(1, 6, 1, 3) == IntervalSet(Interval(Scalar(1, 4), Scalar(1, 3))));
    CHECK(img(1, 3, 1, 2) == IntervalSet(Interval(Scalar(1, 3), Scalar(2, 3))));
    CHECK(img(1, 2, 1, 1) == IntervalSet(Interval(Scalar(0), Scalar(1, 4))));
}

TEST_CASE("identity exchange turns F into the involution") {
    IETSpec spec{{Scalar(1)}, {0}};
    const ReciprocalSystem sys = make_reciprocal(spec, Scalar(1, 3));
    CHECK(sys.F == sys.Phi.as_map);
    CHECK(check_conjugacy(sys));
}

TEST_CASE("pair rotation reproduces the figure coordinates") {
    const ReciprocalSystem sys = testing::fixture_system("pair_rotation");
    // F image row: D, C, B, A at 0, 0.146, 0.333, 0.516, 1
    const double expected[] = {0.0, 0.146, 0.333, 0.516, 1.0};
    std::vector<double> got{0.0};
    for (const auto& br : sys.F.branches()) got.push_back(to_double(br.domain.hi));
    std::vector<double> img_breaks{to_double(sys.F.image_support().intervals().front().lo)};
    {
        std::vector<double> ends;
        for (const auto& br : sys.F.branches()) {
            ends.push_back(to_double(br.image().lo));
            ends.push_back(to_double(br.image().hi));
        }
        std::sort(ends.begin(), ends.end());
        ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
        img_breaks = ends;
    }
    REQUIRE(img_breaks.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(img_breaks[i] - expected[i]) < 1e-3);
    CHECK(sys.F.branches().size() == 4);
}

TEST_CASE("conjugacy through the involution") {
    const ReciprocalSystem sys = testing::fixture_system("pair_rotation");
    CHECK(check_conjugacy(sys));

    std::mt19937 rng(7);
    for (int i = 0; i < 25; ++i) {
        const ReciprocalSystem rand_sys = testing::random_system(rng);
        CHECK(check_conjugacy(rand_sys));
    }
}

TEST_CASE("constructed systems satisfy the slope dichotomy") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> num(0, 1 << 16);
    for (int i = 0; i < 25; ++i) {
        const ReciprocalSystem sys = testing::random_system(rng);
        const Scalar rho_inv = Scalar(1) / sys.rho;
        const IntervalSet up = preimage_set(sys.T, IntervalSet(sys.S));
        for (int j = 0; j < 40; ++j) {
            const Scalar x(num(rng), 1 << 16);
            const Scalar slope = sys.F.slope_at(x);
            CHECK((slope == sys.rho || slope == rho_inv));
            CHECK((slope == sys.rho) == up.contains(x));
        }
        CHECK(sys.F.is_bijection_on(Interval(Scalar(0), Scalar(1))));
        CHECK(compose(sys.Phi.as_map, sys.Phi.as_map) ==
              PAMap::identity(Interval(Scalar(0), Scalar(1))));
    }
}

TEST_CASE("lengths in mixed fields are rejected") {
    IETSpec spec;
    spec.lengths = {Scalar(Rational(1, 2), Rational(1, 10), 2),
                    Scalar(Rational(1, 2), Rational(-1, 10), 3)};
    spec.permutation = {1, 0};
    CHECK_THROWS(make_reciprocal(spec, Scalar(1, 3)));
}
