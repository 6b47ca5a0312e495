#include "recimap/pamap.hpp"

#include "recimap/systems.hpp"
#include "test_helpers.hpp"

#include "doctest.h"

#include <random>

using namespace recimap;

namespace {

// The involution exchanging [0, s) and [s, 1).
PAMap phi(const Scalar& s) { return make_scaling_involution(s).as_map; }

std::mt19937 rng(4242);

Scalar random_point_in(const Interval& iv) {
    std::uniform_int_distribution<int> num(0, 1 << 20);
    return iv.lo + iv.measure() * Scalar(num(rng), 1 << 20);
}

}  // namespace

TEST_CASE("apply picks the branch containing the point") {
    const PAMap f = phi(Scalar(1, 3));
    CHECK(f.apply(Scalar(0)) == Scalar(1, 3));
    CHECK(f.apply(Scalar(1, 2)) == Scalar(1, 12));
    // independent route: on [1/3,1) the map is (x - 1/3) / 2
    CHECK((Scalar(1, 2) - Scalar(1, 3)) / Scalar(2) == Scalar(1, 12));
    const PAMap id = PAMap::identity(Interval(Scalar(0), Scalar(1)));
    CHECK(id.apply(Scalar(3, 7)) == Scalar(3, 7));
    CHECK_THROWS_AS(f.apply(Scalar(2)), std::domain_error);
}

TEST_CASE("slope_at reads the local derivative") {
    const PAMap f = phi(Scalar(1, 3));
    CHECK(f.slope_at(Scalar(1, 10)) == Scalar(2));
    CHECK(f.slope_at(Scalar(1, 2)) == Scalar(1, 2));
    const PAMap id = PAMap::identity(Interval(Scalar(0), Scalar(1)));
    CHECK(id.slope_at(Scalar(9, 10)) == Scalar(1));
}

TEST_CASE("an involution composed with itself is the identity") {
    const PAMap f = phi(Scalar(1, 3));
    CHECK(compose(f, f) == PAMap::identity(Interval(Scalar(0), Scalar(1))));
    CHECK(invert(f) == f);
}

TEST_CASE("composition with the identity is neutral") {
    IETSpec spec{{Scalar(3, 10), Scalar(1, 2), Scalar(1, 5)}, {2, 1, 0}};
    const PAMap T = make_iet(spec);
    const PAMap id = PAMap::identity(Interval(Scalar(0), Scalar(1)));
    CHECK(compose(id, T) == T);
    CHECK(compose(T, id) == T);
    CHECK(invert(id) == id);
}

TEST_CASE("inverse round-trips 100 random points") {
    IETSpec spec{{Scalar(3, 10), Scalar(1, 2), Scalar(1, 5)}, {2, 1, 0}};
    const PAMap T = make_iet(spec);
    const PAMap T_inv = invert(T);
    for (int i = 0; i < 100; ++i) {
        const Scalar x = random_point_in(Interval(Scalar(0), Scalar(1)));
        CHECK(T_inv.apply(T.apply(x)) == x);
    }
    CHECK(compose(T_inv, T) == PAMap::identity(Interval(Scalar(0), Scalar(1))));
}

TEST_CASE("composition is associative") {
    std::mt19937 gen(99);
    for (int i = 0; i < 30; ++i) {
        const ReciprocalSystem sys = testing::random_system(gen);
        const PAMap& a = sys.Phi.as_map;
        const PAMap& b = sys.T;
        const PAMap& c = sys.F;
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("set images and preimages") {
    const PAMap f = phi(Scalar(1, 3));
    const IntervalSet S(Interval(Scalar(0), Scalar(1, 3)));
    CHECK(image_set(f, S) == IntervalSet(Interval(Scalar(1, 3), Scalar(1))));
    CHECK(preimage_set(f, IntervalSet{}).empty());
    CHECK(preimage_set(f, S) == IntervalSet(Interval(Scalar(1, 3), Scalar(1))));
    // measure scales by the branch slopes
    const IntervalSet E(Interval(Scalar(1, 6), Scalar(1, 2)));
    const Scalar expected = Scalar(2) * Scalar(1, 6) + Scalar(1, 2) * Scalar(1, 6);
    CHECK(image_set(f, E).measure() == expected);
}

TEST_CASE("image measure matches a Monte-Carlo slope integral") {
    // Estimate mu(F(E)) = integral of slope over E by sampling E uniformly.
    std::mt19937 gen(2025);
    const ReciprocalSystem sys = testing::fixture_system("wandering");
    const IntervalSet E(Interval(Scalar(1, 18), Scalar(5, 9)));
    const Scalar exact = image_set(sys.F, E).measure();

    const testing::FloatPAMap F(sys.F);
    const double e_lo = 1.0 / 18, e_len = 5.0 / 9 - e_lo;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int n = 100'000;
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < n; ++i) {
        const double x = e_lo + e_len * u(gen);
        double slope = 2.0;
        for (std::size_t b = 0; b < F.lo.size(); ++b)
            if (x >= F.lo[b] && x < F.hi[b]) slope = F.slope[b];
        sum += slope;
        sum_sq += slope * slope;
    }
    const double mean = sum / n;
    const double sigma = std::sqrt((sum_sq / n - mean * mean) / n);
    const double estimate = mean * e_len;
    CHECK(std::abs(estimate - to_double(exact)) < 3 * sigma * e_len + 1e-12);
}

TEST_CASE("restrict clips branches exactly") {
    const PAMap f = phi(Scalar(1, 3));
    const IntervalSet E(Interval(Scalar(1, 6), Scalar(1, 2)));
    const PAMap g = restrict(f, E);
    CHECK(g.domain_support() == E);
    CHECK(g.apply(Scalar(1, 4)) == f.apply(Scalar(1, 4)));
    CHECK_THROWS_AS(restrict(f, IntervalSet(Interval(Scalar(1, 2), Scalar(2)))),
                    std::invalid_argument);
}

TEST_CASE("bijection and measure-preservation predicates") {
    IETSpec spec{{Scalar(3, 10), Scalar(1, 2), Scalar(1, 5)}, {2, 1, 0}};
    const PAMap T = make_iet(spec);
    const Interval unit(Scalar(0), Scalar(1));
    CHECK(T.is_bijection_on(unit));
    CHECK(T.is_measure_preserving());
    const PAMap f = phi(Scalar(1, 3));
    CHECK(f.is_bijection_on(unit));
    CHECK(!f.is_measure_preserving());
    CHECK(!T.is_bijection_on(Interval(Scalar(0), Scalar(1, 2))));
}

TEST_CASE("injectivity is enforced") {
    // Two branches mapping onto the same interval must be rejected.
    std::vector<AffineBranch> bad;
    bad.emplace_back(Interval(Scalar(0), Scalar(1, 2)), Scalar(1), Scalar(0));
    bad.emplace_back(Interval(Scalar(1, 2), Scalar(1)), Scalar(1), Scalar(-1, 2));
    CHECK_THROWS_AS(PAMap(std::move(bad)), std::invalid_argument);
}

TEST_CASE("overlapping domains are rejected") {
    std::vector<AffineBranch> bad;
    bad.emplace_back(Interval(Scalar(0), Scalar(2, 3)), Scalar(1), Scalar(0));
    bad.emplace_back(Interval(Scalar(1, 2), Scalar(1)), Scalar(1), Scalar(1));
    CHECK_THROWS_AS(PAMap(std::move(bad)), std::invalid_argument);
}

TEST_CASE("nonpositive slopes are rejected") {
    CHECK_THROWS_AS(AffineBranch(Interval(Scalar(0), Scalar(1)), Scalar(0), Scalar(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(AffineBranch(Interval(Scalar(0), Scalar(1)), Scalar(-1), Scalar(0)),
                    std::invalid_argument);
}
