#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "symsep/tsirelson.hpp"

using namespace symsep;

namespace {

CoordVector segment(int first, int last) {
    CoordVector x;
    for (int i = first; i <= last; ++i) x.set(i, 1.0);
    return x;
}

}  // namespace

TEST_CASE("basis vectors are normalized") {
    for (int n : {1, 2, 5, 17}) CHECK(tsirelsonNorm(CoordVector::basis(n)) == 1.0);
    CHECK(tsirelsonNorm(CoordVector()) == 0.0);
}

TEST_CASE("small closed cases") {
    // support {2,3}: k=2 <= min E_1 = 2 gives (1/2)(1+1) = 1, ties the sup part
    CHECK(tsirelsonNorm(CoordVector::basis(2) + CoordVector::basis(3)) == 1.0);
    // support {3,4,5}: singletons with k=3 <= 3 give 3/2
    CHECK(tsirelsonNorm(segment(3, 5)) == 1.5);
    // support {1,2}: only k=1 is admissible, so the sup part wins
    CHECK(tsirelsonNorm(CoordVector::basis(1) + CoordVector::basis(2)) == 1.0);
}

TEST_CASE("certificate recomputes its own value") {
    const CoordVector x = segment(3, 5);
    const TsirelsonCertificate cert = tsirelsonCertificate(x);
    CHECK(cert.value == 1.5);
    REQUIRE(cert.partition.size() == 3);
    // admissibility: intervals strictly increasing, k <= min E_1
    CHECK(static_cast<int>(cert.partition.size()) <= cert.partition.front().first);
    double total = 0.0;
    for (std::size_t j = 0; j < cert.partition.size(); ++j) {
        const auto& interval = cert.partition[j];
        CHECK(interval.first <= interval.last);
        if (j > 0) CHECK(interval.first > cert.partition[j - 1].last);
        total += tsirelsonNorm(x.restrict(interval.first, interval.last));
    }
    CHECK(0.5 * total == doctest::Approx(cert.value).epsilon(1e-12));

    // sup-attained case reports an empty partition
    const TsirelsonCertificate flat = tsirelsonCertificate(CoordVector::basis(1));
    CHECK(flat.value == 1.0);
    CHECK(flat.partition.empty());
}

TEST_CASE("oracle equivalence on structured and random vectors") {
    CHECK(tsirelsonOracle(CoordVector::basis(1)) == 1.0);
    CHECK(tsirelsonOracle(CoordVector()) == 0.0);
    CHECK(tsirelsonOracle(segment(3, 5)) == 1.5);
    // x = sum_{i=k}^{2k-1} e_i, k = 4
    CHECK(tsirelsonOracle(segment(4, 7)) == tsirelsonNorm(segment(4, 7)));

    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> size(1, 8), index(1, 16), value(0, 3);
    const double values[4] = {1.0, -1.0, 2.0, -2.0};
    for (int t = 0; t < 60; ++t) {
        CoordVector x;
        const int n = size(rng);
        while (static_cast<int>(x.supportSize()) < n) x.set(index(rng), values[value(rng)]);
        CHECK(tsirelsonNorm(x) == tsirelsonOracle(x));
    }

    CoordVector wide;
    for (int i = 1; i <= 13; ++i) wide.set(i, 1.0);
    CHECK_THROWS_AS(tsirelsonOracle(wide), std::invalid_argument);
}

TEST_CASE("1-unconditionality and permutation of values") {
    std::mt19937_64 rng(556);
    std::uniform_int_distribution<int> index(1, 12);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        CoordVector x, flipped;
        for (int i = 0; i < 5; ++i) {
            const int idx = index(rng);
            const double v = gauss(rng);
            x.set(idx, v);
            flipped.set(idx, (idx % 2 == 0) ? -v : v);
        }
        CHECK(tsirelsonNorm(x) == doctest::Approx(tsirelsonNorm(flipped)).epsilon(1e-12));
    }
}

TEST_CASE("coordinate monotonicity") {
    // dropping a coordinate never increases the norm
    std::mt19937_64 rng(557);
    std::uniform_int_distribution<int> index(1, 12);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int t = 0; t < 30; ++t) {
        CoordVector x;
        for (int i = 0; i < 6; ++i) x.set(index(rng), gauss(rng));
        if (x.isZero()) continue;
        CoordVector y = x;
        y.set(x.minIndex(), 0.0);
        CHECK(tsirelsonNorm(y) <= tsirelsonNorm(x) + 1e-12);
    }
}

TEST_CASE("segments e_k..e_{2k-1} have norm at least k/2") {
    for (int k = 1; k <= 8; ++k) {
        const double value = tsirelsonNorm(segment(k, 2 * k - 1));
        CHECK(value >= k / 2.0 - 1e-12);
    }
}

TEST_CASE("spreading certificate") {
    const SpreadingCertificate c1 = l1SpreadingCertificate({3, 4, 5}, {1, 1, 1}, 0.5);
    CHECK(c1.value == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(c1.pass);
    const SpreadingCertificate c2 = l1SpreadingCertificate({7}, {-1}, 1.0);
    CHECK(c2.value == 1.0);
    CHECK(c2.pass);
    const SpreadingCertificate c3 = l1SpreadingCertificate({3, 4, 5}, {1, -1, 1}, 0.5);
    CHECK(c3.pass);

    CHECK_THROWS_AS(l1SpreadingCertificate({1, 2}, {1}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(l1SpreadingCertificate({2, 2}, {1, 1}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(l1SpreadingCertificate({1, 2}, {1, 2}, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(l1SpreadingCertificate({}, {}, 0.5), std::invalid_argument);
}
