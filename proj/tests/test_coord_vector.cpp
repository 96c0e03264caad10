#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "symsep/coord_vector.hpp"

using symsep::CoordVector;

TEST_CASE("basis and staircase constructors") {
    const CoordVector e1 = CoordVector::basis(1);
    CHECK(e1.coeff(1) == 1.0);
    CHECK(e1.supportSize() == 1);
    CHECK_THROWS_AS(CoordVector::basis(0), std::invalid_argument);

    const CoordVector s1 = CoordVector::staircaseC0(1);
    CHECK(s1 == CoordVector{{1, 1.0}, {2, -1.0}});
    const CoordVector s3 = CoordVector::staircaseC0(3);
    CHECK(s3 == CoordVector{{1, 1.0}, {2, 1.0}, {3, 1.0}, {4, -1.0}});
    CHECK_THROWS_AS(CoordVector::staircaseC0(0), std::invalid_argument);
}

TEST_CASE("zero entries are never stored") {
    CoordVector x;
    x.set(3, 2.0);
    x.set(3, 0.0);
    CHECK(x.isZero());
    CHECK(x.supportSize() == 0);

    // additive inverse cancels to the empty support
    CoordVector y = CoordVector::basis(1);
    y += -CoordVector::basis(1);
    CHECK(y.isZero());

    // partial cancellation keeps only the surviving entry
    CoordVector z{{1, 1.0}, {2, -1.0}};
    z += CoordVector::basis(2);
    CHECK(z == CoordVector::basis(1));
}

TEST_CASE("indices are positive and support is sorted") {
    CoordVector x;
    CHECK_THROWS_AS(x.set(0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(x.set(-2, 1.0), std::invalid_argument);

    x.set(5, 1.0);
    x.set(2, -1.0);
    x.set(9, 0.5);
    const auto support = x.support();
    REQUIRE(support.size() == 3);
    CHECK(support[0] == 2);
    CHECK(support[1] == 5);
    CHECK(support[2] == 9);
    CHECK(x.minIndex() == 2);
    CHECK(x.maxIndex() == 9);
}

TEST_CASE("min/max index of the zero vector throws") {
    const CoordVector zero;
    CHECK_THROWS_AS(zero.minIndex(), std::domain_error);
    CHECK_THROWS_AS(zero.maxIndex(), std::domain_error);
}

TEST_CASE("disjoint-support addition") {
    const CoordVector sum = CoordVector::basis(1) + CoordVector::basis(2);
    CHECK(sum == CoordVector{{1, 1.0}, {2, 1.0}});
}

TEST_CASE("restrict keeps exactly the entries in the interval") {
    const CoordVector x{{1, 1.0}, {3, 2.0}};
    CHECK(x.restrict(2, 3) == CoordVector{{3, 2.0}});
    CHECK(x.restrict(1, x.maxIndex()) == x);
    CHECK(CoordVector::basis(5).restrict(1, 4).isZero());
    CHECK_THROWS_AS(x.restrict(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(x.restrict(3, 2), std::invalid_argument);
}

TEST_CASE("dot product") {
    const CoordVector x{{1, 3.0}, {2, -4.0}};
    const CoordVector f{{1, 1.0}, {2, -1.0}};
    CHECK(x.dot(f) == 7.0);
    CHECK(x.dot(CoordVector()) == 0.0);
    CHECK(x.dot(CoordVector::basis(7)) == 0.0);
}

TEST_CASE("scalar multiplication and negation") {
    CoordVector x{{2, 1.5}};
    x *= 2.0;
    CHECK(x.coeff(2) == 3.0);
    CHECK((0.0 * x).isZero());
    CHECK((-x).coeff(2) == -3.0);
}

TEST_CASE("block order") {
    using symsep::strictlyBefore;
    const CoordVector a{{1, 1.0}, {2, 1.0}};
    const CoordVector b{{3, -1.0}};
    const CoordVector c{{4, 1.0}, {6, 1.0}};
    CHECK(strictlyBefore(a, b));
    CHECK(strictlyBefore(b, c));
    CHECK(strictlyBefore(a, c));  // transitive
    CHECK_FALSE(strictlyBefore(b, a));
    CHECK_FALSE(strictlyBefore(a, a));  // irreflexive
    CHECK_FALSE(strictlyBefore(a, CoordVector{{2, 1.0}}));  // touching supports
    CHECK_FALSE(strictlyBefore(CoordVector(), a));
    CHECK_FALSE(strictlyBefore(a, CoordVector()));
}
