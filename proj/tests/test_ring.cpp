#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qlab/series.hpp"
#include "test_util.hpp"

using namespace qlab;

namespace {
ZSeries zpoly(std::int64_t min_exp, std::vector<long> v, std::int64_t order = kExactOrder) {
    std::vector<BigInt> c(v.begin(), v.end());
    return ZSeries(min_exp, std::move(c), order);
}
}  // namespace

TEST_CASE("eisenstein basics") {
    Eisenstein w = Eisenstein::omega();
    Eisenstein w2 = Eisenstein::omega2();
    CHECK(w * w == w2);
    CHECK(w * w * w == Eisenstein(1));          // w^3 = 1
    CHECK(Eisenstein(1) + w + w2 == Eisenstein(0));  // 1 + w + w^2 = 0
    CHECK(conj(w) == w2);
    CHECK(conj(w2) == w);
    CHECK(conj(conj(Eisenstein(BigInt(3), BigInt(-5)))) == Eisenstein(BigInt(3), BigInt(-5)));
    CHECK(is_unit(w));
    CHECK(is_unit(-w2));
    CHECK_FALSE(is_unit(Eisenstein(2)));
    CHECK(w * unit_inverse(w) == Eisenstein(1));
}

TEST_CASE("add basics") {
    // (1 + q) + q = 1 + 2q
    CHECK(add(zpoly(0, {1, 1}), zpoly(1, {1})) == zpoly(0, {1, 2}));
    // f + 0 = f
    ZSeries f = zpoly(-2, {3, 0, -1});
    CHECK(add(f, ZSeries::zero()) == f);
    // q^-1 + (-q^-1) = 0
    CHECK(add(ZSeries::monomial(BigInt(1), -1), ZSeries::monomial(BigInt(-1), -1)).is_zero());
}

TEST_CASE("mul basics") {
    // (1 - q)(1 + q) = 1 - q^2
    CHECK(mul(zpoly(0, {1, -1}), zpoly(0, {1, 1})) == zpoly(0, {1, 0, -1}));
    // q^-2 * q^5 = q^3
    CHECK(mul(ZSeries::monomial(BigInt(1), -2), ZSeries::monomial(BigInt(1), 5)) ==
          ZSeries::monomial(BigInt(1), 3));
    // (1 + q + q^2)^2 = 1 + 2q + 3q^2 + 2q^3 + q^4
    ZSeries f = zpoly(0, {1, 1, 1});
    CHECK(mul(f, f) == zpoly(0, {1, 2, 3, 2, 1}));
}

TEST_CASE("mul tracks truncation order") {
    ZSeries f = zpoly(0, {1, 1}, 10);
    ZSeries g = zpoly(2, {1}, 12);
    ZSeries h = mul(f, g);
    CHECK(h.order() == 12);  // min(10 + 2, 12 + 0)
    ZSeries exact = mul(zpoly(0, {1, 1}), zpoly(2, {1}));
    CHECK(exact.is_exact());
}

TEST_CASE("invert_unit examples") {
    // 1/(1-q) = 1 + q + q^2 + ...
    ZSeries inv = invert_unit(zpoly(0, {1, -1}), 5);
    CHECK(inv == zpoly(0, {1, 1, 1, 1, 1, 1}, 5));
    // invert(1) = 1
    CHECK(invert_unit(ZSeries::one(), 4) == ZSeries::one(4));
    // 1/((1-q)(1-q^2)) counts partitions into parts <= 2
    ZSeries f = mul(zpoly(0, {1, -1}), zpoly(0, {1, 0, -1}));
    CHECK(invert_unit(f, 5) == zpoly(0, {1, 1, 2, 2, 3, 3}, 5));
}

TEST_CASE("invert_unit error paths") {
    CHECK_THROWS_AS(invert_unit(zpoly(0, {2, 1}), 5), NotInvertibleError);
    CHECK_THROWS_AS(invert_unit(zpoly(1, {1, 1}), 5), NotInvertibleError);  // valuation 1
    CHECK_THROWS_AS(invert_unit(zpoly(0, {1, -1})), NotInvertibleError);    // exact, no order
}

TEST_CASE("reflect_exponents examples") {
    // q^2 + q^5 -> q^-5 + q^-2
    ZSeries f = add(ZSeries::monomial(BigInt(1), 2), ZSeries::monomial(BigInt(1), 5));
    ZSeries r = reflect_exponents(f);
    CHECK(r.coeff(-2) == 1);
    CHECK(r.coeff(-5) == 1);
    CHECK(reflect_exponents(ZSeries::one()) == ZSeries::one());
    ZSeries g = add(ZSeries::monomial(BigInt(3), 1), ZSeries::monomial(BigInt(-1), 4));
    CHECK(reflect_exponents(reflect_exponents(g)) == g);
    // refuses truncated series: coefficients above the order are unknown
    CHECK_THROWS_AS(reflect_exponents(zpoly(0, {1, 1}, 8)), ExactnessError);
}

TEST_CASE("conjugate_series examples") {
    Eisenstein w = Eisenstein::omega();
    ESeries f = ESeries::monomial(w, 1);
    CHECK(conjugate_series(f) == ESeries::monomial(Eisenstein::omega2(), 1));
    // integer-coefficient series unchanged
    ESeries g = promote(zpoly(-1, {2, -3, 4}, 9));
    CHECK(conjugate_series(g) == g);
    std::mt19937_64 rng = testutil::make_rng(7);
    for (int i = 0; i < 50; ++i) {
        ESeries h = testutil::random_eseries(rng);
        CHECK(conjugate_series(conjugate_series(h)) == h);
    }
}

TEST_CASE("substitute_power examples") {
    CHECK(substitute_power(zpoly(0, {1, 1}), 3) == zpoly(0, {1, 0, 0, 1}));
    ZSeries f = zpoly(-1, {2, 0, 5}, 11);
    CHECK(substitute_power(f, 1) == f);
    CHECK(substitute_power(zpoly(0, {1, -1, 1}), 2) == zpoly(0, {1, 0, -1, 0, 1}));
    // order scales with k
    CHECK(substitute_power(zpoly(0, {1}, 7), 3).order() == 21);
}

TEST_CASE("truncate is explicit and order-correct") {
    ZSeries f = zpoly(0, {1, 2, 3, 4, 5});
    ZSeries t = truncate(f, 2);
    CHECK(t.order() == 2);
    CHECK(t.coeff(2) == 3);
    CHECK(t.max_stored_exp() == 2);
}

TEST_CASE("equality ignores stored zero padding") {
    ZSeries a(0, {BigInt(0), BigInt(1), BigInt(0)}, 10);
    ZSeries b(1, {BigInt(1)}, 10);
    CHECK(a == b);
    CHECK(trimmed(a).min_exp() == 1);
}

TEST_CASE("ring axioms hold on randomized operands") {
    std::mt19937_64 rng = testutil::make_rng(11);
    for (int i = 0; i < 1000; ++i) {
        ZSeries f = testutil::random_zseries(rng);
        ZSeries g = testutil::random_zseries(rng);
        ZSeries h = testutil::random_zseries(rng);
        CHECK(add(f, g) == add(g, f));
        CHECK(add(add(f, g), h) == add(f, add(g, h)));
        CHECK(agree_through(mul(f, g), mul(g, f),
                            std::min(mul(f, g).order(), mul(g, f).order())));
        ZSeries lhs = mul(f, add(g, h));
        ZSeries rhs = add(mul(f, g), mul(f, h));
        CHECK(agree_through(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
    for (int i = 0; i < 1000; ++i) {
        ESeries f = testutil::random_eseries(rng);
        ESeries g = testutil::random_eseries(rng);
        ESeries h = testutil::random_eseries(rng);
        ESeries lhs = mul(f, add(g, h));
        ESeries rhs = add(mul(f, g), mul(f, h));
        CHECK(agree_through(lhs, rhs, std::min(lhs.order(), rhs.order())));
    }
}

TEST_CASE("invert_unit composes to one on random unit series") {
    std::mt19937_64 rng = testutil::make_rng(13);
    for (int i = 0; i < 1000; ++i) {
        ZSeries f = testutil::random_unit_zseries(rng, 30);
        ZSeries g = invert_unit(f, 30);
        CHECK(agree_through(mul(f, g), ZSeries::one(30), 30));
    }
    for (int i = 0; i < 200; ++i) {
        ESeries f = testutil::random_unit_eseries(rng, 20);
        ESeries g = invert_unit(f, 20);
        CHECK(agree_through(mul(f, g), ESeries::one(20), 20));
    }
}

TEST_CASE("conjugation is a ring homomorphism") {
    std::mt19937_64 rng = testutil::make_rng(17);
    for (int i = 0; i < 1000; ++i) {
        ESeries f = testutil::random_eseries(rng);
        ESeries g = testutil::random_eseries(rng);
        CHECK(conjugate_series(add(f, g)) == add(conjugate_series(f), conjugate_series(g)));
        CHECK(conjugate_series(mul(f, g)) == mul(conjugate_series(f), conjugate_series(g)));
    }
}

TEST_CASE("reflection is multiplicative on Laurent polynomials") {
    std::mt19937_64 rng = testutil::make_rng(19);
    for (int i = 0; i < 1000; ++i) {
        ZSeries f = testutil::random_zseries(rng, true, true);
        ZSeries g = testutil::random_zseries(rng, true, true);
        CHECK(reflect_exponents(mul(f, g)) ==
              mul(reflect_exponents(f), reflect_exponents(g)));
    }
}

TEST_CASE("promotion is explicit and injective") {
    ZSeries f = zpoly(-1, {1, -2, 3}, 6);
    ESeries e = promote(f);
    CHECK(e.coeff(-1) == Eisenstein(1));
    CHECK(e.coeff(1) == Eisenstein(3));
    CHECK(e.order() == 6);
    // mixing the two rings without promote() does not typecheck
    static_assert(!std::is_invocable_v<decltype(qlab::add<Eisenstein>), const ZSeries&,
                                       const ESeries&>);
}
