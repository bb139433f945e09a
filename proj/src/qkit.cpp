#include "qlab/qkit.hpp"

namespace qlab {

ZSeries pochhammer_z(std::int64_t e, std::int64_t k, std::optional<std::int64_t> n,
                     std::int64_t order) {
    PochhammerSpec<BigInt> spec;
    spec.coefficient = 1;
    spec.exponent = e;
    spec.base_power = k;
    spec.length = n;
    return pochhammer(spec, order);
}

ZSeries inv_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                    std::int64_t order) {
    std::vector<BigInt> w(static_cast<std::size_t>(order) + 1);
    w[0] = 1;
    for (const auto& [c, m] : pairs) {
        if (c < 1) throw UnsupportedSpecError("inv_product: factor exponent must be >= 1");
        if (m < 1) throw UnsupportedSpecError("inv_product: modulus must be >= 1");
        for (std::int64_t e = c; e <= order; e += m) window::div_one_minus(w, e);
    }
    return ZSeries(0, std::move(w), order);
}

namespace {

// Shared core: prod_{i=1..bottom} (1 - q^{k(top-bottom+i)}) / (1 - q^{ki}),
// interleaved so every intermediate stays a polynomial. `cap` limits the
// stored window (kExactOrder means keep everything).
ZSeries binom_core(const BinomSpec& spec, std::int64_t cap) {
    const std::int64_t m = spec.top, n = spec.bottom, k = spec.base_power;
    if (k < 1) throw UnsupportedSpecError("gauss_binom: base power must be >= 1");
    if (spec.star && m == -1 && n == 0) return ZSeries::one();
    if (n < 0 || m < n) return ZSeries::zero();
    std::int64_t deg = k * n * (m - n);
    std::int64_t size = deg + k * n + 1;  // slack for pre-division intermediates
    bool capped = cap != kExactOrder && cap < deg;
    if (capped) size = cap + 1;
    std::vector<BigInt> w(static_cast<std::size_t>(std::max<std::int64_t>(size, 1)));
    w[0] = 1;
    for (std::int64_t i = 1; i <= n; ++i) {
        window::mul_one_minus(w, k * (m - n + i), BigInt(1));
        window::div_one_minus(w, k * i);
    }
    if (!capped) w.resize(static_cast<std::size_t>(deg) + 1);
    return ZSeries(0, std::move(w), capped ? cap : kExactOrder);
}

}  // namespace

ZSeries gauss_binom(const BinomSpec& spec) { return binom_core(spec, kExactOrder); }

ZSeries gauss_binom_window(const BinomSpec& spec, std::int64_t order) {
    if (order < 0) return ZSeries(0, {}, order);
    return binom_core(spec, order);
}

bool binom_recurrence_check(std::int64_t n, std::int64_t m, int which) {
    if (n < 1) throw UnsupportedSpecError("binom_recurrence_check: n must be >= 1");
    auto B = [](std::int64_t top, std::int64_t bottom) {
        return gauss_binom({top, bottom, 1, false});
    };
    ZSeries lhs = B(n, m);
    ZSeries rhs;
    if (which == 3)
        rhs = add(B(n - 1, m), mul_monomial(B(n - 1, m - 1), BigInt(1), n - m));
    else if (which == 4)
        rhs = add(B(n - 1, m - 1), mul_monomial(B(n - 1, m), BigInt(1), m));
    else
        throw UnsupportedSpecError("binom_recurrence_check: which must be 3 or 4");
    return lhs == rhs;
}

bool reflect_binom_law(std::int64_t n, std::int64_t m) {
    ZSeries b = gauss_binom({n + m, m, 1, false});
    return reflect_exponents(b) == mul_monomial(b, BigInt(1), -n * m);
}

ZSeries bracket_product(const std::array<std::int64_t, 4>& c, std::int64_t order) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs{{3, 3}};
    for (std::int64_t cj : c) {
        if (cj < 1 || cj > 44)
            throw UnsupportedSpecError("bracket_product: entries must lie in [1, 44]");
        pairs.emplace_back(cj, 45);
        pairs.emplace_back(45 - cj, 45);
    }
    return mul(pochhammer_z(45, 45, std::nullopt, order), inv_product(pairs, order));
}

}  // namespace qlab
