#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qlab/series.hpp"

namespace qlab {

// One q-Pochhammer symbol (c q^e; q^k)_n with a unit coefficient c.
// length == nullopt means the infinite product, which converges
// coefficient-wise only when e >= 1.
template <typename R>
struct PochhammerSpec {
    R coefficient{1};
    std::int64_t exponent = 1;    // e in c*q^e
    std::int64_t base_power = 1;  // k in base q^k
    std::optional<std::int64_t> length;
};

// Gaussian binomial [top, bottom] in base q^k. `star` turns [-1, 0] into 1,
// the convention a single finite version needs; everything else out of range
// stays 0.
struct BinomSpec {
    std::int64_t top = 0;
    std::int64_t bottom = 0;
    std::int64_t base_power = 1;
    bool star = false;
};

namespace window {
// Dense windows over exponents [0 .. size-1] with implicit min_exp 0.

// w *= (1 - c q^k)
template <typename R>
void mul_one_minus(std::vector<R>& w, std::int64_t k, const R& c) {
    if (k <= 0) throw UnsupportedSpecError("window::mul_one_minus: k must be positive");
    for (std::int64_t j = static_cast<std::int64_t>(w.size()) - 1; j >= k; --j)
        sub_mul(w[static_cast<std::size_t>(j)], c, w[static_cast<std::size_t>(j - k)]);
}

// w /= (1 - c q^k); exact because (1 - c q^k) is a unit in the power-series ring.
template <typename R>
void div_one_minus(std::vector<R>& w, std::int64_t k, const R& c) {
    if (k <= 0) throw UnsupportedSpecError("window::div_one_minus: k must be positive");
    for (std::int64_t j = k; j < static_cast<std::int64_t>(w.size()); ++j)
        add_mul(w[static_cast<std::size_t>(j)], c, w[static_cast<std::size_t>(j - k)]);
}

template <typename R>
void div_one_minus(std::vector<R>& w, std::int64_t k) {
    div_one_minus(w, k, R(1));
}
}  // namespace window

// prod_{i=0..n-1} (1 - c q^{e+ki}), exact polynomial for finite n,
// order-P series for the infinite product.
template <typename R>
Series<R> pochhammer(const PochhammerSpec<R>& spec, std::int64_t order) {
    if (spec.base_power < 1)
        throw UnsupportedSpecError("pochhammer: base power must be >= 1");
    if (!is_unit(spec.coefficient))
        throw UnsupportedSpecError("pochhammer: coefficient must be a ring unit");
    if (!spec.length) {
        if (spec.exponent < 1)
            throw DivergentProductError(
                "pochhammer: infinite product needs argument exponent >= 1");
        std::vector<R> w(static_cast<std::size_t>(order) + 1);
        w[0] = R(1);
        for (std::int64_t e = spec.exponent; e <= order; e += spec.base_power)
            window::mul_one_minus(w, e, spec.coefficient);
        return Series<R>(0, std::move(w), order);
    }
    Series<R> acc = Series<R>::one();
    for (std::int64_t i = 0; i < *spec.length; ++i) {
        std::int64_t e = spec.exponent + spec.base_power * i;
        Series<R> factor =
            add(Series<R>::one(), Series<R>::monomial(-spec.coefficient, e));
        acc = mul(acc, factor);
    }
    return acc;
}

// (q^e; q^k)_n over the integers; n == nullopt is the infinite product.
ZSeries pochhammer_z(std::int64_t e, std::int64_t k, std::optional<std::int64_t> n,
                     std::int64_t order);

// 1 / prod_j (q^{c_j}; q^{m_j})_infty through `order`. Pairs are
// (exponent c_j, modulus m_j); an empty list yields 1.
ZSeries inv_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs,
                    std::int64_t order);

// Exact Gaussian binomial polynomial; degree k*n(m-n) when nonzero.
ZSeries gauss_binom(const BinomSpec& spec);

// Same value but only the coefficients through `order` are computed.
ZSeries gauss_binom_window(const BinomSpec& spec, std::int64_t order);

// Pascal-type recurrences as exact polynomial identities:
// which == 3:  [n,m] = [n-1,m]   + q^{n-m} [n-1,m-1]
// which == 4:  [n,m] = [n-1,m-1] + q^{m}   [n-1,m]
bool binom_recurrence_check(std::int64_t n, std::int64_t m, int which);

// reflect_exponents([n+m, m]_q) == q^{-nm} [n+m, m]_q
bool reflect_binom_law(std::int64_t n, std::int64_t m);

// (q^45;q^45)_inf / ( (q^3;q^3)_inf * prod_j (q^{c_j}, q^{45-c_j}; q^45)_inf )
ZSeries bracket_product(const std::array<std::int64_t, 4>& c, std::int64_t order);

}  // namespace qlab
