#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "qlab/coeff.hpp"
#include "qlab/errors.hpp"

namespace qlab {

// Order value of an exact Laurent polynomial: every coefficient is known.
inline constexpr std::int64_t kExactOrder = std::numeric_limits<std::int64_t>::max();

// Default truncation order, large enough for every check in the catalog.
inline constexpr std::int64_t kDefaultOrder = 500;

// Finite coefficient window [min_exp, min_exp + size) over a coefficient ring,
// plus the carried truncation order: coefficients above `order` are unknown,
// coefficients in the window gap are zero. Values are immutable once built.
template <typename R>
class Series {
  public:
    Series() = default;  // exact zero

    Series(std::int64_t min_exp, std::vector<R> coeffs, std::int64_t order = kExactOrder)
        : min_exp_(min_exp), order_(order), coeffs_(std::move(coeffs)) {
        if (order_ < min_exp_ - 1 && !coeffs_.empty()) coeffs_.clear();
    }

    static Series zero(std::int64_t order = kExactOrder) { return Series(0, {}, order); }

    static Series one(std::int64_t order = kExactOrder) {
        std::vector<R> c;
        c.emplace_back(1);
        return Series(0, std::move(c), order);
    }

    static Series monomial(R c, std::int64_t e, std::int64_t order = kExactOrder) {
        std::vector<R> v;
        v.push_back(std::move(c));
        return Series(e, std::move(v), order);
    }

    std::int64_t min_exp() const { return min_exp_; }
    std::int64_t order() const { return order_; }
    bool is_exact() const { return order_ == kExactOrder; }
    std::int64_t max_stored_exp() const {
        return min_exp_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
    }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& coeff(std::int64_t e) const {
        if (e < min_exp_ || e > max_stored_exp()) return zero_coeff();
        return coeffs_[static_cast<std::size_t>(e - min_exp_)];
    }

    bool is_zero() const {
        for (const R& c : coeffs_)
            if (!qlab::is_zero(c)) return false;
        return true;
    }

    std::optional<std::int64_t> lowest_nonzero_exp() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!qlab::is_zero(coeffs_[i])) return min_exp_ + static_cast<std::int64_t>(i);
        return std::nullopt;
    }

    std::optional<std::int64_t> highest_nonzero_exp() const {
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            if (!qlab::is_zero(coeffs_[i])) return min_exp_ + static_cast<std::int64_t>(i);
        return std::nullopt;
    }

    static const R& zero_coeff() {
        static const R z{};
        return z;
    }

  private:
    std::int64_t min_exp_ = 0;
    std::int64_t order_ = kExactOrder;
    std::vector<R> coeffs_;
};

using ZSeries = Series<BigInt>;
using ESeries = Series<Eisenstein>;

namespace detail {
inline std::int64_t sat_add(std::int64_t a, std::int64_t b) {
    if (a == kExactOrder || b == kExactOrder) return kExactOrder;
    return a + b;
}
}  // namespace detail

template <typename R>
Series<R> truncate(const Series<R>& f, std::int64_t order) {
    std::int64_t ord = std::min(f.order(), order);
    if (ord < f.min_exp()) return Series<R>(f.min_exp(), {}, ord);
    std::int64_t hi = std::min(f.max_stored_exp(), ord);
    std::vector<R> c(f.coeffs().begin(),
                     f.coeffs().begin() + static_cast<std::size_t>(hi - f.min_exp() + 1));
    return Series<R>(f.min_exp(), std::move(c), ord);
}

// Drops stored zero coefficients at both window edges; value is unchanged.
template <typename R>
Series<R> trimmed(const Series<R>& f) {
    auto lo = f.lowest_nonzero_exp();
    if (!lo) return Series<R>(0, {}, f.order());
    auto hi = *f.highest_nonzero_exp();
    std::vector<R> c(f.coeffs().begin() + static_cast<std::size_t>(*lo - f.min_exp()),
                     f.coeffs().begin() + static_cast<std::size_t>(hi - f.min_exp() + 1));
    return Series<R>(*lo, std::move(c), f.order());
}

template <typename R>
Series<R> add(const Series<R>& f, const Series<R>& g) {
    std::int64_t ord = std::min(f.order(), g.order());
    std::int64_t lo = std::min(f.min_exp(), g.min_exp());
    std::int64_t hi = std::max(f.max_stored_exp(), g.max_stored_exp());
    hi = std::min(hi, ord);
    if (hi < lo) return Series<R>(lo, {}, ord);
    std::vector<R> c(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t e = lo; e <= hi; ++e) {
        R v = f.coeff(e);
        v += g.coeff(e);
        c[static_cast<std::size_t>(e - lo)] = std::move(v);
    }
    return Series<R>(lo, std::move(c), ord);
}

template <typename R>
Series<R> neg(const Series<R>& f) {
    std::vector<R> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -f.coeffs()[i];
    return Series<R>(f.min_exp(), std::move(c), f.order());
}

template <typename R>
Series<R> sub(const Series<R>& f, const Series<R>& g) {
    return add(f, neg(g));
}

// Cauchy product over the valid window. The result is guaranteed only up to
// min(f.order + g.min_exp, g.order + f.min_exp): above that, unknown
// coefficients of one factor could reach down into the window.
template <typename R>
Series<R> mul(const Series<R>& f, const Series<R>& g) {
    std::int64_t ord = std::min(detail::sat_add(f.order(), g.min_exp()),
                                detail::sat_add(g.order(), f.min_exp()));
    std::int64_t lo = f.min_exp() + g.min_exp();
    if (f.coeffs().empty() || g.coeffs().empty())
        return Series<R>(lo, {}, ord);
    std::int64_t hi = f.max_stored_exp() + g.max_stored_exp();
    if (ord != kExactOrder) hi = std::min(hi, ord);
    if (hi < lo) return Series<R>(lo, {}, ord);
    std::vector<R> c(static_cast<std::size_t>(hi - lo + 1));
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (qlab::is_zero(fc[i])) continue;
        std::int64_t fe = f.min_exp() + static_cast<std::int64_t>(i);
        std::size_t jmax = std::min(gc.size(), static_cast<std::size_t>(hi - fe - g.min_exp() + 1));
        for (std::size_t j = 0; j < jmax; ++j) {
            if (qlab::is_zero(gc[j])) continue;
            add_mul(c[static_cast<std::size_t>(fe + g.min_exp() + static_cast<std::int64_t>(j) - lo)],
                    fc[i], gc[j]);
        }
    }
    return Series<R>(lo, std::move(c), ord);
}

template <typename R>
Series<R> mul_monomial(const Series<R>& f, const R& c, std::int64_t e) {
    std::vector<R> v(f.coeffs().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f.coeffs()[i];
    return Series<R>(f.min_exp() + e, std::move(v), detail::sat_add(f.order(), e));
}

// g with f * g = 1 through `order`, by the standard recurrence
// g_0 = f_0^{-1}, g_n = -f_0^{-1} sum_{k=1..n} f_k g_{n-k}.
// Requires valuation exactly 0 and a unit constant term; callers holding a
// series with nonzero valuation shift it first.
template <typename R>
Series<R> invert_unit(const Series<R>& f, std::int64_t order) {
    auto lo = f.lowest_nonzero_exp();
    if (!lo || *lo != 0)
        throw NotInvertibleError("invert_unit: series has no unit constant term at exponent 0");
    if (!is_unit(f.coeff(0)))
        throw NotInvertibleError("invert_unit: constant term is not a ring unit");
    std::int64_t ord = std::min(order, f.order());
    if (ord < 0) throw NotInvertibleError("invert_unit: requested order is negative");
    R f0inv = unit_inverse(f.coeff(0));
    std::vector<R> g(static_cast<std::size_t>(ord) + 1);
    g[0] = f0inv;
    std::int64_t fmax = std::min(f.max_stored_exp(), ord);
    for (std::int64_t n = 1; n <= ord; ++n) {
        R s{};
        for (std::int64_t k = 1; k <= std::min(n, fmax); ++k)
            add_mul(s, f.coeff(k), g[static_cast<std::size_t>(n - k)]);
        g[static_cast<std::size_t>(n)] = -(f0inv * s);
    }
    return Series<R>(0, std::move(g), ord);
}

// Convenience overload using the carried order; refuses exact polynomials,
// whose inverse is generally an infinite series.
template <typename R>
Series<R> invert_unit(const Series<R>& f) {
    if (f.is_exact())
        throw NotInvertibleError("invert_unit: exact polynomial needs an explicit target order");
    return invert_unit(f, f.order());
}

// Exponent negation e -> -e. Only a Laurent polynomial has enough information
// for this; a truncated series hides coefficients above its order.
template <typename R>
Series<R> reflect_exponents(const Series<R>& f) {
    if (!f.is_exact())
        throw ExactnessError("reflect_exponents: operand is order-truncated, not a Laurent polynomial");
    std::vector<R> c(f.coeffs().rbegin(), f.coeffs().rend());
    return Series<R>(-f.max_stored_exp(), std::move(c), kExactOrder);
}

// Applies coefficient conjugation (w -> w^2) termwise.
inline ESeries conjugate_series(const ESeries& f) {
    std::vector<Eisenstein> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = conj(f.coeffs()[i]);
    return ESeries(f.min_exp(), std::move(c), f.order());
}

inline ZSeries conjugate_series(const ZSeries& f) { return f; }

// q -> q^k: exponent e becomes k*e.
template <typename R>
Series<R> substitute_power(const Series<R>& f, std::int64_t k) {
    if (k < 1) throw UnsupportedSpecError("substitute_power: k must be >= 1");
    if (k == 1) return f;
    std::int64_t ord = f.is_exact() ? kExactOrder : f.order() * k;
    if (f.coeffs().empty()) return Series<R>(f.min_exp() * k, {}, ord);
    std::vector<R> c(static_cast<std::size_t>((f.coeffs().size() - 1) * k + 1));
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * k] = f.coeffs()[i];
    return Series<R>(f.min_exp() * k, std::move(c), ord);
}

// Embeds an integer-coefficient series into the Eisenstein ring. This is the
// only route between the two rings; there is no implicit widening.
inline ESeries promote(const ZSeries& f) {
    std::vector<Eisenstein> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Eisenstein(f.coeffs()[i], BigInt(0));
    return ESeries(f.min_exp(), std::move(c), f.order());
}

// First exponent <= through where f and g disagree, if any. Exponents above
// min(f.order, g.order) are never compared.
template <typename R>
std::optional<std::int64_t> first_mismatch(const Series<R>& f, const Series<R>& g,
                                           std::int64_t through) {
    std::int64_t hi = std::min({through, f.order(), g.order()});
    std::int64_t lo = std::min(f.min_exp(), g.min_exp());
    for (std::int64_t e = lo; e <= hi; ++e)
        if (!(f.coeff(e) == g.coeff(e))) return e;
    return std::nullopt;
}

template <typename R>
bool agree_through(const Series<R>& f, const Series<R>& g, std::int64_t through) {
    if (std::min(f.order(), g.order()) < through) return false;
    return !first_mismatch(f, g, through).has_value();
}

// Equality ignores stored zero padding at the window edges; orders must match.
template <typename R>
bool operator==(const Series<R>& f, const Series<R>& g) {
    if (f.order() != g.order()) return false;
    std::int64_t lo = std::min(f.min_exp(), g.min_exp());
    std::int64_t hi = std::max(f.max_stored_exp(), g.max_stored_exp());
    for (std::int64_t e = lo; e <= hi; ++e)
        if (!(f.coeff(e) == g.coeff(e))) return false;
    return true;
}

template <typename R>
std::ostream& operator<<(std::ostream& os, const Series<R>& f) {
    bool first = true;
    for (std::int64_t e = f.min_exp(); e <= f.max_stored_exp(); ++e) {
        if (qlab::is_zero(f.coeff(e))) continue;
        if (!first) os << " + ";
        os << "(" << coeff_to_string(f.coeff(e)) << ")q^" << e;
        first = false;
    }
    if (first) os << "0";
    if (!f.is_exact()) os << " + O(q^" << (f.order() + 1) << ")";
    return os;
}

}  // namespace qlab
