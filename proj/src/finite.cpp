#include "qlab/finite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qlab/qkit.hpp"

namespace qlab {

namespace {

std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y, r = x % y;
    return (r != 0 && ((r < 0) != (y < 0))) ? q - 1 : q;
}

std::int64_t fl23(std::int64_t x) { return floor_div(2 * x, 3); }

struct Tops {
    std::int64_t t1, t2;
};

// Binomial tops of the ten finite versions, by (a, b).
Tops finite_tops(int a, int b, std::int64_t N, std::int64_t m, std::int64_t n, bool delta) {
    std::int64_t d = delta ? 1 : 0;
    if (a == 0 && b == -1) return {N + 1 - 3 * n - m, fl23(N + 2) - m - n};
    if (a == 0 && b == 0) return {N + 1 - 3 * n - m, fl23(N) + 1 - m - n};
    if (a == 1 && b == 1) return {N - 3 * n - m, fl23(N + 1) - m - n};
    if (a == 1 && b == 2) return {N - 3 * n - m, fl23(N - 1) + 1 - m - n};
    if (a == 2 && b == 3) return {N - 3 * n - m - 1, fl23(N) - m - n};
    if (a == 2 && b == 4) return {N - 3 * n - m - 1, fl23(N - 1) + d - m - n};
    if (a == 3 && b == 5) return {N - 3 * n - m - 2, fl23(N - 1) - m - n};
    if (a == 3 && b == 6) return {N - 3 * n - m - 2, fl23(N) - 1 - m - n};
    if (a == 1 && b == 3) return {N - m - 3 * n, fl23(N) - m - n};
    if (a == 0 && b == 2) return {N + 1 - m - 3 * n, fl23(N - 1) + 1 - m - n};
    throw UnsupportedSpecError(
        "s_finite: no finite version for S(" + std::to_string(a) + "," + std::to_string(b) +
        "); reduce_to_basis expresses it through the supported ones");
}

std::int64_t quad_exponent(int a, int b, std::int64_t m, std::int64_t n) {
    return m * m + 3 * m * n + 3 * n * n + a * m + b * n;
}

// Core shared by the exact and windowed evaluations and by the reflection
// engine: enumerate the (m, n) grid and hand each non-vanishing summand to a
// sink. The star convention admits exactly the (top1, m) = (-1, 0) cell.
template <typename Sink>
void for_each_summand(const FiniteSpec& spec, Sink&& sink) {
    for (std::int64_t n = 0; 3 * n <= spec.N + 3; ++n) {
        for (std::int64_t m = 0; m <= spec.N + 2; ++m) {
            Tops tops = finite_tops(spec.a, spec.b, spec.N, m, n, spec.delta);
            bool star_cell = spec.star && tops.t1 == -1 && m == 0;
            if (!star_cell && tops.t1 < m) {
                if (tops.t1 < 0) break;  // t1 only shrinks as m grows
                continue;
            }
            if (tops.t2 < n) continue;
            sink(m, n, tops, star_cell);
        }
    }
}

}  // namespace

bool finite_supported(int a, int b) {
    static const std::pair<int, int> supported[] = {{0, -1}, {0, 0}, {1, 1}, {1, 2}, {2, 3},
                                                    {2, 4},  {3, 5}, {3, 6}, {1, 3}, {0, 2}};
    for (auto [sa, sb] : supported)
        if (sa == a && sb == b) return true;
    return false;
}

FiniteSpec make_finite_spec(int a, int b, std::int64_t N) {
    if (!finite_supported(a, b))
        throw UnsupportedSpecError(
            "s_finite: no finite version for S(" + std::to_string(a) + "," + std::to_string(b) +
            "); reduce_to_basis expresses it through the supported ones");
    if (N < 0) throw UnsupportedSpecError("s_finite: N must be non-negative");
    FiniteSpec spec;
    spec.a = a;
    spec.b = b;
    spec.N = N;
    spec.star = (a == 2 && b == 3);
    spec.delta = (a == 2 && b == 4) && ((N - 2) % 3 == 0);
    return spec;
}

namespace {

ZSeries s_finite_impl(const FiniteSpec& spec, std::int64_t cap) {
    ZSeries acc = cap == kExactOrder ? ZSeries::zero() : ZSeries::zero(cap);
    for_each_summand(spec, [&](std::int64_t m, std::int64_t n, const Tops& tops, bool star_cell) {
        std::int64_t e = quad_exponent(spec.a, spec.b, m, n);
        if (cap != kExactOrder && e > cap) return;
        std::int64_t w = cap == kExactOrder ? kExactOrder : cap - e;
        ZSeries b1 = star_cell ? ZSeries::one()
                               : (w == kExactOrder ? gauss_binom({tops.t1, m, 1, false})
                                                   : gauss_binom_window({tops.t1, m, 1, false}, w));
        ZSeries b2 = w == kExactOrder ? gauss_binom({tops.t2, n, 3, false})
                                      : gauss_binom_window({tops.t2, n, 3, false}, w);
        acc = add(acc, mul_monomial(mul(b1, b2), BigInt(1), e));
    });
    return cap == kExactOrder ? acc : truncate(acc, cap);
}

}  // namespace

ZSeries s_finite(const FiniteSpec& spec) { return s_finite_impl(spec, kExactOrder); }

ZSeries s_finite_window(int a, int b, std::int64_t N, std::int64_t order) {
    return s_finite_impl(make_finite_spec(a, b, N), order);
}

ZSeries kr5_finite(std::int64_t N) {
    if (N < 0) throw UnsupportedSpecError("kr5_finite: N must be non-negative");
    std::int64_t base = fl23(N - 2);
    std::int64_t d = ((N - 2) % 3 == 0) ? 1 : 0;
    ZSeries one_plus_q(0, {BigInt(1), BigInt(1)});
    ZSeries acc;
    for (std::int64_t n = 0; 3 * n <= N; ++n) {
        for (std::int64_t m = 0; m <= N; ++m) {
            std::int64_t quad = m * m + 3 * m * n + 3 * n * n;
            // first sum
            std::int64_t t1 = N - m - 3 * n - 1, t2 = base - m - n + 1;
            if (t1 >= m && t2 >= n) {
                ZSeries term = mul(gauss_binom({t1, m, 1, false}), gauss_binom({t2, n, 3, false}));
                term = mul(term, one_plus_q);
                acc = add(acc, mul_monomial(term, BigInt(1), quad + 2 * m + 4 * n));
            }
            // second sum
            t1 = N - m - 3 * n - 2;
            t2 = base - m - n + d;
            if (t1 >= m && t2 >= n) {
                ZSeries term = mul(gauss_binom({t1, m, 1, false}), gauss_binom({t2, n, 3, false}));
                acc = add(acc, mul_monomial(term, BigInt(1), quad + 3 * m + 7 * n + 2));
            }
        }
    }
    return acc;
}

const char* family_name(ReflectFamily f) {
    switch (f) {
        case ReflectFamily::F: return "F";
        case ReflectFamily::G: return "G";
        case ReflectFamily::Fstar: return "Fstar";
        case ReflectFamily::Gstar: return "Gstar";
        case ReflectFamily::RK4: return "RK4";
        case ReflectFamily::RK1: return "RK1";
    }
    return "?";
}

std::pair<int, int> family_pair(ReflectFamily f) {
    switch (f) {
        case ReflectFamily::F: return {1, 1};
        case ReflectFamily::G: return {2, 4};
        case ReflectFamily::Fstar: return {0, -1};
        case ReflectFamily::Gstar: return {0, 2};
        case ReflectFamily::RK4: return {1, 2};
        case ReflectFamily::RK1: return {0, 0};
    }
    throw UnsupportedSpecError("family_pair: unknown family");
}

std::int64_t reflect_normalization(ReflectFamily f, int residue, std::int64_t M) {
    if (residue < 0 || residue > 2)
        throw UnsupportedSpecError("reflect_normalization: residue must be 0, 1 or 2");
    switch (f) {
        case ReflectFamily::F:
        case ReflectFamily::G:
            if (residue == 0) return M * (3 * M + 1);
            if (residue == 1) return (M + 1) * (3 * M + 1);
            return (M + 2) * (3 * M + 1);
        case ReflectFamily::Fstar:
        case ReflectFamily::Gstar:
            if (residue == 0) return M * (3 * M + 2);
            return (M + 1) * (3 * M + 2);
        case ReflectFamily::RK4:
            if (residue == 0) return M * (3 * M + 2);
            if (residue == 1) return M * (3 * M + 5);
            return (M + 1) * (3 * M + 2);
        case ReflectFamily::RK1:
            if (residue == 0) return 3 * M * (M + 1);
            if (residue == 1) return 3 * M * (M + 1) + 1;
            return 3 * (M + 1) * (M + 1);
    }
    throw UnsupportedSpecError("reflect_normalization: unknown family");
}

ZSeries reflect_finite(ReflectFamily f, int residue, std::int64_t M, std::int64_t window,
                       std::optional<std::int64_t> rule_override) {
    if (M < 0) throw UnsupportedSpecError("reflect_finite: M must be non-negative");
    auto [a, b] = family_pair(f);
    std::int64_t rule =
        rule_override ? *rule_override : reflect_normalization(f, residue, M);
    FiniteSpec spec = make_finite_spec(a, b, 3 * M + residue);
    ZSeries acc = ZSeries::zero(window);
    for_each_summand(spec, [&](std::int64_t m, std::int64_t n, const Tops& tops, bool star_cell) {
        (void)star_cell;  // none of the reflect families uses the star convention
        // q^E -> q^-E and [t, j]_{q^k} -> q^{-k j (t-j)} [t, j]_{q^k}
        std::int64_t shift = rule - quad_exponent(a, b, m, n) - m * (tops.t1 - m) -
                             3 * n * (tops.t2 - n);
        if (shift > window) return;
        std::int64_t w = window - shift;
        ZSeries term = mul(gauss_binom_window({tops.t1, m, 1, false}, w),
                           gauss_binom_window({tops.t2, n, 3, false}, w));
        acc = add(acc, mul_monomial(term, BigInt(1), shift));
    });
    auto low = acc.lowest_nonzero_exp();
    if (low && *low < 0)
        throw WrongNormalizationError("reflect_finite: normalization " + std::to_string(rule) +
                                      " leaves exponent " + std::to_string(*low));
    return truncate(acc, window);
}

namespace {

struct LimitParams {
    int alpha, beta, gamma;  // exponent a^2 - 3ab + 3b^2 + alpha*a + beta*b + gamma
    int c;                   // binomial top 3b - a + c
    bool literal_top = false;  // top = 3b - 2 verbatim instead
};

LimitParams limit_params(ReflectFamily f, int residue) {
    if (residue < 0 || residue > 2)
        throw UnsupportedSpecError("limit_series: residue must be 0, 1 or 2");
    switch (f) {
        case ReflectFamily::F:
            if (residue == 0) return {1, -1, 0, 0};
            if (residue == 1) return {1, -1, 0, -1};
            return {1, -1, -2, -2};
        case ReflectFamily::G:
            if (residue == 0) return {0, 2, 1, 1};
            if (residue == 1) return {0, 2, 1, 0};
            return {0, 2, -1, -1};
        case ReflectFamily::Fstar:
            if (residue == 0) return {1, -2, 0, -1};
            if (residue == 1) return {1, -2, 0, -2};
            return {1, -2, 0, 0};
        case ReflectFamily::Gstar:
            if (residue == 0) return {-2, 4, 1, 2};
            if (residue == 1) return {-2, 4, 1, 1};
            return {-2, 4, 1, 3};
        default:
            throw UnsupportedSpecError("limit_series: family has no direct limit display");
    }
}

// sum_{a,b >= 0} q^{a^2-3ab+3b^2+alpha*a+beta*b+gamma} / (q^3;q^3)_b * [top, a]_q
ZSeries limit_double_sum(const LimitParams& p, std::int64_t order) {
    auto expo = [&](std::int64_t a, std::int64_t b) {
        return a * a - 3 * a * b + 3 * b * b + p.alpha * a + p.beta * b + p.gamma;
    };
    auto top_of = [&](std::int64_t a, std::int64_t b) {
        return p.literal_top ? 3 * b - 2 : 3 * b - a + p.c;
    };
    struct Term {
        std::int64_t a, b, e;
    };
    std::vector<Term> terms;
    std::int64_t b_hard = 4 + 2 * static_cast<std::int64_t>(std::max<double>(
                                  1.0, std::sqrt(static_cast<double>(std::max<std::int64_t>(
                                           order, 1)))));
    b_hard += std::abs(p.alpha) + std::abs(p.beta) + std::abs(p.c) + 8;
    int empty_rows = 0;
    std::int64_t e_min = 0, b_max = 0;
    for (std::int64_t b = 0; b <= b_hard && empty_rows < 5; ++b) {
        bool any = false;
        for (std::int64_t a = 0;; ++a) {
            std::int64_t top = top_of(a, b);
            if (top < a) {
                if (p.literal_top || top < 0) break;
                continue;
            }
            std::int64_t e = expo(a, b);
            if (e <= order) {
                terms.push_back({a, b, e});
                any = true;
                e_min = std::min(e_min, e);
                b_max = std::max(b_max, b);
            }
        }
        empty_rows = any ? 0 : empty_rows + 1;
    }
    if (terms.empty()) return ZSeries(0, {}, order);

    const std::int64_t w = order - e_min;
    std::vector<std::vector<BigInt>> inv_q3;
    {
        std::vector<BigInt> cur(static_cast<std::size_t>(w) + 1);
        cur[0] = 1;
        inv_q3.push_back(cur);
        for (std::int64_t j = 1; j <= b_max; ++j) {
            for (std::int64_t i = 3 * j; i <= w; ++i)
                cur[static_cast<std::size_t>(i)] += cur[static_cast<std::size_t>(i - 3 * j)];
            inv_q3.push_back(cur);
        }
    }

    std::vector<BigInt> result(static_cast<std::size_t>(order - e_min) + 1);
    for (const Term& t : terms) {
        ZSeries bin = gauss_binom_window({top_of(t.a, t.b), t.a, 1, false}, order - t.e);
        const auto& row = inv_q3[static_cast<std::size_t>(t.b)];
        for (std::int64_t i = bin.min_exp(); i <= bin.max_stored_exp(); ++i) {
            const BigInt& bc = bin.coeff(i);
            if (is_zero(bc)) continue;
            std::int64_t kmax = order - t.e - i;
            for (std::int64_t k = 0; k <= kmax; ++k) {
                if (is_zero(row[static_cast<std::size_t>(k)])) continue;
                add_mul(result[static_cast<std::size_t>(t.e - e_min + i + k)], bc,
                        row[static_cast<std::size_t>(k)]);
            }
        }
    }
    return ZSeries(e_min, std::move(result), order);
}

}  // namespace

ZSeries limit_series(const LimitFamily& fam, std::int64_t order) {
    return limit_double_sum(limit_params(fam.fam, fam.residue), order);
}

ZSeries rk1_limit_series(int residue, Rk1Reading reading, std::int64_t order) {
    LimitParams p;
    if (residue == 0)
        p = {0, 0, -1, -1};
    else if (residue == 1)
        p = {0, 0, 0, 1};
    else if (residue == 2)
        p = {0, 0, 0, 0};
    else
        throw UnsupportedSpecError("rk1_limit_series: residue must be 0, 1 or 2");
    if (residue == 0 && reading == Rk1Reading::literal) p.literal_top = true;
    return limit_double_sum(p, order);
}

ZSeries rk4_limit_product(int residue, std::int64_t order) {
    using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
    if (residue == 0) {
        Pairs p{{2, 3}, {3, 45}, {9, 45}, {12, 45}, {21, 45}, {30, 45}, {36, 45}, {39, 45}};
        return inv_product(p, order);
    }
    if (residue == 1) {
        Pairs p{{2, 3}, {3, 45}, {12, 45}, {18, 45}, {21, 45}, {27, 45}, {30, 45}, {39, 45}};
        return inv_product(p, order);
    }
    if (residue == 2)
        return add(rk4_limit_product(0, order),
                   mul_monomial(rk4_limit_product(1, order), BigInt(1), 2));
    throw UnsupportedSpecError("rk4_limit_product: residue must be 0, 1 or 2");
}

std::int64_t stabilization_order(ReflectFamily f, int residue, std::int64_t M,
                                 std::optional<std::int64_t> window,
                                 std::optional<std::int64_t> rule_override) {
    std::int64_t w = window ? *window : 3 * M + 40;
    ZSeries reflected = reflect_finite(f, residue, M, w, rule_override);
    ZSeries reference;
    switch (f) {
        case ReflectFamily::RK4: reference = rk4_limit_product(residue, w); break;
        case ReflectFamily::RK1: reference = rk1_limit_series(residue, Rk1Reading::corrected, w); break;
        default: reference = limit_series({f, residue}, w); break;
    }
    auto bad = first_mismatch(reflected, reference, w);
    return bad ? *bad : w + 1;
}

}  // namespace qlab
