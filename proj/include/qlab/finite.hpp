#pragma once

#include <cstdint>
#include <optional>

#include "qlab/series.hpp"

namespace qlab {

// The ten (a,b) pairs with known finite polynomial versions S(a,b;q,N).
// star applies only to (2,3); delta is the Kronecker adjustment used by (2,4).
struct FiniteSpec {
    int a = 0;
    int b = 0;
    std::int64_t N = 0;
    bool star = false;
    bool delta = false;
};

FiniteSpec make_finite_spec(int a, int b, std::int64_t N);
bool finite_supported(int a, int b);

// Exact double-sum polynomial, largest part bounded by N.
ZSeries s_finite(const FiniteSpec& spec);
inline ZSeries s_finite(int a, int b, std::int64_t N) { return s_finite(make_finite_spec(a, b, N)); }

// Coefficients of s_finite through `order` only (same value, cheaper).
ZSeries s_finite_window(int a, int b, std::int64_t N, std::int64_t order);

// The two-part finite version of the fifth sum-side combination, with its
// (1+q) factor and the Kronecker-adjusted second sum.
ZSeries kr5_finite(std::int64_t N);

// A family whose finite version gets reflected q -> 1/q. The first four are
// the limit families; RK4 and RK1 reflect the finite versions of the fourth
// and first sum-side combinations.
enum class ReflectFamily { F, G, Fstar, Gstar, RK4, RK1 };

const char* family_name(ReflectFamily f);

// Pair (a,b) whose finite version underlies the family.
std::pair<int, int> family_pair(ReflectFamily f);

// Normalization exponent: the unique power of q that lands the reflected
// polynomial's lowest exponent at 0.
std::int64_t reflect_normalization(ReflectFamily f, int residue, std::int64_t M);

// q^{rule} * S(a,b; 1/q, 3M+residue), computed exactly by reflecting each
// summand (exponent negation plus the q-binomial reflection law) and kept
// through `window`. Throws WrongNormalizationError if negative exponents
// survive the normalization.
ZSeries reflect_finite(ReflectFamily f, int residue, std::int64_t M, std::int64_t window,
                       std::optional<std::int64_t> rule_override = std::nullopt);

// One of the twelve reflected-limit double sums.
struct LimitFamily {
    ReflectFamily fam;  // F, G, Fstar or Gstar
    int residue = 0;    // 0, 1 or 2
};

ZSeries limit_series(const LimitFamily& fam, std::int64_t order);

// The reflected limits of the first sum-side combination exist in two
// typographic readings of the binomial top; `corrected` follows the change
// of variables, `literal` follows the printed display verbatim.
enum class Rk1Reading { corrected, literal };

ZSeries rk1_limit_series(int residue, Rk1Reading reading, std::int64_t order);

// Conjectured modulus-45 product for the reflected RK4 limit at residue 0/1;
// residue 2 is the combination limit_0 + q^2 * limit_1.
ZSeries rk4_limit_product(int residue, std::int64_t order);

// Length of the common coefficient prefix of reflect_finite at this M and the
// family's limit (or conjectured product for RK4), scanning exponents
// 0..window; returns window+1 when no mismatch is visible.
std::int64_t stabilization_order(ReflectFamily f, int residue, std::int64_t M,
                                 std::optional<std::int64_t> window = std::nullopt,
                                 std::optional<std::int64_t> rule_override = std::nullopt);

}  // namespace qlab
