#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "qlab/report.hpp"
#include "qlab/series.hpp"

namespace qlab {

// Parameters of the principal double sum
//   S(a,b) = sum_{m,n >= 0} q^{m^2+3mn+3n^2+am+bn} / ((q;q)_m (q^3;q^3)_n).
// Negative a, b are legal: the quadratic form dominates, so the exponent is
// bounded below and the sum is a well-defined Laurent series.
struct SumSpec {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const SumSpec&, const SumSpec&) = default;
};

// Memo for S(a,b) expansions; re-computes when a higher order is requested.
class SumCache {
  public:
    const ZSeries& get(int a, int b, std::int64_t order);

  private:
    std::map<std::pair<int, int>, ZSeries> memo_;
};

ZSeries s_series(const SumSpec& spec, std::int64_t order);

// Sum sides of the five conjectured identities in S-form:
// i in 1..4 is a single S(a,b); i == 5 is (1+q) S(2,4) + q^2 S(3,7).
ZSeries kr_combo(int i, std::int64_t order, SumCache& cache);

// The complex-coefficient combinations:
// which == 1: S(1,1) - w q S(2,4);  which == 2: S(0,-1) + w^2 S(0,2).
// conjugated applies w -> w^2 to the combination's coefficients.
ESeries hickerson_combo(int which, bool conjugated, std::int64_t order, SumCache& cache);

// Contiguous relations, checked numerically through `order`:
// (A):  S(a,b) = q^{1-a} (S(a-2,b-3) - S(a-1,b-3))
// (B):  S(a,b) = q^{3-b} (S(a-3,b-6) - S(a-3,b-3))
VerificationReport relation_a_check(int a, int b, std::int64_t order, SumCache& cache);
VerificationReport relation_b_check(int a, int b, std::int64_t order, SumCache& cache);

// S(spec) as a Laurent-polynomial combination of the nine basis sums
// S(a', b') with 0 <= a', b' <= 2.
struct BasisCombination {
    std::map<std::pair<int, int>, ZSeries> terms;  // key -> exact Laurent polynomial
    std::string to_string() const;
};

struct Reduction {
    BasisCombination combo;
    int steps = 0;
    std::int64_t certified_order = 0;  // numeric certificate, always run
};

// Deterministic rewriting to the 3x3 box. b mod 3 is invariant under both
// relations, so the vertical moves fix b into {0,1,2} first and derived
// three-term recurrences then walk a into range at fixed b. Every successful
// result carries a numeric certificate through `order`; exceeding the step
// budget raises ReductionFailedError with the partial expression.
Reduction reduce_to_basis(const SumSpec& spec, int step_budget, std::int64_t order,
                          SumCache& cache);

// Evaluates sum_k combo[k] * S(k) through `order`.
ZSeries evaluate_combination(const BasisCombination& combo, std::int64_t order,
                             SumCache& cache);

}  // namespace qlab
