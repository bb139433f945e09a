#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qlab/series.hpp"

namespace qlab {

struct Mismatch {
    std::int64_t exponent = 0;
    std::string lhs, rhs;  // coefficient values rendered exactly
    bool lhs_eisenstein = false;
    bool rhs_eisenstein = false;
    std::string lhs_re, lhs_om, rhs_re, rhs_om;  // components when Eisenstein
};

struct VerificationReport {
    std::string id;
    std::int64_t requested_order = 0;
    // First exponent of disagreement minus one, or the full evaluated order
    // when both sides agree everywhere that was compared.
    std::int64_t agreement_order = 0;
    std::optional<Mismatch> first_mismatch;
    std::string reading;  // which display reading was used/matched, "" if n/a
    double elapsed_ms = 0.0;

    bool fully_agrees() const { return !first_mismatch.has_value(); }
};

namespace detail {
inline void fill_mismatch_value(Mismatch& m, bool lhs_side, const BigInt& v) {
    (lhs_side ? m.lhs : m.rhs) = coeff_to_string(v);
}
inline void fill_mismatch_value(Mismatch& m, bool lhs_side, const Eisenstein& v) {
    (lhs_side ? m.lhs : m.rhs) = coeff_to_string(v);
    (lhs_side ? m.lhs_eisenstein : m.rhs_eisenstein) = true;
    (lhs_side ? m.lhs_re : m.rhs_re) = v.a().get_str();
    (lhs_side ? m.lhs_om : m.rhs_om) = v.b().get_str();
}
}  // namespace detail

// Coefficient-wise comparison through min(order, both carried orders).
template <typename R>
VerificationReport compare_series(const std::string& id, const Series<R>& lhs,
                                  const Series<R>& rhs, std::int64_t order) {
    VerificationReport rep;
    rep.id = id;
    rep.requested_order = order;
    std::int64_t evaluated = std::min({order, lhs.order(), rhs.order()});
    auto bad = first_mismatch(lhs, rhs, evaluated);
    if (bad) {
        rep.agreement_order = *bad - 1;
        Mismatch m;
        m.exponent = *bad;
        detail::fill_mismatch_value(m, true, lhs.coeff(*bad));
        detail::fill_mismatch_value(m, false, rhs.coeff(*bad));
        rep.first_mismatch = m;
    } else {
        rep.agreement_order = evaluated;
    }
    return rep;
}

}  // namespace qlab
