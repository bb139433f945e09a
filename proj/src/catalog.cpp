#include "qlab/catalog.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "qlab/qkit.hpp"

namespace qlab {

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

const Eisenstein kOmega = Eisenstein::omega();
const Eisenstein kOmega2 = Eisenstein::omega2();

std::string pair_list_text(const Pairs& pairs) {
    std::ostringstream os;
    os << "1/(";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) os << " ";
        os << "q^" << pairs[i].first << ";q^" << pairs[i].second;
    }
    os << ")oo";
    return os.str();
}

Expr ex_s(int a, int b) {
    std::string t = "S(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return {t, [a, b](std::int64_t P, EvalContext& c) { return promote(c.sums.get(a, b, P)); }};
}

Expr ex_kr(int i) {
    std::string t = "KR" + std::to_string(i) + " sum side";
    return {t, [i](std::int64_t P, EvalContext& c) { return promote(kr_combo(i, P, c.sums)); }};
}

Expr ex_hick(int which, bool conj) {
    std::string t = which == 1 ? "S(1,1) - w q S(2,4)" : "S(0,-1) + w^2 S(0,2)";
    if (conj) t += " (conjugated)";
    return {t, [which, conj](std::int64_t P, EvalContext& c) {
                return hickerson_combo(which, conj, P, c.sums);
            }};
}

Expr ex_const(long v) {
    return {std::to_string(v),
            [v](std::int64_t, EvalContext&) { return ESeries::monomial(Eisenstein(v), 0); }};
}

Expr ex_sum(Expr x, Expr y) {
    std::string t = x.text + " + " + y.text;
    return {t, [x = std::move(x.eval), y = std::move(y.eval)](std::int64_t P, EvalContext& c) {
                return add(x(P, c), y(P, c));
            }};
}

Expr ex_diff(Expr x, Expr y) {
    std::string t = x.text + " - (" + y.text + ")";
    return {t, [x = std::move(x.eval), y = std::move(y.eval)](std::int64_t P, EvalContext& c) {
                return sub(x(P, c), y(P, c));
            }};
}

// coeff * q^e * inner, with the inner side evaluated deep enough that the
// shifted result still carries order >= P.
Expr ex_scale(const Eisenstein& coeff, std::int64_t e, Expr inner, const std::string& label) {
    std::string t = label + "(" + inner.text + ")";
    return {t, [coeff, e, f = std::move(inner.eval)](std::int64_t P, EvalContext& c) {
                return mul_monomial(f(P - e, c), coeff, e);
            }};
}

Expr ex_qpow(std::int64_t e, Expr inner) {
    return ex_scale(Eisenstein(1), e, std::move(inner), "q^" + std::to_string(e) + "*");
}

Expr ex_prod(std::vector<Expr> factors, std::string text) {
    return {std::move(text), [factors](std::int64_t P, EvalContext& c) {
                ESeries acc = ESeries::one(P);
                for (const Expr& f : factors) acc = mul(acc, f.eval(P, c));
                return acc;
            }};
}

Expr ex_inv_product(Pairs pairs) {
    std::string t = pair_list_text(pairs);
    return {t, [pairs = std::move(pairs)](std::int64_t P, EvalContext&) {
                return promote(inv_product(pairs, P));
            }};
}

Expr ex_poch_z(std::int64_t e, std::int64_t k) {
    std::string t = "(q^" + std::to_string(e) + ";q^" + std::to_string(k) + ")oo";
    return {t, [e, k](std::int64_t P, EvalContext&) {
                return promote(pochhammer_z(e, k, std::nullopt, P));
            }};
}

Expr ex_poch_e(const Eisenstein& cf, std::int64_t e, std::int64_t k, const std::string& cftext) {
    std::string t = "(" + cftext + " q^" + std::to_string(e) + ";q^" + std::to_string(k) + ")oo";
    return {t, [cf, e, k](std::int64_t P, EvalContext&) {
                PochhammerSpec<Eisenstein> spec;
                spec.coefficient = cf;
                spec.exponent = e;
                spec.base_power = k;
                return pochhammer(spec, P);
            }};
}

Expr ex_limit(ReflectFamily f, int r) {
    std::string t = std::string(family_name(f)) + std::to_string(r) + " limit series";
    return {t, [f, r](std::int64_t P, EvalContext&) { return promote(limit_series({f, r}, P)); }};
}

Expr ex_rk1_limit(int r) {
    std::string t = "RK1 limit series, residue " + std::to_string(r);
    return {t, [r](std::int64_t P, EvalContext& c) {
                return promote(rk1_limit_series(r, c.reading, P));
            }};
}

Expr ex_bracket(std::int64_t c1, std::int64_t c2, std::int64_t c3, std::int64_t c4) {
    std::ostringstream os;
    os << "<" << c1 << "," << c2 << "," << c3 << "," << c4 << ">";
    return {os.str(), [c1, c2, c3, c4](std::int64_t P, EvalContext&) {
                return promote(bracket_product({c1, c2, c3, c4}, P));
            }};
}

// Reflection of the family's finite version at fixed M, kept through at most
// `cap` coefficients; beyond its stabilization point it departs from the
// limit by construction.
Expr ex_reflect_prefix(ReflectFamily f, int r, std::int64_t M, std::int64_t cap) {
    std::ostringstream os;
    os << "reflect " << family_name(f) << " residue " << r << " at M=" << M;
    return {os.str(), [f, r, M, cap](std::int64_t P, EvalContext&) {
                std::int64_t w = std::min(P, cap);
                return promote(reflect_finite(f, r, M, w));
            }};
}

Expr ex_rk4_product(int r) {
    std::string t = "RK4 reflected-limit product, residue " + std::to_string(r);
    return {t, [r](std::int64_t P, EvalContext&) { return promote(rk4_limit_product(r, P)); }};
}

// sum_{n>=0} q^{n^2 + lin*n} / (q;q)_{mult*n + off}
ZSeries rr_type_sum(std::int64_t order, int lin, int mult, int off) {
    std::vector<BigInt> row(static_cast<std::size_t>(order) + 1);
    row[0] = 1;
    std::vector<BigInt> acc(static_cast<std::size_t>(order) + 1);
    std::int64_t cur = 0;
    for (std::int64_t n = 0;; ++n) {
        std::int64_t e = n * n + lin * n;
        if (e > order) break;
        std::int64_t len = mult * n + off;
        while (cur < len) {
            ++cur;
            window::div_one_minus(row, cur);
        }
        for (std::int64_t j = 0; j + e <= order; ++j)
            acc[static_cast<std::size_t>(j + e)] += row[static_cast<std::size_t>(j)];
    }
    return ZSeries(0, std::move(acc), order);
}

Expr ex_rr_sum(int lin, int mult, int off, std::string text) {
    return {std::move(text), [lin, mult, off](std::int64_t P, EvalContext&) {
                return promote(rr_type_sum(P, lin, mult, off));
            }};
}

// ---- custom checks ---------------------------------------------------------

std::optional<std::int64_t> exact_poly_mismatch(const ZSeries& f, const ZSeries& g) {
    std::int64_t hi = std::max(f.max_stored_exp(), g.max_stored_exp());
    return first_mismatch(f, g, hi);
}

// Polynomial identities joining a sum over j to an alternating bilateral sum,
// exact for every N up to the pinned bound.
VerificationReport schur_check(int which, const IdentityEntry& entry, std::int64_t order,
                               EvalContext&) {
    constexpr std::int64_t kMaxN = 40;
    VerificationReport rep;
    rep.id = entry.id;
    rep.requested_order = order;
    for (std::int64_t N = 0; N <= kMaxN; ++N) {
        ZSeries lhs;
        for (std::int64_t j = 0; 2 * j <= N; ++j) {
            std::int64_t e = which == 1 ? j * j : j * j + j;
            lhs = add(lhs, mul_monomial(gauss_binom({N - j, j, 1, false}), BigInt(1), e));
        }
        ZSeries rhs;
        std::int64_t span = N / 5 + 2;
        for (std::int64_t lam = -span; lam <= span; ++lam) {
            std::int64_t e;
            ZSeries bin;
            if (which == 1) {
                e = lam * (5 * lam + 1) / 2;
                bin = gauss_binom({N, (N - 5 * lam) >= 0 ? (N - 5 * lam) / 2
                                                         : -((-(N - 5 * lam) + 1) / 2),
                                   1, false});
            } else {
                e = lam * (5 * lam - 3) / 2;
                std::int64_t t = N + 1 - 5 * lam;
                std::int64_t fl = t >= 0 ? t / 2 : -((-t + 1) / 2);
                bin = gauss_binom({N + 1, fl + 1, 1, false});
            }
            rhs = add(rhs, mul_monomial(bin, BigInt(lam % 2 == 0 ? 1 : -1), e));
        }
        if (auto bad = exact_poly_mismatch(lhs, rhs)) {
            rep.agreement_order = *bad - 1;
            Mismatch m;
            m.exponent = *bad;
            detail::fill_mismatch_value(m, true, lhs.coeff(*bad));
            detail::fill_mismatch_value(m, false, rhs.coeff(*bad));
            rep.first_mismatch = m;
            rep.reading = "N=" + std::to_string(N);
            return rep;
        }
    }
    rep.agreement_order = order;
    return rep;
}

Expr hick_rhs(int which, bool conj) {
    const Eisenstein& u = conj ? kOmega2 : kOmega;
    const Eisenstein& u2 = conj ? kOmega : kOmega2;
    std::string ut = conj ? "w^2" : "w";
    std::string u2t = conj ? "w" : "w^2";
    if (which == 1) {
        std::vector<Expr> fs{ex_poch_z(6, 9), ex_poch_e(u, 1, 3, ut), ex_poch_e(u2, 3, 3, u2t),
                             ex_inv_product({{2, 3}})};
        return ex_prod(std::move(fs),
                       "(q^6;q^9)oo (" + ut + " q," + u2t + " q^3;q^3)oo / (q^2;q^3)oo");
    }
    std::vector<Expr> fs{ex_poch_z(3, 9), ex_poch_e(u2, 2, 3, u2t), ex_poch_e(u, 3, 3, ut),
                         ex_inv_product({{1, 3}})};
    Expr prod = ex_prod(std::move(fs),
                        "(q^3;q^9)oo (" + u2t + " q^2," + ut + " q^3;q^3)oo / (q;q^3)oo");
    return ex_scale(u, 0, std::move(prod), ut + "*");
}

// Every one of the six named products must be expressible in the
// 1/(q, q^2, w a, w^2 b; q^3) shape; the search space is the six legal
// (a, b) monomial pairs.
VerificationReport referee_check(const IdentityEntry& entry, std::int64_t order,
                                 EvalContext& ctx) {
    VerificationReport rep;
    rep.id = entry.id;
    rep.requested_order = order;
    std::vector<std::pair<std::string, Expr>> targets;
    targets.emplace_back("hick1 product", hick_rhs(1, false));
    targets.emplace_back("hick1 conjugate product", hick_rhs(1, true));
    targets.emplace_back("hick2 product", hick_rhs(2, false));
    targets.emplace_back("hick2 conjugate product", hick_rhs(2, true));
    targets.emplace_back("KR4 product",
                         ex_inv_product({{2, 9}, {3, 9}, {5, 9}, {8, 9}}));
    targets.emplace_back("KR5 product",
                         ex_inv_product({{1, 9}, {4, 9}, {6, 9}, {7, 9}}));
    for (const auto& [name, expr] : targets) {
        ESeries target = expr.eval(order, ctx);
        if (product_match_search(target, order).empty()) {
            rep.agreement_order = -1;
            Mismatch m;
            m.exponent = 0;
            m.lhs = name;
            m.rhs = "no (a,b) match";
            rep.first_mismatch = m;
            return rep;
        }
    }
    rep.agreement_order = order;
    return rep;
}

// The reflected RK4 limits exist only through their finite reflections, so
// the residue-2 linear relation is checked on prefixes at large M, guarded by
// a self-stabilization scan between two different M values.
VerificationReport rk4_linear_check(const IdentityEntry& entry, std::int64_t order,
                                    EvalContext&) {
    VerificationReport rep;
    rep.id = entry.id;
    rep.requested_order = order;
    std::int64_t target = std::min<std::int64_t>(order, 300);
    std::int64_t w = target + 6;
    std::int64_t m2 = std::max<std::int64_t>(110, (w + 40) / 3);
    std::int64_t m1 = m2 - 5;
    ZSeries lo[3], hi[3];
    std::int64_t guard = w + 1;
    for (int r = 0; r < 3; ++r) {
        lo[r] = reflect_finite(ReflectFamily::RK4, r, m1, w);
        hi[r] = reflect_finite(ReflectFamily::RK4, r, m2, w);
        if (auto bad = first_mismatch(lo[r], hi[r], w)) guard = std::min(guard, *bad - 1);
    }
    std::int64_t evaluated = std::min(target, guard);
    ZSeries rhs = add(hi[0], mul_monomial(hi[1], BigInt(1), 2));
    VerificationReport cmp = compare_series(entry.id, hi[2], rhs, evaluated);
    cmp.requested_order = order;
    cmp.reading = "prefixes at M=" + std::to_string(m2) + ", stable through " +
                  std::to_string(guard);
    return cmp;
}

std::vector<IdentityEntry> build_catalog() {
    std::vector<IdentityEntry> cat;
    auto entry = [&cat](std::string id, Status st, std::string ring, Expr lhs, Expr rhs,
                        std::int64_t def_order, std::int64_t required = 0,
                        bool reading_sensitive = false) {
        IdentityEntry e;
        e.id = std::move(id);
        e.status = st;
        e.ring = std::move(ring);
        e.lhs = std::move(lhs);
        e.rhs = std::move(rhs);
        e.default_order = def_order;
        e.required_agreement = required;
        e.reading_sensitive = reading_sensitive;
        cat.push_back(std::move(e));
    };

    // Rogers-Ramanujan, Region I
    entry("rr1", Status::proved, "integer",
          ex_rr_sum(0, 1, 0, "sum q^{n^2}/(q;q)_n"), ex_inv_product({{1, 5}, {4, 5}}), 400);
    entry("rr2", Status::proved, "integer",
          ex_rr_sum(1, 1, 0, "sum q^{n^2+n}/(q;q)_n"), ex_inv_product({{2, 5}, {3, 5}}), 400);
    // Region IV
    entry("rr_iv_1", Status::proved, "integer",
          ex_rr_sum(0, 2, 0, "sum q^{n^2}/(q;q)_{2n}"),
          ex_inv_product({{1, 2}, {4, 20}, {16, 20}}), 400);
    entry("rr_iv_2", Status::proved, "integer",
          ex_rr_sum(1, 2, 1, "sum q^{n^2+n}/(q;q)_{2n+1}"),
          ex_inv_product({{1, 10}, {2, 10}, {8, 10}, {9, 10}, {5, 20}, {6, 20}, {14, 20}, {15, 20}}),
          400);

    // Polynomial identities behind the Region I/IV passage
    {
        IdentityEntry e;
        e.id = "schur_poly_1";
        e.status = Status::proved;
        e.ring = "integer";
        e.lhs.text = "sum_j q^{j^2} [N-j, j]";
        e.rhs.text = "bilateral alternating binomial sum";
        e.default_order = 40;
        e.custom = [](const IdentityEntry& en, std::int64_t P, EvalContext& c) {
            return schur_check(1, en, P, c);
        };
        cat.push_back(std::move(e));
    }
    {
        IdentityEntry e;
        e.id = "schur_poly_2";
        e.status = Status::proved;
        e.ring = "integer";
        e.lhs.text = "sum_j q^{j^2+j} [N-j, j]";
        e.rhs.text = "bilateral alternating binomial sum";
        e.default_order = 40;
        e.custom = [](const IdentityEntry& en, std::int64_t P, EvalContext& c) {
            return schur_check(2, en, P, c);
        };
        cat.push_back(std::move(e));
    }

    // The five modulo-9 double-sum conjectures
    const Pairs kr_products[5] = {{{1, 9}, {3, 9}, {6, 9}, {8, 9}},
                                  {{2, 9}, {3, 9}, {6, 9}, {7, 9}},
                                  {{3, 9}, {4, 9}, {5, 9}, {6, 9}},
                                  {{2, 9}, {3, 9}, {5, 9}, {8, 9}},
                                  {{1, 9}, {4, 9}, {6, 9}, {7, 9}}};
    for (int i = 1; i <= 5; ++i)
        entry("kr" + std::to_string(i), Status::conjectural, "integer", ex_kr(i),
              ex_inv_product(kr_products[i - 1]), 400);

    // proved rearrangement of the fifth sum side
    entry("kr5_simplified", Status::proved, "integer", ex_kr(5),
          ex_sum(ex_qpow(1, ex_s(2, 4)), ex_s(1, 4)), 400);

    // complex-coefficient combinations and their conjugates
    entry("hick1", Status::conjectural, "eisenstein", ex_hick(1, false), hick_rhs(1, false), 300);
    entry("hick1_conj", Status::conjectural, "eisenstein", ex_hick(1, true), hick_rhs(1, true), 300);
    entry("hick2", Status::conjectural, "eisenstein", ex_hick(2, false), hick_rhs(2, false), 300);
    entry("hick2_conj", Status::conjectural, "eisenstein", ex_hick(2, true), hick_rhs(2, true), 300);

    // all six named products fit the 1/(q,q^2,wa,w^2b;q^3) shape
    {
        IdentityEntry e;
        e.id = "referee_products";
        e.status = Status::proved;
        e.ring = "eisenstein";
        e.lhs.text = "six named products";
        e.rhs.text = "1/(q,q^2,w a,w^2 b;q^3)oo for some legal (a,b)";
        e.default_order = 100;
        e.custom = referee_check;
        cat.push_back(std::move(e));
    }

    // contiguous-relation instances that lift to the finite level
    entry("prop42_lift_1", Status::proved, "integer", ex_s(1, 3),
          ex_sum(ex_s(2, 3), ex_qpow(2, ex_s(3, 6))), 300);
    entry("prop42_lift_2", Status::proved, "integer", ex_s(0, 2),
          ex_diff(ex_s(0, -1), ex_qpow(2, ex_s(3, 5))), 300);

    // the four proved linear relations among the twelve limit series
    entry("thm_stats_1", Status::proved, "integer", ex_limit(ReflectFamily::F, 0),
          ex_sum(ex_sum(ex_limit(ReflectFamily::F, 1), ex_qpow(2, ex_limit(ReflectFamily::F, 2))),
                 ex_const(1)),
          500);
    entry("thm_stats_2", Status::proved, "integer", ex_limit(ReflectFamily::G, 0),
          ex_sum(ex_limit(ReflectFamily::G, 1), ex_qpow(2, ex_limit(ReflectFamily::G, 2))), 500);
    entry("thm_stats_3", Status::proved, "integer", ex_limit(ReflectFamily::Fstar, 2),
          ex_sum(ex_sum(ex_limit(ReflectFamily::Fstar, 0), ex_limit(ReflectFamily::Fstar, 1)),
                 ex_const(1)),
          500);
    entry("thm_stats_4", Status::proved, "integer", ex_limit(ReflectFamily::Gstar, 2),
          ex_sum(ex_limit(ReflectFamily::Gstar, 0), ex_limit(ReflectFamily::Gstar, 1)), 500);

    // the two closed-form conjectures and their conjugates
    auto conj1 = [&](bool cj) {
        const Eisenstein& u = cj ? kOmega2 : kOmega;
        const Eisenstein& u2 = cj ? kOmega : kOmega2;
        std::string ut = cj ? "w^2" : "w", u2t = cj ? "w" : "w^2";
        Expr lhs = ex_diff(ex_limit(ReflectFamily::F, 1),
                           ex_scale(u, -1, ex_limit(ReflectFamily::G, 1), ut + " q^-1 *"));
        std::vector<Expr> fs{ex_poch_z(15, 45),
                             ex_poch_e(u, 3, 3, ut),
                             ex_poch_e(u2, 1, 15, u2t),
                             ex_poch_e(u2, 2, 15, u2t),
                             ex_poch_e(u2, 4, 15, u2t),
                             ex_poch_e(u2, 8, 15, u2t),
                             ex_poch_e(u2, 10, 15, u2t),
                             ex_inv_product({{5, 15}, {11, 15}, {14, 15},
                                             {3, 45}, {12, 45}, {18, 45}, {27, 45}})};
        Expr rhs = ex_scale(-u, 0,
                            ex_prod(std::move(fs), "(q^15;q^45)oo (" + ut + " q^3;q^3)oo (" + u2t +
                                                       " q,...;q^15)oo / (...)"),
                            "-" + ut + "*");
        entry(cj ? "conj1_conj" : "conj1", Status::conjectural, "eisenstein", std::move(lhs),
              std::move(rhs), 300);
    };
    conj1(false);
    conj1(true);
    auto conj2 = [&](bool cj) {
        const Eisenstein& u = cj ? kOmega2 : kOmega;
        const Eisenstein& u2 = cj ? kOmega : kOmega2;
        std::string ut = cj ? "w^2" : "w", u2t = cj ? "w" : "w^2";
        Expr lhs = ex_sum(ex_limit(ReflectFamily::Fstar, 0),
                          ex_scale(u2, 0, ex_limit(ReflectFamily::Gstar, 0), u2t + "*"));
        std::vector<Expr> fs{ex_poch_z(30, 45),
                             ex_poch_e(u2, 3, 3, u2t),
                             ex_poch_e(u, 5, 15, ut),
                             ex_poch_e(u, 7, 15, ut),
                             ex_poch_e(u, 11, 15, ut),
                             ex_poch_e(u, 13, 15, ut),
                             ex_poch_e(u, 14, 15, ut),
                             ex_inv_product({{1, 15}, {4, 15}, {10, 15},
                                             {18, 45}, {27, 45}, {33, 45}, {42, 45}})};
        Expr rhs = ex_scale(-u, 0,
                            ex_prod(std::move(fs), "(q^30;q^45)oo (" + u2t + " q^3;q^3)oo (" + ut +
                                                       " q^5,...;q^15)oo / (...)"),
                            "-" + ut + "*");
        entry(cj ? "conj2_conj" : "conj2", Status::conjectural, "eisenstein", std::move(lhs),
              std::move(rhs), 300);
    };
    conj2(false);
    conj2(true);

    // reflected RK4: prefix-vs-product at M = 40, plus the residue-2 relation
    entry("warnaar_rk4_0", Status::conjectural, "integer",
          ex_reflect_prefix(ReflectFamily::RK4, 0, 40, 160), ex_rk4_product(0), 160, 100);
    entry("warnaar_rk4_1", Status::conjectural, "integer",
          ex_reflect_prefix(ReflectFamily::RK4, 1, 40, 160), ex_rk4_product(1), 160, 100);
    {
        IdentityEntry e;
        e.id = "warnaar_rk4_2";
        e.status = Status::conjectural;
        e.ring = "integer";
        e.lhs.text = "RK4 reflected limit, residue 2";
        e.rhs.text = "residue-0 limit + q^2 * residue-1 limit";
        e.default_order = 300;
        e.required_agreement = 300;
        e.custom = rk4_linear_check;
        cat.push_back(std::move(e));
    }

    // reflected RK1 against the modulus-45 bracket combinations
    Expr br0a = ex_sum(ex_sum(ex_bracket(2, 8, 11, 20), ex_qpow(3, ex_bracket(2, 14, 20, 22))),
                       ex_scale(Eisenstein(-1), 8, ex_bracket(17, 19, 20, 22), "-q^8*"));
    Expr br0b = ex_sum(ex_sum(ex_bracket(1, 8, 13, 20),
                              ex_scale(Eisenstein(-1), 1, ex_bracket(4, 7, 13, 20), "-q*")),
                       ex_qpow(5, ex_bracket(7, 16, 17, 20)));
    Expr br2a = ex_sum(ex_sum(ex_bracket(1, 7, 11, 20), ex_qpow(6, ex_bracket(11, 13, 14, 20))),
                       ex_scale(Eisenstein(-1), 6, ex_bracket(8, 14, 19, 20), "-q^6*"));
    Expr br2b = ex_sum(ex_sum(ex_bracket(1, 4, 17, 20),
                              ex_scale(Eisenstein(-1), 4, ex_bracket(2, 16, 19, 20), "-q^4*")),
                       ex_scale(Eisenstein(-1), 5, ex_bracket(4, 16, 20, 22), "-q^5*"));
    entry("rk1_bracket_0", Status::conjectural, "integer",
          ex_reflect_prefix(ReflectFamily::RK1, 0, 40, 160), br0a, 160, 100);
    entry("rk1_bracket_2", Status::conjectural, "integer",
          ex_reflect_prefix(ReflectFamily::RK1, 2, 40, 160), br2a, 160, 100);
    entry("rk1_bracket_alt_0", Status::proved, "integer", br0a, br0b, 300);
    entry("rk1_bracket_alt_2", Status::proved, "integer", br2a, br2b, 300);
    entry("rk1_series_0", Status::conjectural, "integer", ex_rk1_limit(0), br0a, 300, 0, true);
    entry("rk1_series_2", Status::conjectural, "integer", ex_rk1_limit(2), br2a, 300, 0, true);
    entry("rk1_linear", Status::proved, "integer", ex_rk1_limit(1),
          ex_sum(ex_qpow(1, ex_rk1_limit(0)), ex_rk1_limit(2)), 300, 0, true);

    return cat;
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
    static const std::vector<IdentityEntry> cat = build_catalog();
    return cat;
}

const IdentityEntry* find_entry(const std::string& id) {
    for (const IdentityEntry& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

bool entry_passes(const IdentityEntry& entry, const VerificationReport& rep,
                  std::int64_t order) {
    std::int64_t target = entry.required_agreement > 0
                              ? std::min(order, entry.required_agreement)
                              : order;
    return rep.agreement_order >= target;
}

VerificationReport verify(const IdentityEntry& entry, std::int64_t order, EvalContext& ctx) {
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    if (entry.custom) {
        rep = entry.custom(entry, order, ctx);
    } else if (entry.reading_sensitive) {
        Rk1Reading primary = ctx.reading;
        VerificationReport per_reading[2];
        bool ok[2];
        for (int k = 0; k < 2; ++k) {
            ctx.reading = k == 0 ? Rk1Reading::corrected : Rk1Reading::literal;
            per_reading[k] =
                compare_series(entry.id, entry.lhs.eval(order, ctx), entry.rhs.eval(order, ctx),
                               order);
            ok[k] = entry_passes(entry, per_reading[k], order);
        }
        ctx.reading = primary;
        rep = per_reading[primary == Rk1Reading::corrected ? 0 : 1];
        if (ok[0] && ok[1])
            rep.reading = "both readings match";
        else if (ok[0])
            rep.reading = "corrected";
        else if (ok[1])
            rep.reading = "literal";
        else
            rep.reading = "neither reading matches";
    } else {
        rep = compare_series(entry.id, entry.lhs.eval(order, ctx), entry.rhs.eval(order, ctx),
                             order);
    }
    rep.requested_order = order;
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

VerificationReport verify(const std::string& id, std::int64_t order, Rk1Reading reading) {
    const IdentityEntry* e = find_entry(id);
    if (!e) throw UnsupportedSpecError("verify: unknown identity id '" + id + "'");
    EvalContext ctx;
    ctx.reading = reading;
    return verify(*e, order, ctx);
}

std::vector<std::pair<int, int>> product_match_search(const ESeries& target,
                                                      std::int64_t order) {
    static const std::pair<int, int> legal[] = {{1, 1}, {1, 3}, {3, 1}, {2, 2}, {2, 3}, {3, 2}};
    std::vector<std::pair<int, int>> matches;
    for (auto [i, j] : legal) {
        ESeries denom = mul(promote(mul(pochhammer_z(1, 3, std::nullopt, order),
                                        pochhammer_z(2, 3, std::nullopt, order))),
                            mul(pochhammer(PochhammerSpec<Eisenstein>{kOmega, i, 3, {}}, order),
                                pochhammer(PochhammerSpec<Eisenstein>{kOmega2, j, 3, {}}, order)));
        ESeries candidate = invert_unit(denom, order);
        if (agree_through(candidate, target, std::min(order, target.order())))
            matches.emplace_back(i, j);
    }
    return matches;
}

RunAllResult run_all(std::int64_t order, Filter filter, Rk1Reading reading) {
    RunAllResult out;
    EvalContext ctx;
    ctx.reading = reading;
    bool proved_fail = false, conj_fail = false;
    for (const IdentityEntry& e : catalog()) {
        if (filter == Filter::proved && e.status != Status::proved) continue;
        if (filter == Filter::conjectural && e.status != Status::conjectural) continue;
        VerificationReport rep = verify(e, order, ctx);
        if (!entry_passes(e, rep, order)) {
            if (e.status == Status::proved)
                proved_fail = true;
            else
                conj_fail = true;
        }
        out.reports.push_back(std::move(rep));
    }
    std::sort(out.reports.begin(), out.reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    out.exit_code = proved_fail ? 2 : (conj_fail ? 3 : 0);
    return out;
}

namespace {

nlohmann::ordered_json mismatch_value(bool eis, const std::string& plain, const std::string& re,
                                      const std::string& om) {
    if (eis && om != "0") return nlohmann::ordered_json{{"re_a", re}, {"omega_b", om}};
    if (eis) return re;
    return plain;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["id"] = rep.id;
    j["requested_order"] = rep.requested_order;
    j["agreement_order"] = rep.agreement_order;
    if (rep.first_mismatch) {
        const Mismatch& m = *rep.first_mismatch;
        j["first_mismatch"] = {
            {"exponent", m.exponent},
            {"lhs", mismatch_value(m.lhs_eisenstein, m.lhs, m.lhs_re, m.lhs_om)},
            {"rhs", mismatch_value(m.rhs_eisenstein, m.rhs, m.rhs_re, m.rhs_om)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["reading"] = rep.reading;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

}  // namespace qlab
