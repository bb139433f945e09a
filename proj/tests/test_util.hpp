#pragma once

#include <random>
#include <vector>

#include "qlab/series.hpp"

namespace qlab::testutil {

inline std::mt19937_64 make_rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) {
    return std::mt19937_64(seed);
}

inline BigInt random_int(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    std::uniform_int_distribution<int> d(lo, hi);
    return BigInt(d(rng));
}

inline Eisenstein random_eisenstein(std::mt19937_64& rng, int lo = -9, int hi = 9) {
    return {random_int(rng, lo, hi), random_int(rng, lo, hi)};
}

template <typename R, typename Gen>
Series<R> random_series(std::mt19937_64& rng, Gen&& gen, bool laurent, bool exact) {
    std::uniform_int_distribution<int> len_d(0, 7);
    std::uniform_int_distribution<int> min_d(laurent ? -6 : 0, 3);
    std::uniform_int_distribution<int> ord_d(4, 24);
    int len = len_d(rng);
    std::vector<R> c(static_cast<std::size_t>(len));
    for (auto& x : c) x = gen(rng);
    std::int64_t min_exp = min_d(rng);
    std::int64_t order = exact ? kExactOrder
                               : std::max<std::int64_t>(min_exp + len, ord_d(rng));
    return Series<R>(min_exp, std::move(c), order);
}

inline ZSeries random_zseries(std::mt19937_64& rng, bool laurent = true, bool exact = false) {
    return random_series<BigInt>(rng, [](std::mt19937_64& r) { return random_int(r); }, laurent,
                                 exact);
}

inline ESeries random_eseries(std::mt19937_64& rng, bool laurent = true, bool exact = false) {
    return random_series<Eisenstein>(
        rng, [](std::mt19937_64& r) { return random_eisenstein(r); }, laurent, exact);
}

// Unit constant term, ones elsewhere randomized; valuation 0.
inline ZSeries random_unit_zseries(std::mt19937_64& rng, std::int64_t order) {
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<BigInt> c(static_cast<std::size_t>(order) + 1);
    c[0] = sign(rng) ? 1 : -1;
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_int(rng);
    return ZSeries(0, std::move(c), order);
}

inline ESeries random_unit_eseries(std::mt19937_64& rng, std::int64_t order) {
    std::uniform_int_distribution<int> pick(0, 5);
    static const Eisenstein units[6] = {Eisenstein(1),
                                        Eisenstein(-1),
                                        Eisenstein::omega(),
                                        -Eisenstein::omega(),
                                        Eisenstein::omega2(),
                                        -Eisenstein::omega2()};
    std::vector<Eisenstein> c(static_cast<std::size_t>(order) + 1);
    c[0] = units[pick(rng)];
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = random_eisenstein(rng);
    return ESeries(0, std::move(c), order);
}

}  // namespace qlab::testutil
