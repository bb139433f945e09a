#include "qlab/oracle.hpp"

#include <algorithm>

#include "qlab/errors.hpp"

namespace qlab {

namespace {

constexpr std::int64_t kOracleCap = 80;

struct Enumerator {
    const GapConditionSpec& spec;
    std::vector<std::int64_t> parts;  // increasing while building
    std::vector<std::vector<std::int64_t>>* sink = nullptr;
    BigInt count = 0;

    bool pair_ok(std::int64_t lo, std::int64_t hi) const {
        if (hi - lo > 1) return true;
        std::int64_t s = lo + hi;
        return s >= spec.min_pair_sum && ((s % 3) == spec.close_pair_rule);
    }

    void emit() {
        ++count;
        if (sink) {
            std::vector<std::int64_t> p(parts.rbegin(), parts.rend());
            sink->push_back(std::move(p));
        }
    }

    // Extends the current increasing prefix with parts summing to `remaining`.
    void extend(std::int64_t remaining) {
        if (remaining == 0) {
            emit();
            return;
        }
        std::int64_t lo = spec.min_part;
        if (!parts.empty()) lo = std::max(lo, parts.back());
        if (parts.size() >= 2)
            lo = std::max(lo, parts[parts.size() - 2] + spec.distance2_gap);
        std::int64_t hi = remaining;
        if (spec.max_part) hi = std::min(hi, *spec.max_part);
        for (std::int64_t p = lo; p <= hi; ++p) {
            if (!parts.empty() && !pair_ok(parts.back(), p)) continue;
            parts.push_back(p);
            extend(remaining - p);
            parts.pop_back();
        }
    }
};

void check_oracle_args(const GapConditionSpec& spec, std::int64_t n) {
    if (n < 0) throw UnsupportedSpecError("gap partitions: n must be non-negative");
    if (n > kOracleCap)
        throw UnsupportedSpecError("gap partitions: enumeration capped at n = " +
                                   std::to_string(kOracleCap));
    if (spec.distance2_gap < 3)
        throw UnsupportedSpecError("gap partitions: distance-2 gap below 3 is unsupported");
    if (spec.close_pair_rule < 0 || spec.close_pair_rule > 2)
        throw UnsupportedSpecError("gap partitions: close pair rule must be 0, 1 or 2");
}

}  // namespace

GapConditionSpec gap_variant(int a, int b, std::optional<std::int64_t> bound) {
    GapConditionSpec s;
    s.max_part = bound;
    s.variant = "S(" + std::to_string(a) + "," + std::to_string(b) + ")";
    auto set = [&](std::int64_t min_part, int rule, std::int64_t min_pair_sum) {
        s.min_part = min_part;
        s.close_pair_rule = rule;
        s.min_pair_sum = min_pair_sum;
    };
    // min_part and the close-pair congruence come from each variant's two pair
    // shapes; min_pair_sum is the weight of the smallest admissible pair.
    if (a == 0 && b == -1) set(1, 2, 2);        // pairs (1,1), (2,3), ...
    else if (a == 0 && b == 0) set(1, 0, 3);    // pairs (1,2), (3,3), ...
    else if (a == 1 && b == 1) set(2, 1, 4);    // pairs (2,2), (3,4), ...
    else if (a == 1 && b == 2) set(2, 2, 5);    // pairs (2,3), (4,4), ...
    else if (a == 2 && b == 3) set(3, 0, 6);    // pairs (3,3), (4,5), ...
    else if (a == 2 && b == 4) set(3, 1, 7);    // pairs (3,4), (5,5), ...
    else if (a == 3 && b == 5) set(4, 2, 8);    // pairs (4,4), (5,6), ...
    else if (a == 3 && b == 6) set(4, 0, 9);    // pairs (4,5), (6,6), ...
    else if (a == 1 && b == 3) set(2, 0, 6);    // pairs (3,3), (4,5), ... with 2s allowed
    else if (a == 0 && b == 2) set(1, 2, 5);    // as S(0,-1) but the pair (1,1) is excluded
    else
        throw UnsupportedSpecError("gap_variant: unsupported pair S(" + std::to_string(a) + "," +
                                   std::to_string(b) + ")");
    return s;
}

BigInt count_gap_partitions(const GapConditionSpec& spec, std::int64_t n) {
    check_oracle_args(spec, n);
    Enumerator e{spec};
    e.extend(n);
    return e.count;
}

std::vector<std::vector<std::int64_t>> list_gap_partitions(const GapConditionSpec& spec,
                                                           std::int64_t n) {
    check_oracle_args(spec, n);
    std::vector<std::vector<std::int64_t>> out;
    Enumerator e{spec};
    e.sink = &out;
    e.extend(n);
    std::sort(out.begin(), out.end());
    return out;
}

ResidueClassSpec kr_residues(int i) {
    switch (i) {
        case 1: return {9, {1, 3, 6, 8}};
        case 2: return {9, {2, 3, 6, 7}};
        case 3: return {9, {3, 4, 5, 6}};
        case 4: return {9, {2, 3, 5, 8}};
        case 5: return {9, {1, 4, 6, 7}};
        default: throw UnsupportedSpecError("kr_residues: index must be in 1..5");
    }
}

BigInt count_residue_partitions(const ResidueClassSpec& spec, std::int64_t n) {
    if (n < 0) throw UnsupportedSpecError("residue partitions: n must be non-negative");
    if (spec.modulus < 1 || spec.residues.empty())
        throw UnsupportedSpecError("residue partitions: need a modulus and nonempty residues");
    for (std::int64_t r : spec.residues)
        if (r < 1 || r > spec.modulus)
            throw UnsupportedSpecError("residue partitions: residues must lie in [1, modulus]");
    // bounded-knapsack count over all allowed part sizes <= n
    std::vector<BigInt> ways(static_cast<std::size_t>(n) + 1);
    ways[0] = 1;
    for (std::int64_t part = 1; part <= n; ++part) {
        bool allowed = false;
        for (std::int64_t r : spec.residues)
            if ((part - r) % spec.modulus == 0) allowed = true;
        if (!allowed) continue;
        for (std::int64_t v = part; v <= n; ++v)
            ways[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(v - part)];
    }
    return ways[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> minimal_configuration(int a, int b, std::int64_t m, std::int64_t n) {
    if (m < 0 || n < 0)
        throw UnsupportedSpecError("minimal_configuration: m and n must be non-negative");
    // pair_lo/pair_hi give the k-th pair (k = 1..n); single_base + 2j the
    // j-th singleton (j = 1..m), sitting above all pairs.
    std::int64_t plo, phi_off, single_base;
    if (a == 0 && b == -1) { plo = -2; phi_off = 0; single_base = 3 * n - 1; }       // (3k-2,3k-2)
    else if (a == 0 && b == 0) { plo = -2; phi_off = 1; single_base = 3 * n - 1; }   // (3k-2,3k-1)
    else if (a == 1 && b == 1) { plo = -1; phi_off = 0; single_base = 3 * n; }       // (3k-1,3k-1)
    else if (a == 1 && b == 2) { plo = -1; phi_off = 1; single_base = 3 * n; }       // (3k-1,3k)
    else if (a == 2 && b == 3) { plo = 0; phi_off = 0; single_base = 3 * n + 1; }    // (3k,3k)
    else if (a == 2 && b == 4) { plo = 0; phi_off = 1; single_base = 3 * n + 1; }    // (3k,3k+1)
    else if (a == 3 && b == 5) { plo = 1; phi_off = 0; single_base = 3 * n + 2; }    // (3k+1,3k+1)
    else if (a == 3 && b == 6) { plo = 1; phi_off = 1; single_base = 3 * n + 2; }    // (3k+1,3k+2)
    else
        throw UnsupportedSpecError("minimal_configuration: no closed form for S(" +
                                   std::to_string(a) + "," + std::to_string(b) + ")");
    std::vector<std::int64_t> parts;
    for (std::int64_t k = 1; k <= n; ++k) {
        parts.push_back(3 * k + plo);
        parts.push_back(3 * k + plo + phi_off);
    }
    for (std::int64_t j = 1; j <= m; ++j) parts.push_back(single_base + 2 * j);
    std::reverse(parts.begin(), parts.end());
    return parts;
}

}  // namespace qlab
