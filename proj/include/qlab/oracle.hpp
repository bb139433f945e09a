#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qlab/coeff.hpp"

namespace qlab {

// Machine form of the gap conditions: partitions (weakly decreasing positive
// parts) such that
//   - every part lies in [min_part, max_part],
//   - parts two positions apart differ by at least distance2_gap,
//   - consecutive parts differing by at most 1 ("close pairs") have sum
//     congruent to close_pair_rule mod 3 and sum at least min_pair_sum.
// min_pair_sum matters only for the S(0,2) variant, whose smallest admissible
// close pair is (2,3) even though single 1s are allowed.
struct GapConditionSpec {
    std::optional<std::int64_t> max_part;  // nullopt = unbounded
    std::int64_t min_part = 1;
    std::int64_t distance2_gap = 3;
    int close_pair_rule = 0;
    std::int64_t min_pair_sum = 2;
    std::string variant;
};

// The rule set for one of the ten supported pairs; bound caps the largest part.
GapConditionSpec gap_variant(int a, int b, std::optional<std::int64_t> bound = std::nullopt);

// Exhaustive enumeration with pruning; exponential by design, capped at n = 80.
BigInt count_gap_partitions(const GapConditionSpec& spec, std::int64_t n);

// The partitions themselves, each listed as decreasing parts.
std::vector<std::vector<std::int64_t>> list_gap_partitions(const GapConditionSpec& spec,
                                                           std::int64_t n);

struct ResidueClassSpec {
    std::int64_t modulus = 1;
    std::vector<std::int64_t> residues;  // each in [1, modulus]
};

// Allowed residues of the product side of the i-th conjectured identity.
ResidueClassSpec kr_residues(int i);

// Partitions of n into parts from the allowed residue classes.
BigInt count_residue_partitions(const ResidueClassSpec& spec, std::int64_t n);

// The explicit minimal partition with n pairs and m singletons for the eight
// pairs whose combinatorial description is known directly; its weight equals
// the quadratic exponent m^2+3mn+3n^2+am+bn. The two relation-derived pairs
// (1,3) and (0,2) have no single closed-form configuration and are rejected.
std::vector<std::int64_t> minimal_configuration(int a, int b, std::int64_t m, std::int64_t n);

}  // namespace qlab
