#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qlab/finite.hpp"
#include "qlab/report.hpp"
#include "qlab/sums.hpp"

namespace qlab {

enum class Status { proved, conjectural };
enum class Filter { proved, conjectural, all };

// Shared state for one verification run: the S(a,b) memo plus the display
// reading used for the reflected-limit binomial tops.
struct EvalContext {
    SumCache sums;
    Rk1Reading reading = Rk1Reading::corrected;
};

// A recipe side: a closed composition of named series, named products,
// scalar-monomial multiples, sums and products, evaluated in Z[w].
struct Expr {
    std::string text;
    std::function<ESeries(std::int64_t, EvalContext&)> eval;
};

struct IdentityEntry {
    std::string id;
    Status status = Status::proved;
    std::string ring = "integer";  // or "eisenstein"
    Expr lhs, rhs;
    std::int64_t default_order = kDefaultOrder;
    // Agreement order that counts as a pass; 0 means the full requested order.
    // Prefix entries compare against a fixed-M reflection that genuinely
    // diverges beyond its stabilization point.
    std::int64_t required_agreement = 0;
    bool reading_sensitive = false;
    // When set, replaces the generic two-sided comparison.
    std::function<VerificationReport(const IdentityEntry&, std::int64_t, EvalContext&)> custom;
};

const std::vector<IdentityEntry>& catalog();

const IdentityEntry* find_entry(const std::string& id);

VerificationReport verify(const IdentityEntry& entry, std::int64_t order, EvalContext& ctx);
VerificationReport verify(const std::string& id, std::int64_t order,
                          Rk1Reading reading = Rk1Reading::corrected);

bool entry_passes(const IdentityEntry& entry, const VerificationReport& rep, std::int64_t order);

// All (i, j) with a = q^i, b = q^j from {q, q^2, q^3}, ab not in {q^3, q^6},
// such that 1/(q, q^2, w a, w^2 b; q^3)_inf equals the target through `order`.
std::vector<std::pair<int, int>> product_match_search(const ESeries& target, std::int64_t order);

struct RunAllResult {
    std::vector<VerificationReport> reports;  // ordered by id
    int exit_code = 0;  // 0 ok, 2 proved mismatch, 3 conjectural mismatch
};

RunAllResult run_all(std::int64_t order, Filter filter,
                     Rk1Reading reading = Rk1Reading::corrected);

nlohmann::ordered_json report_to_json(const VerificationReport& rep);

}  // namespace qlab
