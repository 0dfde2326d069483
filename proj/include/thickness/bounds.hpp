#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "thickness/rational.hpp"

namespace thickness {

// Exact nonnegative counts with no overflow semantics.
using BigCount = BigInt;

std::size_t decimal_digits(const BigCount& value);

// Values above this digit budget raise bound-too-large instead of being
// materialized. The inductive Ramsey recurrences genuinely leave positional
// notation for modest parameters (see ramsey_upper), so the guard is part of
// the contract, not a tuning knob.
inline constexpr std::size_t kDefaultDigitBudget = 200'000;

// C(2k-4, k-2) + 1, an upper bound for the Erdos-Szekeres number N(k).
BigCount erdos_szekeres_upper(int k);

// A finite upper bound for the hypergraph Ramsey number R_e(l; c):
//   e = 1: exact pigeonhole c(l-1) + 1.
//   e = 2: two-color additive recurrence (closed form C(a+b-2, a-1)),
//          lifted to c colors by nesting R(l; c) <= R(l, R(l; c-1)).
//   e >= 3: Erdos-Rado recursion on e over color-size multisets,
//           R_e(l1..lc) <= R_{e-1}(m1..mc) + 1 with mi = R_e(..li-1..).
// Monotone nondecreasing in l and c; always >= the true Ramsey number.
// Results beyond `digit_budget` decimal digits raise bound-too-large.
BigCount ramsey_upper(int e, int l, int c, std::size_t digit_budget = kDefaultDigitBudget);

// The paper's color-class count c(t) = C(t-1,3) + C(t-1,2) + (t-1).
BigCount theorem_color_classes(int t);

// A bound value that may have exceeded the digit budget.
struct BoundValue {
    std::optional<BigCount> value;
    std::string note; // set when the value is absent

    bool materialized() const { return value.has_value(); }
};

// The quantitative skeleton of the main theorem: an upper bound for the n2
// with ramsey_upper(3, n1, c(t)), plus the two named intermediate bounds the
// proof routes through (27 coherence classes, 2 inner/outer classes).
struct SeparationPipelineBound {
    BigCount color_classes;
    BoundValue n2_bound;          // ramsey_upper(3, n1, color_classes)
    BoundValue coherent_bound;    // ramsey_upper(3, n1, 27)
    BoundValue inner_outer_bound; // ramsey_upper(3, n1, 2)
};

SeparationPipelineBound separation_pipeline_bound(int t, int n1,
                                                  std::size_t digit_budget = kDefaultDigitBudget);

} // namespace thickness
