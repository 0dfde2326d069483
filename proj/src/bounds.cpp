#include "thickness/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "thickness/errors.hpp"

namespace thickness {

std::size_t decimal_digits(const BigCount& value) {
    if (value == 0) return 1;
    return (value < 0 ? value.str().size() - 1 : value.str().size());
}

namespace {

double log10_approx(const BigCount& value) {
    // msb gives log2 within 1; good enough for budget estimation.
    if (value <= 1) return 0.0;
    return static_cast<double>(boost::multiprecision::msb(value)) * 0.30102999566398119;
}

// C(n, k) for potentially huge n and small-ish k, with a digit-budget guard
// estimated before any multiplication happens.
BigCount binomial_guarded(const BigCount& n, const BigCount& k_in, std::size_t digit_budget) {
    if (k_in < 0 || n < 0) fail(Errc::invalid_parameters, "negative binomial argument");
    BigCount k = k_in;
    if (k > n - k) k = n - k;
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (k > 10'000'000)
        fail(Errc::bound_too_large, "binomial term count beyond any materializable size");
    const std::uint64_t terms = k.convert_to<std::uint64_t>();
    const double estimated_digits = static_cast<double>(terms) * log10_approx(n);
    if (estimated_digits > static_cast<double>(digit_budget))
        fail(Errc::bound_too_large, "bound would exceed the digit budget");
    BigCount result = 1;
    for (std::uint64_t i = 0; i < terms; ++i) {
        result *= n - static_cast<std::uint64_t>(i);
        result /= i + 1;
    }
    return result;
}

// Additive two-color graph recurrence in closed form: with bases
// R(2, b) = b, R(a, 2) = a, the recurrence R(a,b) <= R(a-1,b) + R(a,b-1)
// solves to C(a + b - 2, a - 1).
BigCount pair_graph_upper(const BigCount& a, const BigCount& b, std::size_t digit_budget) {
    if (a < 2) return b < a ? a : b; // R(1, b) = 1 colors nothing; clamp to max
    if (b < 2) return a;
    return binomial_guarded(a + b - 2, (a < b ? a : b) - 1, digit_budget);
}

// Multicolor graph bound by nesting: R(m1, ..., mc) <= R(m1, R(m2, ..., mc)).
BigCount multicolor_graph_upper(std::vector<BigCount> sizes, std::size_t digit_budget) {
    if (sizes.empty()) fail(Errc::invalid_parameters, "no color classes");
    // Fold the large sizes into the accumulator first so the binomial's
    // short side stays as small as the inputs allow.
    std::sort(sizes.begin(), sizes.end());
    BigCount acc = sizes.back();
    for (std::size_t i = sizes.size() - 1; i-- > 0;)
        acc = pair_graph_upper(sizes[i], acc, digit_budget);
    return acc;
}

class HypergraphBound {
public:
    HypergraphBound(int e, std::size_t digit_budget) : e_(e), budget_(digit_budget) {}

    // Diagonal entry point: c copies of l.
    BigCount diagonal(int l, int c) { return eval(std::vector<int>(c, l)); }

    // R_e over a multiset of target sizes, all >= e.
    BigCount eval(std::vector<int> sizes) {
        // A color with target e is witnessed by any single monochromatic
        // e-set; drop it and keep the max with e.
        std::erase_if(sizes, [this](int l) { return l == e_; });
        if (sizes.empty()) return e_;
        std::sort(sizes.begin(), sizes.end());
        if (auto it = memo_.find(sizes); it != memo_.end()) return it->second;

        BigCount result;
        if (sizes.size() == 1) {
            result = sizes[0]; // one class: any l elements
        } else {
            // Erdos-Rado: R_e(l1..lc) <= R_{e-1}(m1..mc) + 1, where
            // mi = R_e with li decremented. Identical entries give identical
            // mi, so evaluate one decrement per distinct value.
            std::vector<BigCount> outer_args;
            outer_args.reserve(sizes.size());
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                if (i > 0 && sizes[i] == sizes[i - 1]) {
                    outer_args.push_back(outer_args.back());
                    continue;
                }
                std::vector<int> reduced = sizes;
                reduced[i] -= 1;
                outer_args.push_back(eval(std::move(reduced)));
            }
            result = outer_bound(std::move(outer_args)) + 1;
        }
        memo_.emplace(std::move(sizes), result);
        return result;
    }

private:
    BigCount outer_bound(std::vector<BigCount> args) {
        if (e_ == 3) return multicolor_graph_upper(std::move(args), budget_);
        // e - 1 >= 3: the tuple recursion needs machine-sized coordinates.
        constexpr int kSmallArg = 1000;
        std::vector<int> small;
        small.reserve(args.size());
        for (const BigCount& a : args) {
            if (a > kSmallArg)
                fail(Errc::bound_too_large,
                     "recurrence on e needs R_{e-1} of values beyond positional notation");
            small.push_back(a.convert_to<int>());
        }
        HypergraphBound child(e_ - 1, budget_);
        return child.eval(std::move(small));
    }

    int e_;
    std::size_t budget_;
    std::map<std::vector<int>, BigCount> memo_;
};

} // namespace

BigCount erdos_szekeres_upper(int k) {
    if (k < 3) fail(Errc::invalid_parameters, "k must be at least 3");
    return binomial_guarded(2 * k - 4, k - 2, kDefaultDigitBudget) + 1;
}

BigCount ramsey_upper(int e, int l, int c, std::size_t digit_budget) {
    if (e < 1) fail(Errc::invalid_parameters, "e must be at least 1");
    if (l < e) fail(Errc::invalid_parameters, "l must be at least e");
    if (c < 1) fail(Errc::invalid_parameters, "c must be at least 1");

    if (c == 1 || l == e) return l; // one class, or any e points carry a monochromatic e-set
    if (e == 1) return BigCount(c) * (l - 1) + 1;
    if (e == 2) {
        BigCount acc = l;
        for (int i = 1; i < c; ++i) acc = pair_graph_upper(BigCount(l), acc, digit_budget);
        return acc;
    }
    return HypergraphBound(e, digit_budget).diagonal(l, c);
}

BigCount theorem_color_classes(int t) {
    if (t < 2) fail(Errc::invalid_parameters, "t must be at least 2");
    BigCount tm1(t - 1);
    return binomial_guarded(tm1, 3, kDefaultDigitBudget) +
           binomial_guarded(tm1, 2, kDefaultDigitBudget) + tm1;
}

namespace {

BoundValue try_bound(int e, int l, int c, std::size_t digit_budget) {
    BoundValue out;
    try {
        out.value = ramsey_upper(e, l, c, digit_budget);
    } catch (const Error& err) {
        if (err.code() != Errc::bound_too_large) throw;
        out.note = err.what();
    }
    return out;
}

} // namespace

SeparationPipelineBound separation_pipeline_bound(int t, int n1, std::size_t digit_budget) {
    if (t < 2) fail(Errc::invalid_parameters, "t must be at least 2");
    if (n1 < 3) fail(Errc::invalid_parameters, "n1 must be at least 3");
    SeparationPipelineBound out;
    out.color_classes = theorem_color_classes(t);
    const int c = out.color_classes.convert_to<int>();
    out.n2_bound = try_bound(3, n1, c, digit_budget);
    out.coherent_bound = try_bound(3, n1, 27, digit_budget);
    out.inner_outer_bound = try_bound(3, n1, 2, digit_budget);
    return out;
}

} // namespace thickness
