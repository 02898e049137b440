#include "netsparsity/transforms.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace netsparsity {

namespace {

TransformOutcome evaluate(const OrderedDegreeVector& before, const OrderedDegreeVector& after,
                          const ReferencePolicy& t1, std::optional<Rational> weight_before = std::nullopt,
                          std::optional<Rational> weight_after = std::nullopt) {
    auto t1_before = resolve_reference_total(t1, before, weight_before);
    auto t1_after = resolve_reference_total(t1, after, weight_after);
    auto si_before = sparsity_index(before, t1_before);
    auto si_after = sparsity_index(after, t1_after);
    return {before, after, std::move(t1_before), std::move(t1_after), std::move(si_before), std::move(si_after),
            std::nullopt};
}

Rational n_of(const OrderedDegreeVector& b) { return Rational(static_cast<long>(b.size())); }

void require_position(const OrderedDegreeVector& b, std::size_t pos, const char* name) {
    if (pos < 1 || pos > b.size())
        throw std::invalid_argument(std::string("sorted position ") + name + " out of range 1.." +
                                    std::to_string(b.size()));
}

}  // namespace

TransformOutcome robin_hood(const OrderedDegreeVector& b, std::size_t i, std::size_t j, const Rational& alpha,
                            const ReferencePolicy& t1) {
    require_position(b, i, "i");
    require_position(b, j, "j");
    if (i >= j) throw std::invalid_argument("robin hood needs i < j");
    auto values = b.values();
    const Rational& poor = values[i - 1];
    const Rational& rich = values[j - 1];
    if (!(alpha > 0) || !(alpha < (rich - poor) / 2))
        throw std::invalid_argument("robin hood amount must satisfy 0 < alpha < (b_j - b_i)/2");

    values[i - 1] += alpha;
    values[j - 1] -= alpha;
    const bool positions_kept = std::is_sorted(values.begin(), values.end());
    auto outcome = evaluate(b, degree_vector_from_sequence(values), t1);
    if (positions_kept && outcome.t1_before.value == outcome.t1_after.value) {
        outcome.predicted_delta =
            -2 * alpha * Rational(static_cast<long>(j - i)) / (n_of(b) * outcome.t1_before.value);
    }
    return outcome;
}

TransformOutcome scale(const OrderedDegreeVector& b, const Rational& alpha, const ReferencePolicy& t1,
                       std::optional<Rational> max_edge_weight) {
    if (!(alpha > 0)) throw std::invalid_argument("scale factor must be positive");
    auto values = b.values();
    for (auto& v : values) v *= alpha;
    std::optional<Rational> scaled_weight;
    if (max_edge_weight) scaled_weight = *max_edge_weight * alpha;

    auto outcome = evaluate(b, degree_vector_from_sequence(values), t1, max_edge_weight, scaled_weight);
    const Rational& t1b = outcome.t1_before.value;
    const Rational& t1a = outcome.t1_after.value;
    if (t1a == t1b) {
        // sum b_i (n - i + 1/2) = scaled_rank_sum / (2 * denominator)
        const Rational rank_sum =
            from_int128(b.scaled_rank_sum()) / (2 * Rational(static_cast<long>(b.denominator())));
        outcome.predicted_delta = 2 * (1 - alpha) / (n_of(b) * t1b) * rank_sum;
    } else if (t1a == t1b * alpha) {
        outcome.predicted_delta = Rational(0);
    }
    return outcome;
}

TransformOutcome rising_tide(const OrderedDegreeVector& b, const Rational& alpha, const ReferencePolicy& t1) {
    if (!(alpha > 0)) throw std::invalid_argument("rising tide amount must be positive");
    auto values = b.values();
    for (auto& v : values) v += alpha;
    auto outcome = evaluate(b, degree_vector_from_sequence(values), t1);
    if (outcome.t1_before.value == outcome.t1_after.value)
        outcome.predicted_delta = -alpha * n_of(b) / outcome.t1_before.value;
    return outcome;
}

TransformOutcome clone_concat(const OrderedDegreeVector& b, std::size_t copies, const ReferencePolicy& t1) {
    if (copies < 2) throw std::invalid_argument("cloning needs at least 2 copies");
    const auto values = b.values();
    std::vector<Rational> cloned;
    cloned.reserve(values.size() * copies);
    for (std::size_t c = 0; c < copies; ++c) cloned.insert(cloned.end(), values.begin(), values.end());
    return evaluate(b, degree_vector_from_sequence(cloned), t1);
}

TransformOutcome enrich_entry(const OrderedDegreeVector& b, std::size_t i, const Rational& alpha,
                              const ReferencePolicy& t1) {
    require_position(b, i, "i");
    if (!(alpha > 0)) throw std::invalid_argument("enrichment amount must be positive");
    auto values = b.values();
    const Rational original = values[i - 1];
    const Rational raised = original + alpha;

    // Entries after i that the raised value overtakes; the delta is exact
    // only when all of them tie with the original value.
    std::size_t final_position = i;
    bool overtakes_only_ties = true;
    for (std::size_t k = i; k < values.size() && values[k] < raised; ++k) {
        ++final_position;
        if (values[k] != original) overtakes_only_ties = false;
    }

    values[i - 1] = raised;
    auto outcome = evaluate(b, degree_vector_from_sequence(values), t1);
    if (overtakes_only_ties && outcome.t1_before.value == outcome.t1_after.value) {
        const Rational weight = Rational(static_cast<long>(2 * (b.size() - final_position) + 1), 2);
        outcome.predicted_delta = -2 * alpha * weight / (n_of(b) * outcome.t1_before.value);
    }
    return outcome;
}

TransformOutcome append_zeros(const OrderedDegreeVector& b, std::size_t m, const ReferencePolicy& t1) {
    if (m < 1) throw std::invalid_argument("must add at least one isolated node");
    auto values = b.values();
    values.insert(values.begin(), m, Rational(0));
    return evaluate(b, degree_vector_from_sequence(values), t1);
}

}  // namespace netsparsity
