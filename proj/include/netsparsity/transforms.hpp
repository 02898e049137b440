#pragma once

#include <cstddef>
#include <optional>

#include "netsparsity/degree_vector.hpp"
#include "netsparsity/metrics.hpp"
#include "netsparsity/rational.hpp"

namespace netsparsity {

/// Result of applying one sparsity-axiom operator to an ordered vector.
///
/// The reference total is resolved separately for the vector before and
/// after the change, so fixed policies (Custom, PotentialSimple at equal n)
/// compare against the same T1 while relative ones (Actual, NodeMax) move
/// with the data. `predicted_delta` carries the closed-form change in the
/// sparsity index and is only set when the closed form is exact, i.e. the
/// modified entries keep their sorted positions and T1 behaves as the form
/// assumes. When set, si_after - si_before == *predicted_delta exactly.
struct TransformOutcome {
    OrderedDegreeVector before;
    OrderedDegreeVector after;
    ReferenceTotal t1_before;
    ReferenceTotal t1_after;
    Rational si_before;
    Rational si_after;
    std::optional<Rational> predicted_delta;

    Rational delta() const { return si_after - si_before; }
};

// Sorted positions below are 1-based: position 1 is the smallest entry.

/// Moves `alpha` from position j to position i (i < j), 0 < alpha < (b_j - b_i)/2.
/// Closed form: -2 alpha (j - i) / (n T1).
TransformOutcome robin_hood(const OrderedDegreeVector& b, std::size_t i, std::size_t j, const Rational& alpha,
                            const ReferencePolicy& t1);

/// Multiplies every entry by alpha > 0. `max_edge_weight`, when given, is
/// scaled along with the entries (it feeds PotentialWeightedMax).
/// Closed form for a fixed T1: 2(1 - alpha)/(n T1) * sum b_i (n - i + 1/2);
/// zero when T1 scales with the data (Actual, NodeMax, PotentialWeightedMax).
TransformOutcome scale(const OrderedDegreeVector& b, const Rational& alpha, const ReferencePolicy& t1,
                       std::optional<Rational> max_edge_weight = std::nullopt);

/// Adds alpha > 0 to every entry. Closed form for a fixed T1: -alpha n / T1.
TransformOutcome rising_tide(const OrderedDegreeVector& b, const Rational& alpha, const ReferencePolicy& t1);

/// Concatenates `copies` >= 2 copies of b. No closed form is reported.
TransformOutcome clone_concat(const OrderedDegreeVector& b, std::size_t copies, const ReferencePolicy& t1);

/// Adds alpha > 0 to the entry at sorted position i. With i' its position
/// after re-sorting, the closed form for a fixed T1 is
/// -2 alpha (n - i' + 1/2) / (n T1), exact when every entry it overtakes
/// was equal to it.
TransformOutcome enrich_entry(const OrderedDegreeVector& b, std::size_t i, const Rational& alpha,
                              const ReferencePolicy& t1);

/// Prepends m >= 1 zero entries (isolated nodes). No closed form is reported.
TransformOutcome append_zeros(const OrderedDegreeVector& b, std::size_t m, const ReferencePolicy& t1);

}  // namespace netsparsity
