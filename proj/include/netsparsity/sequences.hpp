#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netsparsity/degree_vector.hpp"
#include "netsparsity/graph.hpp"

namespace netsparsity {

/// Power law p(i) = C * i^(-beta) over degrees 1..k for a graph on n nodes.
struct PowerLawSpec {
    double beta;
    std::size_t n;
    std::size_t k;

    /// Throws std::invalid_argument unless beta > 1, k >= 1 and n >= k.
    void validate() const;
};

/// C = 1 / sum_{i=1..k} i^(-beta). Throws std::invalid_argument when k < 1.
double normalization_constant(double beta, std::size_t k);

/// Probabilities C * i^(-beta) for i = 1..k.
std::vector<double> power_law_probabilities(double beta, std::size_t k);

/// Running sums of power_law_probabilities; the last entry is 1 up to rounding.
std::vector<double> power_law_cdf(double beta, std::size_t k);

enum class FrequencyMode {
    /// Apportion n * p_i with the largest-remainder method (ties to the lower degree).
    LargestRemainder,
    /// Embedded frequency vectors for (beta, n, k) in
    /// {(1.7,200,11), (2,200,11), (2.5,200,11), (2.75,200,11)}.
    EmbeddedFixture,
};

struct FrequencyRow {
    std::int64_t degree;
    std::int64_t frequency;
};

/// Degrees run 1..k in order; frequencies sum to the node count.
struct DegreeFrequencyTable {
    std::vector<FrequencyRow> rows;
    std::optional<double> constant;
    std::optional<PowerLawSpec> spec;

    std::int64_t node_count() const;
    std::int64_t total_degree() const;
    std::int64_t max_degree() const { return rows.empty() ? 0 : rows.back().degree; }

    /// Throws std::invalid_argument when degrees are not exactly 1..k or a
    /// frequency is negative.
    void validate() const;
};

/// Throws std::invalid_argument for an invalid spec or an unlisted fixture.
DegreeFrequencyTable build_frequency_table(const PowerLawSpec& spec, FrequencyMode mode);

/// True for the four (beta, n, k) combinations with embedded fixtures.
bool has_embedded_fixture(const PowerLawSpec& spec);

/// Ascending integer sequence with f_i copies of degree i.
std::vector<std::int64_t> frequency_to_degrees(const DegreeFrequencyTable& table);
OrderedDegreeVector frequency_to_sequence(const DegreeFrequencyTable& table);

/// True iff `degrees` is the degree sequence of a simple undirected graph.
/// Repeatedly removes the largest entry d and decrements the next d largest.
bool havel_hakimi_check(std::span<const std::int64_t> degrees);

/// Constructive Havel-Hakimi. Node i of the result has degree degrees[i].
/// The current head is the largest residual (ties: lowest index) and joins the
/// d largest remaining residuals (ties: lowest index).
/// Throws RealizationError naming the failing step.
Graph havel_hakimi_realize(std::span<const std::int64_t> degrees);

}  // namespace netsparsity
