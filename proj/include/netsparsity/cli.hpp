#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "netsparsity/graph.hpp"
#include "netsparsity/metrics.hpp"
#include "netsparsity/sequences.hpp"

namespace netsparsity {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative_verdict = 1;
inline constexpr int input_error = 2;
inline constexpr int reference_total = 3;
inline constexpr int realization = 4;
}  // namespace exit_code

/// One row of a trend sweep, keyed by beta or by edge count.
struct SweepRecord {
    double key;
    Rational total;
    Rational t1;
    std::optional<Rational> gini;
    Rational sparsity_index;
    Rational edge_density;
};

/// Metrics for one frequency table per beta (n and k shared), all measured
/// against one common reference total. Without `t1` the common total is the
/// largest table total. Records come back sorted by beta.
std::vector<SweepRecord> beta_sweep(std::vector<double> betas, std::size_t n, std::size_t k, FrequencyMode mode,
                                    const std::optional<ReferencePolicy>& t1);

/// Adds `additions` edges one at a time, each uniformly among the absent
/// pairs, and records the metrics before the first and after every addition.
/// Throws std::invalid_argument when the graph is weighted or has fewer
/// absent pairs than requested.
std::vector<SweepRecord> edge_sweep(const Graph& g, std::size_t additions, std::uint64_t seed,
                                    const ReferencePolicy& t1);

/// CSV with header "<key_name>,T,T1,gini,sparsity_index,edge_density".
void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, const std::string& key_name);

/// Decimal places for text output: NETSPARSITY_PRECISION, default 4.
int text_precision();

/// Entry point shared by the executable and the tests. args[0] is the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netsparsity
