#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netsparsity/degree_vector.hpp"
#include "netsparsity/graph.hpp"
#include "netsparsity/rational.hpp"

namespace netsparsity {

/// How the reference total T1 is chosen.
///   Actual                T1 = T (sparsity index reduces to the Gini index)
///   PotentialSimple       T1 = n(n-1)
///   PotentialWeightedMax  T1 = n(n-1) * max a_ij
///   NodeMax               T1 = n * b_n
///   Custom                T1 = user value
enum class TotalPolicy { Actual, PotentialSimple, PotentialWeightedMax, NodeMax, Custom };

std::string_view policy_name(TotalPolicy policy);

/// A policy plus the value it needs (only Custom carries one).
struct ReferencePolicy {
    TotalPolicy policy = TotalPolicy::PotentialSimple;
    std::optional<Rational> custom_value;

    static ReferencePolicy actual() { return {TotalPolicy::Actual, std::nullopt}; }
    static ReferencePolicy simple_max() { return {TotalPolicy::PotentialSimple, std::nullopt}; }
    static ReferencePolicy weighted_max() { return {TotalPolicy::PotentialWeightedMax, std::nullopt}; }
    static ReferencePolicy node_max() { return {TotalPolicy::NodeMax, std::nullopt}; }
    static ReferencePolicy custom(Rational value) { return {TotalPolicy::Custom, std::move(value)}; }
};

/// Parses "actual", "simple-max", "weighted-max", "node-max" or "custom:<rational>".
/// Throws ParseError.
ReferencePolicy parse_reference_policy(std::string_view text);

/// A resolved reference total T1.
struct ReferenceTotal {
    TotalPolicy policy;
    Rational value;
};

/// Resolves `request` against a bare vector. PotentialWeightedMax needs the
/// largest edge weight, which a bare vector does not carry.
/// Throws ReferenceTotalError when T1 <= 0 or T1 < T, std::invalid_argument
/// when the policy cannot be resolved from the inputs.
ReferenceTotal resolve_reference_total(const ReferencePolicy& request, const OrderedDegreeVector& b,
                                       std::optional<Rational> max_edge_weight = std::nullopt);
ReferenceTotal resolve_reference_total(const ReferencePolicy& request, const Graph& g);

/// Gini index 1 - (2/(nT)) sum b_i (n - i + 1/2). Throws std::domain_error when T = 0.
Rational gini_index(const OrderedDegreeVector& b);

/// Sparsity index 1 - (2/(n T1)) sum b_i (n - i + 1/2). Throws
/// ReferenceTotalError when T1 <= 0 or T1 < T. Equals 1 for an all-zero b.
Rational sparsity_index(const OrderedDegreeVector& b, const ReferenceTotal& t1);
Rational sparsity_index(const OrderedDegreeVector& b, const Rational& t1);

/// O(n^2) mean-absolute-difference form of the Gini index,
/// sum_i sum_j |b_i - b_j| / (2 n^2 mu). Independent of the rank formula;
/// kept as a test oracle.
Rational gini_mad_oracle(const OrderedDegreeVector& b);

struct LorenzPoint {
    Rational fraction;
    Rational share;
};

/// n+1 points (i/n, (b_1+...+b_i)/T1) for i = 0..n.
struct LorenzCurve {
    std::vector<LorenzPoint> points;
};

LorenzCurve lorenz_curve(const OrderedDegreeVector& b, const ReferenceTotal& t1);

struct EdgeDensity {
    Rational value;
    /// Set for weighted graphs: the value is |E|/C(n,2) and ignores weights.
    bool weight_blind = false;
};

/// |E| / C(n, 2). Throws std::invalid_argument when n < 2.
EdgeDensity edge_density(const Graph& g);

/// T / (n(n-1)): the edge density of any simple graph realizing b.
Rational implied_edge_density(const OrderedDegreeVector& b);

struct MetricsReport {
    std::size_t n = 0;
    Rational total;
    ReferenceTotal t1;
    std::optional<Rational> gini;  ///< empty when T = 0
    Rational sparsity_index;
    std::optional<Rational> edge_density;
    bool edge_density_weight_blind = false;
};

MetricsReport compute_report(const Graph& g, const ReferencePolicy& request);
MetricsReport compute_report(const OrderedDegreeVector& b, const ReferencePolicy& request);

}  // namespace netsparsity
