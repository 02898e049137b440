#include "netsparsity/metrics.hpp"

#include <stdexcept>

#include "netsparsity/errors.hpp"

namespace netsparsity {

std::string_view policy_name(TotalPolicy policy) {
    switch (policy) {
        case TotalPolicy::Actual: return "actual";
        case TotalPolicy::PotentialSimple: return "simple-max";
        case TotalPolicy::PotentialWeightedMax: return "weighted-max";
        case TotalPolicy::NodeMax: return "node-max";
        case TotalPolicy::Custom: return "custom";
    }
    return "unknown";
}

ReferencePolicy parse_reference_policy(std::string_view text) {
    if (text == "actual") return ReferencePolicy::actual();
    if (text == "simple-max") return ReferencePolicy::simple_max();
    if (text == "weighted-max") return ReferencePolicy::weighted_max();
    if (text == "node-max") return ReferencePolicy::node_max();
    constexpr std::string_view prefix = "custom:";
    if (text.starts_with(prefix)) {
        try {
            return ReferencePolicy::custom(parse_rational(text.substr(prefix.size())));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad custom reference total: ") + e.what());
        }
    }
    throw ParseError("unknown reference total '" + std::string(text) +
                     "' (expected actual|simple-max|weighted-max|node-max|custom:<value>)");
}

namespace {

Rational scaled_ratio(Int128 numerator, Int128 denominator) {
    Rational r = from_int128(numerator) / from_int128(denominator);
    r.canonicalize();
    return r;
}

void validate_total(const Rational& t1, const OrderedDegreeVector& b) {
    if (t1 <= 0) throw ReferenceTotalError("reference total must be positive, got " + to_string(t1));
    if (t1 < b.total())
        throw ReferenceTotalError("reference total " + to_string(t1) + " is below the actual total " +
                                  to_string(b.total()));
}

}  // namespace

ReferenceTotal resolve_reference_total(const ReferencePolicy& request, const OrderedDegreeVector& b,
                                       std::optional<Rational> max_edge_weight) {
    const Rational n(static_cast<long>(b.size()));
    Rational value;
    switch (request.policy) {
        case TotalPolicy::Actual: value = b.total(); break;
        case TotalPolicy::PotentialSimple: value = n * (n - 1); break;
        case TotalPolicy::PotentialWeightedMax:
            if (!max_edge_weight)
                throw std::invalid_argument("weighted-max reference total needs the largest edge weight");
            value = n * (n - 1) * *max_edge_weight;
            break;
        case TotalPolicy::NodeMax:
            if (b.max() == 0) throw ReferenceTotalError("node-max reference total undefined for all-zero degrees");
            value = n * b.max();
            break;
        case TotalPolicy::Custom:
            if (!request.custom_value) throw std::invalid_argument("custom reference total needs a value");
            value = *request.custom_value;
            break;
    }
    validate_total(value, b);
    return {request.policy, value};
}

ReferenceTotal resolve_reference_total(const ReferencePolicy& request, const Graph& g) {
    return resolve_reference_total(request, degree_vector(g), g.max_edge_weight());
}

Rational gini_index(const OrderedDegreeVector& b) {
    if (b.scaled_total() == 0) throw std::domain_error("Gini index undefined for zero total mass");
    // 1 - S/(nT) where S = 2 sum b_i (n - i + 1/2); the shared denominator cancels.
    const auto n = static_cast<Int128>(b.size());
    return 1 - scaled_ratio(b.scaled_rank_sum(), n * b.scaled_total());
}

Rational sparsity_index(const OrderedDegreeVector& b, const Rational& t1) {
    validate_total(t1, b);
    Rational weighted = from_int128(b.scaled_rank_sum()) /
                        (Rational(static_cast<long>(b.denominator())) * Rational(static_cast<long>(b.size())) * t1);
    Rational si = 1 - weighted;
    si.canonicalize();
    return si;
}

Rational sparsity_index(const OrderedDegreeVector& b, const ReferenceTotal& t1) {
    return sparsity_index(b, t1.value);
}

Rational gini_mad_oracle(const OrderedDegreeVector& b) {
    if (b.scaled_total() == 0) throw std::domain_error("Gini index undefined for zero total mass");
    const auto values = b.scaled_values();
    Int128 pairwise = 0;
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = 0; j < values.size(); ++j) {
            const Int128 d = static_cast<Int128>(values[i]) - values[j];
            pairwise += d < 0 ? -d : d;
        }
    // mu = T/n, so 2 n^2 mu = 2 n T.
    const auto n = static_cast<Int128>(values.size());
    return scaled_ratio(pairwise, 2 * n * b.scaled_total());
}

LorenzCurve lorenz_curve(const OrderedDegreeVector& b, const ReferenceTotal& t1) {
    validate_total(t1.value, b);
    const auto values = b.scaled_values();
    const long n = static_cast<long>(values.size());
    const Rational scale = Rational(static_cast<long>(b.denominator())) * t1.value;

    LorenzCurve curve;
    curve.points.reserve(values.size() + 1);
    curve.points.push_back({Rational(0), Rational(0)});
    Int128 running = 0;
    for (long i = 1; i <= n; ++i) {
        running += values[static_cast<std::size_t>(i - 1)];
        Rational fraction(i, n);
        fraction.canonicalize();
        Rational share = from_int128(running) / scale;
        share.canonicalize();
        curve.points.push_back({std::move(fraction), std::move(share)});
    }
    return curve;
}

EdgeDensity edge_density(const Graph& g) {
    const auto n = g.node_count();
    if (n < 2) throw std::invalid_argument("edge density needs at least 2 nodes");
    Rational value(mpz_class(static_cast<unsigned long>(2 * g.edge_count())),
                   mpz_class(static_cast<unsigned long>(n)) * (n - 1));
    value.canonicalize();
    return {value, g.weighted()};
}

Rational implied_edge_density(const OrderedDegreeVector& b) {
    const auto n = b.size();
    if (n < 2) throw std::invalid_argument("edge density needs at least 2 nodes");
    Rational value = b.total() / (Rational(static_cast<long>(n)) * Rational(static_cast<long>(n - 1)));
    value.canonicalize();
    return value;
}

namespace {

MetricsReport report_for(const OrderedDegreeVector& b, const ReferenceTotal& t1) {
    MetricsReport report;
    report.n = b.size();
    report.total = b.total();
    report.t1 = t1;
    if (b.scaled_total() != 0) report.gini = gini_index(b);
    report.sparsity_index = sparsity_index(b, t1);
    return report;
}

}  // namespace

MetricsReport compute_report(const Graph& g, const ReferencePolicy& request) {
    const auto b = degree_vector(g);
    auto report = report_for(b, resolve_reference_total(request, b, g.max_edge_weight()));
    if (g.node_count() >= 2) {
        const auto density = edge_density(g);
        report.edge_density = density.value;
        report.edge_density_weight_blind = density.weight_blind;
    }
    return report;
}

MetricsReport compute_report(const OrderedDegreeVector& b, const ReferencePolicy& request) {
    auto report = report_for(b, resolve_reference_total(request, b));
    if (b.size() >= 2) report.edge_density = implied_edge_density(b);
    return report;
}

}  // namespace netsparsity
