#include "netsparsity/sequences.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "netsparsity/errors.hpp"

namespace netsparsity {

void PowerLawSpec::validate() const {
    if (!(beta > 1.0) || !std::isfinite(beta)) throw std::invalid_argument("power-law exponent must exceed 1");
    if (k < 1) throw std::invalid_argument("maximal degree must be at least 1");
    if (n < k) throw std::invalid_argument("node count must be at least the maximal degree");
}

double normalization_constant(double beta, std::size_t k) {
    if (k < 1) throw std::invalid_argument("maximal degree must be at least 1");
    double sum = 0.0;
    for (std::size_t i = 1; i <= k; ++i) sum += std::pow(static_cast<double>(i), -beta);
    return 1.0 / sum;
}

std::vector<double> power_law_probabilities(double beta, std::size_t k) {
    const double c = normalization_constant(beta, k);
    std::vector<double> p(k);
    for (std::size_t i = 1; i <= k; ++i) p[i - 1] = c * std::pow(static_cast<double>(i), -beta);
    return p;
}

std::vector<double> power_law_cdf(double beta, std::size_t k) {
    auto p = power_law_probabilities(beta, k);
    std::partial_sum(p.begin(), p.end(), p.begin());
    return p;
}

namespace {

struct Fixture {
    double beta;
    std::vector<std::int64_t> frequencies;
};

// Reference frequencies for n = 200, k = 11. The apportionment rule does not
// reproduce them, so they are kept verbatim.
const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> table = {
        {1.7, {112, 34, 18, 10, 6, 6, 4, 4, 2, 2, 2}},
        {2.0, {128, 32, 14, 8, 4, 4, 2, 2, 2, 2, 2}},
        {2.5, {150, 26, 10, 4, 3, 2, 1, 1, 1, 1, 1}},
        {2.75, {160, 23, 8, 2, 1, 1, 1, 1, 1, 1, 1}},
    };
    return table;
}

const Fixture* find_fixture(const PowerLawSpec& spec) {
    if (spec.n != 200 || spec.k != 11) return nullptr;
    for (const auto& f : fixtures())
        if (std::abs(f.beta - spec.beta) < 1e-9) return &f;
    return nullptr;
}

std::vector<std::int64_t> largest_remainder(const std::vector<double>& p, std::size_t n) {
    const std::size_t k = p.size();
    std::vector<std::int64_t> f(k);
    std::vector<double> remainder(k);
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const double quota = static_cast<double>(n) * p[i];
        f[i] = static_cast<std::int64_t>(std::floor(quota));
        remainder[i] = quota - static_cast<double>(f[i]);
        assigned += f[i];
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    auto left = static_cast<std::int64_t>(n) - assigned;
    for (std::size_t r = 0; left > 0; r = (r + 1) % k, --left) ++f[order[r]];
    return f;
}

}  // namespace

bool has_embedded_fixture(const PowerLawSpec& spec) { return find_fixture(spec) != nullptr; }

std::int64_t DegreeFrequencyTable::node_count() const {
    std::int64_t n = 0;
    for (const auto& r : rows) n += r.frequency;
    return n;
}

std::int64_t DegreeFrequencyTable::total_degree() const {
    std::int64_t t = 0;
    for (const auto& r : rows) t += r.degree * r.frequency;
    return t;
}

void DegreeFrequencyTable::validate() const {
    if (rows.empty()) throw std::invalid_argument("frequency table is empty");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].degree != static_cast<std::int64_t>(i) + 1)
            throw std::invalid_argument("frequency table degrees must run 1..k without gaps");
        if (rows[i].frequency < 0) throw std::invalid_argument("frequencies must be non-negative");
    }
    if (node_count() == 0) throw std::invalid_argument("frequency table has no nodes");
}

DegreeFrequencyTable build_frequency_table(const PowerLawSpec& spec, FrequencyMode mode) {
    spec.validate();
    std::vector<std::int64_t> f;
    if (mode == FrequencyMode::EmbeddedFixture) {
        const auto* fixture = find_fixture(spec);
        if (!fixture)
            throw std::invalid_argument("no embedded fixture for beta=" + std::to_string(spec.beta) +
                                        ", n=" + std::to_string(spec.n) + ", k=" + std::to_string(spec.k));
        f = fixture->frequencies;
    } else {
        f = largest_remainder(power_law_probabilities(spec.beta, spec.k), spec.n);
    }
    DegreeFrequencyTable table;
    table.constant = normalization_constant(spec.beta, spec.k);
    table.spec = spec;
    for (std::size_t i = 0; i < f.size(); ++i) table.rows.push_back({static_cast<std::int64_t>(i) + 1, f[i]});
    return table;
}

std::vector<std::int64_t> frequency_to_degrees(const DegreeFrequencyTable& table) {
    table.validate();
    std::vector<std::int64_t> degrees;
    degrees.reserve(static_cast<std::size_t>(table.node_count()));
    for (const auto& r : table.rows) degrees.insert(degrees.end(), static_cast<std::size_t>(r.frequency), r.degree);
    return degrees;
}

OrderedDegreeVector frequency_to_sequence(const DegreeFrequencyTable& table) {
    return OrderedDegreeVector::from_integers(frequency_to_degrees(table));
}

namespace {

// Residual degree, then node index; iteration order is "largest residual,
// lowest index first".
struct ResidualOrder {
    bool operator()(const std::pair<std::int64_t, std::size_t>& a,
                    const std::pair<std::int64_t, std::size_t>& b) const {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    }
};

/// Runs the reduction; returns an empty string on success or the failure
/// description. Appends realized edges when `edges` is non-null.
std::string reduce(std::span<const std::int64_t> degrees, std::vector<Edge>* edges) {
    const std::size_t n = degrees.size();
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (degrees[i] < 0) return "entry " + std::to_string(i) + " is negative";
        if (static_cast<std::size_t>(degrees[i]) >= n)
            return "entry " + std::to_string(i) + " has degree " + std::to_string(degrees[i]) + " >= n = " +
                   std::to_string(n);
        sum += degrees[i];
    }
    if (sum % 2 != 0) return "degree sum " + std::to_string(sum) + " is odd";

    std::set<std::pair<std::int64_t, std::size_t>, ResidualOrder> pending;
    for (std::size_t i = 0; i < n; ++i)
        if (degrees[i] > 0) pending.emplace(degrees[i], i);

    std::vector<std::pair<std::int64_t, std::size_t>> partners;
    for (std::size_t step = 1; !pending.empty(); ++step) {
        const auto [d, head] = *pending.begin();
        pending.erase(pending.begin());
        if (static_cast<std::size_t>(d) > pending.size())
            return "step " + std::to_string(step) + ": node " + std::to_string(head) + " needs " +
                   std::to_string(d) + " partners but only " + std::to_string(pending.size()) +
                   " nodes have residual degree left";
        partners.clear();
        auto it = pending.begin();
        for (std::int64_t taken = 0; taken < d; ++taken) partners.push_back(*it++);
        for (const auto& [residual, node] : partners) {
            pending.erase({residual, node});
            if (residual > 1) pending.emplace(residual - 1, node);
            if (edges) edges->push_back({head, node, 1});
        }
    }
    return {};
}

}  // namespace

bool havel_hakimi_check(std::span<const std::int64_t> degrees) { return reduce(degrees, nullptr).empty(); }

Graph havel_hakimi_realize(std::span<const std::int64_t> degrees) {
    if (degrees.empty()) throw RealizationError("empty degree sequence");
    std::vector<Edge> edges;
    if (auto failure = reduce(degrees, &edges); !failure.empty())
        throw RealizationError("sequence is not graphical: " + failure);
    return Graph::from_edges(degrees.size(), edges);
}

}  // namespace netsparsity
