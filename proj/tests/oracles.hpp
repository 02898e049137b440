#pragma once

// Test-only oracles and generators. Nothing here calls into the rank-sum
// path of the library so expected values stay independent of it.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "netsparsity/graph.hpp"
#include "netsparsity/random.hpp"
#include "netsparsity/rational.hpp"

namespace oracle {

using netsparsity::Rational;

/// Direct trapezoid-area evaluation 1 - (2/(n T1)) sum b_i (n - i + 1/2) on
/// an explicitly sorted copy, in plain mpq arithmetic.
inline Rational sparsity_direct(std::vector<Rational> b, const Rational& t1) {
    std::sort(b.begin(), b.end());
    const long n = static_cast<long>(b.size());
    Rational area = 0;
    // triangle plus trapezoids under the Lorenz curve drawn against t1
    Rational prev = 0;
    for (long i = 1; i <= n; ++i) {
        Rational cur = prev + b[static_cast<std::size_t>(i - 1)] / t1;
        area += (prev + cur) / (2 * n);
        prev = cur;
    }
    Rational si = 1 - 2 * area;
    si.canonicalize();
    return si;
}

inline Rational gini_direct(const std::vector<Rational>& b) {
    Rational total = 0;
    for (const auto& v : b) total += v;
    return sparsity_direct(b, total);
}

/// GI = 2 sum i b_i / (n T) - (n+1)/n on the sorted vector.
inline Rational gini_rank_form(std::vector<Rational> b) {
    std::sort(b.begin(), b.end());
    const long n = static_cast<long>(b.size());
    Rational weighted = 0, total = 0;
    for (long i = 1; i <= n; ++i) {
        weighted += i * b[static_cast<std::size_t>(i - 1)];
        total += b[static_cast<std::size_t>(i - 1)];
    }
    Rational g = 2 * weighted / (n * total) - Rational(n + 1, n);
    g.canonicalize();
    return g;
}

/// Canonical a/b.
inline Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

inline std::vector<Rational> rationals(std::initializer_list<long> values) {
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

/// Sorted degree multisets of every labelled simple graph on n nodes.
inline std::set<std::vector<std::int64_t>> graphical_multisets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<std::vector<std::int64_t>> found;
    const std::uint64_t graphs = std::uint64_t{1} << pairs.size();
    std::vector<std::int64_t> deg(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask >> e & 1) {
                ++deg[static_cast<std::size_t>(pairs[e].first)];
                ++deg[static_cast<std::size_t>(pairs[e].second)];
            }
        auto sorted = deg;
        std::sort(sorted.begin(), sorted.end());
        found.insert(sorted);
    }
    return found;
}

/// Uniform G(n, p)-style simple graph with p = num/den.
inline netsparsity::Graph random_simple_graph(netsparsity::Rng& rng, std::size_t n, std::uint64_t num,
                                              std::uint64_t den) {
    std::vector<netsparsity::Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.below(den) < num) edges.push_back({u, v, 1});
    return netsparsity::Graph::from_edges(n, edges);
}

/// Closed-form change in SI (T1 = n(n-1)) when an edge joins nodes of degrees
/// du and dv. Each endpoint is charged to the last slot of its tie block, so
/// the incremented vector stays sorted and the positional form is exact.
inline Rational edge_addition_delta(const std::vector<std::int64_t>& sorted_degrees, std::int64_t du,
                                    std::int64_t dv) {
    const long n = static_cast<long>(sorted_degrees.size());
    auto last_slot = [&](std::int64_t d) {
        return static_cast<long>(std::upper_bound(sorted_degrees.begin(), sorted_degrees.end(), d) -
                                 sorted_degrees.begin());
    };
    const long p = last_slot(du);
    const long q = du == dv ? p - 1 : last_slot(dv);
    Rational delta(-2 * (2 * n + 1 - p - q), n * n * (n - 1));
    delta.canonicalize();
    return delta;
}

inline std::vector<std::int64_t> random_integers(netsparsity::Rng& rng, std::size_t n, std::int64_t lo,
                                                 std::int64_t hi) {
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = rng.between(lo, hi);
    return v;
}

}  // namespace oracle
