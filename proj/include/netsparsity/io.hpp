#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "netsparsity/metrics.hpp"
#include "netsparsity/rational.hpp"
#include "netsparsity/sequences.hpp"

namespace netsparsity {

/// One non-negative value per line; blank lines and '#' comments skipped.
/// Entries may be rationals ("2.5", "5/2"). Throws ParseError.
std::vector<Rational> parse_sequence_values(std::istream& in);

/// Same layout restricted to non-negative integers. Throws ParseError.
std::vector<std::int64_t> parse_integer_sequence(std::istream& in);

void write_integer_sequence(std::ostream& out, const std::vector<std::int64_t>& values);

/// CSV with header "degree,frequency" and degrees 1..k. Throws ParseError.
DegreeFrequencyTable parse_frequency_table(std::istream& in);
void write_frequency_table(std::ostream& out, const DegreeFrequencyTable& table);

/// Shortest text that round-trips the nearest double.
std::string format_double(double value);
std::string format_double(const Rational& value);

/// Stable JSON object: n, T, T1, t1_policy, gini, sparsity_index,
/// edge_density, edge_density_weight_blind. Numbers at full double precision;
/// gini and edge_density are null when undefined.
std::string report_to_json(const MetricsReport& report);

/// "key: value" lines with numbers rounded to `digits` decimals.
void write_report_text(std::ostream& out, const MetricsReport& report, int digits);

/// Header "fraction,share" followed by exactly n+1 rows.
void write_lorenz_csv(std::ostream& out, const LorenzCurve& curve);

}  // namespace netsparsity
