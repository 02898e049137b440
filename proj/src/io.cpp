#include "netsparsity/io.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string_view>

#include "netsparsity/errors.hpp"

namespace netsparsity {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool skip_line(std::string_view line) { return line.empty() || line.front() == '#'; }

std::int64_t parse_count(std::string_view field, std::size_t line_no, const char* what) {
    Rational v;
    try {
        v = parse_rational(field);
    } catch (const std::invalid_argument&) {
        throw ParseError(std::string("non-numeric ") + what + " '" + std::string(field) + "'", line_no);
    }
    if (!is_integer(v)) throw ParseError(std::string(what) + " must be an integer", line_no);
    if (v < 0) throw ParseError(std::string(what) + " must be non-negative", line_no);
    if (!v.get_num().fits_slong_p()) throw ParseError(std::string(what) + " is too large", line_no);
    return v.get_num().get_si();
}

}  // namespace

std::vector<Rational> parse_sequence_values(std::istream& in) {
    std::vector<Rational> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (skip_line(line)) continue;
        Rational v;
        try {
            v = parse_rational(line);
        } catch (const std::invalid_argument&) {
            throw ParseError("non-numeric entry '" + std::string(line) + "'", line_no);
        }
        if (v < 0) throw ParseError("negative entry '" + std::string(line) + "'", line_no);
        values.push_back(std::move(v));
    }
    if (values.empty()) throw ParseError("sequence is empty");
    return values;
}

std::vector<std::int64_t> parse_integer_sequence(std::istream& in) {
    std::vector<std::int64_t> values;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (skip_line(line)) continue;
        values.push_back(parse_count(line, line_no, "degree"));
    }
    if (values.empty()) throw ParseError("sequence is empty");
    return values;
}

void write_integer_sequence(std::ostream& out, const std::vector<std::int64_t>& values) {
    for (auto v : values) out << v << '\n';
}

DegreeFrequencyTable parse_frequency_table(std::istream& in) {
    DegreeFrequencyTable table;
    std::string raw;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (skip_line(line)) continue;
        if (!header_seen) {
            if (line != "degree,frequency") throw ParseError("expected header 'degree,frequency'", line_no);
            header_seen = true;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("expected 'degree,frequency'", line_no);
        const auto degree = parse_count(trim(line.substr(0, comma)), line_no, "degree");
        const auto frequency = parse_count(trim(line.substr(comma + 1)), line_no, "frequency");
        if (degree != static_cast<std::int64_t>(table.rows.size()) + 1)
            throw ParseError("degrees must run 1..k in order; expected " + std::to_string(table.rows.size() + 1),
                             line_no);
        table.rows.push_back({degree, frequency});
    }
    if (!header_seen) throw ParseError("missing header 'degree,frequency'");
    try {
        table.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return table;
}

void write_frequency_table(std::ostream& out, const DegreeFrequencyTable& table) {
    out << "degree,frequency\n";
    for (const auto& r : table.rows) out << r.degree << ',' << r.frequency << '\n';
}

std::string format_double(double value) { return nlohmann::json(value).dump(); }

std::string format_double(const Rational& value) { return format_double(to_double(value)); }

std::string report_to_json(const MetricsReport& report) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["T"] = to_double(report.total);
    j["T1"] = to_double(report.t1.value);
    j["t1_policy"] = std::string(policy_name(report.t1.policy));
    j["gini"] = report.gini ? nlohmann::ordered_json(to_double(*report.gini)) : nlohmann::ordered_json(nullptr);
    j["sparsity_index"] = to_double(report.sparsity_index);
    j["edge_density"] = report.edge_density ? nlohmann::ordered_json(to_double(*report.edge_density))
                                            : nlohmann::ordered_json(nullptr);
    j["edge_density_weight_blind"] = report.edge_density_weight_blind;
    return j.dump(2);
}

void write_report_text(std::ostream& out, const MetricsReport& report, int digits) {
    out << "n: " << report.n << '\n';
    out << "T: " << to_fixed(report.total, digits) << '\n';
    out << "T1: " << to_fixed(report.t1.value, digits) << " (" << policy_name(report.t1.policy) << ")\n";
    out << "gini: " << (report.gini ? to_fixed(*report.gini, digits) : std::string("undefined")) << '\n';
    out << "sparsity_index: " << to_fixed(report.sparsity_index, digits) << '\n';
    out << "edge_density: " << (report.edge_density ? to_fixed(*report.edge_density, digits) : std::string("n/a"));
    if (report.edge_density_weight_blind) out << " (weight-blind)";
    out << '\n';
}

void write_lorenz_csv(std::ostream& out, const LorenzCurve& curve) {
    out << "fraction,share\n";
    for (const auto& p : curve.points) out << format_double(p.fraction) << ',' << format_double(p.share) << '\n';
}

}  // namespace netsparsity
