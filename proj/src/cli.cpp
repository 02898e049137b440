#include "netsparsity/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "netsparsity/errors.hpp"
#include "netsparsity/io.hpp"
#include "netsparsity/random.hpp"
#include "netsparsity/transforms.hpp"

namespace netsparsity {

std::vector<SweepRecord> beta_sweep(std::vector<double> betas, std::size_t n, std::size_t k, FrequencyMode mode,
                                    const std::optional<ReferencePolicy>& t1) {
    if (betas.empty()) throw std::invalid_argument("beta sweep needs at least one exponent");
    std::sort(betas.begin(), betas.end());

    std::vector<OrderedDegreeVector> vectors;
    for (double beta : betas)
        vectors.push_back(frequency_to_sequence(build_frequency_table({beta, n, k}, mode)));

    ReferencePolicy common;
    if (t1) {
        common = *t1;
    } else {
        Rational largest = 0;
        for (const auto& b : vectors) largest = std::max(largest, b.total());
        common = ReferencePolicy::custom(largest);
    }

    std::vector<SweepRecord> records;
    for (std::size_t s = 0; s < betas.size(); ++s) {
        const auto& b = vectors[s];
        const auto report = compute_report(b, common);
        records.push_back({betas[s], report.total, report.t1.value, report.gini, report.sparsity_index,
                           report.edge_density.value_or(Rational(0))});
    }
    return records;
}

std::vector<SweepRecord> edge_sweep(const Graph& g, std::size_t additions, std::uint64_t seed,
                                    const ReferencePolicy& t1) {
    if (g.weighted()) throw std::invalid_argument("edge sweep needs an unweighted graph");
    std::vector<std::pair<NodeIndex, NodeIndex>> absent;
    for (NodeIndex u = 0; u < g.node_count(); ++u)
        for (NodeIndex v = u + 1; v < g.node_count(); ++v)
            if (!g.has_edge(u, v)) absent.emplace_back(u, v);
    if (absent.empty()) throw std::invalid_argument("graph complete: no absent pair to add");
    if (absent.size() < additions)
        throw std::invalid_argument("cannot add " + std::to_string(additions) + " edges: only " +
                                    std::to_string(absent.size()) + " absent pairs");

    auto record = [&](const Graph& current) {
        const auto report = compute_report(current, t1);
        return SweepRecord{static_cast<double>(current.edge_count()), report.total, report.t1.value, report.gini,
                           report.sparsity_index, report.edge_density.value_or(Rational(0))};
    };

    Rng rng(seed);
    Graph current = g;
    std::vector<SweepRecord> records{record(current)};
    for (std::size_t step = 0; step < additions; ++step) {
        const auto pick = static_cast<std::size_t>(rng.below(absent.size()));
        const auto [u, v] = absent[pick];
        absent[pick] = absent.back();
        absent.pop_back();
        current = add_edge(current, u, v);
        records.push_back(record(current));
    }
    return records;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records, const std::string& key_name) {
    out << key_name << ",T,T1,gini,sparsity_index,edge_density\n";
    for (const auto& r : records) {
        out << format_double(r.key) << ',' << format_double(r.total) << ',' << format_double(r.t1) << ','
            << (r.gini ? format_double(*r.gini) : std::string("nan")) << ',' << format_double(r.sparsity_index)
            << ',' << format_double(r.edge_density) << '\n';
    }
}

int text_precision() {
    if (const char* env = std::getenv("NETSPARSITY_PRECISION")) {
        char* end = nullptr;
        const long digits = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && digits >= 0 && digits <= 40) return static_cast<int>(digits);
    }
    return 4;
}

namespace {

struct InputOptions {
    std::string path;
    std::string format = "edgelist";
    bool weighted = false;
    std::optional<std::size_t> nodes;
    std::optional<std::string> t1;
};

void add_input_options(CLI::App* cmd, InputOptions& opts) {
    cmd->add_option("input", opts.path, "Input file ('-' for stdin)")->required();
    cmd->add_option("--format", opts.format, "edgelist | sequence | freqtable")
        ->check(CLI::IsMember({"edgelist", "sequence", "freqtable"}));
    cmd->add_flag("--weighted", opts.weighted, "Edge list carries a weight column");
    cmd->add_option("--nodes", opts.nodes, "Declared node count (adds isolated nodes)");
    cmd->add_option("--t1", opts.t1, "actual | simple-max | weighted-max | node-max | custom:<value>");
}

/// Owns a file stream or borrows stdin.
class InputSource {
public:
    explicit InputSource(const std::string& path) {
        if (path != "-") {
            file_.open(path);
            if (!file_) throw ParseError("cannot open '" + path + "'");
        }
    }
    std::istream& stream() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

private:
    std::ifstream file_;
};

/// Writes to a file or to `fallback` when the path is empty or "-".
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
    if (path.empty() || path == "-") {
        write(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write '" + path + "'");
    write(file);
}

struct LoadedInput {
    std::optional<Graph> graph;
    std::optional<OrderedDegreeVector> vector;
    ReferencePolicy t1;
};

LoadedInput load_input(const InputOptions& opts) {
    InputSource source(opts.path);
    LoadedInput loaded;
    if (opts.format == "edgelist") {
        loaded.graph = parse_edge_list(source.stream(), opts.weighted, opts.nodes);
    } else {
        if (opts.weighted) throw ParseError("--weighted applies to edge lists only");
        if (opts.format == "sequence") {
            loaded.vector = degree_vector_from_sequence(parse_sequence_values(source.stream()));
        } else {
            loaded.vector = frequency_to_sequence(parse_frequency_table(source.stream()));
        }
        if (opts.nodes) {
            if (*opts.nodes < loaded.vector->size())
                throw ParseError("declared node count is below the sequence length");
            auto values = loaded.vector->values();
            values.resize(*opts.nodes, Rational(0));
            loaded.vector = degree_vector_from_sequence(values);
        }
    }
    const bool weighted = loaded.graph && loaded.graph->weighted();
    loaded.t1 = opts.t1 ? parse_reference_policy(*opts.t1)
                        : (weighted ? ReferencePolicy::node_max() : ReferencePolicy::simple_max());
    return loaded;
}

MetricsReport report_for(const LoadedInput& in) {
    return in.graph ? compute_report(*in.graph, in.t1) : compute_report(*in.vector, in.t1);
}

std::vector<Rational> parse_value_list(const std::string& text) {
    std::vector<Rational> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("bad --values entry: ") + e.what());
        }
    }
    if (values.empty()) throw ParseError("--values is empty");
    return values;
}

Rational parse_amount(const std::string& text, const char* flag) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad ") + flag + ": " + e.what());
    }
}

FrequencyMode parse_mode(const std::string& mode) {
    return mode == "paper-fixture" ? FrequencyMode::EmbeddedFixture : FrequencyMode::LargestRemainder;
}

std::string join_values(const OrderedDegreeVector& b) {
    std::string s = "[";
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (k) s += ", ";
        s += to_string(b[k]);
    }
    return s + "]";
}

void write_outcome(std::ostream& out, const TransformOutcome& o, int digits) {
    auto both = [&](const Rational& v) { return to_string(v) + " (" + to_fixed(v, digits) + ")"; };
    out << "before: " << join_values(o.before) << '\n';
    out << "after: " << join_values(o.after) << '\n';
    out << "T1_before: " << to_string(o.t1_before.value) << '\n';
    out << "T1_after: " << to_string(o.t1_after.value) << '\n';
    out << "si_before: " << both(o.si_before) << '\n';
    out << "si_after: " << both(o.si_after) << '\n';
    out << "delta: " << both(o.delta()) << '\n';
    out << "predicted_delta: " << (o.predicted_delta ? both(*o.predicted_delta) : std::string("n/a")) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gini and sparsity indices for network graphs", "netsparsity"};
    app.require_subcommand(1);

    // metrics
    InputOptions metrics_opts;
    std::string metrics_output = "text";
    auto* metrics = app.add_subcommand("metrics", "Gini index, sparsity index and edge density");
    add_input_options(metrics, metrics_opts);
    metrics->add_option("--output", metrics_output, "json | text")->check(CLI::IsMember({"json", "text"}));

    // lorenz
    InputOptions lorenz_opts;
    std::string lorenz_out;
    auto* lorenz = app.add_subcommand("lorenz", "Lorenz curve CSV under a reference total");
    add_input_options(lorenz, lorenz_opts);
    lorenz->add_option("--out", lorenz_out, "Output CSV path (default stdout)");

    // generate
    double gen_beta = 0;
    std::size_t gen_nodes = 0;
    std::size_t gen_max_degree = 0;
    std::string gen_mode = "largest-remainder";
    std::string gen_out;
    std::string gen_realize;
    auto* generate = app.add_subcommand("generate", "Power-law degree frequency table");
    generate->add_option("--beta", gen_beta, "Exponent (> 1)")->required();
    generate->add_option("--nodes", gen_nodes, "Node count n")->required();
    generate->add_option("--max-degree", gen_max_degree, "Maximal degree k")->required();
    generate->add_option("--mode", gen_mode, "largest-remainder | paper-fixture")
        ->check(CLI::IsMember({"largest-remainder", "paper-fixture"}));
    generate->add_option("--out", gen_out, "Frequency CSV path (default stdout)");
    generate->add_option("--realize", gen_realize, "Write a Havel-Hakimi realization as an edge list to PATH");

    // check-seq
    std::string check_path;
    auto* check = app.add_subcommand("check-seq", "Havel-Hakimi realizability of a degree sequence");
    check->add_option("input", check_path, "Sequence file ('-' for stdin)")->required();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Trend data as CSV");
    sweep->require_subcommand(1);
    std::vector<double> sweep_betas;
    std::size_t sweep_nodes = 200;
    std::size_t sweep_max_degree = 11;
    std::string sweep_mode = "paper-fixture";
    std::optional<std::string> sweep_beta_t1;
    std::string sweep_out;
    auto* sweep_beta = sweep->add_subcommand("beta", "Metrics across power-law exponents");
    sweep_beta->add_option("--betas", sweep_betas, "Comma-separated exponents")->required()->delimiter(',');
    sweep_beta->add_option("--nodes", sweep_nodes, "Node count n (default 200)");
    sweep_beta->add_option("--max-degree", sweep_max_degree, "Maximal degree k (default 11)");
    sweep_beta->add_option("--mode", sweep_mode, "largest-remainder | paper-fixture")
        ->check(CLI::IsMember({"largest-remainder", "paper-fixture"}));
    sweep_beta->add_option("--t1", sweep_beta_t1, "Common reference total (default: largest table total)");
    sweep_beta->add_option("--out", sweep_out, "Output CSV path (default stdout)");

    InputOptions edges_opts;
    std::size_t edges_add = 1;
    std::uint64_t edges_seed = 1;
    auto* sweep_edges = sweep->add_subcommand("edges", "Metrics while adding random edges");
    add_input_options(sweep_edges, edges_opts);
    sweep_edges->add_option("--add", edges_add, "Number of edges to add");
    sweep_edges->add_option("--seed", edges_seed, "Generator seed");
    sweep_edges->add_option("--out", sweep_out, "Output CSV path (default stdout)");

    // axiom
    std::string axiom_kind;
    std::string axiom_values;
    std::string axiom_input;
    std::size_t axiom_i = 0;
    std::size_t axiom_j = 0;
    std::string axiom_alpha = "1";
    std::size_t axiom_count = 2;
    std::string axiom_t1 = "simple-max";
    std::optional<std::string> axiom_max_weight;
    auto* axiom = app.add_subcommand("axiom", "Apply a sparsity axiom operator to a degree vector");
    axiom->add_option("kind", axiom_kind, "robin-hood | scale | rising-tide | clone | enrich | babies")
        ->required()
        ->check(CLI::IsMember({"robin-hood", "scale", "rising-tide", "clone", "enrich", "babies"}));
    axiom->add_option("--values", axiom_values, "Comma-separated degree vector");
    axiom->add_option("--input", axiom_input, "Sequence file");
    axiom->add_option("--i", axiom_i, "1-based sorted position");
    axiom->add_option("--j", axiom_j, "1-based sorted position (robin-hood)");
    axiom->add_option("--alpha", axiom_alpha, "Amount or factor");
    axiom->add_option("--count", axiom_count, "Copies (clone) or isolated nodes (babies)");
    axiom->add_option("--t1", axiom_t1, "Reference total policy (default simple-max)");
    axiom->add_option("--max-weight", axiom_max_weight, "Largest edge weight, for weighted-max");

    std::vector<std::string> argv_storage = args.empty() ? std::vector<std::string>{"netsparsity"} : args;
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::input_error;
    }

    const int digits = text_precision();
    try {
        if (metrics->parsed()) {
            const auto report = report_for(load_input(metrics_opts));
            if (metrics_output == "json")
                out << report_to_json(report) << '\n';
            else
                write_report_text(out, report, digits);
            return exit_code::ok;
        }
        if (lorenz->parsed()) {
            const auto in = load_input(lorenz_opts);
            const auto b = in.graph ? degree_vector(*in.graph) : *in.vector;
            const auto t1 = in.graph ? resolve_reference_total(in.t1, *in.graph) : resolve_reference_total(in.t1, b);
            const auto curve = lorenz_curve(b, t1);
            emit(lorenz_out, out, [&](std::ostream& os) { write_lorenz_csv(os, curve); });
            return exit_code::ok;
        }
        if (generate->parsed()) {
            const auto table = build_frequency_table({gen_beta, gen_nodes, gen_max_degree}, parse_mode(gen_mode));
            const auto degrees = frequency_to_degrees(table);
            if (!havel_hakimi_check(degrees)) {
                try {
                    (void)havel_hakimi_realize(degrees);
                } catch (const RealizationError& e) {
                    err << "generated sequence (beta=" << gen_beta << ", n=" << gen_nodes << ", k=" << gen_max_degree
                        << ") is not realizable: " << e.what() << '\n';
                }
                return exit_code::realization;
            }
            emit(gen_out, out, [&](std::ostream& os) { write_frequency_table(os, table); });
            if (!gen_realize.empty()) {
                const auto graph = havel_hakimi_realize(degrees);
                emit(gen_realize, out, [&](std::ostream& os) { write_edge_list(os, graph); });
            }
            if (!gen_out.empty() && gen_out != "-") {
                const auto b = OrderedDegreeVector::from_integers(degrees);
                out << "n=" << b.size() << " T=" << to_string(b.total())
                    << " edge_density=" << to_fixed(implied_edge_density(b), digits) << " realizable\n";
            }
            return exit_code::ok;
        }
        if (check->parsed()) {
            InputSource source(check_path);
            const auto degrees = parse_integer_sequence(source.stream());
            const bool ok = havel_hakimi_check(degrees);
            out << (ok ? "REALIZABLE" : "NOT REALIZABLE") << '\n';
            return ok ? exit_code::ok : exit_code::negative_verdict;
        }
        if (sweep_beta->parsed()) {
            std::optional<ReferencePolicy> t1;
            if (sweep_beta_t1) t1 = parse_reference_policy(*sweep_beta_t1);
            const auto records =
                beta_sweep(sweep_betas, sweep_nodes, sweep_max_degree, parse_mode(sweep_mode), t1);
            emit(sweep_out, out, [&](std::ostream& os) { write_sweep_csv(os, records, "beta"); });
            return exit_code::ok;
        }
        if (sweep_edges->parsed()) {
            if (edges_opts.format != "edgelist") throw ParseError("edge sweep needs an edge list");
            const auto in = load_input(edges_opts);
            const auto records = edge_sweep(*in.graph, edges_add, edges_seed, in.t1);
            emit(sweep_out, out, [&](std::ostream& os) { write_sweep_csv(os, records, "edges"); });
            return exit_code::ok;
        }
        if (axiom->parsed()) {
            std::vector<Rational> values;
            if (!axiom_values.empty()) {
                values = parse_value_list(axiom_values);
            } else if (!axiom_input.empty()) {
                InputSource source(axiom_input);
                values = parse_sequence_values(source.stream());
            } else {
                throw ParseError("axiom needs --values or --input");
            }
            const auto b = degree_vector_from_sequence(values);
            const auto t1 = parse_reference_policy(axiom_t1);
            const auto alpha = parse_amount(axiom_alpha, "--alpha");
            std::optional<Rational> max_weight;
            if (axiom_max_weight) max_weight = parse_amount(*axiom_max_weight, "--max-weight");

            TransformOutcome outcome = [&] {
                if (axiom_kind == "robin-hood") return robin_hood(b, axiom_i, axiom_j, alpha, t1);
                if (axiom_kind == "scale") return scale(b, alpha, t1, max_weight);
                if (axiom_kind == "rising-tide") return rising_tide(b, alpha, t1);
                if (axiom_kind == "clone") return clone_concat(b, axiom_count, t1);
                if (axiom_kind == "enrich") return enrich_entry(b, axiom_i, alpha, t1);
                return append_zeros(b, axiom_count, t1);
            }();
            write_outcome(out, outcome, digits);
            return exit_code::ok;
        }
    } catch (const ReferenceTotalError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::reference_total;
    } catch (const RealizationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::realization;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input_error;
    }
    return exit_code::input_error;
}

}  // namespace netsparsity
