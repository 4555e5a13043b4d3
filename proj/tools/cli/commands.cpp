#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "regconn/error.hpp"
#include "regconn/generators.hpp"
#include "regconn/srg.hpp"

namespace regconn::cli {

namespace {

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError:
        case ErrorKind::IndexOutOfRange:
        case ErrorKind::SelfLoop:
        case ErrorKind::InfeasibleParams:
        case ErrorKind::InvalidPartition:
        case ErrorKind::SizeMismatch:
        case ErrorKind::EmptySubset:
            return kInputError;
        case ErrorKind::NotRegular:
        case ErrorKind::BoundNotApplicable:
        case ErrorKind::GraphDisconnected:
        case ErrorKind::InvalidParams:
        case ErrorKind::ParamMismatch:
            return kHypothesisViolation;
        case ErrorKind::ConvergenceFailure:
        case ErrorKind::NotSymmetrizable:
        case ErrorKind::NumericFailure:
        case ErrorKind::GenerationFailure:
            return kNumericFailure;
    }
    return kNumericFailure;
}

std::string graph_id_from_path(const std::string& path) {
    return std::filesystem::path(path).stem().string();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

std::string branch_name(VertexBoundBranch b) {
    switch (b) {
        case VertexBoundBranch::ConnectedF: return "xi=F(avg)";
        case VertexBoundBranch::ComponentAverage: return "eta=avg";
        case VertexBoundBranch::ComponentF: return "eta=F(avg)";
    }
    return "?";
}

std::string join_averages(const std::vector<Rational>& values) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    return os.str();
}

std::string pass_fail(bool ok) { return ok ? "pass" : "fail"; }

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream items(text);
    std::string item;
    auto to_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (s.empty() || used != s.size()) {
            throw Error(ErrorKind::ParseError, "bad integer '" + s + "' in list '" + text + "'");
        }
        return value;
    };
    while (std::getline(items, item, ',')) {
        if (const auto colon = item.find(':'); colon != std::string::npos) {
            const auto lo = to_int(item.substr(0, colon));
            const auto hi = to_int(item.substr(colon + 1));
            if (hi < lo) throw Error(ErrorKind::ParseError, "empty range '" + item + "'");
            for (auto x = lo; x <= hi; ++x) out.push_back(x);
        } else {
            out.push_back(to_int(item));
        }
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty integer list");
    return out;
}

std::string compare_csv_row(const BoundComparison& c) {
    std::ostringstream os;
    os << csv_field(c.graph_id) << ',' << c.vertex_count << ',' << c.degree << ','
       << format_number(c.interlacing_bound) << ',' << format_number(c.fiedler_bound) << ','
       << format_number(c.exact) << ',' << format_number(c.gap_interlacing) << ','
       << format_number(c.gap_fiedler);
    return os.str();
}

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto g = read_edge_list_file(config.input_path);
        auto report = rho(g, graph_id_from_path(config.input_path));
        if (config.show_exact) report.exact = exact_connectivity(g);

        out << "graph: " << report.graph_id << '\n';
        out << "v = " << report.vertex_count << ", degree = " << report.degree << '\n';
        out << std::left << std::setw(8) << "vertex" << std::setw(14) << "neighbourhood"
            << std::setw(12) << "components" << std::setw(24) << "average degrees"
            << std::setw(12) << "branch" << "value\n";
        for (const auto& vb : report.vertices) {
            out << std::setw(8) << vb.vertex << std::setw(14)
                << (vb.neighbourhood_connected ? "connected" : "disconnected") << std::setw(12)
                << vb.component_average_degrees.size() << std::setw(24)
                << join_averages(vb.component_average_degrees) << std::setw(12)
                << branch_name(vb.branch) << format_number(vb.value) << '\n';
        }
        out << "rho = " << format_number(report.rho) << '\n';
        out << "bound = degree - rho = " << format_number(report.upper_bound) << '\n';
        if (report.exact) {
            out << "exact nu2 = " << format_number(report.exact->second_adjacency_eigenvalue)
                << '\n';
            out << "exact algebraic connectivity = "
                << format_number(report.exact->algebraic_connectivity) << '\n';
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto g = read_edge_list_file(config.input_path);
        const auto c = compare_bounds(g, graph_id_from_path(config.input_path), config.tolerance);
        out << kCompareHeader << '\n' << compare_csv_row(c) << '\n';
        if (!c.sound) {
            err << "error: exact algebraic connectivity exceeds a bound by more than "
                << format_number(config.tolerance) << '\n';
            return kNumericFailure;
        }
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

int cmd_srg(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const auto g = read_edge_list_file(config.input_path);
        out << "graph: " << graph_id_from_path(config.input_path) << '\n';
        const auto params = detect_srg(g);
        if (!params) {
            out << "not strongly regular\n";
            return kOk;
        }
        const auto spectrum = srg_spectrum(*params);
        out << "parameters (v,k,lambda,mu) = " << to_string(*params) << '\n';
        out << "spectrum: " << params->degree << "^1 " << format_number(spectrum.eig1) << '^'
            << spectrum.mult1 << ' ' << format_number(spectrum.eig2) << '^' << spectrum.mult2
            << '\n';

        out << "neighbourhood graphs lambda-regular: "
            << pass_fail(neighbourhood_regular_check(g, *params)) << '\n';

        const bool condition = neighbourhood_connectivity_condition(*params);
        bool all_connected = true;
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            all_connected = all_connected && g.neighbourhood_graph(u).first.is_connected();
        }
        out << "neighbourhood connectivity condition (lambda > nu2): "
            << (condition ? "holds" : "does not hold")
            << (condition ? (all_connected ? "; all neighbourhoods connected: pass"
                                           : "; all neighbourhoods connected: fail")
                          : "")
            << '\n';

        const auto divisibility = component_divisibility_check(g, *params);
        out << "component divisibility by lambda+1: "
            << (divisibility.applicable ? pass_fail(divisibility.holds) : "not applicable") << '\n';

        const auto cert = maximality_certificate(*params);
        out << "maximality: " << (cert.certified ? "certified" : "not certified")
            << " (lambda >= nu2: " << pass_fail(cert.condition_lambda)
            << ", v <= 2k - lambda: " << pass_fail(cert.condition_v) << ")\n";
        return kOk;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
}

namespace {

struct SweepJob {
    std::string id;
    FamilySpec spec;
};

std::vector<SweepJob> expand_sweep(const SweepSpec& s) {
    auto require = [&](const std::vector<std::int64_t>& values, const char* flag) {
        if (values.empty()) {
            throw Error(ErrorKind::InfeasibleParams,
                        "family '" + s.family + "' needs " + std::string(flag));
        }
    };
    std::vector<SweepJob> jobs;
    if (s.family == "random-regular") {
        require(s.v, "--v");
        require(s.delta, "--delta");
        SplitMix64 seeds(s.seed);
        for (auto v : s.v) {
            for (auto d : s.delta) {
                for (std::size_t i = 0; i < s.count; ++i) {
                    jobs.push_back({"random-regular_v" + std::to_string(v) + "_d" +
                                        std::to_string(d) + "_" + std::to_string(i),
                                    {"random-regular", {v, d}, seeds.next()}});
                }
            }
        }
    } else if (s.family == "tight" || s.family == "cycle") {
        require(s.v, "--v");
        for (auto v : s.v) {
            jobs.push_back({s.family + "_v" + std::to_string(v), {s.family, {v}, 0}});
        }
    } else if (s.family == "multipartite") {
        require(s.alpha, "--alpha");
        require(s.m, "--m");
        for (auto a : s.alpha) {
            for (auto m : s.m) {
                jobs.push_back({"multipartite_a" + std::to_string(a) + "_m" + std::to_string(m),
                                {"multipartite", {a, m}, 0}});
            }
        }
    } else {
        throw Error(ErrorKind::InfeasibleParams, "unknown family '" + s.family + "'");
    }
    return jobs;
}

struct SweepRow {
    std::string text;
    bool failed = false;
    bool unsound = false;
};

SweepRow run_job(const SweepJob& job, double tolerance) {
    SweepRow row;
    try {
        const auto g = generate(job.spec);
        const auto c = compare_bounds(g, job.id, tolerance);
        std::string certified = "n/a";
        if (const auto p = detect_srg(g)) {
            certified = maximality_certificate(*p).certified ? "true" : "false";
        }
        row.unsound = !c.sound;
        row.text = compare_csv_row(c) + ',' + certified + ',';
        if (row.unsound) row.text += "soundness violated";
    } catch (const Error& e) {
        row.failed = true;
        row.text = csv_field(job.id) + ",,,,,,,,," +
                   csv_field(std::string(to_string(e.kind())) + ": " + e.what());
    }
    return row;
}

}  // namespace

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::vector<SweepJob> jobs;
    try {
        jobs = expand_sweep(config.sweep);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < jobs.size(); i = next++) rows[i] = run_job(jobs[i], config.tolerance);
    };
    const std::size_t threads = std::max<std::size_t>(
        1, std::min<std::size_t>(jobs.size(), config.threads ? config.threads
                                                             : std::thread::hardware_concurrency()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }

    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        err << "error: cannot write '" << config.output_path << "'\n";
        return kInputError;
    }
    file << kSweepHeader << '\n';
    std::size_t failures = 0;
    std::size_t unsound = 0;
    for (const auto& row : rows) {
        file << row.text << '\n';
        failures += row.failed;
        unsound += row.unsound;
    }
    file.close();
    out << "wrote " << rows.size() << " rows to " << config.output_path << " (" << failures
        << " errors, " << unsound << " soundness violations)\n";
    return unsound ? kNumericFailure : kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Upper bounds on the algebraic connectivity of regular graphs"};
    app.require_subcommand(1);
    RunConfig config;
    app.add_option("--tol", config.tolerance, "Tolerance for soundness comparisons")
        ->check(CLI::PositiveNumber);

    auto* bound = app.add_subcommand("bound", "Per-vertex bound table, rho(G) and degree - rho(G)");
    bound->add_option("file", config.input_path, "Edge-list file")->required();
    bound->add_flag("--exact", config.show_exact, "Also print the exact algebraic connectivity");

    auto* compare = app.add_subcommand("compare", "Bound vs vertex connectivity vs exact value (CSV)");
    compare->add_option("file", config.input_path, "Edge-list file")->required();

    auto* srg = app.add_subcommand("srg", "Strongly-regular-graph checks");
    srg->add_option("file", config.input_path, "Edge-list file")->required();

    auto* sweep = app.add_subcommand("sweep", "Compare bounds over a generated family (CSV)");
    std::string v_list;
    std::string delta_list;
    std::string alpha_list;
    std::string m_list;
    sweep->add_option("--family", config.sweep.family, "Graph family")
        ->required()
        ->check(CLI::IsMember({"random-regular", "tight", "multipartite", "cycle"}));
    sweep->add_option("--v", v_list, "Vertex counts, e.g. 7,11,15 or 8:12");
    sweep->add_option("--delta", delta_list, "Degrees");
    sweep->add_option("--alpha", alpha_list, "Part counts");
    sweep->add_option("--m", m_list, "Part sizes");
    sweep->add_option("--count", config.sweep.count, "Samples per (v, delta)")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", config.sweep.seed, "Seed");
    sweep->add_option("--threads", config.threads, "Worker threads (0: all cores)");
    sweep->add_option("--out", config.output_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (bound->parsed()) return cmd_bound(config, out, err);
    if (compare->parsed()) return cmd_compare(config, out, err);
    if (srg->parsed()) return cmd_srg(config, out, err);

    try {
        if (!v_list.empty()) config.sweep.v = parse_int_list(v_list);
        if (!delta_list.empty()) config.sweep.delta = parse_int_list(delta_list);
        if (!alpha_list.empty()) config.sweep.alpha = parse_int_list(alpha_list);
        if (!m_list.empty()) config.sweep.m = parse_int_list(m_list);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return cmd_sweep(config, out, err);
}

}  // namespace regconn::cli
