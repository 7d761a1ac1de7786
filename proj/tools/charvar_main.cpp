#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "charvar/document.hpp"
#include "charvar/svg.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw charvar::ParseError("cannot read \"" + path + "\"");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool use_color() {
    return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

std::string status_word(bool pass) {
    if (!use_color()) return pass ? "pass" : "FAIL";
    return pass ? "\x1b[32mpass\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
}

std::string join_ints(const std::array<int, 3>& vals) {
    return std::to_string(vals[0]) + "," + std::to_string(vals[1]) + "," +
           std::to_string(vals[2]);
}

void print_report_text(const charvar::VerificationReport& report,
                       std::ostream& out) {
    out << "theorem: " << report.theorem << "\n";
    out << "range: [" << report.lo << ", " << report.hi << "]\n";
    out << "status: " << status_word(report.pass) << "\n";
    out << "witnesses: " << report.witnesses.size() << "\n";
    for (const auto& w : report.witnesses) {
        out << "  r=" << w.rank;
        if (w.epsilon != 0) out << " eps=" << (w.epsilon > 0 ? "+1" : "-1");
        out << " widths=(" << join_ints(w.widths) << ")";
        if (!w.columns[0].empty())
            out << " columns=" << w.columns[0].str() << w.columns[1].str()
                << w.columns[2].str() << " dims=(" << join_ints(w.column_dims)
                << ") delta=" << w.delta;
        if (!w.note.empty()) out << " " << w.note;
        out << "\n";
    }
    out << "violations: " << report.violations.size() << "\n";
    for (const auto& v : report.violations) {
        out << "  r=" << v.rank;
        if (v.epsilon != 0) out << " eps=" << (v.epsilon > 0 ? "+1" : "-1");
        if (v.widths[0] != 0) out << " widths=(" << join_ints(v.widths) << ")";
        if (!v.columns[0].empty())
            out << " columns=" << v.columns[0].str() << v.columns[1].str()
                << v.columns[2].str() << " dims=(" << join_ints(v.column_dims)
                << ") delta=" << v.delta;
        if (!v.note.empty()) out << " " << v.note;
        out << "\n";
    }
    out << "elapsed_ms: " << report.elapsed_ms << "\n";
}

int emit_report(const charvar::VerificationReport& report,
                const std::string& format, const std::string& out_path) {
    std::ostringstream text;
    if (format == "json")
        text << charvar::report_to_json(report).dump(2) << "\n";
    else
        print_report_text(report, text);
    if (out_path.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot write \"" << out_path << "\"\n";
            return 2;
        }
        out << text.str();
        std::cout << "report: " << (report.pass ? "pass" : "fail") << " ("
                  << out_path << ")\n";
    }
    return report.pass ? 0 : 1;
}

int run_dim(const std::string& path, const std::string& format) {
    const charvar::ConfigDocument doc = charvar::parse_document(read_file(path));
    charvar::json out;
    if (doc.kind == charvar::ConfigDocument::Kind::Gl) {
        const auto& cfg = *doc.gl;
        std::array<int, 3> dims{};
        for (int i = 0; i < 3; ++i)
            dims[i] = charvar::gl_column_dimension(cfg.rank, cfg.widths[i],
                                                   cfg.columns[i]);
        out = {{"kind", "gl"},
               {"rank", cfg.rank},
               {"column_dims", dims},
               {"delta", charvar::gl_dimension(cfg)},
               {"charvar_dim", charvar::charvar_dimension(cfg)}};
    } else if (doc.kind == charvar::ConfigDocument::Kind::Quad) {
        const auto& cfg = *doc.quad;
        std::array<int, 3> dims{};
        for (int i = 0; i < 3; ++i)
            dims[i] = charvar::column_dimension(cfg.columns[i], cfg.epsilon);
        out = {{"kind", "quad"},
               {"rank", cfg.rank},
               {"epsilon", cfg.epsilon},
               {"beta", charvar::box_dimension(cfg)},
               {"l", charvar::linear_correction(cfg)},
               {"column_dims", dims},
               {"delta", charvar::quad_dimension(cfg)}};
    } else if (doc.kind == charvar::ConfigDocument::Kind::QuadOverlapping) {
        const auto& cfg = *doc.overlapping;
        const int beta = charvar::box_dimension(cfg);
        const int l = charvar::linear_correction(cfg);
        out = {{"kind", "quad-overlapping"},
               {"rank", cfg.rank},
               {"epsilon", cfg.epsilon},
               {"mu", cfg.mu},
               {"beta", beta},
               {"l", l},
               {"delta", beta - cfg.epsilon * l}};
    } else {
        throw charvar::ParseError(
            "dim is defined for gl and quad documents, not monodromy tuples");
    }
    if (format == "json") {
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& [key, value] : out.items()) {
        std::cout << key << ": ";
        if (value.is_array()) {
            for (std::size_t i = 0; i < value.size(); ++i)
                std::cout << (i ? " " : "") << value[i].dump();
        } else if (value.is_string()) {
            std::cout << value.get<std::string>();
        } else {
            std::cout << value.dump();
        }
        std::cout << "\n";
    }
    return 0;
}

void print_tuple(const charvar::MonodromyTuple& tuple, std::ostream& out) {
    for (std::size_t i = 0; i < tuple.points.size(); ++i) {
        out << "  point " << i + 1 << ":";
        for (const auto& block : tuple.points[i])
            out << " " << block.eigenvalue.str() << ":" << block.dual_parts.str();
        out << "\n";
    }
}

void print_kernel(const charvar::ConvolutionKernel& kernel, std::ostream& out) {
    out << "    betaH:";
    for (const auto& e : kernel.betaH) out << " " << e.str();
    out << "  betaV:";
    for (const auto& e : kernel.betaV) out << " " << e.str();
    out << "  betaT: " << kernel.betaT.str() << "\n";
}

int run_mc(const std::string& path, const std::string& kernel_path, bool trace) {
    const charvar::ConfigDocument doc = charvar::parse_document(read_file(path));
    if (doc.kind != charvar::ConfigDocument::Kind::MonodromyTuple)
        throw charvar::ParseError("mc requires a monodromy-tuple document");
    const charvar::MonodromyTuple& tuple = *doc.tuple;

    std::vector<int> ranks{tuple.rank};
    charvar::MonodromyTuple terminal = tuple;
    std::vector<charvar::ReductionStep> steps;

    if (!kernel_path.empty()) {
        const auto kernel = charvar::parse_kernel(read_file(kernel_path));
        charvar::ReductionStep step;
        step.kernel = kernel;
        step.rank_before = tuple.rank;
        step.delta = charvar::mc_delta(tuple, kernel);
        for (std::size_t i = 0; i < tuple.arity(); ++i)
            step.point_deltas.push_back(
                charvar::point_delta(tuple.points[i], -kernel.betaH[i]));
        terminal = charvar::mc_step(tuple, kernel);
        step.rank_after = terminal.rank;
        steps.push_back(std::move(step));
        ranks.push_back(terminal.rank);
    } else {
        auto result = charvar::katz_reduce(tuple);
        if (result.trace.empty())
            std::cout << "already MC-minimal (defect " << result.initial_defect
                      << ")\n";
        terminal = std::move(result.terminal);
        steps = std::move(result.trace);
        for (const auto& step : steps) ranks.push_back(step.rank_after);
    }

    std::cout << "rank sequence: ";
    for (std::size_t i = 0; i < ranks.size(); ++i)
        std::cout << (i ? " -> " : "") << ranks[i];
    std::cout << "\n";
    if (trace) {
        for (std::size_t i = 0; i < steps.size(); ++i) {
            std::cout << "step " << i + 1 << ": rank " << steps[i].rank_before
                      << " -> " << steps[i].rank_after << " (delta "
                      << steps[i].delta << "; point deltas";
            for (int d : steps[i].point_deltas) std::cout << " " << d;
            std::cout << ")\n";
            print_kernel(steps[i].kernel, std::cout);
        }
    }
    std::cout << "terminal tuple (rank " << terminal.rank << "):\n";
    print_tuple(terminal, std::cout);
    return 0;
}

int run_diagram(const std::string& path, const std::string& out_path) {
    const charvar::ConfigDocument doc = charvar::parse_document(read_file(path));
    const std::string svg = charvar::render_svg(doc);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write \"" << out_path << "\"\n";
        return 2;
    }
    out << svg;
    std::cout << "diagram: " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of three-point monodromy configurations"};
    app.require_subcommand(1);

    std::string file, format = "text", out_path, kernel_path;
    bool trace = false;
    int jobs = 0;

    auto* dim = app.add_subcommand("dim", "dimension of a configuration");
    dim->add_option("file", file)->required();
    dim->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* verify = app.add_subcommand("verify", "exhaustive bound sweeps");
    verify->require_subcommand(1);
    int max_r = 0;
    std::pair<int, int> range{0, 0};
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
        cmd->add_option("--format", format)
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "write the report to a file");
    };
    auto* vgl = verify->add_subcommand("gl", "general-linear rank bound");
    vgl->add_option("--max-r", max_r)->required();
    add_common(vgl);
    auto* vquad = verify->add_subcommand("quad", "quadratic rank bound");
    vquad->add_option("--range", range)->required();
    add_common(vquad);
    auto* vnn = verify->add_subcommand("nn", "residue reduction");
    vnn->add_option("--range", range)->required();
    add_common(vnn);
    auto* vprops = verify->add_subcommand("props", "column calculus oracles");
    vprops->add_option("--max-r", max_r)->required();
    add_common(vprops);

    auto* mc = app.add_subcommand("mc", "middle convolution reduction");
    mc->add_option("file", file)->required();
    mc->add_option("--kernel", kernel_path, "apply one step with this kernel");
    mc->add_flag("--trace", trace, "print each step's kernel and deltas");

    auto* diagram = app.add_subcommand("diagram", "emit an SVG diagram");
    diagram->add_option("file", file)->required();
    diagram->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (dim->parsed()) return run_dim(file, format);
        if (mc->parsed()) return run_mc(file, kernel_path, trace);
        if (diagram->parsed()) return run_diagram(file, out_path);
        if (vgl->parsed())
            return emit_report(charvar::verify_gl_bound(max_r, jobs), format,
                               out_path);
        if (vquad->parsed())
            return emit_report(
                charvar::verify_quad_bound(range.first, range.second, jobs),
                format, out_path);
        if (vnn->parsed())
            return emit_report(
                charvar::verify_nn_reduction(range.first, range.second, jobs),
                format, out_path);
        if (vprops->parsed())
            return emit_report(charvar::verify_column_propositions(max_r, jobs),
                               format, out_path);
    } catch (const charvar::ConvolutionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const charvar::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
