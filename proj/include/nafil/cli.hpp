#pragma once

/**
 * @file cli.hpp
 * @brief The `nafil` command line: construct, analyze, qcheck.
 *
 * Exit status: 0 when the command completed (property failures included),
 * 1 for invalid input or a failed construction, 2 for usage errors.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "algebra.hpp"
#include "construct.hpp"
#include "properties.hpp"
#include "report.hpp"
#include "text_format.hpp"

namespace nafil::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_usage = 2;

struct ConstructOptions {
    std::optional<std::size_t> order;
    std::optional<std::size_t> m;
    std::optional<std::string> lm_source;
    std::optional<std::string> out;
    bool emit_trace = false;
    std::optional<std::string> trace_out;
};

struct AnalyzeCliOptions {
    std::string in;
    std::optional<std::string> json_out;
    std::optional<std::string> commutators_out;
    bool jacobi = false;
    std::optional<std::size_t> max_order_override;
    bool quiet = false;
};

struct QcheckOptions {
    std::size_t k = 0;
    std::string property;
};

namespace detail {

inline bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    f << content;
    return static_cast<bool>(f);
}

}  // namespace detail

inline int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err,
                         Execution exec = Execution::automatic) {
    if (!o.order && !o.m) {
        err << "error: one of --order or --m is required\n";
        return exit_usage;
    }
    if (o.order && (*o.order < 5 || *o.order % 2 == 0)) {
        err << "error: order must be odd and ≥ 5\n";
        return exit_usage;
    }
    if (o.m && *o.m < 2) {
        err << "error: m must be ≥ 2\n";
        return exit_usage;
    }
    if (o.order && o.m && *o.order != 2 * *o.m + 1) {
        err << "error: --order " << *o.order << " does not equal 2m+1 for --m " << *o.m << '\n';
        return exit_usage;
    }
    ConstructionParams p;
    p.m = o.m ? *o.m : (*o.order - 1) / 2;

    try {
        if (o.lm_source) p.lm_table = text::read_table_file(*o.lm_source);
        Construction c = construct_nafil(p, exec);
        std::string table = text::format_table(c.trace.table);
        if (o.out) {
            if (!detail::write_file(*o.out, table, err)) return exit_invalid;
        } else {
            out << table;
        }
        if (o.emit_trace) {
            std::ostringstream trace;
            write_trace(trace, c.trace);
            std::optional<std::string> path = o.trace_out;
            if (!path && o.out) path = *o.out + ".trace";
            if (path) {
                if (!detail::write_file(*path, trace.str(), err)) return exit_invalid;
            } else {
                out << trace.str();
            }
        }
    } catch (const parse_error& e) {
        err << "error: " << o.lm_source.value_or("<input>") << ": " << e.what() << '\n';
        return exit_invalid;
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_ok;
}

inline int cmd_analyze(const AnalyzeCliOptions& o, std::ostream& out, std::ostream& err,
                       Execution exec = Execution::automatic) {
    AnalysisReport report;
    try {
        Table t = text::read_table_file(o.in);
        AnalyzeOptions opt;
        opt.source.kind = "external";
        opt.source.path = o.in;
        opt.jacobi = o.jacobi;
        opt.max_order_override = o.max_order_override;
        opt.exec = exec;
        report = analyze(t, opt);
        if (o.commutators_out) {
            Loop l = certify_loop(t);
            if (!detail::write_file(*o.commutators_out,
                                    format_commutator_table(commutator_constants(structure_constants(l))), err)) {
                return exit_invalid;
            }
        }
    } catch (const cap_exceeded_error& e) {
        err << "error: " << e.what() << "; pass --max-order-override " << e.order() << " to sweep anyway\n";
        return exit_usage;
    } catch (const error& e) {
        err << "error: " << o.in << ": " << e.what() << '\n';
        return exit_invalid;
    }
    if (!o.quiet) write_summary(out, report);
    if (o.json_out) {
        if (!detail::write_file(*o.json_out, to_json_with_envelope(report).dump(2) + "\n", err)) return exit_invalid;
    }
    return exit_ok;
}

inline int cmd_qcheck(const QcheckOptions& o, std::ostream& out, std::ostream& err,
                      Execution exec = Execution::automatic) {
    if (o.k < 3) {
        err << "error: k must be ≥ 3\n";
        return exit_usage;
    }
    auto id = property_from_name(o.property);
    if (!id) {
        err << "error: unknown property '" << o.property << "'\n";
        return exit_usage;
    }
    if (needs_loop(*id)) {
        err << "error: " << name(*id)
            << " mentions inverses or the identity; qcheck accepts ASSOC, COMM, FLEX, LBOL, RBOL, MOUFANG\n";
        return exit_usage;
    }
    Quasigroup q = certify_quasigroup(Table(counter_cyclic_transpose(o.k)));
    CheckResult r = check_identity_on_quasigroup(q, *id, exec);
    PropertyOutcome outcome{r, {}};
    out << format_outcome(*id, outcome) << '\n';
    return exit_ok;
}

/// Parses `args` (args[0] is the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Construct and analyze odd-order NAFIL loops", "nafil"};
    app.require_subcommand(1);
    bool sequential = false;
    app.add_flag("--sequential", sequential, "Run every sweep on one thread");

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "Build the NAFIL loop of order n = 2m+1");
    construct->add_option("--order,-n", co.order, "Loop order (odd, at least 5)");
    construct->add_option("--m", co.m, "Half order; the loop has order 2m+1");
    construct->add_option("--lm", co.lm_source, "Group table for L(m) in the text format (default: cyclic)");
    construct->add_option("--out,-o", co.out, "Output file (default: standard output)");
    construct->add_flag("--emit-trace", co.emit_trace, "Also write every intermediate block");
    construct->add_option("--trace-out", co.trace_out, "Trace file (default: <out>.trace)");

    AnalyzeCliOptions ao;
    auto* analyze_cmd = app.add_subcommand("analyze", "Certify and analyze a Cayley table");
    analyze_cmd->add_option("input", ao.in, "Table in the text format")->required();
    analyze_cmd->add_option("--json", ao.json_out, "Write the JSON report here");
    analyze_cmd->add_option("--commutators", ao.commutators_out, "Write the commutator table here");
    analyze_cmd->add_flag("--jacobi", ao.jacobi, "Check the Jacobi identity of the commutator algebra");
    analyze_cmd->add_option("--max-order-override", ao.max_order_override,
                            "Allow exhaustive sweeps up to this order");
    analyze_cmd->add_flag("--quiet,-q", ao.quiet, "Suppress the human-readable summary");

    QcheckOptions qo;
    auto* qcheck = app.add_subcommand("qcheck", "Check an identity on the counter-cyclic transpose quasigroup");
    qcheck->add_option("--k", qo.k, "Quasigroup order (at least 3)")->required();
    qcheck->add_option("--property,-p", qo.property, "ASSOC, COMM, FLEX, LBOL, RBOL or MOUFANG")->required();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    const Execution exec = sequential ? Execution::sequential : Execution::automatic;
    if (*construct) return cmd_construct(co, out, err, exec);
    if (*analyze_cmd) return cmd_analyze(ao, out, err, exec);
    return cmd_qcheck(qo, out, err, exec);
}

}  // namespace nafil::cli
