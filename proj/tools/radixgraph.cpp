// radixgraph: radix expansions of fractions read off the graph of x -> B*x mod (B*n - 1).
//
//   radixgraph expand 7/20 --base 12 [--trace] [--ascii]
//   radixgraph census 4 --base 10
//   radixgraph graph 3 --base 12 --format dot --labels base [--highlight 7]
//   radixgraph trace 1 4 --base 10 [--reverse]
//   radixgraph sweep 300 --base 2,10,12,16
//
// Exit codes: 0 ok, 1 internal error, 2 parse/usage error, 3 invalid input,
// 4 zero denominator, 5 capacity exceeded, 6 sweep mismatch.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radixgraph/radixgraph.hpp"

namespace {

enum exit_code : int {
    ok = 0,
    internal = 1,
    usage = 2,
    invalid = 3,
    zero_denominator = 4,
    capacity = 5,
    mismatch = 6,
};

int fail(int code, std::string const& what) {
    std::cerr << "radixgraph: " << what << '\n';
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace radixgraph;

    CLI::App app{"Radix expansions of fractions via the functional graph of x -> B*x mod (B*n - 1)"};
    app.require_subcommand(1);

    std::uint64_t base = 10;
    std::uint64_t max_modulus = 0;
    bool trace = false;
    bool ascii = false;
    bool reverse = false;
    std::string fraction_text;
    std::uint64_t n = 1;
    std::uint64_t k = 1;
    std::uint64_t max_m = 100;
    std::vector<std::uint64_t> bases{10};
    std::string format = "dot";
    std::string labels = "dec";
    std::optional<std::uint64_t> highlight;

    auto add_cap = [&](CLI::App* sub, char const* what) {
        sub->add_option("--max-modulus", max_modulus, what);
    };

    auto* expand_cmd = app.add_subcommand("expand", "Radix expansion of a fraction k/m");
    expand_cmd->add_option("fraction", fraction_text, "Fraction as k/m")->required();
    expand_cmd->add_option("--base", base, "Base B >= 2")->capture_default_str();
    expand_cmd->add_flag("--trace", trace, "Print the reduction and the remainder/digit walk");
    expand_cmd->add_flag("--ascii", ascii, "Write the period as (digits)_B instead of an overline");
    add_cap(expand_cmd, "Largest modulus B*n - 1 accepted (default 2^62)");

    auto* census_cmd = app.add_subcommand("census", "Cycle census of the graph for (B, n)");
    census_cmd->add_option("n", n, "Graph parameter n >= 1")->required();
    census_cmd->add_option("--base", base, "Base B >= 2")->capture_default_str();
    add_cap(census_cmd, "Largest modulus B*n - 1 accepted (default 2^62)");

    auto* graph_cmd = app.add_subcommand("graph", "Export the graph for (B, n)");
    graph_cmd->add_option("n", n, "Graph parameter n >= 1")->required();
    graph_cmd->add_option("--base", base, "Base B >= 2")->capture_default_str();
    graph_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"dot", "json", "table"}))
        ->capture_default_str();
    graph_cmd->add_option("--labels", labels, "Vertex labels in decimal or in base B")
        ->check(CLI::IsMember({"dec", "base"}))
        ->capture_default_str();
    graph_cmd->add_option("--highlight", highlight, "Mark the cycle through this vertex");
    add_cap(graph_cmd, "Largest number of vertices materialized (default 10^6)");

    auto* trace_cmd = app.add_subcommand("trace", "Remainder/digit walk of k/(B*n - 1)");
    trace_cmd->add_option("k", k, "Numerator, 1 <= k < B*n - 1")->required();
    trace_cmd->add_option("n", n, "Graph parameter n >= 1")->required();
    trace_cmd->add_option("--base", base, "Base B >= 2")->capture_default_str();
    trace_cmd->add_flag("--reverse", reverse, "Walk the reversed graph (digits right to left)");
    add_cap(trace_cmd, "Largest modulus B*n - 1 accepted (default 2^62)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Check expand against long division for all k/m");
    sweep_cmd->add_option("max_m", max_m, "Largest denominator")->capture_default_str();
    sweep_cmd->add_option("--base", bases, "Bases, comma separated")->delimiter(',')->capture_default_str();
    add_cap(sweep_cmd, "Largest modulus B*n - 1 accepted (default 2^62)");

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return usage;
    }

    auto const magnitude_cap = max_modulus == 0 ? default_magnitude_cap : std::min(max_modulus, default_magnitude_cap);
    auto const vertex_cap = max_modulus == 0 ? default_vertex_cap : max_modulus;

    try {
        if (*expand_cmd) {
            std::cout << cmd_expand(parse_fraction(fraction_text), base, trace, ascii, magnitude_cap);
        } else if (*census_cmd) {
            std::cout << cmd_census(base, n, magnitude_cap);
        } else if (*graph_cmd) {
            export_options opt;
            opt.format = format == "json" ? export_format::json
                         : format == "table" ? export_format::table
                                             : export_format::dot;
            opt.labels = labels == "base" ? label_mode::base : label_mode::decimal;
            opt.highlight = highlight;
            std::cout << cmd_graph(base, n, opt, vertex_cap);
        } else if (*trace_cmd) {
            std::cout << cmd_trace(k, base, n, reverse, magnitude_cap);
        } else if (*sweep_cmd) {
            auto const r = run_sweep(max_m, bases, magnitude_cap);
            std::cout << format_sweep(r, max_m, bases);
            if (r.mismatches > 0)
                return mismatch;
        }
    } catch (parse_error const& e) {
        return fail(usage, e.what());
    } catch (division_by_zero_error const& e) {
        return fail(zero_denominator, e.what());
    } catch (capacity_error const& e) {
        return fail(capacity, e.what());
    } catch (invalid_input_error const& e) {
        return fail(invalid, e.what());
    } catch (std::exception const& e) {
        return fail(internal, e.what());
    }
    return ok;
}
