#pragma once

/**
 * @file report.hpp
 * @brief Text, DOT and JSON renderings behind the command-line tool.
 *
 * Every cmd_* function is deterministic: the same arguments always yield
 * byte-identical output.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "radixgraph/digits.hpp"
#include "radixgraph/errors.hpp"
#include "radixgraph/expansion.hpp"
#include "radixgraph/graph.hpp"

namespace radixgraph {

enum class export_format { dot, json, table };
enum class label_mode { decimal, base };

struct export_options {
    export_format format = export_format::dot;
    label_mode labels = label_mode::decimal;
    std::optional<vertex> highlight;
};

/// Parses "k/m" (or a bare integer "k", meaning k/1).
inline fraction parse_fraction(std::string_view text) {
    auto parse_uint = [&](std::string_view s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
            throw parse_error("malformed fraction '" + std::string(text) + "'");
        if (s.size() > 19)
            throw capacity_error("'" + std::string(s) + "' does not fit 64 bits");
        return std::stoull(std::string(s));
    };
    auto const slash = text.find('/');
    if (slash == std::string_view::npos)
        return {parse_uint(text), 1};
    auto const k = parse_uint(text.substr(0, slash));
    auto const m = parse_uint(text.substr(slash + 1));
    if (m == 0)
        throw division_by_zero_error("zero denominator in '" + std::string(text) + "'");
    return {k, m};
}

/// "0.4‾2497 (base 12)", or "0.4(2497)_12" in ASCII mode. Integers print
/// without a dot.
inline std::string format_expansion(radix_expansion const& x, bool ascii = false) {
    std::string out = render(x.integer_part);
    if (!x.preperiod.empty() || !x.period.empty()) {
        out += '.';
        if (!x.preperiod.empty())
            out += render(x.preperiod);
        if (!x.period.empty())
            out += ascii ? "(" + render(x.period) + ")" : "‾" + render(x.period);
    }
    out += ascii ? "_" + std::to_string(x.base) : " (base " + std::to_string(x.base) + ")";
    return out;
}

namespace detail {

// Right-aligned columns separated by " | ".
inline std::string format_table(std::vector<std::vector<std::string>> const& rows) {
    std::vector<std::size_t> widths;
    for (auto const& row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (auto const& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                out += " | ";
            out.append(widths[i] - row[i].size(), ' ');
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

inline std::string trace_table(period_trace const& t, std::uint64_t base) {
    std::vector<std::vector<std::string>> rows{{"i", "remainder", "digit"}};
    for (auto const& s : t.steps)
        rows.push_back({std::to_string(s.index), std::to_string(s.remainder), label(s.digit, base)});
    return format_table(rows);
}

inline std::string vertex_label(vertex x, std::uint64_t base, label_mode mode) {
    return mode == label_mode::base ? label(x, base) : std::to_string(x);
}

}  // namespace detail

inline std::string cmd_expand(fraction const& f, std::uint64_t base, bool trace = false, bool ascii = false,
                              std::uint64_t magnitude_cap = default_magnitude_cap) {
    auto const [x, t] = expand(f, base, magnitude_cap);
    std::string out = format_expansion(x, ascii) + '\n';
    if (!trace)
        return out;

    auto opt = [](std::optional<std::uint64_t> v) { return v ? std::to_string(*v) : std::string("-"); };
    out += "reduction: integer part " + std::to_string(t.k_int) + ", e = " + std::to_string(t.e) +
           ", k' = " + std::to_string(t.k_prime) + ", k'' = " + std::to_string(t.k_dprime) +
           ", m' = " + std::to_string(t.m_prime) + ", c = " + opt(t.c) + ", n = " + opt(t.n) + '\n';
    if (t.n) {
        graph_params const p{base, *t.n, magnitude_cap};
        auto const start = t.k_dprime * *t.c;
        out += "period of " + std::to_string(start) + "/" + std::to_string(p.modulus()) +
               " from the cycle of " + std::to_string(start) + ":\n";
        out += detail::trace_table(period_digits(start, p), base);
    }
    return out;
}

inline std::string cmd_census(std::uint64_t base, std::uint64_t n,
                              std::uint64_t magnitude_cap = default_magnitude_cap) {
    graph_params const p{base, n, magnitude_cap};
    std::vector<std::vector<std::string>> rows{{"d", "ord_d(B)", "phi(d)", "phi(d)/ord_d(B)"}};
    for (auto const& r : census(p, magnitude_cap))
        rows.push_back({std::to_string(r.d), std::to_string(r.order), std::to_string(r.phi),
                        std::to_string(r.cycle_count)});
    return "x -> " + std::to_string(base) + "x mod " + std::to_string(p.modulus()) + " (B = " +
           std::to_string(base) + ", n = " + std::to_string(n) + ")\n" + detail::format_table(rows);
}

inline nlohmann::ordered_json census_json(std::vector<census_row> const& rows) {
    auto out = nlohmann::ordered_json::array();
    for (auto const& r : rows)
        out.push_back({{"d", r.d},
                       {"order", r.order},
                       {"phi", r.phi},
                       {"cycle_count", r.cycle_count},
                       {"cycle_length", r.cycle_length}});
    return out;
}

inline std::string graph_dot(functional_graph const& g, export_options const& opt) {
    auto const& p = g.params();
    std::optional<std::size_t> marked;
    if (opt.highlight)
        marked = g.cycle_index(*opt.highlight);

    std::ostringstream os;
    os << "digraph \"G_" << p.base() << "_" << p.n() << "\" {\n";
    os << "  // f(x) = " << p.base() << "x mod " << p.modulus() << "\n";
    bool const declare = opt.labels == label_mode::base || marked.has_value();
    if (declare) {
        for (std::size_t c = 0; c < g.cycles().size(); ++c)
            for (auto v : g.cycles()[c]) {
                os << "  " << v << " [label=\"" << detail::vertex_label(v, p.base(), opt.labels) << "\"";
                if (marked == c)
                    os << ", color=red";
                os << "];\n";
            }
    }
    for (std::size_t c = 0; c < g.cycles().size(); ++c)
        for (auto v : g.cycles()[c]) {
            os << "  " << v << " -> " << g.successor(v);
            if (marked == c)
                os << " [color=red]";
            os << ";\n";
        }
    os << "}\n";
    return os.str();
}

inline std::string graph_json(functional_graph const& g, export_options const& opt) {
    auto const& p = g.params();
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["base"] = p.base();
    j["n"] = p.n();
    j["modulus"] = p.modulus();
    j["cycles"] = g.cycles();
    j["census"] = census_json(census(p));
    if (opt.labels == label_mode::base) {
        auto labels = nlohmann::ordered_json::array();
        for (vertex v = 0; v < p.modulus(); ++v)
            labels.push_back(label(v, p.base()));
        j["labels"] = std::move(labels);
    }
    if (opt.highlight)
        j["highlight"] = *opt.highlight;
    return j.dump() + '\n';
}

inline std::string graph_table(functional_graph const& g, export_options const& opt) {
    auto const& p = g.params();
    std::string out;
    for (std::size_t c = 0; c < g.cycles().size(); ++c) {
        auto const& cyc = g.cycles()[c];
        out += (opt.highlight && g.cycle_index(*opt.highlight) == c) ? "* " : "  ";
        out += "length " + std::to_string(cyc.size()) + ":";
        for (auto v : cyc)
            out += " " + detail::vertex_label(v, p.base(), opt.labels);
        out += '\n';
    }
    return out;
}

inline std::string cmd_graph(std::uint64_t base, std::uint64_t n, export_options const& opt,
                             std::uint64_t vertex_cap = default_vertex_cap) {
    auto const g = build_graph(graph_params{base, n}, vertex_cap);
    switch (opt.format) {
        case export_format::dot: return graph_dot(g, opt);
        case export_format::json: return graph_json(g, opt);
        case export_format::table: return graph_table(g, opt);
    }
    return {};
}

inline std::string cmd_trace(std::uint64_t k, std::uint64_t base, std::uint64_t n, bool reverse,
                             std::uint64_t magnitude_cap = default_magnitude_cap) {
    graph_params const p{base, n, magnitude_cap};
    auto const t = reverse ? period_digits_reversed(k, p) : period_digits(k, p);
    auto digits = t.digits(base);
    std::string out = std::to_string(k) + "/" + std::to_string(p.modulus()) + " in base " +
                      std::to_string(base) + (reverse ? ", reversed graph (x -> " : ", graph (x -> ") +
                      std::to_string(reverse ? n : base) + "x mod " + std::to_string(p.modulus()) + ")\n";
    out += detail::trace_table(t, base);
    if (reverse) {
        std::reverse(digits.digits.begin(), digits.digits.end());
        out += "digits above read right to left; period " + render(digits) + "\n";
    } else {
        out += "period " + render(digits) + "\n";
    }
    return out;
}

struct sweep_result {
    std::uint64_t cases = 0;
    std::uint64_t mismatches = 0;
    std::string first_mismatch;
};

/// expand vs. long division (and exact reconstruction) for every k/m with
/// 1 <= m <= max_m, 0 <= k <= 2m, in each base.
inline sweep_result run_sweep(std::uint64_t max_m, std::vector<std::uint64_t> const& bases,
                              std::uint64_t magnitude_cap = default_magnitude_cap) {
    sweep_result res;
    for (auto b : bases) {
        require_base(b);
        for (std::uint64_t m = 1; m <= max_m; ++m)
            for (std::uint64_t k = 0; k <= 2 * m; ++k) {
                fraction const f{k, m};
                ++res.cases;
                auto const got = expand(f, b, magnitude_cap).first;
                auto const want = long_division_oracle(f, b);
                if (got == want && value_of(got) == f.reduced())
                    continue;
                if (res.mismatches++ == 0)
                    res.first_mismatch = std::to_string(k) + "/" + std::to_string(m) + " base " +
                                         std::to_string(b) + ": expand " + format_expansion(got, true) +
                                         ", long division " + format_expansion(want, true);
            }
    }
    return res;
}

inline std::string format_sweep(sweep_result const& r, std::uint64_t max_m, std::vector<std::uint64_t> const& bases) {
    std::string bs;
    for (std::size_t i = 0; i < bases.size(); ++i)
        bs += (i ? "," : "") + std::to_string(bases[i]);
    std::string out = std::to_string(r.cases) + " cases (m <= " + std::to_string(max_m) + ", 0 <= k <= 2m, bases " +
                      bs + "), " + std::to_string(r.mismatches) + " mismatches\n";
    if (r.mismatches > 0)
        out += "first mismatch: " + r.first_mismatch + "\n";
    return out;
}

}  // namespace radixgraph
