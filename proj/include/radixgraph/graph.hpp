#pragma once

/**
 * @file graph.hpp
 * @brief The map x -> B*x mod (B*n - 1) on {0, ..., B*n - 2} and its graph.
 *
 * Since B*n - (B*n - 1) = 1, B is a unit modulo B*n - 1 and the map is a
 * permutation: the graph is a disjoint union of cycles. A nonzero vertex x
 * lies on a cycle of length ord_d(B), d = M / gcd(M, x); the divisor d
 * collects phi(d) vertices, hence phi(d) / ord_d(B) such cycles. `census`
 * predicts that structure from number theory alone, `build_graph`
 * materializes it.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "radixgraph/errors.hpp"
#include "radixgraph/numtheory.hpp"

namespace radixgraph {

using vertex = std::uint64_t;

/// Base B, parameter n and modulus M = B*n - 1.
class graph_params {
public:
    graph_params(std::uint64_t base, std::uint64_t n, std::uint64_t magnitude_cap = default_magnitude_cap)
        : base_(base), n_(n) {
        if (base < 2)
            throw invalid_input_error("base must be at least 2, got " + std::to_string(base));
        if (n < 1)
            throw invalid_input_error("n must be positive");
        modulus_ = detail::checked_mul(base, n) - 1;
        if (modulus_ > magnitude_cap)
            throw capacity_error("modulus " + std::to_string(modulus_) + " exceeds the cap " +
                                 std::to_string(magnitude_cap));
    }

    std::uint64_t base() const { return base_; }
    std::uint64_t n() const { return n_; }
    std::uint64_t modulus() const { return modulus_; }

    void require_vertex(vertex x) const {
        if (x >= modulus_)
            throw invalid_input_error("vertex " + std::to_string(x) + " not in [0, " +
                                      std::to_string(modulus_) + ")");
    }

    friend bool operator==(graph_params const&, graph_params const&) = default;

private:
    std::uint64_t base_;
    std::uint64_t n_;
    std::uint64_t modulus_;
};

inline vertex step(graph_params const& p, vertex x) {
    p.require_vertex(x);
    return mul_mod(p.base(), x, p.modulus());
}

/// Successor in the reversed graph: multiplication by n, the inverse of B.
inline vertex reverse_step(graph_params const& p, vertex x) {
    p.require_vertex(x);
    return mul_mod(p.n(), x, p.modulus());
}

namespace detail {
inline constexpr std::uint64_t iterate_by_steps_limit = 4096;
}

/// i-fold application of `step`; equals B^i * x mod M.
inline vertex iterate(graph_params const& p, vertex x, std::uint64_t i) {
    p.require_vertex(x);
    if (i <= detail::iterate_by_steps_limit) {
        for (std::uint64_t s = 0; s < i; ++s)
            x = mul_mod(p.base(), x, p.modulus());
        return x;
    }
    return mul_mod(pow_mod(p.base(), i, p.modulus()), x, p.modulus());
}

inline std::uint64_t cycle_length_of(graph_params const& p, vertex x) {
    p.require_vertex(x);
    if (x == 0)
        return 1;
    return mult_order(p.base(), p.modulus() / std::gcd(p.modulus(), x));
}

/// [x, f(x), f^2(x), ...] up to but excluding the return to x.
inline std::vector<vertex> cycle_of(graph_params const& p, vertex x) {
    p.require_vertex(x);
    std::vector<vertex> out{x};
    for (vertex y = mul_mod(p.base(), x, p.modulus()); y != x; y = mul_mod(p.base(), y, p.modulus()))
        out.push_back(y);
    return out;
}

struct census_row {
    std::uint64_t d;
    std::uint64_t order;
    std::uint64_t phi;
    std::uint64_t cycle_count;
    std::uint64_t cycle_length;

    friend bool operator==(census_row const&, census_row const&) = default;
};

/// One row per divisor d of M, ascending. Never materializes the graph.
inline std::vector<census_row> census(graph_params const& p, std::uint64_t magnitude_cap = default_magnitude_cap) {
    std::vector<census_row> rows;
    for (auto d : divisors(p.modulus(), magnitude_cap)) {
        if (d == 1) {
            rows.push_back({1, 1, 1, 1, 1});
            continue;
        }
        auto const order = mult_order(p.base(), d, magnitude_cap);
        auto const phi = euler_phi(d, magnitude_cap);
        rows.push_back({d, order, phi, phi / order, order});
    }
    return rows;
}

/// Fully materialized graph: successor table plus canonical cycle list
/// (each cycle rotated to start at its smallest vertex, list sorted by it).
class functional_graph {
public:
    graph_params const& params() const { return params_; }
    std::uint64_t size() const { return params_.modulus(); }
    vertex successor(vertex x) const {
        params_.require_vertex(x);
        return successor_[x];
    }
    std::vector<std::vector<vertex>> const& cycles() const { return cycles_; }

    /// Index into cycles() of the cycle through x.
    std::size_t cycle_index(vertex x) const {
        params_.require_vertex(x);
        return cycle_id_[x];
    }

private:
    friend functional_graph build_graph(graph_params const&, std::uint64_t);

    explicit functional_graph(graph_params p) : params_(p) {}

    graph_params params_;
    std::vector<vertex> successor_;
    std::vector<std::size_t> cycle_id_;
    std::vector<std::vector<vertex>> cycles_;
};

inline functional_graph build_graph(graph_params const& p, std::uint64_t vertex_cap = default_vertex_cap) {
    auto const m = p.modulus();
    if (m > vertex_cap)
        throw capacity_error("graph with " + std::to_string(m) + " vertices exceeds the cap " +
                             std::to_string(vertex_cap));
    functional_graph g{p};
    g.successor_.resize(m);
    for (vertex x = 0; x < m; ++x)
        g.successor_[x] = mul_mod(p.base(), x, m);

    // Sweeping in vertex order meets each cycle first at its smallest member.
    std::vector<bool> visited(m, false);
    g.cycle_id_.assign(m, 0);
    for (vertex start = 0; start < m; ++start) {
        if (visited[start])
            continue;
        std::vector<vertex> cycle;
        for (vertex y = start; !visited[y]; y = g.successor_[y]) {
            visited[y] = true;
            g.cycle_id_[y] = g.cycles_.size();
            cycle.push_back(y);
        }
        g.cycles_.push_back(std::move(cycle));
    }
    return g;
}

}  // namespace radixgraph
