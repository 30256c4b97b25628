#pragma once

#include "hyperforman/complex.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperforman {

enum class InputFormat { json, text };

class HypernetError : public std::runtime_error {
public:
    enum class Kind {
        syntax,
        unknown_node,
        unknown_hypervertex,
        duplicate_id,
        hyper_loop,
        empty_hypervertex,
        duplicate_edge,
        arity,
        direction_conflict,
        unrepresentable,
    };

    HypernetError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind)
    {
    }

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

struct Hypervertex {
    std::string id;
    /// Sorted, unique node labels.
    std::vector<std::string> nodes;

    friend bool operator==(const Hypervertex&, const Hypervertex&) = default;
};

struct Hyperedge {
    std::string id;
    std::string tail;
    std::string head;
    bool directed = false;

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Hypergraph whose vertices are node sets and whose edges join pairs of
/// hypervertices. Immutable once built.
///
/// Nodes are kept sorted. Undirected hyperedges store (tail, head) with
/// tail < head by id.
class Hypernetwork {
public:
    Hypernetwork() = default;

    /// Validates and canonicalises. Nodes named by hypervertices must be
    /// listed in `nodes`. Throws HypernetError.
    static Hypernetwork build(std::vector<std::string> nodes,
                              std::vector<Hypervertex> hypervertices,
                              std::vector<Hyperedge> hyperedges, bool directed);

    const std::vector<std::string>& nodes() const { return nodes_; }
    std::span<const Hypervertex> hypervertices() const { return hypervertices_; }
    std::span<const Hyperedge> hyperedges() const { return hyperedges_; }
    bool directed() const { return directed_; }

    std::optional<std::uint32_t> node_index(std::string_view label) const;
    std::optional<std::size_t> hypervertex_index(std::string_view id) const;
    /// Node indices of a hypervertex, ascending.
    std::vector<std::uint32_t> node_set(std::size_t hypervertex) const;

    friend bool operator==(const Hypernetwork&, const Hypernetwork&) = default;

private:
    std::vector<std::string> nodes_;
    std::vector<Hypervertex> hypervertices_;
    std::vector<Hyperedge> hyperedges_;
    bool directed_ = false;
};

/// Throws HypernetError; syntax errors carry a line:column position.
Hypernetwork parse(std::string_view input, InputFormat format);

/// Inverse of parse. The text format cannot express nodes outside every
/// hypervertex, nor a directed flag that disagrees with the edge lines; such
/// networks raise HypernetError::Kind::unrepresentable.
std::string serialize(const Hypernetwork& h, InputFormat format);

/// 1-complex on the nodes: each hypervertex becomes a clique, and each
/// hyperedge V_iV_j adds every pair (u, w) with u in V_i \ V_j, w in V_j \ V_i.
SimplicialComplex clique_expansion(const Hypernetwork& h);

/// Vertex sets of the geometric model: one full simplex per hypervertex and
/// one on V_i u V_j per hyperedge.
std::vector<Simplex> geometric_simplices(const Hypernetwork& h);

/// 2-skeleton of the union of the geometric simplices.
SimplicialComplex geometric_complex(const Hypernetwork& h);

/// Euler characteristic of the full-dimensional geometric model.
std::int64_t geometric_euler_characteristic(const Hypernetwork& h,
                                            std::uint64_t cap = kDefaultChainCap);

} // namespace hyperforman
