#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hyperforman {

class Poset;

/// Strictly increasing list of vertex indices; dimension = size - 1.
using Simplex = std::vector<std::uint32_t>;

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Face counts per dimension, counts[d] = number of d-faces.
using FVector = std::vector<std::uint64_t>;

std::int64_t alternating_sum(const FVector& f);

/// Finite abstract simplicial complex, downward closed, immutable.
///
/// Vertices are 0..vertex_count()-1 and every vertex is a 0-face. Faces of
/// each dimension are kept sorted, so face indices are stable and every
/// traversal is deterministic. The edge/triangle incidence used by the
/// curvature code is indexed once at construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds a complex from an explicit face list. Every proper face of every
    /// listed simplex must also be listed (vertices are implicit).
    /// Throws std::invalid_argument on unsorted simplices, out-of-range
    /// vertices or a missing boundary face.
    static SimplicialComplex from_faces(std::vector<std::string> vertex_labels,
                                        std::vector<Simplex> faces);

    /// Downward closure of the given simplices, truncated to max_dim if set.
    static SimplicialComplex closure_of(std::vector<std::string> vertex_labels,
                                        const std::vector<Simplex>& simplices,
                                        std::optional<std::size_t> max_dim = std::nullopt);

    std::size_t vertex_count() const { return labels_.size(); }
    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    std::span<const Simplex> faces(std::size_t d) const;
    std::size_t face_count(std::size_t d) const { return faces(d).size(); }
    FVector f_vector() const;

    bool contains(const Simplex& s) const { return index_of(s).has_value(); }
    std::optional<std::size_t> index_of(const Simplex& s) const;

    const std::string& vertex_label(std::uint32_t v) const { return labels_.at(v); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    /// e.g. "a-b-c"
    std::string simplex_label(const Simplex& s) const;

    // Edge-centric queries; edges and triangles are addressed by face index.
    std::optional<std::size_t> edge_index(std::uint32_t u, std::uint32_t v) const;
    std::span<const std::size_t> triangles_of_edge(std::size_t edge) const;
    std::span<const std::size_t> edges_at(std::uint32_t v) const;
    std::size_t degree(std::uint32_t v) const { return edges_at(v).size(); }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.faces_ == b.faces_ && a.labels_ == b.labels_;
    }

private:
    void build_index();

    std::vector<std::string> labels_;
    std::vector<std::vector<Simplex>> faces_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> lookup_;
    std::vector<std::vector<std::size_t>> edge_triangles_;
    std::vector<std::vector<std::size_t>> vertex_edges_;
};

std::int64_t euler_characteristic(const SimplicialComplex& k);

/// All faces of dimension <= d.
SimplicialComplex skeleton(const SimplicialComplex& k, std::size_t d);

/// Vertex-disjoint union; labels of b are suffixed to stay distinct if needed.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Triangles having the edge as a face. Throws std::out_of_range for an
/// absent edge.
std::vector<Simplex> triangles_containing(const SimplicialComplex& k, const Simplex& edge);

/// Edges parallel to the given one: sharing a vertex or a triangle with it,
/// but not both. In a simplicial complex this means sharing exactly one
/// vertex and lying in no common triangle.
std::vector<Simplex> parallel_edges(const SimplicialComplex& k, const Simplex& edge);
std::size_t parallel_edge_count(const SimplicialComplex& k, std::size_t edge);

inline constexpr std::uint64_t kDefaultChainCap = 10'000'000;

/// Raised when a chain or nerve enumeration would exceed its configured cap.
/// Enumeration never truncates silently.
class ChainCapExceeded : public std::runtime_error {
public:
    explicit ChainCapExceeded(std::uint64_t cap);
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t cap_;
};

/// Order complex: one vertex per element, one m-simplex per chain of m+1
/// comparable elements (m <= skeleton_dim when given). Throws
/// ChainCapExceeded when more than chain_cap chains would be produced.
SimplicialComplex order_complex(const Poset& p,
                                std::optional<std::size_t> skeleton_dim = std::nullopt,
                                std::uint64_t chain_cap = kDefaultChainCap);

/// Euler characteristic of the union of full simplices on the given vertex
/// sets, without materialising their faces. Uses inclusion-exclusion over the
/// nerve: every nonempty intersection of full simplices is a full simplex and
/// contributes its sign. Throws ChainCapExceeded when the nerve has more than
/// nerve_cap simplices.
std::int64_t union_of_simplices_euler_characteristic(const std::vector<Simplex>& simplices,
                                                     std::uint64_t nerve_cap = kDefaultChainCap);

} // namespace hyperforman
