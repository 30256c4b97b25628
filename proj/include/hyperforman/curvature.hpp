#pragma once

#include "hyperforman/complex.hpp"
#include "hyperforman/half_integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperforman {

class Hypernetwork;

/// Combinatorial Forman Ricci curvature of an edge:
/// #{triangles above e} - #{edges parallel to e} + 2.
/// Faces above dimension 2 play no part.
std::int64_t forman_ricci(const SimplicialComplex& k, const Simplex& edge);

/// Same quantity from local counts: 3*#{triangles above e} + 4 - deg(u) - deg(v).
std::int64_t forman_ricci_closed(const SimplicialComplex& k, const Simplex& edge);

/// Vertex term 1 + (3/2)deg(v) - deg(v)^2, deg counted in edges.
HalfInteger r0(const SimplicialComplex& k, std::uint32_t v);
HalfInteger r0_of_degree(std::int64_t degree);

/// Triangle term 1 + 6*B - B^2 with B = 3 edges below the triangle, i.e. 10.
std::int64_t r2(const SimplicialComplex& k, const Simplex& triangle);

/// Uniform statement of the triangle term, reported alongside results.
inline constexpr const char* kR2Convention =
    "R2(t) = 1 + 6*B2(t) - B2(t)^2 with B2(t) = 3 edges below t, so R2 = 10 for every "
    "triangle; this is the value that closes the Gauss-Bonnet sum (24 does not)";

struct EdgeCurvature {
    std::size_t edge = 0; ///< face index in faces(1)
    std::int64_t triangles = 0;
    std::int64_t parallel = 0;
    std::int64_t ricci = 0;        ///< from the triangle/parallel counts
    std::int64_t ricci_closed = 0; ///< from the degree closed form
};

/// Curvature terms of a complex of dimension <= 2 together with the
/// Gauss-Bonnet balance sum_r0 - sum_ricci + sum_r2 - chi.
struct CurvatureReport {
    SimplicialComplex complex; ///< the complex the terms refer to
    std::vector<EdgeCurvature> edges;
    std::vector<HalfInteger> r0;   ///< per vertex
    std::vector<std::int64_t> r2;  ///< per triangle
    HalfInteger sum_r0;
    std::int64_t sum_ricci = 0;
    std::int64_t sum_r2 = 0;
    std::int64_t chi = 0;
    HalfInteger gb_residual;
    std::vector<std::string> warnings;

    bool closed_form_agrees() const;
};

/// Complexes above dimension 2 are replaced by their 2-skeleton and a warning
/// is recorded in the report.
CurvatureReport gauss_bonnet(const SimplicialComplex& k);

// --- directed variants ------------------------------------------------------

enum class DegreeMode { in, out };
enum class TriangleMode { transitive, cyclic };

struct DirectedConfig {
    DegreeMode degree_mode = DegreeMode::out;
    TriangleMode triangle_mode = TriangleMode::transitive;
};

class UndirectedEdgeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simplicial complex of dimension <= 2 whose edges carry orientations.
class DirectedComplex {
public:
    enum class Orientation : std::uint8_t { none, forward, backward };

    DirectedComplex() = default;

    /// orientations[i] refers to faces(1)[i] = {u < v}: forward means u -> v.
    DirectedComplex(SimplicialComplex complex, std::vector<Orientation> orientations);

    /// Vertices, arcs tail -> head, and the triangles to include as 2-faces
    /// (their edges must be arcs). Throws std::invalid_argument on
    /// antiparallel or repeated arcs.
    static DirectedComplex from_arcs(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs,
                                     const std::vector<Simplex>& triangles);

    const SimplicialComplex& complex() const { return complex_; }
    Orientation orientation(std::size_t edge) const { return orientations_.at(edge); }
    /// Throws UndirectedEdgeError if the edge carries no direction.
    std::uint32_t tail(std::size_t edge) const;
    std::uint32_t head(std::size_t edge) const;

private:
    SimplicialComplex complex_;
    std::vector<Orientation> orientations_;
};

/// Directed complex of a directed hypernetwork: one vertex per hypervertex,
/// one arc per hyperedge, and every triangle of the underlying graph filled
/// in. Throws HypernetError for undirected input or antiparallel hyperedges.
DirectedComplex directed_complex(const Hypernetwork& h);

/// Throws UndirectedEdgeError when an incident edge has no direction.
std::size_t io_degree(const DirectedComplex& d, std::uint32_t v, DegreeMode mode);

/// Triangle face indices whose edges orient as u->v, v->w, u->w (transitive)
/// or as a directed 3-cycle (cyclic).
std::vector<std::size_t> directed_triangles(const DirectedComplex& d, TriangleMode mode);

/// Directed Euler characteristic in closed form:
///   sum_v (1 + (3/2)deg(v) - deg(v)^2)
/// - sum_e (4 + 3*#{chosen triangles above e} - sum_{v<e} deg(v))
/// + 28*#{chosen triangles},
/// with deg the in- or out-degree. Evaluated exactly as written.
HalfInteger chi_directed_formula(const DirectedComplex& d, const DirectedConfig& cfg);

/// F0 - F1 + #{chosen triangles}.
std::int64_t chi_directed_count(const DirectedComplex& d, const DirectedConfig& cfg);

// --- filtration -------------------------------------------------------------

struct FiltrationStep {
    std::int64_t threshold = 0;
    FVector f_vector; ///< always (f0, f1, f2)
    std::int64_t chi = 0;
};

/// Sublevel filtration by edge curvature: at each distinct Ricci value t, keep
/// every vertex, the edges with Ricci <= t, and the triangles whose three
/// edges are kept.
std::vector<FiltrationStep> curvature_filtration(const SimplicialComplex& k);

} // namespace hyperforman
