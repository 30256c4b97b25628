#include "hyperforman/curvature.hpp"

#include "hyperforman/hypernet.hpp"
#include "hyperforman/kernels.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace hyperforman {

namespace {

std::size_t require_edge(const SimplicialComplex& k, const Simplex& edge)
{
    if (edge.size() == 2)
        if (const auto e = k.index_of(edge))
            return *e;
    throw std::out_of_range("edge " + k.simplex_label(edge) + " is not in the complex");
}

std::int64_t closed_form(const SimplicialComplex& k, std::size_t e)
{
    const Simplex& edge = k.faces(1)[e];
    return 3 * static_cast<std::int64_t>(k.triangles_of_edge(e).size()) + 4 -
           static_cast<std::int64_t>(k.degree(edge[0])) - static_cast<std::int64_t>(k.degree(edge[1]));
}

std::int64_t definitional(const SimplicialComplex& k, std::size_t e)
{
    return static_cast<std::int64_t>(k.triangles_of_edge(e).size()) -
           static_cast<std::int64_t>(parallel_edge_count(k, e)) + 2;
}

} // namespace

std::int64_t forman_ricci(const SimplicialComplex& k, const Simplex& edge)
{
    return definitional(k, require_edge(k, edge));
}

std::int64_t forman_ricci_closed(const SimplicialComplex& k, const Simplex& edge)
{
    return closed_form(k, require_edge(k, edge));
}

HalfInteger r0_of_degree(std::int64_t degree)
{
    return HalfInteger::from_twice(2 + 3 * degree - 2 * degree * degree);
}

HalfInteger r0(const SimplicialComplex& k, std::uint32_t v)
{
    if (v >= k.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " is not in the complex");
    return r0_of_degree(static_cast<std::int64_t>(k.degree(v)));
}

std::int64_t r2(const SimplicialComplex& k, const Simplex& triangle)
{
    if (triangle.size() != 3 || !k.contains(triangle))
        throw std::out_of_range("triangle " + k.simplex_label(triangle) + " is not in the complex");
    constexpr std::int64_t edges_below = 3;
    return 1 + 6 * edges_below - edges_below * edges_below;
}

bool CurvatureReport::closed_form_agrees() const
{
    return std::all_of(edges.begin(), edges.end(), [](const EdgeCurvature& e) { return e.ricci == e.ricci_closed; });
}

CurvatureReport gauss_bonnet(const SimplicialComplex& input)
{
    CurvatureReport report;
    if (input.dim() > 2) {
        report.warnings.push_back("complex has dimension " + std::to_string(input.dim()) +
                                  "; curvature computed on its 2-skeleton");
        report.complex = skeleton(input, 2);
    } else {
        report.complex = input;
    }
    const SimplicialComplex& k = report.complex;
    const auto& kern = kernels::active();

    const std::size_t n_edges = k.face_count(1);
    std::vector<std::int32_t> tri(n_edges), deg_u(n_edges), deg_v(n_edges), closed(n_edges), ricci(n_edges);
    for (std::size_t e = 0; e < n_edges; ++e) {
        const Simplex& edge = k.faces(1)[e];
        tri[e] = static_cast<std::int32_t>(k.triangles_of_edge(e).size());
        deg_u[e] = static_cast<std::int32_t>(k.degree(edge[0]));
        deg_v[e] = static_cast<std::int32_t>(k.degree(edge[1]));
    }
    kern.ricci_closed(tri, deg_u, deg_v, closed);

    report.edges.reserve(n_edges);
    for (std::size_t e = 0; e < n_edges; ++e) {
        EdgeCurvature row;
        row.edge = e;
        row.triangles = tri[e];
        row.parallel = static_cast<std::int64_t>(parallel_edge_count(k, e));
        row.ricci = row.triangles - row.parallel + 2;
        row.ricci_closed = closed[e];
        ricci[e] = static_cast<std::int32_t>(row.ricci);
        report.edges.push_back(row);
    }

    std::vector<std::int32_t> degrees(k.vertex_count());
    report.r0.reserve(k.vertex_count());
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v) {
        degrees[v] = static_cast<std::int32_t>(k.degree(v));
        report.r0.push_back(r0_of_degree(degrees[v]));
    }
    for (const Simplex& t : k.faces(2))
        report.r2.push_back(r2(k, t));

    report.sum_r0 = HalfInteger::from_twice(kern.r0_twice_sum(degrees));
    report.sum_ricci = kern.sum(ricci);
    for (const auto value : report.r2)
        report.sum_r2 += value;
    report.chi = euler_characteristic(k);
    report.gb_residual = report.sum_r0 - report.sum_ricci + report.sum_r2 - report.chi;
    return report;
}

// --- directed -------------------------------------------------------------------

DirectedComplex::DirectedComplex(SimplicialComplex complex, std::vector<Orientation> orientations)
    : complex_(std::move(complex)), orientations_(std::move(orientations))
{
    if (orientations_.size() != complex_.face_count(1))
        throw std::invalid_argument("one orientation per edge is required");
    if (complex_.dim() > 2)
        throw std::invalid_argument("directed complexes are limited to dimension 2");
}

DirectedComplex DirectedComplex::from_arcs(std::vector<std::string> labels,
                                           const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs,
                                           const std::vector<Simplex>& triangles)
{
    std::set<Simplex> edges;
    for (const auto& [tail, head] : arcs) {
        if (tail == head)
            throw std::invalid_argument("arc is a loop");
        if (!edges.insert(tail < head ? Simplex{tail, head} : Simplex{head, tail}).second)
            throw std::invalid_argument("repeated or antiparallel arc");
    }
    std::vector<Simplex> faces(edges.begin(), edges.end());
    faces.insert(faces.end(), triangles.begin(), triangles.end());
    auto complex = SimplicialComplex::from_faces(std::move(labels), std::move(faces));

    std::vector<Orientation> orientations(complex.face_count(1), Orientation::none);
    for (const auto& [tail, head] : arcs)
        orientations[*complex.edge_index(tail, head)] = tail < head ? Orientation::forward : Orientation::backward;
    return DirectedComplex(std::move(complex), std::move(orientations));
}

std::uint32_t DirectedComplex::tail(std::size_t edge) const
{
    const Simplex& e = complex_.faces(1)[edge];
    switch (orientations_.at(edge)) {
    case Orientation::forward: return e[0];
    case Orientation::backward: return e[1];
    case Orientation::none: break;
    }
    throw UndirectedEdgeError("edge " + complex_.simplex_label(e) + " has no direction");
}

std::uint32_t DirectedComplex::head(std::size_t edge) const
{
    const Simplex& e = complex_.faces(1)[edge];
    return tail(edge) == e[0] ? e[1] : e[0];
}

DirectedComplex directed_complex(const Hypernetwork& h)
{
    if (!h.directed())
        throw HypernetError(HypernetError::Kind::direction_conflict, "hypernetwork is not directed");

    std::vector<std::string> labels;
    for (const Hypervertex& hv : h.hypervertices())
        labels.push_back(hv.id);

    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
    std::set<Simplex> edges;
    for (const Hyperedge& e : h.hyperedges()) {
        const auto tail = static_cast<std::uint32_t>(*h.hypervertex_index(e.tail));
        const auto head = static_cast<std::uint32_t>(*h.hypervertex_index(e.head));
        if (!edges.insert(tail < head ? Simplex{tail, head} : Simplex{head, tail}).second)
            throw HypernetError(HypernetError::Kind::direction_conflict,
                                "hyperedge '" + e.id + "' is antiparallel to another hyperedge");
        arcs.emplace_back(tail, head);
    }

    // fill every 3-clique of the underlying graph
    std::vector<Simplex> triangles;
    for (const Simplex& a : edges) {
        for (const Simplex& b : edges) {
            if (b[0] != a[0] || b[1] <= a[1])
                continue;
            if (edges.contains(Simplex{a[1], b[1]}))
                triangles.push_back({a[0], a[1], b[1]});
        }
    }
    return DirectedComplex::from_arcs(std::move(labels), arcs, triangles);
}

std::size_t io_degree(const DirectedComplex& d, std::uint32_t v, DegreeMode mode)
{
    const auto& k = d.complex();
    if (v >= k.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(v) + " is not in the complex");
    std::size_t count = 0;
    for (const std::size_t e : k.edges_at(v)) {
        const std::uint32_t end = mode == DegreeMode::out ? d.tail(e) : d.head(e);
        if (end == v)
            ++count;
    }
    return count;
}

std::vector<std::size_t> directed_triangles(const DirectedComplex& d, TriangleMode mode)
{
    const auto& k = d.complex();
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < k.face_count(2); ++t) {
        const Simplex& tri = k.faces(2)[t];
        int out_degree[3] = {0, 0, 0};
        for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            const std::size_t e = *k.edge_index(tri[i], tri[j]);
            ++out_degree[d.tail(e) == tri[i] ? i : j];
        }
        // transitive: out-degrees {2,1,0} within the triangle; cyclic: {1,1,1}
        std::sort(std::begin(out_degree), std::end(out_degree));
        const bool cyclic = out_degree[0] == 1;
        if (cyclic == (mode == TriangleMode::cyclic))
            out.push_back(t);
    }
    return out;
}

HalfInteger chi_directed_formula(const DirectedComplex& d, const DirectedConfig& cfg)
{
    const auto& k = d.complex();
    const auto& kern = kernels::active();

    std::vector<std::int32_t> degrees(k.vertex_count());
    for (std::uint32_t v = 0; v < k.vertex_count(); ++v)
        degrees[v] = static_cast<std::int32_t>(io_degree(d, v, cfg.degree_mode));

    const auto chosen = directed_triangles(d, cfg.triangle_mode);
    std::vector<std::int32_t> chosen_above(k.face_count(1), 0);
    for (const std::size_t t : chosen) {
        const Simplex& tri = k.faces(2)[t];
        for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
            ++chosen_above[*k.edge_index(tri[i], tri[j])];
    }

    HalfInteger total = HalfInteger::from_twice(kern.r0_twice_sum(degrees));
    for (std::size_t e = 0; e < k.face_count(1); ++e) {
        const Simplex& edge = k.faces(1)[e];
        total -= 4 + 3 * std::int64_t{chosen_above[e]} - degrees[edge[0]] - degrees[edge[1]];
    }
    total += 28 * static_cast<std::int64_t>(chosen.size());
    return total;
}

std::int64_t chi_directed_count(const DirectedComplex& d, const DirectedConfig& cfg)
{
    const auto& k = d.complex();
    for (std::size_t e = 0; e < k.face_count(1); ++e)
        (void)d.tail(e); // every edge must carry a direction
    return static_cast<std::int64_t>(k.face_count(0)) - static_cast<std::int64_t>(k.face_count(1)) +
           static_cast<std::int64_t>(directed_triangles(d, cfg.triangle_mode).size());
}

// --- filtration -----------------------------------------------------------------

std::vector<FiltrationStep> curvature_filtration(const SimplicialComplex& input)
{
    const SimplicialComplex k = input.dim() > 2 ? skeleton(input, 2) : input;
    const std::size_t n_edges = k.face_count(1);
    std::vector<std::int64_t> ricci(n_edges);
    for (std::size_t e = 0; e < n_edges; ++e)
        ricci[e] = definitional(k, e);

    std::vector<std::int64_t> thresholds = ricci;
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

    // a triangle enters once its latest edge does
    std::vector<std::int64_t> triangle_birth;
    for (const Simplex& t : k.faces(2)) {
        std::int64_t birth = std::numeric_limits<std::int64_t>::min();
        for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
            birth = std::max(birth, ricci[*k.edge_index(t[i], t[j])]);
        triangle_birth.push_back(birth);
    }

    std::vector<FiltrationStep> steps;
    for (const std::int64_t tau : thresholds) {
        FiltrationStep step;
        step.threshold = tau;
        const auto edges = std::count_if(ricci.begin(), ricci.end(), [&](auto r) { return r <= tau; });
        const auto triangles =
            std::count_if(triangle_birth.begin(), triangle_birth.end(), [&](auto b) { return b <= tau; });
        step.f_vector = {k.face_count(0), static_cast<std::uint64_t>(edges), static_cast<std::uint64_t>(triangles)};
        step.chi = alternating_sum(step.f_vector);
        steps.push_back(std::move(step));
    }
    return steps;
}

} // namespace hyperforman
