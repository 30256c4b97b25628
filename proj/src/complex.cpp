#include "hyperforman/complex.hpp"

#include "hyperforman/poset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace hyperforman {

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept
{
    // FNV-1a over the vertex indices
    std::size_t h = 1469598103934665603ull;
    for (const std::uint32_t v : s) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

std::int64_t alternating_sum(const FVector& f)
{
    std::int64_t chi = 0;
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(f[d]);
    return chi;
}

ChainCapExceeded::ChainCapExceeded(std::uint64_t cap)
    : std::runtime_error("chain cap exceeded: more than " + std::to_string(cap) + " chains"),
      cap_(cap)
{
}

namespace {

bool strictly_increasing(const Simplex& s)
{
    return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

// Calls visit(subset) for every subset of s with 1 <= size <= max_size.
void for_each_subset(const Simplex& s, std::size_t max_size,
                     const std::function<void(const Simplex&)>& visit)
{
    Simplex current;
    std::function<void(std::size_t)> recurse = [&](std::size_t start) {
        for (std::size_t i = start; i < s.size(); ++i) {
            current.push_back(s[i]);
            visit(current);
            if (current.size() < max_size)
                recurse(i + 1);
            current.pop_back();
        }
    };
    recurse(0);
}

} // namespace

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_labels,
                                                std::vector<Simplex> faces)
{
    SimplicialComplex k;
    k.labels_ = std::move(vertex_labels);
    const auto n = k.labels_.size();

    std::size_t top = n == 0 ? 0 : 1;
    for (const Simplex& s : faces) {
        if (s.empty())
            throw std::invalid_argument("empty simplex");
        if (!strictly_increasing(s))
            throw std::invalid_argument("simplex vertices must be strictly increasing");
        if (s.back() >= n)
            throw std::invalid_argument("simplex vertex out of range");
        top = std::max(top, s.size());
    }

    k.faces_.assign(top, {});
    for (std::uint32_t v = 0; v < n; ++v)
        k.faces_[0].push_back({v});
    for (Simplex& s : faces)
        if (s.size() > 1)
            k.faces_[s.size() - 1].push_back(std::move(s));
    for (auto& layer : k.faces_) {
        std::sort(layer.begin(), layer.end());
        layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
    }
    while (!k.faces_.empty() && k.faces_.back().empty())
        k.faces_.pop_back();

    k.build_index();

    for (std::size_t d = 2; d < k.faces_.size(); ++d) {
        for (const Simplex& s : k.faces_[d]) {
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex facet;
                facet.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop)
                        facet.push_back(s[i]);
                if (!k.lookup_[d - 1].contains(facet))
                    throw std::invalid_argument("not downward closed: " + k.simplex_label(facet) +
                                                " missing below " + k.simplex_label(s));
            }
        }
    }
    return k;
}

SimplicialComplex SimplicialComplex::closure_of(std::vector<std::string> vertex_labels,
                                                const std::vector<Simplex>& simplices,
                                                std::optional<std::size_t> max_dim)
{
    std::unordered_set<Simplex, SimplexHash> all;
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        const std::size_t max_size = max_dim ? *max_dim + 1 : s.size();
        for_each_subset(s, max_size, [&](const Simplex& face) { all.insert(face); });
    }
    return from_faces(std::move(vertex_labels), std::vector<Simplex>(all.begin(), all.end()));
}

void SimplicialComplex::build_index()
{
    lookup_.assign(faces_.size(), {});
    for (std::size_t d = 0; d < faces_.size(); ++d) {
        lookup_[d].reserve(faces_[d].size());
        for (std::size_t i = 0; i < faces_[d].size(); ++i)
            lookup_[d].emplace(faces_[d][i], i);
    }

    vertex_edges_.assign(labels_.size(), {});
    edge_triangles_.assign(face_count(1), {});
    for (std::size_t e = 0; e < face_count(1); ++e) {
        vertex_edges_[faces_[1][e][0]].push_back(e);
        vertex_edges_[faces_[1][e][1]].push_back(e);
    }
    for (std::size_t t = 0; t < face_count(2); ++t) {
        const Simplex& tri = faces_[2][t];
        for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
            if (const auto e = edge_index(tri[i], tri[j]))
                edge_triangles_[*e].push_back(t);
        }
    }
}

std::span<const Simplex> SimplicialComplex::faces(std::size_t d) const
{
    if (d >= faces_.size())
        return {};
    return faces_[d];
}

FVector SimplicialComplex::f_vector() const
{
    FVector f;
    for (const auto& layer : faces_)
        f.push_back(layer.size());
    return f;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const
{
    if (s.empty() || s.size() > lookup_.size())
        return std::nullopt;
    const auto& layer = lookup_[s.size() - 1];
    if (const auto it = layer.find(s); it != layer.end())
        return it->second;
    return std::nullopt;
}

std::string SimplicialComplex::simplex_label(const Simplex& s) const
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0)
            out += '-';
        out += s[i] < labels_.size() ? labels_[s[i]] : std::to_string(s[i]);
    }
    return out;
}

std::optional<std::size_t> SimplicialComplex::edge_index(std::uint32_t u, std::uint32_t v) const
{
    if (u > v)
        std::swap(u, v);
    return index_of(Simplex{u, v});
}

std::span<const std::size_t> SimplicialComplex::triangles_of_edge(std::size_t edge) const
{
    return edge_triangles_.at(edge);
}

std::span<const std::size_t> SimplicialComplex::edges_at(std::uint32_t v) const
{
    return vertex_edges_.at(v);
}

std::int64_t euler_characteristic(const SimplicialComplex& k) { return alternating_sum(k.f_vector()); }

SimplicialComplex skeleton(const SimplicialComplex& k, std::size_t d)
{
    std::vector<Simplex> faces;
    for (std::size_t i = 1; i <= d && static_cast<int>(i) <= k.dim(); ++i)
        for (const Simplex& s : k.faces(i))
            faces.push_back(s);
    return SimplicialComplex::from_faces(k.vertex_labels(), std::move(faces));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<std::string> labels = a.vertex_labels();
    std::unordered_set<std::string> taken(labels.begin(), labels.end());
    for (std::string label : b.vertex_labels()) {
        while (taken.contains(label))
            label += '\'';
        taken.insert(label);
        labels.push_back(std::move(label));
    }

    const auto offset = static_cast<std::uint32_t>(a.vertex_count());
    std::vector<Simplex> faces;
    for (int d = 1; d <= a.dim(); ++d)
        for (const Simplex& s : a.faces(d))
            faces.push_back(s);
    for (int d = 1; d <= b.dim(); ++d) {
        for (Simplex s : b.faces(d)) {
            for (auto& v : s)
                v += offset;
            faces.push_back(std::move(s));
        }
    }
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

namespace {

std::size_t require_edge(const SimplicialComplex& k, const Simplex& edge)
{
    if (edge.size() == 2)
        if (const auto e = k.index_of(edge))
            return *e;
    throw std::out_of_range("edge " + k.simplex_label(edge) + " is not in the complex");
}

std::uint32_t other_end(const Simplex& edge, std::uint32_t v) { return edge[0] == v ? edge[1] : edge[0]; }

// Edges sharing exactly one vertex with e are parallel unless the three
// vertices span a triangle (a common parent as well as a common child).
template <typename Visit>
void visit_parallel(const SimplicialComplex& k, std::size_t e, Visit&& visit)
{
    const Simplex& edge = k.faces(1)[e];
    for (const std::uint32_t shared : edge) {
        for (const std::size_t f : k.edges_at(shared)) {
            if (f == e)
                continue;
            Simplex tri{edge[0], edge[1], other_end(k.faces(1)[f], shared)};
            std::sort(tri.begin(), tri.end());
            if (!k.contains(tri))
                visit(f);
        }
    }
}

} // namespace

std::vector<Simplex> triangles_containing(const SimplicialComplex& k, const Simplex& edge)
{
    const std::size_t e = require_edge(k, edge);
    std::vector<Simplex> out;
    for (const std::size_t t : k.triangles_of_edge(e))
        out.push_back(k.faces(2)[t]);
    return out;
}

std::vector<Simplex> parallel_edges(const SimplicialComplex& k, const Simplex& edge)
{
    const std::size_t e = require_edge(k, edge);
    std::vector<Simplex> out;
    visit_parallel(k, e, [&](std::size_t f) { out.push_back(k.faces(1)[f]); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t parallel_edge_count(const SimplicialComplex& k, std::size_t edge)
{
    std::size_t count = 0;
    visit_parallel(k, edge, [&](std::size_t) { ++count; });
    return count;
}

SimplicialComplex order_complex(const Poset& p, std::optional<std::size_t> skeleton_dim,
                                std::uint64_t chain_cap)
{
    ChainOptions options;
    if (skeleton_dim)
        options.max_length = *skeleton_dim + 1;
    options.cap = chain_cap;

    std::vector<Simplex> faces;
    for_each_chain(p, options, [&](std::span<const std::size_t> chain) {
        if (chain.size() > 1)
            faces.emplace_back(chain.begin(), chain.end());
    });

    std::vector<std::string> labels;
    labels.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        labels.push_back(p.element_label(i));
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

namespace {

Simplex intersect(const Simplex& a, const Simplex& b)
{
    Simplex out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::int64_t enumerate_union_faces(const std::vector<Simplex>& maximal)
{
    std::unordered_set<Simplex, SimplexHash> faces;
    for (const Simplex& s : maximal)
        for_each_subset(s, s.size(), [&](const Simplex& f) { faces.insert(f); });
    std::int64_t chi = 0;
    for (const Simplex& f : faces)
        chi += f.size() % 2 == 1 ? 1 : -1;
    return chi;
}

} // namespace

std::int64_t union_of_simplices_euler_characteristic(const std::vector<Simplex>& simplices,
                                                     std::uint64_t nerve_cap)
{
    std::vector<Simplex> sets;
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty())
            sets.push_back(std::move(s));
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    // Only maximal simplices matter; a contained simplex adds no faces.
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const bool contained = std::any_of(sets.begin(), sets.end(), [&](const Simplex& other) {
            return other.size() > sets[i].size() &&
                   std::includes(other.begin(), other.end(), sets[i].begin(), sets[i].end());
        });
        if (!contained)
            maximal.push_back(sets[i]);
    }

    // chi(union) = sum over nonempty index sets S with nonempty intersection of
    // (-1)^(|S|+1) * chi(full simplex) where chi(full simplex) = 1.
    std::uint64_t visited = 0;
    std::int64_t chi = 0;
    bool overflow = false;
    std::function<void(std::size_t, const Simplex&, std::size_t)> recurse =
        [&](std::size_t start, const Simplex& common, std::size_t depth) {
            for (std::size_t j = start; j < maximal.size() && !overflow; ++j) {
                Simplex next = depth == 0 ? maximal[j] : intersect(common, maximal[j]);
                if (next.empty())
                    continue;
                if (++visited > nerve_cap) {
                    overflow = true;
                    return;
                }
                chi += depth % 2 == 0 ? 1 : -1;
                recurse(j + 1, next, depth + 1);
            }
        };
    recurse(0, {}, 0);
    if (!overflow)
        return chi;

    // Dense overlaps: fall back to listing faces when that is affordable.
    std::uint64_t face_budget = 0;
    for (const Simplex& s : maximal) {
        if (s.size() >= 63)
            throw ChainCapExceeded(nerve_cap);
        face_budget += (std::uint64_t{1} << s.size()) - 1;
        if (face_budget > nerve_cap)
            throw ChainCapExceeded(nerve_cap);
    }
    return enumerate_union_faces(maximal);
}

} // namespace hyperforman
