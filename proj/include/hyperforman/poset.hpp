#pragma once

#include "hyperforman/complex.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hyperforman {

class Hypernetwork;

/// (lower, upper): upper covers lower.
using Cover = std::pair<std::size_t, std::size_t>;

/// Finite family of distinct node sets ordered by strict inclusion.
///
/// Elements are indexed by (cardinality, lexicographic node indices), which is
/// a linear extension of the order: q < p implies index(q) < index(p).
class Poset {
public:
    Poset() = default;

    /// Deduplicates and sorts the sets, then computes all comparabilities and
    /// their transitive reduction. Set members index into ground_labels.
    static Poset from_sets(std::vector<std::string> ground_labels,
                           std::vector<std::vector<std::uint32_t>> sets);

    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

    std::span<const std::uint32_t> element(std::size_t i) const { return elements_.at(i); }
    /// "{a,b}", "{}" for the empty set.
    std::string element_label(std::size_t i) const;
    const std::vector<std::string>& ground() const { return ground_; }

    /// Strict inclusion.
    bool less(std::size_t q, std::size_t p) const;
    /// Elements strictly above i, ascending.
    std::span<const std::size_t> above(std::size_t i) const { return above_.at(i); }

    std::span<const Cover> covers() const { return covers_; }
    std::span<const std::size_t> upper_covers(std::size_t i) const { return upper_.at(i); }
    std::span<const std::size_t> lower_covers(std::size_t i) const { return lower_.at(i); }
    bool is_minimal(std::size_t i) const { return lower_.at(i).empty(); }

    std::size_t comparable_pair_count() const;

private:
    std::vector<std::string> ground_;
    std::vector<std::vector<std::uint32_t>> elements_;
    std::vector<std::vector<std::size_t>> above_;
    std::vector<std::uint64_t> above_bits_; // row i: bitset of elements above i
    std::size_t order_words_ = 0;
    std::vector<std::vector<std::size_t>> upper_;
    std::vector<std::vector<std::size_t>> lower_;
    std::vector<Cover> covers_;
};

/// Elements: every hypervertex node set, every union V_i u V_j over the
/// hyperedges and, if include_singletons, every {v}. Equal sets collapse.
Poset poset_from_hypernetwork(const Hypernetwork& h, bool include_singletons = true);

/// Faces of k ordered by inclusion; ranked by dimension.
Poset face_poset(const SimplicialComplex& k);

struct RankFunction {
    std::vector<std::size_t> rank;
    std::size_t max_rank = 0;
};

/// Witness that no rank function exists: propagation reached `element` with
/// two different values.
struct NotRanked {
    std::size_t element = 0;
    std::size_t first_rank = 0;
    std::size_t second_rank = 0;
};

using RankResult = std::variant<RankFunction, NotRanked>;

/// Propagates 0 from the minimal elements up the covers. The result does not
/// depend on the propagation order; the overload taking visit_order (a
/// permutation of the element indices) exists to let that be checked.
RankResult rank_function(const Poset& p);
RankResult rank_function(const Poset& p, std::span<const std::size_t> visit_order);

/// counts[j] = number of elements of rank j.
std::vector<std::uint64_t> level_counts(const RankFunction& r);

/// Alternating sum of the level counts, or the NotRanked witness.
std::variant<std::int64_t, NotRanked> chi_g(const Poset& p);

struct ChainOptions {
    /// Maximum number of elements per chain; unbounded when empty.
    std::optional<std::size_t> max_length;
    std::uint64_t cap = kDefaultChainCap;
};

/// Visits every chain (totally ordered subset, size >= 1) exactly once as an
/// ascending index list, in lexicographic order. Throws ChainCapExceeded
/// before emitting chain number cap + 1.
void for_each_chain(const Poset& p, const ChainOptions& options,
                    const std::function<void(std::span<const std::size_t>)>& visit);

std::vector<std::vector<std::size_t>> chains(const Poset& p, const ChainOptions& options = {});

} // namespace hyperforman
