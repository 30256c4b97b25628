#include "hyperforman/poset.hpp"

#include "hyperforman/hypernet.hpp"
#include "hyperforman/kernels.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace hyperforman {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void set_bit(std::span<std::uint64_t> words, std::size_t bit)
{
    words[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

bool test_bit(std::span<const std::uint64_t> words, std::size_t bit)
{
    return (words[bit / kWordBits] >> (bit % kWordBits)) & 1u;
}

bool disjoint(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if ((a[i] & b[i]) != 0)
            return false;
    return true;
}

} // namespace

Poset Poset::from_sets(std::vector<std::string> ground_labels,
                       std::vector<std::vector<std::uint32_t>> sets)
{
    Poset p;
    p.ground_ = std::move(ground_labels);
    for (auto& s : sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty() && s.back() >= p.ground_.size())
            throw std::invalid_argument("poset element refers to an unknown ground node");
    }
    std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    p.elements_ = std::move(sets);

    const std::size_t n = p.elements_.size();
    const std::size_t ground_words = words_for(p.ground_.size());
    std::vector<std::uint64_t> members(n * ground_words, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (const std::uint32_t v : p.elements_[i])
            set_bit(std::span(members).subspan(i * ground_words, ground_words), v);
    auto member_row = [&](std::size_t i) {
        return std::span<const std::uint64_t>(members).subspan(i * ground_words, ground_words);
    };

    const auto& kern = kernels::active();
    const std::size_t order_words = words_for(n);
    std::vector<std::uint64_t> above_bits(n * order_words, 0);
    std::vector<std::uint64_t> below_bits(n * order_words, 0);
    p.above_.assign(n, {});
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t r = q + 1; r < n; ++r) {
            if (p.elements_[r].size() == p.elements_[q].size())
                continue;
            if (kern.is_subset(member_row(q), member_row(r))) {
                p.above_[q].push_back(r);
                set_bit(std::span(above_bits).subspan(q * order_words, order_words), r);
                set_bit(std::span(below_bits).subspan(r * order_words, order_words), q);
            }
        }
    }
    p.above_bits_ = std::move(above_bits);
    p.order_words_ = order_words;

    // q < r is a cover iff nothing lies strictly above q and strictly below r.
    p.upper_.assign(n, {});
    p.lower_.assign(n, {});
    for (std::size_t q = 0; q < n; ++q) {
        const auto up = std::span<const std::uint64_t>(p.above_bits_).subspan(q * order_words, order_words);
        for (const std::size_t r : p.above_[q]) {
            const auto down = std::span<const std::uint64_t>(below_bits).subspan(r * order_words, order_words);
            if (disjoint(up, down)) {
                p.covers_.emplace_back(q, r);
                p.upper_[q].push_back(r);
                p.lower_[r].push_back(q);
            }
        }
    }
    return p;
}

std::string Poset::element_label(std::size_t i) const
{
    std::string out = "{";
    const auto& e = elements_.at(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (j > 0)
            out += ',';
        out += ground_[e[j]];
    }
    return out + "}";
}

bool Poset::less(std::size_t q, std::size_t p) const
{
    if (q >= size() || p >= size())
        throw std::out_of_range("poset element index out of range");
    return test_bit(std::span<const std::uint64_t>(above_bits_).subspan(q * order_words_, order_words_), p);
}

std::size_t Poset::comparable_pair_count() const
{
    std::size_t total = 0;
    for (const auto& a : above_)
        total += a.size();
    return total;
}

Poset poset_from_hypernetwork(const Hypernetwork& h, bool include_singletons)
{
    std::vector<std::vector<std::uint32_t>> sets;
    if (include_singletons)
        for (std::uint32_t v = 0; v < h.nodes().size(); ++v)
            sets.push_back({v});
    for (std::size_t i = 0; i < h.hypervertices().size(); ++i)
        sets.push_back(h.node_set(i));
    for (const Hyperedge& e : h.hyperedges()) {
        auto joined = h.node_set(*h.hypervertex_index(e.tail));
        const auto other = h.node_set(*h.hypervertex_index(e.head));
        joined.insert(joined.end(), other.begin(), other.end());
        sets.push_back(std::move(joined));
    }
    return Poset::from_sets(h.nodes(), std::move(sets));
}

Poset face_poset(const SimplicialComplex& k)
{
    std::vector<std::vector<std::uint32_t>> sets;
    for (int d = 0; d <= k.dim(); ++d)
        for (const Simplex& s : k.faces(d))
            sets.push_back(s);
    return Poset::from_sets(k.vertex_labels(), std::move(sets));
}

RankResult rank_function(const Poset& p)
{
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    return rank_function(p, order);
}

RankResult rank_function(const Poset& p, std::span<const std::size_t> visit_order)
{
    const std::size_t n = p.size();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> position(n, unset);
    if (visit_order.size() != n)
        throw std::invalid_argument("visit order must list every element once");
    for (std::size_t i = 0; i < n; ++i) {
        if (visit_order[i] >= n || position[visit_order[i]] != unset)
            throw std::invalid_argument("visit order must list every element once");
        position[visit_order[i]] = i;
    }

    RankFunction result;
    result.rank.assign(n, unset);
    std::deque<std::size_t> queue;
    for (const std::size_t i : visit_order) {
        if (p.is_minimal(i)) {
            result.rank[i] = 0;
            queue.push_back(i);
        }
    }

    std::vector<std::size_t> ups;
    while (!queue.empty()) {
        const std::size_t q = queue.front();
        queue.pop_front();
        ups.assign(p.upper_covers(q).begin(), p.upper_covers(q).end());
        std::sort(ups.begin(), ups.end(), [&](std::size_t a, std::size_t b) { return position[a] < position[b]; });
        for (const std::size_t up : ups) {
            const std::size_t proposed = result.rank[q] + 1;
            if (result.rank[up] == unset) {
                result.rank[up] = proposed;
                queue.push_back(up);
            } else if (result.rank[up] != proposed) {
                return NotRanked{up, result.rank[up], proposed};
            }
        }
    }

    // every element sits above some minimal element, so all ranks are set
    for (const std::size_t r : result.rank)
        result.max_rank = std::max(result.max_rank, r);
    return result;
}

std::vector<std::uint64_t> level_counts(const RankFunction& r)
{
    std::vector<std::uint64_t> counts(r.rank.empty() ? 0 : r.max_rank + 1, 0);
    for (const std::size_t rank : r.rank)
        ++counts[rank];
    return counts;
}

std::variant<std::int64_t, NotRanked> chi_g(const Poset& p)
{
    auto ranked = rank_function(p);
    if (const auto* witness = std::get_if<NotRanked>(&ranked))
        return *witness;
    return alternating_sum(level_counts(std::get<RankFunction>(ranked)));
}

void for_each_chain(const Poset& p, const ChainOptions& options,
                    const std::function<void(std::span<const std::size_t>)>& visit)
{
    const std::size_t max_length = options.max_length.value_or(p.size());
    if (max_length == 0)
        return;

    // Indices form a linear extension, so extending by any element above the
    // current top keeps the chain totally ordered; ascending iteration gives
    // lexicographic output.
    std::vector<std::size_t> chain;
    std::uint64_t emitted = 0;
    auto emit = [&] {
        if (++emitted > options.cap)
            throw ChainCapExceeded(options.cap);
        visit(chain);
    };
    std::function<void()> extend = [&] {
        if (chain.size() >= max_length)
            return;
        for (const std::size_t next : p.above(chain.back())) {
            chain.push_back(next);
            emit();
            extend();
            chain.pop_back();
        }
    };
    for (std::size_t start = 0; start < p.size(); ++start) {
        chain.assign(1, start);
        emit();
        extend();
    }
}

std::vector<std::vector<std::size_t>> chains(const Poset& p, const ChainOptions& options)
{
    std::vector<std::vector<std::size_t>> out;
    for_each_chain(p, options,
                   [&](std::span<const std::size_t> c) { out.emplace_back(c.begin(), c.end()); });
    return out;
}

} // namespace hyperforman
