#include "lulu/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace lulu {

namespace {

/// Row-echelon basis of a rational span, supporting cheap membership tests.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }

    bool contains(std::vector<Rational> v) const
    {
        reduce(v);
        for (const auto& c : v)
            if (c != 0) return false;
        return true;
    }

    /// Add a vector; returns false if it was already in the span.
    bool add(std::vector<Rational> v)
    {
        reduce(v);
        std::size_t p = 0;
        while (p < dim_ && v[p] == 0) ++p;
        if (p == dim_) return false;
        Rational inv = Rational(1) / v[p];
        for (auto& c : v) c *= inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    void reduce(std::vector<Rational>& v) const
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Rational& f = v[pivots_[r]];
            if (f == 0) continue;
            Rational c = f;
            for (std::size_t j = pivots_[r]; j < dim_; ++j)
                v[j] -= c * rows_[r][j];
        }
    }

    std::size_t dim_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

std::vector<Rational> to_rational(const std::vector<int>& v)
{
    std::vector<Rational> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = v[i];
    return r;
}

} // namespace

Arrangement coxeter_arrangement(RootSystemType t)
{
    RootDatum d = build_root_datum(t);
    Arrangement arr;
    arr.type = t;
    arr.ambient_dim = d.positive_roots.front().coords.size();
    for (const Root& r : d.positive_roots)
        arr.normals.push_back(r.coords);
    if (arr.size() > 62)
        throw std::invalid_argument("coxeter_arrangement: too many hyperplanes for bitmask flats");
    return arr;
}

std::vector<Flat> flats(const Arrangement& arr)
{
    const std::size_t D = arr.size();
    const int n = arr.rank();

    auto closure = [&](const Span& s) {
        std::uint64_t mask = 0;
        for (std::size_t h = 0; h < D; ++h)
            if (s.contains(to_rational(arr.normals[h])))
                mask |= 1ull << h;
        return mask;
    };

    // level-wise: flats of rank k+1 are closures of (flat of rank k) + one
    // hyperplane outside it
    std::map<std::uint64_t, Span> level;
    std::vector<Flat> out;
    for (std::size_t h = 0; h < D; ++h) {
        Span s(arr.ambient_dim);
        s.add(to_rational(arr.normals[h]));
        level.emplace(closure(s), std::move(s));
    }
    for (int k = 1; k <= n - 1; ++k) {
        for (const auto& [mask, span] : level)
            out.push_back(Flat{mask, k});
        if (k == n - 1) break;
        std::map<std::uint64_t, Span> next;
        for (const auto& [mask, span] : level)
            for (std::size_t h = 0; h < D; ++h) {
                if (mask & (1ull << h)) continue;
                Span s = span;
                s.add(to_rational(arr.normals[h]));
                std::uint64_t m = closure(s);
                next.emplace(m, std::move(s));
            }
        level = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
        return a.rank != b.rank ? a.rank < b.rank : a.members < b.members;
    });
    return out;
}

NerveComplex nerve(const Arrangement& arr)
{
    std::vector<Flat> fl = flats(arr);
    NerveComplex c;
    c.vertex_count = arr.size();
    for (std::size_t i = 0; i < fl.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < fl.size() && maximal; ++j)
            if (i != j && (fl[i].members & ~fl[j].members) == 0 && fl[i].members != fl[j].members)
                maximal = false;
        if (maximal)
            c.facets.push_back(fl[i].members);
    }
    std::sort(c.facets.begin(), c.facets.end());
    c.facets.erase(std::unique(c.facets.begin(), c.facets.end()), c.facets.end());
    return c;
}

int sr_dimension(const NerveComplex& c)
{
    int best = 0;
    for (std::uint64_t f : c.facets)
        best = std::max(best, __builtin_popcountll(f));
    return best;
}

int sr_codim(const Arrangement& arr, const NerveComplex& c)
{
    return static_cast<int>(arr.size()) - sr_dimension(c);
}

MonomialIdeal sr_ideal(const Arrangement& arr)
{
    const std::size_t D = arr.size();
    const int n = arr.rank();

    MonomialIdeal ideal(D);
    // grow independent subsets one hyperplane at a time, indices increasing
    struct Node {
        Span span;
        std::vector<int> picked;
    };
    std::vector<Node> stack;
    stack.push_back(Node{Span(arr.ambient_dim), {}});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        if (static_cast<int>(node.picked.size()) == n) {
            std::vector<int> e(D, 0);
            for (int h : node.picked) e[h] = 1;
            ideal.insert(Monomial(std::move(e)));
            continue;
        }
        std::size_t start = node.picked.empty() ? 0 : static_cast<std::size_t>(node.picked.back()) + 1;
        for (std::size_t h = start; h < D; ++h) {
            Node child{node.span, node.picked};
            if (!child.span.add(to_rational(arr.normals[h]))) continue;
            child.picked.push_back(static_cast<int>(h));
            stack.push_back(std::move(child));
        }
    }
    return ideal;
}

std::vector<std::uint64_t> minimal_non_faces(const Arrangement& arr, const NerveComplex& c)
{
    const std::size_t D = arr.size();
    const int n = arr.rank();
    std::vector<std::uint64_t> out;
    // subsets in colex order by increasing size; a minimal non-face is a
    // non-face all of whose maximal proper subsets are faces
    std::vector<std::uint64_t> current{0};
    for (int size = 1; size <= n + 1; ++size) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t mask : current) {
            std::size_t lowest_free = 0;
            if (mask != 0)
                lowest_free = 64 - static_cast<std::size_t>(__builtin_clzll(mask));
            for (std::size_t h = lowest_free; h < D; ++h)
                next.push_back(mask | (1ull << h));
        }
        for (std::uint64_t mask : next) {
            if (c.is_face(mask)) continue;
            bool minimal = true;
            for (std::size_t h = 0; h < D && minimal; ++h)
                if ((mask & (1ull << h)) && !c.is_face(mask & ~(1ull << h)))
                    minimal = false;
            if (minimal)
                out.push_back(mask);
        }
        current = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void partitions_rec(std::vector<int> remaining,
                    std::vector<std::vector<int>>& blocks,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit)
{
    if (remaining.empty()) {
        emit(blocks);
        return;
    }
    // first remaining element anchors its block, avoiding duplicates
    int head = remaining.front();
    std::vector<int> rest(remaining.begin() + 1, remaining.end());
    const std::size_t k = rest.size();
    for (std::uint64_t pick = 0; pick < (1ull << k); ++pick) {
        std::vector<int> block{head}, left;
        for (std::size_t i = 0; i < k; ++i)
            ((pick >> i) & 1 ? block : left).push_back(rest[i]);
        blocks.push_back(std::move(block));
        partitions_rec(left, blocks, emit);
        blocks.pop_back();
    }
}

} // namespace

SignedGraphAudit signed_graph_audit(RootSystemType t)
{
    if (t.family == RootFamily::C)
        t.family = RootFamily::B;   // isomorphic lattices
    const int n = t.rank;
    const int vertices = (t.family == RootFamily::A) ? n + 1 : n;

    SignedGraphAudit audit;

    auto consider = [&](int rank, std::size_t edges, std::size_t multiplicity) {
        if (rank < 1 || rank > n - 1) return;
        audit.admissible_count += multiplicity;
        audit.max_edge_count = std::max(audit.max_edge_count, edges);
    };

    auto handle_partition = [&](const std::vector<std::vector<int>>& blocks,
                                std::size_t unbalanced) {
        int rank = static_cast<int>(unbalanced);
        std::size_t edges = 0, mult = 1;
        if (t.family == RootFamily::B)
            edges += unbalanced * unbalanced;
        else if (t.family == RootFamily::D)
            edges += unbalanced * (unbalanced - 1);
        for (const auto& b : blocks) {
            const std::size_t s = b.size();
            rank += static_cast<int>(s) - 1;
            edges += s * (s - 1) / 2;
            if (t.family != RootFamily::A && s >= 2)
                mult <<= (s - 1);   // bipartitions of a balanced block, up to swap
        }
        consider(rank, edges, mult);
    };

    std::vector<int> all(vertices);
    for (int i = 0; i < vertices; ++i) all[i] = i;

    if (t.family == RootFamily::A) {
        std::vector<std::vector<int>> blocks;
        partitions_rec(all, blocks, [&](const std::vector<std::vector<int>>& b) {
            handle_partition(b, 0);
        });
    } else {
        // choose the unbalanced component S, then partition the rest
        for (std::uint64_t s_mask = 0; s_mask < (1ull << vertices); ++s_mask) {
            std::size_t s = static_cast<std::size_t>(__builtin_popcountll(s_mask));
            if (t.family == RootFamily::D && s == 1) continue;
            std::vector<int> rest;
            for (int i = 0; i < vertices; ++i)
                if (!(s_mask & (1ull << i))) rest.push_back(i);
            std::vector<std::vector<int>> blocks;
            partitions_rec(rest, blocks, [&](const std::vector<std::vector<int>>& b) {
                handle_partition(b, s);
            });
        }
    }

    Arrangement arr = coxeter_arrangement(t);
    audit.flat_count = flats(arr).size();
    audit.sr_dim = sr_dimension(nerve(arr));
    audit.counts_agree = audit.admissible_count == audit.flat_count;
    audit.dims_agree = audit.max_edge_count == static_cast<std::size_t>(audit.sr_dim);
    return audit;
}

} // namespace lulu
