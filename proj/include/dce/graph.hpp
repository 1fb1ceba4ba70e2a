#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dce/common.hpp"

namespace dce {

/// Simple undirected graph on vertices 0..n-1, backed by a dense bit matrix.
///
/// Rows are 64-bit words; row(u) exposes the packed neighborhood of u, which is
/// what the P3 counting and the kernelization scratch state work on.
class Graph {
public:
    using Word = std::uint64_t;

    Graph() = default;

    explicit Graph(Vertex n) : n_(n), words_(words_for(n)), bits_(std::size_t(n) * words_for(n), 0) {
        if (n < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
    }

    /// Throws InvalidGraph on self-loops, out-of-range endpoints or duplicates.
    Graph(Vertex n, std::span<const VertexPair> edges) : Graph(n) {
        for (const auto& e : edges) {
            check_pair(e.u, e.v);
            if (has_edge(e.u, e.v)) {
                throw Error(ErrorCode::InvalidGraph,
                            "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
            }
            set(e.u, e.v, true);
        }
    }

    Vertex n() const noexcept { return n_; }
    std::int64_t edge_count() const noexcept { return m_; }

    bool has_edge(Vertex u, Vertex v) const noexcept {
        return (bits_[row_offset(u) + std::size_t(v) / 64] >> (std::size_t(v) % 64)) & 1U;
    }

    std::int64_t degree(Vertex u) const noexcept {
        std::int64_t d = 0;
        for (Word w : row(u)) d += std::popcount(w);
        return d;
    }

    std::int64_t common_neighbors(Vertex u, Vertex v) const noexcept {
        auto a = row(u);
        auto b = row(v);
        std::int64_t c = 0;
        for (std::size_t i = 0; i < words_; ++i) c += std::popcount(a[i] & b[i]);
        return c;
    }

    std::span<const Word> row(Vertex u) const noexcept {
        return {bits_.data() + row_offset(u), words_};
    }

    std::size_t words_per_row() const noexcept { return words_; }

    std::vector<Vertex> neighbors(Vertex u) const {
        std::vector<Vertex> out;
        for_each_neighbor(u, [&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <class Fn>
    void for_each_neighbor(Vertex u, Fn&& fn) const {
        auto r = row(u);
        for (std::size_t i = 0; i < words_; ++i) {
            for (Word w = r[i]; w != 0; w &= w - 1) {
                fn(Vertex(i * 64 + std::size_t(std::countr_zero(w))));
            }
        }
    }

    /// Sorted edge list, u < v.
    std::vector<VertexPair> edges() const {
        std::vector<VertexPair> out;
        out.reserve(std::size_t(m_));
        for (Vertex u = 0; u < n_; ++u) {
            for_each_neighbor(u, [&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        }
        return out;
    }

    void add_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        if (!has_edge(u, v)) set(u, v, true);
    }

    void remove_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        if (has_edge(u, v)) set(u, v, false);
    }

    void toggle_edge(Vertex u, Vertex v) {
        check_pair(u, v);
        set(u, v, !has_edge(u, v));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

private:
    static std::size_t words_for(Vertex n) { return n <= 0 ? 0 : (std::size_t(n) + 63) / 64; }

    std::size_t row_offset(Vertex u) const noexcept { return std::size_t(u) * words_; }

    void check_pair(Vertex u, Vertex v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) {
            throw Error(ErrorCode::InvalidGraph,
                        "vertex out of range in {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
    }

    void set(Vertex u, Vertex v, bool on) {
        const Word bu = Word{1} << (std::size_t(v) % 64);
        const Word bv = Word{1} << (std::size_t(u) % 64);
        Word& wu = bits_[row_offset(u) + std::size_t(v) / 64];
        Word& wv = bits_[row_offset(v) + std::size_t(u) / 64];
        if (on) {
            wu |= bu;
            wv |= bv;
            ++m_;
        } else {
            wu &= ~bu;
            wv &= ~bv;
            --m_;
        }
    }

    Vertex n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> bits_;
    std::int64_t m_ = 0;
};

/// Connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const Vertex n = g.n();
    std::vector<char> seen(std::size_t(n), 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            g.for_each_neighbor(u, [&](Vertex v) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
    }
    return comps;
}

inline bool is_clique(const Graph& g, std::span<const Vertex> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

/// A graph is a cluster graph iff it has no induced P3, i.e. every component is a clique.
inline bool is_cluster_graph(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        std::int64_t deg_sum = 0;
        for (Vertex u : comp) deg_sum += g.degree(u);
        if (deg_sum != std::int64_t(comp.size()) * (std::int64_t(comp.size()) - 1)) return false;
    }
    return true;
}

}  // namespace dce
