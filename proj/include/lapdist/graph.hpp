#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "lapdist/errors.hpp"

namespace lapdist {

// Immutable simple undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are kept sorted; the edge list stores each edge once as
// (min, max) in lexicographic order. Disconnected graphs are representable;
// operations that need connectivity say so.
class Graph {
  public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 1) throw invalid_vertex_error("vertex count must be at least 1");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        g.edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw invalid_vertex_error("edge endpoint out of range: (" + std::to_string(u) +
                                           "," + std::to_string(v) + ") with n=" + std::to_string(n));
            if (u == v) throw self_loop_error("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            g.edges_.emplace_back(u, v);
        }
        std::sort(g.edges_.begin(), g.edges_.end());
        if (std::adjacent_find(g.edges_.begin(), g.edges_.end()) != g.edges_.end())
            throw duplicate_edge_error("duplicate edge in edge list");
        for (auto [u, v] : g.edges_) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
        return g;
    }

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
        const auto& nbrs = adj_[u];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    Graph with_edge(int u, int v) const {
        auto edges = edges_;
        edges.emplace_back(u, v);
        return from_edge_list(n_, edges);
    }

    // Removes v; remaining vertices are renumbered downward to stay dense.
    Graph without_vertex(int v) const {
        if (v < 0 || v >= n_) throw invalid_vertex_error("no such vertex: " + std::to_string(v));
        if (n_ == 1) throw invalid_vertex_error("cannot remove the last vertex");
        std::vector<std::pair<int, int>> edges;
        edges.reserve(edges_.size());
        for (auto [a, b] : edges_) {
            if (a == v || b == v) continue;
            edges.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
        }
        return from_edge_list(n_ - 1, edges);
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

  private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// BFS hop counts from src; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int src) {
    if (src < 0 || src >= g.order())
        throw invalid_vertex_error("no such vertex: " + std::to_string(src));
    std::vector<int> dist(g.order(), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

inline std::optional<int> distance(const Graph& g, int u, int v) {
    if (v < 0 || v >= g.order())
        throw invalid_vertex_error("no such vertex: " + std::to_string(v));
    const int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

inline int component_count(const Graph& g) {
    std::vector<char> seen(g.order(), 0);
    int components = 0;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++components;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

inline bool is_connected(const Graph& g) { return component_count(g) == 1; }

inline bool is_tree(const Graph& g) {
    return g.size() == g.order() - 1 && is_connected(g);
}

// Max eccentricity over all vertex pairs (all-pairs BFS).
inline int diameter(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.order(); ++v) {
        const auto dist = bfs_distances(g, v);
        for (int d : dist) {
            if (d < 0) throw not_connected_error("diameter of a disconnected graph");
            best = std::max(best, d);
        }
    }
    return best;
}

// A connected graph with exactly n-1 edges.
class Tree {
  public:
    explicit Tree(Graph g) : graph_(std::move(g)) {
        if (!is_tree(graph_)) throw not_a_tree_error("graph is not a tree");
    }

    const Graph& graph() const noexcept { return graph_; }
    operator const Graph&() const noexcept { return graph_; }
    int order() const noexcept { return graph_.order(); }

  private:
    Graph graph_;
};

// Vertex sequence of a path; produced by diameter_path with
// length() == diameter.
struct PathTrace {
    std::vector<int> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()) - 1; }
};

namespace detail {

// Farthest vertex from src, ties broken toward the smallest id;
// also reports BFS parents (first discoverer, neighbors scanned in
// ascending id order, so the result is deterministic).
inline int bfs_farthest(const Graph& g, int src, std::vector<int>& parent) {
    parent.assign(g.order(), -1);
    std::vector<int> dist(g.order(), -1);
    std::queue<int> queue;
    dist[src] = 0;
    queue.push(src);
    int far = src;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop();
        if (dist[v] > dist[far] || (dist[v] == dist[far] && v < far)) far = v;
        for (int w : g.neighbors(v)) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                parent[w] = v;
                queue.push(w);
            }
        }
    }
    return far;
}

}  // namespace detail

// Double BFS: from vertex 0 to the farthest u, then from u to the farthest w;
// returns the u-w path, which realizes the diameter in a tree.
inline PathTrace diameter_path(const Tree& t) {
    const Graph& g = t.graph();
    std::vector<int> parent;
    const int u = detail::bfs_farthest(g, 0, parent);
    const int w = detail::bfs_farthest(g, u, parent);
    PathTrace trace;
    for (int v = w; v >= 0; v = parent[v]) trace.vertices.push_back(v);
    std::reverse(trace.vertices.begin(), trace.vertices.end());
    return trace;
}

inline std::vector<int> pendant_vertices(const Graph& g) {
    std::vector<int> result;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) result.push_back(v);
    return result;
}

inline int quasi_pendant_count(const Graph& g) {
    std::vector<char> quasi(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1) quasi[g.neighbors(v)[0]] = 1;
    int count = 0;
    for (char q : quasi) count += q;
    return count;
}

}  // namespace lapdist
