#pragma once

#include <cstddef>
#include <memory>
#include <ranges>
#include <span>
#include <vector>

#include "neutralize/checked.hpp"
#include "neutralize/errors.hpp"

namespace neutralize {

using VertexId = std::size_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;
  Weight weight = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Directed multigraph with exact integer weights.
///
/// Immutable after construction. Edges are identified by their position in
/// the edge list; that order is preserved by every transformation in the
/// library. The topology (endpoints and CSR adjacency) is shared between a
/// graph and the reweighted copies derived from it, so `with_weights` costs
/// O(m) for the weight vector only.
class Graph {
 public:
  Graph();
  /// Throws RangeError if an endpoint is >= vertex_count.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept;
  std::size_t edge_count() const noexcept { return weights_.size(); }

  Edge edge(EdgeId e) const;
  VertexId src(EdgeId e) const;
  VertexId dst(EdgeId e) const;
  Weight weight(EdgeId e) const { return weights_[e]; }
  std::span<const Weight> weights() const noexcept { return weights_; }

  std::vector<Edge> edges() const;

  /// Edge ids leaving / entering `v`, in increasing id order.
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;

  /// Same topology, new weights (one per edge, in edge order).
  Graph with_weights(std::vector<Weight> weights) const;

  std::size_t negative_edge_count() const noexcept;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Topology;
  Graph(std::shared_ptr<const Topology> topology, std::vector<Weight> weights);

  std::shared_ptr<const Topology> topology_;
  std::vector<Weight> weights_;
};

/// Per-vertex integer potential.
struct Potential {
  std::vector<Weight> values;

  Potential() = default;
  explicit Potential(std::vector<Weight> v) : values(std::move(v)) {}
  static Potential zero(std::size_t n) { return Potential(std::vector<Weight>(n, 0)); }

  std::size_t size() const noexcept { return values.size(); }
  Weight operator[](VertexId v) const { return values[v]; }
  Weight& operator[](VertexId v) { return values[v]; }

  friend bool operator==(const Potential&, const Potential&) = default;
};

/// Component-wise checked sum.
Potential operator+(const Potential& a, const Potential& b);

enum class EdgeFilter { NonPositive, NonNegative, Zero, Negative };

bool passes(EdgeFilter filter, Weight w) noexcept;

/// Read-only view of the edges of a graph whose weight passes a sign filter.
/// Zero-weight edges pass both NonPositive and NonNegative.
class SubgraphView {
  struct Keep {
    const Graph* graph;
    EdgeFilter filter;
    bool operator()(EdgeId e) const { return passes(filter, graph->weight(e)); }
  };

 public:
  SubgraphView(const Graph& parent, EdgeFilter filter) : parent_(&parent), filter_(filter) {}

  const Graph& parent() const noexcept { return *parent_; }
  EdgeFilter filter() const noexcept { return filter_; }

  bool contains(EdgeId e) const { return passes(filter_, parent_->weight(e)); }

  auto edge_ids() const {
    return std::views::iota(EdgeId{0}, parent_->edge_count()) |
           std::views::filter(Keep{parent_, filter_});
  }
  auto out_edges(VertexId v) const {
    return parent_->out_edges(v) | std::views::filter(Keep{parent_, filter_});
  }
  auto in_edges(VertexId v) const {
    return parent_->in_edges(v) | std::views::filter(Keep{parent_, filter_});
  }

 private:
  const Graph* parent_;
  EdgeFilter filter_;
};

/// ℓ_φ(u,v) = ℓ(u,v) + φ(u) − φ(v) for every edge; vertex set and edge order unchanged.
Graph reduce_weights(const Graph& g, const Potential& phi);

/// Every non-negative edge stays non-negative under φ.
bool is_valid_potential(const Graph& g, const Potential& phi);

/// Every edge is non-negative under φ.
bool is_neutralizing(const Graph& g, const Potential& phi);

}  // namespace neutralize
