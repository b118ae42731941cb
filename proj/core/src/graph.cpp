#include "neutralize/graph.hpp"

#include <string>

namespace neutralize {

struct Graph::Topology {
  std::size_t vertex_count = 0;
  std::vector<VertexId> src;
  std::vector<VertexId> dst;
  // CSR adjacency: edges of vertex v are ids[offsets[v] .. offsets[v+1]).
  std::vector<std::size_t> out_offsets;
  std::vector<EdgeId> out_ids;
  std::vector<std::size_t> in_offsets;
  std::vector<EdgeId> in_ids;
};

namespace {

void build_csr(std::size_t n, const std::vector<VertexId>& key, std::vector<std::size_t>& offsets,
               std::vector<EdgeId>& ids) {
  offsets.assign(n + 1, 0);
  for (VertexId v : key) ++offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  ids.resize(key.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (EdgeId e = 0; e < key.size(); ++e) ids[cursor[key[e]]++] = e;
}

}  // namespace

Graph::Graph() : Graph(0, {}) {}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) {
  auto topo = std::make_shared<Topology>();
  topo->vertex_count = vertex_count;
  topo->src.reserve(edges.size());
  topo->dst.reserve(edges.size());
  weights_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.src >= vertex_count || e.dst >= vertex_count) {
      throw RangeError("edge " + std::to_string(i) + " (" + std::to_string(e.src) + " -> " +
                       std::to_string(e.dst) + ") has an endpoint outside [0, " +
                       std::to_string(vertex_count) + ")");
    }
    topo->src.push_back(e.src);
    topo->dst.push_back(e.dst);
    weights_.push_back(e.weight);
  }
  build_csr(vertex_count, topo->src, topo->out_offsets, topo->out_ids);
  build_csr(vertex_count, topo->dst, topo->in_offsets, topo->in_ids);
  topology_ = std::move(topo);
}

Graph::Graph(std::shared_ptr<const Topology> topology, std::vector<Weight> weights)
    : topology_(std::move(topology)), weights_(std::move(weights)) {}

std::size_t Graph::vertex_count() const noexcept { return topology_->vertex_count; }

VertexId Graph::src(EdgeId e) const { return topology_->src[e]; }
VertexId Graph::dst(EdgeId e) const { return topology_->dst[e]; }

Edge Graph::edge(EdgeId e) const { return Edge{topology_->src[e], topology_->dst[e], weights_[e]}; }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (EdgeId e = 0; e < edge_count(); ++e) out.push_back(edge(e));
  return out;
}

std::span<const EdgeId> Graph::out_edges(VertexId v) const {
  const auto& t = *topology_;
  return std::span<const EdgeId>(t.out_ids).subspan(t.out_offsets[v],
                                                    t.out_offsets[v + 1] - t.out_offsets[v]);
}

std::span<const EdgeId> Graph::in_edges(VertexId v) const {
  const auto& t = *topology_;
  return std::span<const EdgeId>(t.in_ids).subspan(t.in_offsets[v],
                                                   t.in_offsets[v + 1] - t.in_offsets[v]);
}

Graph Graph::with_weights(std::vector<Weight> weights) const {
  if (weights.size() != edge_count()) {
    throw PreconditionError("weight vector has " + std::to_string(weights.size()) +
                            " entries, graph has " + std::to_string(edge_count()) + " edges");
  }
  return Graph(topology_, std::move(weights));
}

std::size_t Graph::negative_edge_count() const noexcept {
  std::size_t count = 0;
  for (Weight w : weights_) count += w < 0;
  return count;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.weights_ != b.weights_) return false;
  if (a.topology_ == b.topology_) return true;
  return a.topology_->src == b.topology_->src && a.topology_->dst == b.topology_->dst;
}

Potential operator+(const Potential& a, const Potential& b) {
  if (a.size() != b.size()) throw PreconditionError("potential length mismatch");
  Potential sum = a;
  for (std::size_t v = 0; v < sum.size(); ++v) sum[v] = checked_add(a[v], b[v]);
  return sum;
}

bool passes(EdgeFilter filter, Weight w) noexcept {
  switch (filter) {
    case EdgeFilter::NonPositive: return w <= 0;
    case EdgeFilter::NonNegative: return w >= 0;
    case EdgeFilter::Zero: return w == 0;
    case EdgeFilter::Negative: return w < 0;
  }
  return false;
}

namespace {

void require_length(const Graph& g, const Potential& phi) {
  if (phi.size() != g.vertex_count()) {
    throw PreconditionError("potential has " + std::to_string(phi.size()) +
                            " values, graph has " + std::to_string(g.vertex_count()) + " vertices");
  }
}

Weight reduced_weight(const Graph& g, const Potential& phi, EdgeId e) {
  return checked_sub(checked_add(g.weight(e), phi[g.src(e)]), phi[g.dst(e)]);
}

}  // namespace

Graph reduce_weights(const Graph& g, const Potential& phi) {
  require_length(g, phi);
  std::vector<Weight> w(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) w[e] = reduced_weight(g, phi, e);
  return g.with_weights(std::move(w));
}

bool is_valid_potential(const Graph& g, const Potential& phi) {
  require_length(g, phi);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.weight(e) >= 0 && reduced_weight(g, phi, e) < 0) return false;
  }
  return true;
}

bool is_neutralizing(const Graph& g, const Potential& phi) {
  require_length(g, phi);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (reduced_weight(g, phi, e) < 0) return false;
  }
  return true;
}

}  // namespace neutralize
