#pragma once

#include <cstddef>
#include <vector>

#include "neutralize/graph.hpp"

namespace neutralize {

/// Weights ℓ1..ℓn of the path v0 → v1 → ... → vn, in path order.
struct WeightSeq {
  std::vector<Weight> weights;

  WeightSeq() = default;
  WeightSeq(std::initializer_list<Weight> w) : weights(w) {}
  explicit WeightSeq(std::vector<Weight> w) : weights(std::move(w)) {}

  std::size_t size() const noexcept { return weights.size(); }
  bool empty() const noexcept { return weights.empty(); }
  Weight operator[](std::size_t i) const { return weights[i]; }

  friend bool operator==(const WeightSeq&, const WeightSeq&) = default;
};

/// Drops zeros and sums maximal runs of equal sign. The result alternates in
/// sign, preserves the total, and is a fixpoint of this function.
WeightSeq contract_sequence(const WeightSeq& p);

std::size_t count_negative(const WeightSeq& p);

/// Interval of 1-based positions [first, last].
struct NegSegment {
  std::size_t first = 0;
  std::size_t last = 0;
  /// No terminal index closes this segment.
  bool open = false;

  friend bool operator==(const NegSegment&, const NegSegment&) = default;
};

struct NegSegmentAnalysis {
  /// Odd 1-based positions i with ℓi + ℓ(i+1) > 0.
  std::vector<std::size_t> terminals;
  /// Partition of the sequence: each segment ends right after a terminal
  /// index; a trailing run with no terminal is reported as one open segment.
  std::vector<NegSegment> segments;
  bool has_open_segment = false;
  /// The input had odd length and a positive entry was appended to pair up
  /// the last negative weight.
  bool sentinel_appended = false;
};

/// Expects a contracted sequence in normalized form: odd positions strictly
/// negative, even positions strictly positive. An odd-length input gets a
/// sentinel +1 appended (which never makes the last index terminal).
/// Throws PreconditionError otherwise.
NegSegmentAnalysis analyze_neg_segments(const WeightSeq& p);

/// Path 0 → 1 → ... → n with edge i carrying weight i.
Graph seq_to_path_graph(const WeightSeq& p);

/// Inverse of seq_to_path_graph. The graph must have exactly the edges
/// i → i+1 for 0 <= i < n-1 (in any list order). Throws ShapeError otherwise.
WeightSeq path_graph_to_seq(const Graph& g);

}  // namespace neutralize
