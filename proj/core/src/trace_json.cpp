#include <nlohmann/json.hpp>

#include "neutralize/elmasry.hpp"

namespace neutralize {

std::string trace_to_json(const IterationTrace& trace) {
  using json = nlohmann::ordered_json;
  json iterations = json::array();
  for (const auto& record : trace.iterations) {
    json item;
    item["index"] = record.index;
    item["eta"] = record.eta.values;
    item["negEdges"] = record.negative_edge_count_after;
    if (record.min_snake_length_after) {
      item["minSnakeLen"] = *record.min_snake_length_after;
    } else {
      item["minSnakeLen"] = nullptr;
    }
    if (!record.reduced_weights.empty()) item["reducedWeights"] = record.reduced_weights;
    iterations.push_back(std::move(item));
  }
  json doc;
  doc["iterations"] = std::move(iterations);
  doc["accumulatedPotential"] = trace.accumulated_potential.values;
  doc["iterationsExecuted"] = trace.iterations_executed;
  return doc.dump() + "\n";
}

}  // namespace neutralize
