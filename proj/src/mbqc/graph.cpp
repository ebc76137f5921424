#include "qline/mbqc/graph.hpp"

#include <stdexcept>
#include <string>

namespace qline::mbqc {

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw std::invalid_argument("MeasurementGraph: " + msg); }

}  // namespace

MeasurementGraph::MeasurementGraph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                                   std::set<Vertex> inputs, std::set<Vertex> outputs,
                                   std::map<Vertex, Vertex> flow, std::vector<std::vector<Vertex>> layers)
    : n_(vertex_count),
      edges_(std::move(edges)),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      flow_(std::move(flow)),
      layers_(std::move(layers)),
      adjacency_(vertex_count),
      layer_index_(vertex_count, vertex_count) {
  if (n_ == 0) invalid("no vertices");
  for (auto [a, b] : edges_) {
    check_vertex(a, "edge");
    check_vertex(b, "edge");
    if (a == b) invalid("self-loop on vertex " + std::to_string(a));
    adjacency_[a - 1].insert(b);
    adjacency_[b - 1].insert(a);
  }
  for (Vertex v : inputs_) check_vertex(v, "input");
  for (Vertex v : outputs_) check_vertex(v, "output");

  for (std::size_t li = 0; li < layers_.size(); ++li) {
    for (Vertex v : layers_[li]) {
      check_vertex(v, "layer");
      if (layer_index_[v - 1] != n_) invalid("vertex " + std::to_string(v) + " in two layers");
      layer_index_[v - 1] = li;
    }
  }
  for (Vertex v = 1; v <= n_; ++v) {
    if (layer_index_[v - 1] == n_) invalid("vertex " + std::to_string(v) + " in no layer");
  }

  for (auto [v, fv] : flow_) {
    check_vertex(v, "flow source");
    check_vertex(fv, "flow target");
    if (is_output(v)) invalid("flow defined on output vertex " + std::to_string(v));
    if (!adjacency_[v - 1].contains(fv)) invalid("flow target is not a neighbour of " + std::to_string(v));
    if (layer_index_[fv - 1] <= layer_index_[v - 1]) invalid("flow target not after " + std::to_string(v));
    for (Vertex w : adjacency_[fv - 1]) {
      if (w != v && layer_index_[w - 1] <= layer_index_[v - 1]) {
        invalid("neighbour " + std::to_string(w) + " of f(" + std::to_string(v) + ") not after it");
      }
    }
  }
}

MeasurementGraph MeasurementGraph::two_chain(bool quantum_output) {
  return linear_chain(2, {1, 2}, quantum_output);
}

MeasurementGraph MeasurementGraph::linear_chain(std::size_t n, std::set<Vertex> inputs, bool quantum_output) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::map<Vertex, Vertex> flow;
  std::vector<std::vector<Vertex>> layers;
  for (Vertex v = 1; v <= n; ++v) {
    layers.push_back({v});
    if (v < n) {
      edges.emplace_back(v, v + 1);
      flow[v] = v + 1;
    }
  }
  std::set<Vertex> outputs;
  if (quantum_output) outputs.insert(n);
  return MeasurementGraph(n, std::move(edges), std::move(inputs), std::move(outputs), std::move(flow),
                          std::move(layers));
}

void MeasurementGraph::check_vertex(Vertex v, const char* what) const {
  if (v < 1 || v > n_) invalid(std::string(what) + " vertex " + std::to_string(v) + " out of range");
}

std::optional<Vertex> MeasurementGraph::flow_of(Vertex v) const {
  const auto it = flow_.find(v);
  if (it == flow_.end()) return std::nullopt;
  return it->second;
}

const std::set<Vertex>& MeasurementGraph::neighbors(Vertex v) const {
  check_vertex(v, "neighbour query");
  return adjacency_[v - 1];
}

std::size_t MeasurementGraph::layer_of(Vertex v) const {
  check_vertex(v, "layer query");
  return layer_index_[v - 1];
}

std::vector<Vertex> MeasurementGraph::measurement_order() const {
  std::vector<Vertex> order;
  for (const auto& layer : layers_) {
    for (Vertex v : layer) {
      if (!is_output(v)) order.push_back(v);
    }
  }
  return order;
}

}  // namespace qline::mbqc
