#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace qline::mbqc {

/// Vertices are labelled 1..n.
using Vertex = std::size_t;

/// Graph state with inputs, outputs, a flow on the measured vertices and a
/// layered partial order. Validated on construction.
///
/// Flow is optional per measured vertex: vertices measured last typically
/// have nothing left to correct and carry no successor.
class MeasurementGraph {
 public:
  MeasurementGraph(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                   std::set<Vertex> inputs, std::set<Vertex> outputs, std::map<Vertex, Vertex> flow,
                   std::vector<std::vector<Vertex>> layers);

  /// Two vertices joined by one edge, both inputs, flow 1 -> 2. With a
  /// quantum output, vertex 2 is left unmeasured.
  static MeasurementGraph two_chain(bool quantum_output = false);

  /// Linear cluster 1 - 2 - ... - n with flow v -> v+1 and one vertex per layer.
  static MeasurementGraph linear_chain(std::size_t n, std::set<Vertex> inputs, bool quantum_output = false);

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::set<Vertex>& inputs() const { return inputs_; }
  const std::set<Vertex>& outputs() const { return outputs_; }
  const std::map<Vertex, Vertex>& flow() const { return flow_; }
  const std::vector<std::vector<Vertex>>& layers() const { return layers_; }

  bool is_input(Vertex v) const { return inputs_.contains(v); }
  bool is_output(Vertex v) const { return outputs_.contains(v); }
  std::optional<Vertex> flow_of(Vertex v) const;
  const std::set<Vertex>& neighbors(Vertex v) const;
  std::size_t layer_of(Vertex v) const;

  /// Non-output vertices in layer order.
  std::vector<Vertex> measurement_order() const;

 private:
  void check_vertex(Vertex v, const char* what) const;

  std::size_t n_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::set<Vertex> inputs_;
  std::set<Vertex> outputs_;
  std::map<Vertex, Vertex> flow_;
  std::vector<std::vector<Vertex>> layers_;
  std::vector<std::set<Vertex>> adjacency_;  // index v-1
  std::vector<std::size_t> layer_index_;     // index v-1
};

}  // namespace qline::mbqc
