#ifndef MODULI_GRAPH_HPP
#define MODULI_GRAPH_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace moduli {

/// Undirected graph on labeled vertices. Components are recomputed from
/// the current vertex and edge sets on every call.
class ComponentGraph {
public:
  /// Adds a vertex; throws std::invalid_argument on a duplicate label.
  std::size_t add_vertex(const std::string& label);
  /// Adds an undirected edge; self-loops and duplicates are ignored.
  void add_edge(std::size_t a, std::size_t b);
  /// Throws std::out_of_range for an unknown label.
  void add_edge(const std::string& a, const std::string& b);

  /// Puts a vertex into a named DOT cluster.
  void set_cluster(std::size_t v, const std::string& cluster);

  std::optional<std::size_t> find(const std::string& label) const;
  const std::vector<std::string>& vertices() const { return labels_; }
  /// Edges as (a, b) with a < b, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const { return {edges_.begin(), edges_.end()}; }
  bool has_edge(std::size_t a, std::size_t b) const;

  /// Vertex indices per component; each sorted, components ordered by
  /// their smallest vertex.
  std::vector<std::vector<std::size_t>> components() const;
  std::size_t component_count() const { return components().size(); }

  /// Graphviz text.
  std::string to_dot(const std::string& name) const;
  /// {"vertices": [...], "edges": [[a, b], ...], "components": [[...], ...]} by label.
  nlohmann::json to_json() const;

private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t> index_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
  std::map<std::size_t, std::string> clusters_;
};

} // namespace moduli

#endif
