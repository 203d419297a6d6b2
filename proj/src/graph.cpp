#include "moduli/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/connected_components.hpp>

namespace moduli {

std::size_t ComponentGraph::add_vertex(const std::string& label) {
  if (index_.contains(label)) {
    throw std::invalid_argument("duplicate vertex label " + label);
  }
  index_.emplace(label, labels_.size());
  labels_.push_back(label);
  return labels_.size() - 1;
}

void ComponentGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= labels_.size() || b >= labels_.size()) {
    throw std::out_of_range("edge endpoint out of range");
  }
  if (a == b) {
    return;
  }
  edges_.emplace(std::min(a, b), std::max(a, b));
}

void ComponentGraph::add_edge(const std::string& a, const std::string& b) {
  add_edge(index_.at(a), index_.at(b));
}

void ComponentGraph::set_cluster(std::size_t v, const std::string& cluster) { clusters_[v] = cluster; }

std::optional<std::size_t> ComponentGraph::find(const std::string& label) const {
  const auto it = index_.find(label);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool ComponentGraph::has_edge(std::size_t a, std::size_t b) const {
  return edges_.contains({std::min(a, b), std::max(a, b)});
}

std::vector<std::vector<std::size_t>> ComponentGraph::components() const {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(labels_.size());
  for (const auto& [a, b] : edges_) {
    boost::add_edge(a, b, g);
  }
  std::vector<int> component(labels_.size());
  const int count = labels_.empty() ? 0 : boost::connected_components(g, component.data());
  // Renumber by smallest member so the output order is deterministic.
  std::vector<std::vector<std::size_t>> grouped(static_cast<std::size_t>(count));
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    grouped[static_cast<std::size_t>(component[v])].push_back(v);
  }
  std::sort(grouped.begin(), grouped.end());
  return grouped;
}

std::string ComponentGraph::to_dot(const std::string& name) const {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n";
  std::map<std::string, std::vector<std::size_t>> by_cluster;
  for (const auto& [v, cluster] : clusters_) {
    by_cluster[cluster].push_back(v);
  }
  int k = 0;
  for (const auto& [cluster, members] : by_cluster) {
    out << "  subgraph cluster_" << k++ << " {\n    label=\"" << cluster << "\";\n";
    for (const auto v : members) {
      out << "    \"" << labels_[v] << "\";\n";
    }
    out << "  }\n";
  }
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    if (!clusters_.contains(v)) {
      out << "  \"" << labels_[v] << "\";\n";
    }
  }
  for (const auto& [a, b] : edges_) {
    out << "  \"" << labels_[a] << "\" -- \"" << labels_[b] << "\";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json ComponentGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = labels_;
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : edges_) {
    j["edges"].push_back({labels_[a], labels_[b]});
  }
  j["components"] = nlohmann::json::array();
  for (const auto& comp : components()) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto v : comp) {
      c.push_back(labels_[v]);
    }
    j["components"].push_back(std::move(c));
  }
  return j;
}

} // namespace moduli
