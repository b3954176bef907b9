#include "sispread/graph_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>

#include "sispread/error.hpp"

namespace sispread {

void write_edge_list(std::ostream& out, const RoleGraph& g) {
  out << "# sispread edge-list\n";
  for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
    out << "# node " << g.id(i) << ' ' << to_string(g.role(i)) << '\n';
  }
  for (auto [u, v] : g.edges()) out << g.id(u) << ' ' << g.id(v) << '\n';
}

namespace {

NodeId parse_id(std::string_view token, std::size_t line) {
  NodeId value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DataError(line, "invalid node id '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

RoleGraph read_edge_list(std::istream& in) {
  std::vector<NodeSpec> nodes;
  std::unordered_set<NodeId> known;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "#") {
      std::string keyword;
      if (!(fields >> keyword) || keyword != "node") continue;
      std::string id, role, extra;
      if (!(fields >> id >> role) || (fields >> extra)) {
        throw DataError(line_no, "expected '# node <id> <role>'");
      }
      NodeSpec spec{parse_id(id, line_no), NodeRole::White};
      try {
        spec.role = parse_role(role);
      } catch (const DataError& e) {
        throw DataError(line_no, e.what());
      }
      if (!known.insert(spec.id).second) throw DataError(line_no, "duplicate node " + id);
      nodes.push_back(spec);
      continue;
    }
    if (first.front() == '#') continue;
    std::string second, extra;
    if (!(fields >> second) || (fields >> extra)) throw DataError(line_no, "expected '<u> <v>'");
    NodeId u = parse_id(first, line_no);
    NodeId v = parse_id(second, line_no);
    if (!known.contains(u) || !known.contains(v)) {
      throw DataError(line_no, "edge references an undeclared node");
    }
    edges.emplace_back(u, v);
  }
  try {
    return RoleGraph::build(std::move(nodes), edges);
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
}

}  // namespace sispread
