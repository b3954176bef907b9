#pragma once

#include <iosfwd>

#include "sispread/graph.hpp"

namespace sispread {

// Edge-list text format:
//
//   # sispread edge-list
//   # node <id> <role>        one line per node, role in {white,grey,black,model}
//   <u> <v>                   one line per undirected edge, u < v by id
//
// Other lines starting with '#' and blank lines are ignored. Node lines must
// precede the edges that reference them.

void write_edge_list(std::ostream& out, const RoleGraph& g);

/// Throws DataError (with line number) on malformed input.
RoleGraph read_edge_list(std::istream& in);

}  // namespace sispread
