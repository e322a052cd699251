#pragma once

#include <vector>

#include "dtlab/graph.hpp"

namespace corpus {

using dtlab::Edge;
using dtlab::Graph;

// Triangle 1-2-4 with pendant vertex 3 on 4.
inline Graph paw() { return Graph(4, {{1, 2}, {1, 4}, {2, 4}, {3, 4}}); }

// Spine 1-2-3 with leaves: 4,5,6 on 1; 7,8 on 2; 9,10,11 on 3. Unique minimum
// cover {1,2,3}; {1,3} already covers 8 of the 10 edges.
inline Graph three_star_caterpillar() {
  return Graph(11, {{1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 7}, {2, 8}, {3, 9}, {3, 10}, {3, 11}});
}

inline Graph single_edge() { return Graph(2, {{1, 2}}); }
inline Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }
inline Graph triangle() { return Graph(3, {{1, 2}, {1, 3}, {2, 3}}); }
inline Graph edgeless(int n) { return Graph(n, {}); }

inline std::vector<Graph> connected_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : dtlab::all_graphs_up_to_isomorphism(n))
      if (dtlab::is_connected(g)) out.push_back(g);
  return out;
}

inline std::vector<Graph> all_graphs(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (auto& g : dtlab::all_graphs_up_to_isomorphism(n)) out.push_back(g);
  return out;
}

}  // namespace corpus
