#pragma once

#include <vector>

#include "indpath/graph.hpp"

namespace indpath {

class BudgetError : public Error {
 public:
  using Error::Error;
};

struct OracleResult {
  int opt_value = 0;          // edge count of a longest induced path
  std::vector<int> witness;   // node sequence attaining it
  long explored = 0;          // extension calls spent
};

// Exhaustive reference search, independent of the LP machinery: grows partial
// paths node by node, pruning any extension adjacent to a non-tip path node.
// Throws BudgetError when the call budget is exhausted.
OracleResult longest_induced_path_exact(const Graph& g, long budget = 200'000'000);

}  // namespace indpath
