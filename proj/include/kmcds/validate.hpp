#pragma once

#include "kmcds/graph.hpp"

namespace kmcds {

/// Checks that share no code with the solvers: k-connectivity through a separate push-relabel
/// max-flow, m-domination through a direct neighbor count.
bool independent_k_connected(const Graph& g, const NodeSet& s, std::size_t k);
bool independent_m_dominating(const Graph& g, const NodeSet& s, std::size_t m);

struct Validity {
  bool connected = false;
  bool dominating = false;
  bool ok() const { return connected && dominating; }
};

Validity validate_kmcds(const Graph& g, const NodeSet& s, std::size_t k, std::size_t m);

}  // namespace kmcds
