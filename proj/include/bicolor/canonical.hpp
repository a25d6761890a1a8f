#pragma once

#include <string>
#include <vector>

#include "bicolor/graph.hpp"

namespace bicolor {

// Canonical certificate of a bicolored graph: equal strings exactly on
// color-preserving isomorphism classes. Red and blue are never interchangeable
// here; a color swap changes the certificate unless the graph maps to its own
// swap under some relabeling composed with... it does not: swap is a different
// graph unless checked explicitly.
//
// Algorithm: iterative refinement seeded by (red degree, blue degree), then
// backtracking over refinement-stable orderings taking the lexicographically
// least encoded adjacency pair. Automorphisms discovered at equal leaves prune
// sibling branches by orbit; the leading singleton prefix prunes against the
// current best encoding. Intended for small graphs (n <= 16 or so).
std::string canonical_certificate(const BicoloredGraph& g);

// order[i] = original vertex placed at canonical position i.
std::vector<int> canonical_order(const BicoloredGraph& g);

BicoloredGraph canonical_form(const BicoloredGraph& g);

BicoloredGraph relabel(const BicoloredGraph& g, const std::vector<int>& order);

} // namespace bicolor
