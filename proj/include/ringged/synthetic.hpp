#pragma once

#include <cstdint>
#include <string>

#include "ringged/graph.hpp"

namespace ringged {

struct TreeDatasetSpec {
  std::size_t min_size = 8;
  std::size_t max_size = 12;
  std::size_t alphabet = 1;  // node labels "1".."alphabet"
  std::size_t count = 50;
  std::uint64_t seed = 0;
  std::size_t max_attempts = 100000;
};

/// Canonical string of an unlabeled tree, equal for isomorphic trees.
/// Throws ValidationError if `tree` is not a tree.
std::string canonical_tree_form(const LabeledGraph& tree);

/// Pairwise non-isomorphic random trees (uniform size, Pruefer sequences)
/// with uniform symbolic node labels and unlabeled edges. Throws
/// ValidationError reporting the achieved count if `count` distinct trees
/// are not found within `max_attempts` draws.
GraphCollection generate_trees(const TreeDatasetSpec& spec);

}  // namespace ringged
