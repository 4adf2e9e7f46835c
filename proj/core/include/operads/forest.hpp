#pragma once

#include <string>
#include <vector>

#include "operads/tree.hpp"

namespace operads {

/// Ordered concatenation of trees with a global order on the input boundary.
/// Outputs are the tree roots, ordered by position. input_order assigns the
/// leaf labeled l of tree j (slot offset_j + l - 1) its global input position.
///
/// Stored in normal form: within each tree's slot block, input_order is
/// strictly increasing, so a wiring has exactly one representation. The empty
/// forest is the monoidal unit.
class Forest {
 public:
  Forest() = default;

  /// Side-by-side concatenation with the induced input order.
  static Forest concat(std::vector<Tree> trees);
  static Forest single(Tree t);

  /// General constructor; normalizes into block-increasing form.
  Forest(std::vector<Tree> trees, Perm input_order);

  const std::vector<Tree>& trees() const { return trees_; }
  const Perm& input_order() const { return input_order_; }

  std::size_t inputs() const { return input_order_.size(); }
  std::size_t outputs() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }

  /// Slot offset of tree j (0-based j).
  std::size_t offset(std::size_t j) const;
  /// Global input position of the leaf labeled l of tree j (0-based j).
  std::size_t global_input(std::size_t j, std::size_t l) const;

  std::string key() const;

  friend bool operator==(const Forest& a, const Forest& b) {
    return a.trees_ == b.trees_ && a.input_order_ == b.input_order_;
  }
  friend bool operator<(const Forest& a, const Forest& b) { return a.key() < b.key(); }

 private:
  std::vector<Tree> trees_;
  Perm input_order_;
};

/// n parallel identity wires.
Forest identity_forest(std::size_t n);

/// Horizontal composition: concatenation, g's inputs shifted past f's.
Forest forest_tensor(const Forest& f, const Forest& g);

/// Vertical composition (f then g): root j of f glued to the leaf of g
/// carrying global input position j. Throws BoundaryMismatch/ColorMismatch.
Forest forest_compose(const Signature& sig, const Forest& f, const Forest& g);

}  // namespace operads
