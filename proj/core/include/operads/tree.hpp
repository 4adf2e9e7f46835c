#pragma once

#include <optional>
#include <string>
#include <vector>

#include "operads/signature.hpp"

namespace operads {

/// Planar rooted tree whose internal vertices carry generator names and whose
/// leaves carry positive integer labels. A well-formed tree of arity n labels
/// its leaves with exactly {1..n}; the identity tree is the single Leaf(1).
/// Subtrees of a well-formed tree carry distinct labels that need not be
/// contiguous. Immutable value type.
class Tree {
 public:
  static Tree leaf(std::size_t label);
  static Tree node(std::string gen, std::vector<Tree> children);

  bool is_leaf() const { return children_.empty() && gen_.empty(); }
  std::size_t label() const { return label_; }
  const std::string& gen() const { return gen_; }
  const std::vector<Tree>& children() const { return children_; }

  /// Number of leaves.
  std::size_t arity() const;
  /// Sorted list of leaf labels.
  std::vector<std::size_t> labels() const;

  /// Canonical encoding; injective on trees and identical to the expression
  /// grammar, e.g. "g(g(1,2),3)". Trees compare by this key.
  std::string key() const;

  friend bool operator==(const Tree& a, const Tree& b);
  friend bool operator<(const Tree& a, const Tree& b) { return a.key() < b.key(); }

 private:
  Tree() = default;
  std::string gen_;   // empty for leaves
  std::size_t label_ = 0;
  std::vector<Tree> children_;
};

/// The identity tree I.
Tree identity_tree();

/// Tree with a single internal vertex g over leaves 1..arity.
Tree corolla(const Generator& g);
Tree corolla(const Signature& sig, const std::string& gen_name);

/// Checks labels {1..n}, vertex arities and edge colors against sig.
/// Throws on violation.
void validate_tree(const Signature& sig, const Tree& t);

/// Output color of the tree's root, or nullopt for a bare leaf (the identity
/// is color-polymorphic).
std::optional<std::string> root_color(const Signature& sig, const Tree& t);

/// Color expected at the leaf labeled `label`, or nullopt when that leaf is
/// the root.
std::optional<std::string> leaf_color(const Signature& sig, const Tree& t,
                                      std::size_t label);

/// Substitution of s into the leaf of t labeled i. Labels of s move into the
/// slot as a block; labels of t above i shift up. Throws PositionOutOfRange
/// or ColorMismatch.
Tree graft(const Signature& sig, const Tree& t, std::size_t i, const Tree& s);

/// Simultaneous substitution of args[k] into the leaf labeled k+1; equal to
/// iterated grafting from the highest position down.
Tree gamma(const Signature& sig, const Tree& t, const std::vector<Tree>& args);

/// Leaf relabeling l -> sigma(l). Symmetric mode only (ModeError otherwise).
Tree act_perm(const Signature& sig, const Tree& t, const Perm& sigma);

namespace detail {
/// Leaf relabeling without the mode guard; forest bookkeeping uses it.
Tree relabel_leaves(const Tree& t, const Perm& sigma);
}  // namespace detail

/// All distinct trees of arity n with root color out_color, sorted by key.
/// Planar mode: identity labeling; symmetric mode: every labeling.
std::vector<Tree> enumerate_trees(const Signature& sig, std::size_t n,
                                  const std::string& out_color = kDefaultColor);

}  // namespace operads
