#include "operads/forest.hpp"

#include <algorithm>
#include <numeric>

#include "operads/error.hpp"

namespace operads {

Forest Forest::concat(std::vector<Tree> trees) {
  std::size_t m = 0;
  for (const auto& t : trees) m += t.arity();
  Forest f;
  f.trees_ = std::move(trees);
  f.input_order_ = identity_perm(m);
  return f;
}

Forest Forest::single(Tree t) { return concat({std::move(t)}); }

Forest::Forest(std::vector<Tree> trees, Perm input_order)
    : trees_(std::move(trees)), input_order_(std::move(input_order)) {
  std::size_t m = 0;
  for (const auto& t : trees_) m += t.arity();
  if (input_order_.size() != m)
    throw LengthMismatch("input_order length != total leaf count");
  if (!is_perm(input_order_)) throw Error("input_order is not a permutation");
  // Normalize each block to increasing order, relabeling the tree to match.
  std::size_t off = 0;
  for (auto& t : trees_) {
    const std::size_t k = t.arity();
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return input_order_[off + a] < input_order_[off + b];
    });
    bool sorted = true;
    for (std::size_t r = 0; r < k; ++r)
      if (order[r] != r) sorted = false;
    if (!sorted) {
      Perm sigma(k);  // old label -> rank of its global position
      for (std::size_t r = 0; r < k; ++r) sigma[order[r]] = r + 1;
      t = detail::relabel_leaves(t, sigma);
      std::vector<std::size_t> block(k);
      for (std::size_t r = 0; r < k; ++r) block[r] = input_order_[off + order[r]];
      for (std::size_t r = 0; r < k; ++r) input_order_[off + r] = block[r];
    }
    off += k;
  }
}

std::size_t Forest::offset(std::size_t j) const {
  std::size_t off = 0;
  for (std::size_t i = 0; i < j; ++i) off += trees_[i].arity();
  return off;
}

std::size_t Forest::global_input(std::size_t j, std::size_t l) const {
  return input_order_[offset(j) + l - 1];
}

std::string Forest::key() const {
  std::string out = "[";
  for (std::size_t j = 0; j < trees_.size(); ++j) {
    if (j) out += '|';
    out += trees_[j].key();
  }
  out += "]@(";
  for (std::size_t i = 0; i < input_order_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(input_order_[i]);
  }
  out += ')';
  return out;
}

Forest identity_forest(std::size_t n) {
  return Forest::concat(std::vector<Tree>(n, identity_tree()));
}

Forest forest_tensor(const Forest& f, const Forest& g) {
  std::vector<Tree> trees = f.trees();
  trees.insert(trees.end(), g.trees().begin(), g.trees().end());
  Perm io = f.input_order();
  const std::size_t shift = f.inputs();
  for (std::size_t p : g.input_order()) io.push_back(p + shift);
  Forest out;
  // Blocks stay increasing; bypass re-normalization.
  out = Forest(std::move(trees), std::move(io));
  return out;
}

namespace {
// Replace every leaf of u by the prepared subtree for its label.
Tree substitute(const Tree& u, const std::vector<Tree>& subs) {
  if (u.is_leaf()) return subs[u.label() - 1];
  std::vector<Tree> ch;
  ch.reserve(u.children().size());
  for (const auto& c : u.children()) ch.push_back(substitute(c, subs));
  return Tree::node(u.gen(), std::move(ch));
}
}  // namespace

Forest forest_compose(const Signature& sig, const Forest& f, const Forest& g) {
  if (f.outputs() != g.inputs())
    throw BoundaryMismatch("outputs of first (" + std::to_string(f.outputs()) +
                           ") != inputs of second (" + std::to_string(g.inputs()) + ")");
  std::vector<Tree> out_trees;
  Perm out_io;
  out_trees.reserve(g.outputs());
  for (std::size_t j = 0; j < g.outputs(); ++j) {
    const Tree& u = g.trees()[j];
    const std::size_t k = u.arity();
    // f-tree plugged into each leaf of u, plus the f-global positions of the
    // plugged trees' own leaves.
    std::vector<std::size_t> plugged(k);
    std::vector<std::size_t> globals;
    for (std::size_t l = 1; l <= k; ++l) {
      const std::size_t p = g.global_input(j, l);  // 1-based index into f's trees
      plugged[l - 1] = p - 1;
      const Tree& ft = f.trees()[p - 1];
      const auto need = leaf_color(sig, u, l);
      const auto have = root_color(sig, ft);
      if (need && have && *need != *have)
        throw ColorMismatch("gluing root of tree " + std::to_string(p) +
                            " into wire colored " + *need);
      const std::size_t base = f.offset(p - 1);
      for (std::size_t l2 = 1; l2 <= ft.arity(); ++l2)
        globals.push_back(f.input_order()[base + l2 - 1]);
    }
    std::vector<std::size_t> sorted_globals = globals;
    std::sort(sorted_globals.begin(), sorted_globals.end());
    auto rank = [&](std::size_t gpos) {
      return static_cast<std::size_t>(
                 std::lower_bound(sorted_globals.begin(), sorted_globals.end(), gpos) -
                 sorted_globals.begin()) +
             1;
    };
    // Relabel each plugged tree by the rank of its leaves' f-global positions.
    std::vector<Tree> subs(k, identity_tree());
    for (std::size_t l = 1; l <= k; ++l) {
      const std::size_t p = plugged[l - 1];
      const Tree& ft = f.trees()[p];
      const std::size_t base = f.offset(p);
      Perm sigma(ft.arity());
      for (std::size_t l2 = 1; l2 <= ft.arity(); ++l2)
        sigma[l2 - 1] = rank(f.input_order()[base + l2 - 1]);
      subs[l - 1] = detail::relabel_leaves(ft, sigma);
    }
    out_trees.push_back(substitute(u, subs));
    out_io.insert(out_io.end(), sorted_globals.begin(), sorted_globals.end());
  }
  return Forest(std::move(out_trees), std::move(out_io));
}

}  // namespace operads
