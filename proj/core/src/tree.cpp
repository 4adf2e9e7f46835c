#include "operads/tree.hpp"

#include <algorithm>
#include <map>

#include "operads/error.hpp"

namespace operads {

Tree Tree::leaf(std::size_t label) {
  if (label < 1) throw Error("leaf labels start at 1");
  Tree t;
  t.label_ = label;
  return t;
}

Tree Tree::node(std::string gen, std::vector<Tree> children) {
  if (gen.empty()) throw Error("empty generator name");
  if (children.empty()) throw Error("generator arity must be >= 1");
  Tree t;
  t.gen_ = std::move(gen);
  t.children_ = std::move(children);
  return t;
}

std::size_t Tree::arity() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.arity();
  return n;
}

namespace {
void collect_labels(const Tree& t, std::vector<std::size_t>& out) {
  if (t.is_leaf()) {
    out.push_back(t.label());
    return;
  }
  for (const auto& c : t.children()) collect_labels(c, out);
}

void key_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    out += std::to_string(t.label());
    return;
  }
  out += t.gen();
  out += '(';
  bool first = true;
  for (const auto& c : t.children()) {
    if (!first) out += ',';
    first = false;
    key_into(c, out);
  }
  out += ')';
}
}  // namespace

std::vector<std::size_t> Tree::labels() const {
  std::vector<std::size_t> out;
  collect_labels(*this, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string Tree::key() const {
  std::string out;
  key_into(*this, out);
  return out;
}

bool operator==(const Tree& a, const Tree& b) {
  return a.label_ == b.label_ && a.gen_ == b.gen_ && a.children_ == b.children_;
}

Tree identity_tree() { return Tree::leaf(1); }

Tree corolla(const Generator& g) {
  std::vector<Tree> leaves;
  leaves.reserve(g.arity);
  for (std::size_t i = 1; i <= g.arity; ++i) leaves.push_back(Tree::leaf(i));
  return Tree::node(g.name, std::move(leaves));
}

Tree corolla(const Signature& sig, const std::string& gen_name) {
  return corolla(sig.generator(gen_name));
}

namespace {
// Checks vertex arities and edge colors; returns root color (nullopt = leaf).
std::optional<std::string> check_colors(const Signature& sig, const Tree& t) {
  if (t.is_leaf()) return std::nullopt;
  const Generator& g = sig.generator(t.gen());
  if (t.children().size() != g.arity)
    throw ArityMismatch("vertex '" + g.name + "' expects " + std::to_string(g.arity) +
                        " children, got " + std::to_string(t.children().size()));
  for (std::size_t i = 0; i < g.arity; ++i) {
    auto c = check_colors(sig, t.children()[i]);
    if (c && *c != g.in_colors[i])
      throw ColorMismatch("edge into '" + g.name + "' slot " + std::to_string(i + 1) +
                          ": expected " + g.in_colors[i] + ", got " + *c);
  }
  return g.out_color;
}
}  // namespace

void validate_tree(const Signature& sig, const Tree& t) {
  check_colors(sig, t);
  const auto ls = t.labels();
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] != i + 1)
      throw Error("leaf labels of '" + t.key() + "' are not exactly 1..n");
}

std::optional<std::string> root_color(const Signature& sig, const Tree& t) {
  if (t.is_leaf()) return std::nullopt;
  return sig.generator(t.gen()).out_color;
}

std::optional<std::string> leaf_color(const Signature& sig, const Tree& t,
                                      std::size_t label) {
  if (t.is_leaf()) return std::nullopt;
  const Generator& g = sig.generator(t.gen());
  for (std::size_t i = 0; i < t.children().size(); ++i) {
    const Tree& c = t.children()[i];
    if (c.is_leaf()) {
      if (c.label() == label) return g.in_colors[i];
      continue;
    }
    const auto sub = c.labels();
    if (std::binary_search(sub.begin(), sub.end(), label)) return leaf_color(sig, c, label);
  }
  return std::nullopt;
}

namespace {
// Relabel: l -> l + delta for l > threshold; leaves <= threshold untouched.
Tree shift_above(const Tree& t, std::size_t threshold, std::size_t delta) {
  if (t.is_leaf())
    return t.label() > threshold ? Tree::leaf(t.label() + delta) : t;
  std::vector<Tree> ch;
  ch.reserve(t.children().size());
  for (const auto& c : t.children()) ch.push_back(shift_above(c, threshold, delta));
  return Tree::node(t.gen(), std::move(ch));
}

Tree shift_all(const Tree& t, std::size_t delta) { return shift_above(t, 0, delta); }

Tree replace_leaf(const Tree& t, std::size_t target, const Tree& repl,
                  std::size_t delta) {
  if (t.is_leaf()) {
    if (t.label() == target) return repl;
    return t.label() > target ? Tree::leaf(t.label() + delta) : t;
  }
  std::vector<Tree> ch;
  ch.reserve(t.children().size());
  for (const auto& c : t.children()) ch.push_back(replace_leaf(c, target, repl, delta));
  return Tree::node(t.gen(), std::move(ch));
}
}  // namespace

Tree graft(const Signature& sig, const Tree& t, std::size_t i, const Tree& s) {
  const std::size_t n = t.arity();
  if (i < 1 || i > n)
    throw PositionOutOfRange("graft position " + std::to_string(i) + " of arity " +
                             std::to_string(n));
  const auto expected = leaf_color(sig, t, i);
  const auto provided = root_color(sig, s);
  if (expected && provided && *expected != *provided)
    throw ColorMismatch("graft at " + std::to_string(i) + ": expected " + *expected +
                        ", got " + *provided);
  const std::size_t k = s.arity();
  return replace_leaf(t, i, shift_all(s, i - 1), k - 1);
}

Tree gamma(const Signature& sig, const Tree& t, const std::vector<Tree>& args) {
  const std::size_t n = t.arity();
  if (args.size() != n)
    throw ArityMismatch("gamma: tree of arity " + std::to_string(n) + " applied to " +
                        std::to_string(args.size()) + " arguments");
  Tree acc = t;
  for (std::size_t i = n; i >= 1; --i) acc = graft(sig, acc, i, args[i - 1]);
  return acc;
}

namespace detail {
Tree relabel_leaves(const Tree& t, const Perm& sigma) {
  if (t.is_leaf()) {
    if (t.label() > sigma.size()) throw PositionOutOfRange("label beyond permutation");
    return Tree::leaf(sigma[t.label() - 1]);
  }
  std::vector<Tree> ch;
  ch.reserve(t.children().size());
  for (const auto& c : t.children()) ch.push_back(relabel_leaves(c, sigma));
  return Tree::node(t.gen(), std::move(ch));
}
}  // namespace detail

Tree act_perm(const Signature& sig, const Tree& t, const Perm& sigma) {
  if (!sig.symmetric()) throw ModeError("leaf relabeling needs symmetric mode");
  if (!is_perm(sigma)) throw Error("not a permutation");
  return detail::relabel_leaves(t, sigma);
}

namespace {
using ShapeMemo = std::map<std::pair<std::size_t, std::string>, std::vector<Tree>>;

// Unary generators whose colors form a cycle make every component infinite.
void check_enumerable(const Signature& sig) {
  std::map<std::string, std::vector<std::string>> edges;
  for (const auto& g : sig.generators())
    if (g.arity == 1) edges[g.out_color].push_back(g.in_colors[0]);
  std::map<std::string, int> state;  // 0 unseen, 1 in progress, 2 done
  auto dfs = [&](auto&& self, const std::string& c) -> bool {
    if (state[c] == 1) return false;
    if (state[c] == 2) return true;
    state[c] = 1;
    for (const auto& d : edges[c])
      if (!self(self, d)) return false;
    state[c] = 2;
    return true;
  };
  for (const auto& [c, _] : edges)
    if (!dfs(dfs, c))
      throw ArityOutOfRange("unary generator colors form a cycle; tree family is infinite");
}

// Planar shapes (identity labeling) of arity n with given root color.
const std::vector<Tree>& planar_shapes(const Signature& sig, std::size_t n,
                                       const std::string& color, ShapeMemo& memo) {
  auto it = memo.find({n, color});
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  if (n == 1) out.push_back(identity_tree());
  for (const auto& g : sig.generators()) {
    if (g.out_color != color || g.arity > n) continue;
    // Compositions of n into g.arity parts >= 1, children drawn recursively.
    std::vector<std::size_t> parts(g.arity, 1);
    std::vector<Tree> picked(g.arity, identity_tree());
    auto rec = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
      const std::size_t slots_left = g.arity - slot;
      if (slots_left == 0) {
        if (remaining != 0) return;
        std::vector<Tree> ch;
        ch.reserve(g.arity);
        std::size_t offset = 0;
        for (std::size_t s = 0; s < g.arity; ++s) {
          ch.push_back(shift_all(picked[s], offset));
          offset += parts[s];
        }
        out.push_back(Tree::node(g.name, std::move(ch)));
        return;
      }
      for (std::size_t take = 1; take + (slots_left - 1) <= remaining; ++take) {
        parts[slot] = take;
        for (const Tree& sub : planar_shapes(sig, take, g.in_colors[slot], memo)) {
          picked[slot] = sub;
          self(self, slot + 1, remaining - take);
        }
      }
    };
    rec(rec, 0, n);
  }
  std::sort(out.begin(), out.end());
  return memo.emplace(std::make_pair(n, color), std::move(out)).first->second;
}
}  // namespace

std::vector<Tree> enumerate_trees(const Signature& sig, std::size_t n,
                                  const std::string& out_color) {
  if (n < 1) throw ArityOutOfRange("arity must be >= 1");
  check_enumerable(sig);
  ShapeMemo memo;
  const auto& shapes = planar_shapes(sig, n, out_color, memo);
  if (!sig.symmetric()) return shapes;
  std::vector<Tree> out;
  out.reserve(shapes.size() * 2);
  for (const auto& sigma : all_perms(n))
    for (const auto& s : shapes) out.push_back(act_perm(sig, s, sigma));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace operads
