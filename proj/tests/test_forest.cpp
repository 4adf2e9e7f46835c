#include "operads/forest.hpp"

#include <random>

#include "doctest.h"
#include "operads/error.hpp"

using namespace operads;

namespace {

const Signature kSym = make_signature({{"g", 2}}, Mode::Symmetric);

Forest random_forest(const Signature& sig, std::size_t inputs, std::size_t outputs,
                     std::mt19937_64& rng) {
  // Arity composition of `inputs` into `outputs` parts.
  std::vector<std::size_t> arities(outputs, 1);
  std::size_t extra = inputs - outputs;
  std::uniform_int_distribution<std::size_t> pick(0, outputs - 1);
  while (extra--) ++arities[pick(rng)];
  std::vector<Tree> trees;
  for (std::size_t a : arities) {
    const auto all = enumerate_trees(sig, a);
    std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
    trees.push_back(all[d(rng)]);
  }
  Perm io = identity_perm(inputs);
  std::shuffle(io.begin(), io.end(), rng);
  return Forest(std::move(trees), std::move(io));
}

Forest braid12() {
  return Forest({identity_tree(), identity_tree()}, {2, 1});
}

}  // namespace

TEST_CASE("normal form sorts each block and relabels the tree") {
  const auto trees = enumerate_trees(kSym, 2);  // g(1,2), g(2,1)
  const Forest f({trees[0], identity_tree()}, {3, 1, 2});
  // Block of the first tree is {3,1}: sorted to (1,3), tree relabeled.
  CHECK(f.input_order() == Perm{1, 3, 2});
  CHECK(f.trees()[0].key() == "g(2,1)");
  // Same wiring presented pre-normalized is equal.
  const Forest g({trees[1], identity_tree()}, {1, 3, 2});
  CHECK(f == g);
}

TEST_CASE("tensor with the empty forest and strict associativity") {
  std::mt19937_64 rng(31);
  const Forest empty;
  const Forest f = random_forest(kSym, 4, 2, rng);
  const Forest g = random_forest(kSym, 3, 2, rng);
  const Forest h = random_forest(kSym, 2, 1, rng);
  CHECK(forest_tensor(f, empty) == f);
  CHECK(forest_tensor(empty, f) == f);
  CHECK(forest_tensor(forest_tensor(f, g), h) == forest_tensor(f, forest_tensor(g, h)));
}

TEST_CASE("the transposition forest differs from two parallel wires") {
  CHECK(braid12() != identity_forest(2));
  CHECK(braid12().key() != identity_forest(2).key());
}

TEST_CASE("compose with identity forests") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const Forest f = random_forest(kSym, 5, 3, rng);
    CHECK(forest_compose(kSym, f, identity_forest(3)) == f);
    CHECK(forest_compose(kSym, identity_forest(5), f) == f);
  }
}

TEST_CASE("transposition squares to the identity") {
  CHECK(forest_compose(kSym, braid12(), braid12()) == identity_forest(2));
}

TEST_CASE("two single trees compose by grafting at the root") {
  const Tree g2 = corolla(kSym, "g");
  const Forest bottom = Forest::single(g2);
  // Top tree must have one input: a bare wire; gluing reproduces the tree.
  CHECK(forest_compose(kSym, bottom, Forest::single(identity_tree())) == bottom);
  // One wire into a corolla's first input: graft(g, 1, g).
  const Forest pair = Forest::concat({g2, identity_tree()});
  const Forest top = Forest::single(g2);
  const Forest out = forest_compose(kSym, pair, top);
  REQUIRE(out.outputs() == 1);
  CHECK(out.trees()[0] == graft(kSym, g2, 1, g2));
}

TEST_CASE("boundary mismatch") {
  CHECK_THROWS_AS(forest_compose(kSym, identity_forest(2), identity_forest(3)),
                  BoundaryMismatch);
}

TEST_CASE("interchange of tensor and composition") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<std::size_t> d(1, 3);
    const std::size_t n = d(rng), r = d(rng);
    const Forest f = random_forest(kSym, n + d(rng) - 1, n, rng);
    const Forest g = random_forest(kSym, r + d(rng) - 1, r, rng);
    // f2 consumes f's outputs, g2 consumes g's.
    const Forest f2 = random_forest(kSym, n, std::uniform_int_distribution<std::size_t>(1, n)(rng), rng);
    const Forest g2 = random_forest(kSym, r, std::uniform_int_distribution<std::size_t>(1, r)(rng), rng);
    // (f tensor g) ; (f2 tensor g2) == (f;f2) tensor (g;g2)
    const Forest lhs = forest_compose(kSym, forest_tensor(f, g),
                                      forest_tensor(f2, g2));
    const Forest rhs = forest_tensor(forest_compose(kSym, f, f2),
                                     forest_compose(kSym, g, g2));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("composition is associative") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> d(1, 3);
    const std::size_t a = d(rng) + 1;
    const std::size_t b = std::uniform_int_distribution<std::size_t>(1, a)(rng);
    const std::size_t c = std::uniform_int_distribution<std::size_t>(1, b)(rng);
    const Forest f = random_forest(kSym, a + 1, a, rng);
    const Forest g = random_forest(kSym, a, b, rng);
    const Forest h = random_forest(kSym, b, c, rng);
    CHECK(forest_compose(kSym, forest_compose(kSym, f, g), h) ==
          forest_compose(kSym, f, forest_compose(kSym, g, h)));
  }
}
