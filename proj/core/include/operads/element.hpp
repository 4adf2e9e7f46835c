#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "operads/forest.hpp"
#include "operads/rational.hpp"
#include "operads/tree.hpp"

namespace operads {

/// Finite rational linear combination of trees of one arity. Zero
/// coefficients are never stored; terms are keyed and ordered canonically.
class OperadElement {
 public:
  OperadElement(Signature sig, std::size_t arity);
  static OperadElement basis(Signature sig, const Tree& t, Rational coeff = Rational(1));

  const Signature& sig() const { return sig_; }
  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Terms keyed by Tree::key(), in key order.
  const std::map<std::string, std::pair<Tree, Rational>>& terms() const { return terms_; }
  Rational coeff(const Tree& t) const;

  void add(const Tree& t, const Rational& c);

  OperadElement& operator+=(const OperadElement& o);
  OperadElement& operator-=(const OperadElement& o);
  OperadElement& operator*=(const Rational& c);
  friend OperadElement operator+(OperadElement a, const OperadElement& b) { return a += b; }
  friend OperadElement operator-(OperadElement a, const OperadElement& b) { return a -= b; }
  friend OperadElement operator*(const Rational& c, OperadElement a) { return a *= c; }
  friend bool operator==(const OperadElement& a, const OperadElement& b);

 private:
  Signature sig_;
  std::size_t arity_;
  std::map<std::string, std::pair<Tree, Rational>> terms_;
};

/// Finite rational linear combination of forests of one type (m inputs,
/// n outputs).
class PropElement {
 public:
  PropElement(Signature sig, std::size_t inputs, std::size_t outputs);
  static PropElement basis(Signature sig, const Forest& f, Rational coeff = Rational(1));

  const Signature& sig() const { return sig_; }
  std::size_t inputs() const { return inputs_; }
  std::size_t outputs() const { return outputs_; }
  bool is_zero() const { return terms_.empty(); }

  const std::map<std::string, std::pair<Forest, Rational>>& terms() const { return terms_; }
  Rational coeff(const Forest& f) const;

  void add(const Forest& f, const Rational& c);

  PropElement& operator+=(const PropElement& o);
  PropElement& operator-=(const PropElement& o);
  PropElement& operator*=(const Rational& c);
  friend PropElement operator+(PropElement a, const PropElement& b) { return a += b; }
  friend PropElement operator-(PropElement a, const PropElement& b) { return a -= b; }
  friend PropElement operator*(const Rational& c, PropElement a) { return a *= c; }
  friend bool operator==(const PropElement& a, const PropElement& b);

 private:
  Signature sig_;
  std::size_t inputs_, outputs_;
  std::map<std::string, std::pair<Forest, Rational>> terms_;
};

/// Multilinear extension of gamma.
OperadElement lin_gamma(const OperadElement& t, const std::vector<OperadElement>& args);

/// Convenience: basis trees in every argument slot.
OperadElement lin_gamma(const OperadElement& t, const std::vector<Tree>& args);

/// act_perm extended linearly.
OperadElement lin_act_perm(const OperadElement& e, const Perm& sigma);

/// Bilinear extensions of forest tensor and composition.
PropElement lin_tensor(const PropElement& a, const PropElement& b);
PropElement lin_compose(const PropElement& a, const PropElement& b);

/// The m+n parallel wires with the two blocks swapped; symmetric mode only.
PropElement braiding(const Signature& sig, std::size_t m, std::size_t n);

PropElement identity_element(const Signature& sig, std::size_t n);

/// Basis of the (m, l) component of the PROP generated by an operad with the
/// given per-arity tree bases: forests t_1 ⊗ ... ⊗ t_l over all arity
/// compositions m_1 + ... + m_l = m. basis_by_arity[a] holds the arity-a
/// basis (index 0 unused).
std::vector<Forest> prop_component_basis(const std::vector<std::vector<Tree>>& basis_by_arity,
                                         std::size_t m, std::size_t l);

/// A PROP presented by component bases.
using PropBasisFn = std::function<std::vector<Forest>(std::size_t inputs, std::size_t outputs)>;

/// The PROP generated by the free operad on sig.
PropBasisFn free_prop_basis(const Signature& sig, std::size_t max_arity = 8);

/// n-to-1 part of a PROP, unwrapped to trees.
std::vector<Tree> underlying_operad(const PropBasisFn& prop, std::size_t n);

}  // namespace operads
