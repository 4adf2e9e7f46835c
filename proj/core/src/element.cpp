#include "operads/element.hpp"

#include <algorithm>

#include "operads/error.hpp"

namespace operads {

OperadElement::OperadElement(Signature sig, std::size_t arity)
    : sig_(std::move(sig)), arity_(arity) {
  if (arity_ < 1) throw ArityOutOfRange("operad element arity must be >= 1");
}

OperadElement OperadElement::basis(Signature sig, const Tree& t, Rational coeff) {
  OperadElement e(std::move(sig), t.arity());
  e.add(t, coeff);
  return e;
}

Rational OperadElement::coeff(const Tree& t) const {
  auto it = terms_.find(t.key());
  return it == terms_.end() ? Rational(0) : it->second.second;
}

void OperadElement::add(const Tree& t, const Rational& c) {
  if (c.is_zero()) return;
  if (t.arity() != arity_)
    throw ArityMismatch("term arity " + std::to_string(t.arity()) +
                        " in element of arity " + std::to_string(arity_));
  auto [it, fresh] = terms_.try_emplace(t.key(), t, c);
  if (!fresh) {
    it->second.second += c;
    if (it->second.second.is_zero()) terms_.erase(it);
  }
}

OperadElement& OperadElement::operator+=(const OperadElement& o) {
  if (o.arity_ != arity_) throw ArityMismatch("adding elements of different arities");
  if (o.sig_.key() != sig_.key()) throw SignatureMismatch("adding over different signatures");
  for (const auto& [k, tc] : o.terms_) add(tc.first, tc.second);
  return *this;
}

OperadElement& OperadElement::operator-=(const OperadElement& o) {
  if (o.arity_ != arity_) throw ArityMismatch("subtracting elements of different arities");
  if (o.sig_.key() != sig_.key()) throw SignatureMismatch("mixing signatures");
  for (const auto& [k, tc] : o.terms_) add(tc.first, -tc.second);
  return *this;
}

OperadElement& OperadElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, tc] : terms_) tc.second *= c;
  return *this;
}

bool operator==(const OperadElement& a, const OperadElement& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.second != ib->second.second) return false;
  return true;
}

PropElement::PropElement(Signature sig, std::size_t inputs, std::size_t outputs)
    : sig_(std::move(sig)), inputs_(inputs), outputs_(outputs) {}

PropElement PropElement::basis(Signature sig, const Forest& f, Rational coeff) {
  PropElement e(std::move(sig), f.inputs(), f.outputs());
  e.add(f, coeff);
  return e;
}

Rational PropElement::coeff(const Forest& f) const {
  auto it = terms_.find(f.key());
  return it == terms_.end() ? Rational(0) : it->second.second;
}

void PropElement::add(const Forest& f, const Rational& c) {
  if (c.is_zero()) return;
  if (f.inputs() != inputs_ || f.outputs() != outputs_)
    throw BoundaryMismatch("term of type (" + std::to_string(f.inputs()) + "," +
                           std::to_string(f.outputs()) + ") in element of type (" +
                           std::to_string(inputs_) + "," + std::to_string(outputs_) + ")");
  auto [it, fresh] = terms_.try_emplace(f.key(), f, c);
  if (!fresh) {
    it->second.second += c;
    if (it->second.second.is_zero()) terms_.erase(it);
  }
}

PropElement& PropElement::operator+=(const PropElement& o) {
  if (o.inputs_ != inputs_ || o.outputs_ != outputs_)
    throw BoundaryMismatch("adding elements of different types");
  for (const auto& [k, fc] : o.terms_) add(fc.first, fc.second);
  return *this;
}

PropElement& PropElement::operator-=(const PropElement& o) {
  if (o.inputs_ != inputs_ || o.outputs_ != outputs_)
    throw BoundaryMismatch("subtracting elements of different types");
  for (const auto& [k, fc] : o.terms_) add(fc.first, -fc.second);
  return *this;
}

PropElement& PropElement::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, fc] : terms_) fc.second *= c;
  return *this;
}

bool operator==(const PropElement& a, const PropElement& b) {
  if (a.inputs_ != b.inputs_ || a.outputs_ != b.outputs_ ||
      a.terms_.size() != b.terms_.size())
    return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.second != ib->second.second) return false;
  return true;
}

OperadElement lin_gamma(const OperadElement& t, const std::vector<OperadElement>& args) {
  if (args.size() != t.arity())
    throw ArityMismatch("gamma over " + std::to_string(args.size()) +
                        " arguments for arity " + std::to_string(t.arity()));
  std::size_t total = 0;
  for (const auto& a : args) total += a.arity();
  OperadElement out(t.sig(), total == 0 ? 1 : total);
  // Expand the product of sums term by term.
  std::vector<Tree> picked(args.size(), identity_tree());
  for (const auto& [tk, tc] : t.terms()) {
    auto rec = [&](auto&& self, std::size_t slot, const Rational& c) -> void {
      if (slot == args.size()) {
        out.add(gamma(t.sig(), tc.first, picked), c);
        return;
      }
      for (const auto& [ak, ac] : args[slot].terms()) {
        picked[slot] = ac.first;
        self(self, slot + 1, c * ac.second);
      }
    };
    rec(rec, 0, tc.second);
  }
  return out;
}

OperadElement lin_gamma(const OperadElement& t, const std::vector<Tree>& args) {
  std::vector<OperadElement> lifted;
  lifted.reserve(args.size());
  for (const auto& a : args) lifted.push_back(OperadElement::basis(t.sig(), a));
  return lin_gamma(t, lifted);
}

OperadElement lin_act_perm(const OperadElement& e, const Perm& sigma) {
  OperadElement out(e.sig(), e.arity());
  for (const auto& [k, tc] : e.terms())
    out.add(act_perm(e.sig(), tc.first, sigma), tc.second);
  return out;
}

PropElement lin_tensor(const PropElement& a, const PropElement& b) {
  PropElement out(a.sig(), a.inputs() + b.inputs(), a.outputs() + b.outputs());
  for (const auto& [ka, fa] : a.terms())
    for (const auto& [kb, fb] : b.terms())
      out.add(forest_tensor(fa.first, fb.first), fa.second * fb.second);
  return out;
}

PropElement lin_compose(const PropElement& a, const PropElement& b) {
  if (a.outputs() != b.inputs())
    throw BoundaryMismatch("middle boundary " + std::to_string(a.outputs()) + " vs " +
                           std::to_string(b.inputs()));
  PropElement out(a.sig(), a.inputs(), b.outputs());
  for (const auto& [ka, fa] : a.terms())
    for (const auto& [kb, fb] : b.terms())
      out.add(forest_compose(a.sig(), fa.first, fb.first), fa.second * fb.second);
  return out;
}

PropElement braiding(const Signature& sig, std::size_t m, std::size_t n) {
  if (!sig.symmetric()) throw ModeError("braiding needs symmetric mode");
  Perm io(m + n);
  for (std::size_t j = 1; j <= n + m; ++j) io[j - 1] = j <= n ? m + j : j - n;
  Forest f(std::vector<Tree>(m + n, identity_tree()), std::move(io));
  return PropElement::basis(sig, f);
}

PropElement identity_element(const Signature& sig, std::size_t n) {
  return PropElement::basis(sig, identity_forest(n));
}

std::vector<Forest> prop_component_basis(
    const std::vector<std::vector<Tree>>& basis_by_arity, std::size_t m, std::size_t l) {
  std::vector<Forest> out;
  if (l < 1 || m < l) return out;
  std::vector<Tree> picked(l, identity_tree());
  auto rec = [&](auto&& self, std::size_t slot, std::size_t remaining) -> void {
    const std::size_t slots_left = l - slot;
    if (slots_left == 0) {
      if (remaining == 0) out.push_back(Forest::concat(picked));
      return;
    }
    for (std::size_t take = 1; take + (slots_left - 1) <= remaining; ++take) {
      if (take >= basis_by_arity.size()) break;
      for (const Tree& t : basis_by_arity[take]) {
        picked[slot] = t;
        self(self, slot + 1, remaining - take);
      }
    }
  };
  rec(rec, 0, m);
  std::sort(out.begin(), out.end());
  return out;
}

PropBasisFn free_prop_basis(const Signature& sig, std::size_t max_arity) {
  return [sig, max_arity](std::size_t m, std::size_t l) {
    if (m > max_arity) throw ArityOutOfRange("component beyond max_arity");
    std::vector<std::vector<Tree>> basis(m + 1);
    for (std::size_t a = 1; a <= m; ++a) basis[a] = enumerate_trees(sig, a);
    return prop_component_basis(basis, m, l);
  };
}

std::vector<Tree> underlying_operad(const PropBasisFn& prop, std::size_t n) {
  std::vector<Tree> out;
  for (const Forest& f : prop(n, 1)) {
    if (f.outputs() != 1) throw BoundaryMismatch("operad part must be single-output");
    out.push_back(f.trees()[0]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace operads
