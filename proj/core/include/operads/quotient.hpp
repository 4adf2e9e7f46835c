#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "operads/element.hpp"
#include "operads/matrix.hpp"

namespace operads {

/// A signature together with relators generating an operadic ideal. Each
/// relator is a nonzero homogeneous element; the quotient machinery works
/// arity by arity up to max_arity.
class Presentation {
 public:
  Presentation(Signature sig, std::vector<OperadElement> relators,
               std::size_t max_arity = 6);

  const Signature& sig() const { return sig_; }
  const std::vector<OperadElement>& relators() const { return relators_; }
  std::size_t max_arity() const { return max_arity_; }

  /// Serialization of signature and relators; slice-cache key material.
  const std::string& key() const { return key_; }

 private:
  Signature sig_;
  std::vector<OperadElement> relators_;
  std::size_t max_arity_;
  std::string key_;
};

/// Arity component of the ideal: the tree basis of that arity plus the row
/// space of the ideal in reduced echelon form. Every row is the coordinate
/// vector of an ideal element; the row space is the full component.
struct IdealSlice {
  std::size_t arity = 0;
  std::vector<Tree> basis_trees;
  std::vector<SparseRow> span_rows;  // reduced echelon, pivots increasing

  std::size_t rank() const { return span_rows.size(); }
  std::size_t dim() const { return basis_trees.size(); }
  RatMatrix span_matrix() const;

  /// Coordinates of e in basis_trees order; SignatureMismatch for trees
  /// outside the basis.
  SparseRow coordinates(const OperadElement& e) const;
  /// Residual of e's coordinates after eliminating all pivots.
  SparseRow reduce(const OperadElement& e) const;
  OperadElement element_from(const SparseRow& coords, const Signature& sig) const;
};

/// Spanning computation for the arity-n ideal component: every placement
/// gamma(u; v_1,...,gamma(r; w_1..w_j),...,v_k) of a relator r among basis
/// trees, closed under the symmetric-group action in symmetric mode.
IdealSlice ideal_slice(const Presentation& p, std::size_t n);

/// Same computation over a caller-chosen basis enumeration order.
IdealSlice ideal_slice(const Presentation& p, std::size_t n, std::vector<Tree> basis);

bool is_member(const OperadElement& e, const Presentation& p);

std::size_t quotient_dim(const Presentation& p, std::size_t n);

/// Deterministic coset representative: coordinates reduced against the slice
/// pivots. Linear and idempotent; normal_form(a) == normal_form(b) iff the
/// difference lies in the ideal.
OperadElement normal_form(const OperadElement& e, const Presentation& p);

/// Concurrent slice cache keyed by (presentation key, arity). Reads are
/// shared; population takes the writer lock.
class SliceCache {
 public:
  std::shared_ptr<const IdealSlice> get(const Presentation& p, std::size_t n);
  void clear();

 private:
  std::shared_mutex mu_;
  std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const IdealSlice>> slices_;
};

/// Process-wide cache used by is_member / quotient_dim / normal_form.
SliceCache& slice_cache();

}  // namespace operads
