#pragma once

#include <set>
#include <string>
#include <vector>

namespace operads {

/// Default edge color of monochrome signatures.
inline const std::string kDefaultColor = "*";

enum class Mode { Planar, Symmetric };

/// An operation symbol: name, arity >= 1 and edge colors.
struct Generator {
  std::string name;
  std::size_t arity = 0;
  std::vector<std::string> in_colors;  // length == arity
  std::string out_color = kDefaultColor;
};

/// Generator alphabet plus color set and planar-or-symmetric mode.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<Generator> generators, Mode mode);
  Signature(std::vector<Generator> generators, std::set<std::string> colors, Mode mode);

  const std::vector<Generator>& generators() const { return generators_; }
  const std::set<std::string>& colors() const { return colors_; }
  Mode mode() const { return mode_; }
  bool symmetric() const { return mode_ == Mode::Symmetric; }

  /// Throws SignatureMismatch when the name is unknown.
  const Generator& generator(const std::string& name) const;
  const Generator* find(const std::string& name) const;

  /// Stable identification of signature + mode; cache key material.
  std::string key() const;

 private:
  void validate() const;

  std::vector<Generator> generators_;
  std::set<std::string> colors_{kDefaultColor};
  Mode mode_ = Mode::Planar;
};

/// Convenience: monochrome generators named `name:arity`.
Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>& gens,
                         Mode mode);

// ---- permutations ----------------------------------------------------------
// A permutation of {1..n} is stored as p[i-1] = sigma(i).

using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n);
bool is_perm(const Perm& p);
Perm inverse_perm(const Perm& p);
/// (a after b): compose_perm(a,b)(i) = a(b(i)).
Perm compose_perm(const Perm& a, const Perm& b);
int perm_sign(const Perm& p);
std::vector<Perm> all_perms(std::size_t n);

}  // namespace operads
