#include "operads/signature.hpp"

#include <algorithm>

#include "operads/error.hpp"

namespace operads {

Signature::Signature(std::vector<Generator> generators, Mode mode)
    : generators_(std::move(generators)), mode_(mode) {
  for (const auto& g : generators_) {
    colors_.insert(g.out_color);
    colors_.insert(g.in_colors.begin(), g.in_colors.end());
  }
  validate();
}

Signature::Signature(std::vector<Generator> generators, std::set<std::string> colors,
                     Mode mode)
    : generators_(std::move(generators)), colors_(std::move(colors)), mode_(mode) {
  validate();
}

void Signature::validate() const {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.arity < 1) throw SignatureMismatch("generator '" + g.name + "' has arity 0");
    if (g.in_colors.size() != g.arity)
      throw SignatureMismatch("generator '" + g.name + "': in_colors length != arity");
    if (!seen.insert(g.name).second)
      throw SignatureMismatch("duplicate generator '" + g.name + "'");
    if (!colors_.count(g.out_color))
      throw SignatureMismatch("color '" + g.out_color + "' not declared");
    for (const auto& c : g.in_colors)
      if (!colors_.count(c)) throw SignatureMismatch("color '" + c + "' not declared");
  }
}

const Generator& Signature::generator(const std::string& name) const {
  if (const Generator* g = find(name)) return *g;
  throw SignatureMismatch("unknown generator '" + name + "'");
}

const Generator* Signature::find(const std::string& name) const {
  for (const auto& g : generators_)
    if (g.name == name) return &g;
  return nullptr;
}

std::string Signature::key() const {
  std::string k = mode_ == Mode::Planar ? "P;" : "S;";
  for (const auto& g : generators_) {
    k += g.name + ":" + std::to_string(g.arity) + ":";
    for (const auto& c : g.in_colors) k += c + ",";
    k += "->" + g.out_color + ";";
  }
  return k;
}

Signature make_signature(const std::vector<std::pair<std::string, std::size_t>>& gens,
                         Mode mode) {
  std::vector<Generator> gs;
  gs.reserve(gens.size());
  for (const auto& [name, arity] : gens)
    gs.push_back({name, arity, std::vector<std::string>(arity, kDefaultColor),
                  kDefaultColor});
  return Signature(std::move(gs), mode);
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

bool is_perm(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::size_t v : p) {
    if (v < 1 || v > p.size() || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = i + 1;
  return q;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw LengthMismatch("permutation sizes differ");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i] - 1];
  return c;
}

int perm_sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

std::vector<Perm> all_perms(std::size_t n) {
  Perm p = identity_perm(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace operads
