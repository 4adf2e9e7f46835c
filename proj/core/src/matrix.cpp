#include "operads/matrix.hpp"

#include <algorithm>

#include "operads/error.hpp"

namespace operads {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

std::vector<Rational> RatMatrix::row(std::size_t r) const {
  return {e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_};
}

void RatMatrix::append_row(const std::vector<Rational>& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw LengthMismatch("row length != cols");
  e_.insert(e_.end(), v.begin(), v.end());
  ++rows_;
}

RatMatrix rref(const RatMatrix& m) {
  RatMatrix a = m;
  const std::size_t nr = a.rows(), nc = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < nc && pivot_row < nr; ++col) {
    std::size_t sel = pivot_row;
    while (sel < nr && a.at(sel, col).is_zero()) ++sel;
    if (sel == nr) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < nc; ++c) std::swap(a.at(sel, c), a.at(pivot_row, c));
    const Rational p = a.at(pivot_row, col);
    for (std::size_t c = col; c < nc; ++c) a.at(pivot_row, c) /= p;
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      const Rational f = a.at(r, col);
      for (std::size_t c = col; c < nc; ++c) a.at(r, c) -= f * a.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return a;
}

std::size_t rank(const RatMatrix& m) {
  const RatMatrix r = rref(m);
  std::size_t n = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t c = 0; c < r.cols(); ++c)
      if (!r.at(i, c).is_zero()) {
        ++n;
        break;
      }
  return n;
}

bool in_span(const std::vector<Rational>& v,
             const std::vector<std::vector<Rational>>& basis) {
  for (const auto& b : basis)
    if (b.size() != v.size()) throw LengthMismatch("vector dimensions differ");
  IncrementalRref acc(v.size());
  for (const auto& b : basis) acc.add_row(sparsify(b));
  return acc.reduce(sparsify(v)).empty();
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Rational(1);
  }
  const RatMatrix red = rref(aug);
  for (std::size_t i = 0; i < n; ++i)
    if (red.at(i, i) != Rational(1)) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = red.at(r, n + c);
  return inv;
}

SparseRow sparsify(const std::vector<Rational>& dense) {
  SparseRow out;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (!dense[c].is_zero()) out.emplace_back(c, dense[c]);
  return out;
}

std::vector<Rational> densify(const SparseRow& row, std::size_t cols) {
  std::vector<Rational> out(cols);
  for (const auto& [c, x] : row) out[c] = x;
  return out;
}

namespace {

// r -= f * s, both sorted sparse rows.
SparseRow axpy(const SparseRow& r, const Rational& f, const SparseRow& s) {
  SparseRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -(f * s[j].second));
      ++j;
    } else {
      Rational x = r[i].second - f * s[j].second;
      if (!x.is_zero()) out.emplace_back(r[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow IncrementalRref::reduce(SparseRow row) const {
  // Entries are sorted by column; eliminating the leading pivot never
  // reintroduces smaller columns, so a single left-to-right sweep suffices.
  std::size_t i = 0;
  while (i < row.size()) {
    auto it = rows_.find(row[i].first);
    if (it == rows_.end()) {
      ++i;
      continue;
    }
    const Rational f = row[i].second;
    SparseRow next = axpy(row, f, it->second);
    // Everything strictly left of position i is untouched and pivot-free.
    row = std::move(next);
  }
  return row;
}

bool IncrementalRref::add_row(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  const std::size_t pivot = row[0].first;
  const Rational p = row[0].second;
  for (auto& [c, x] : row) x /= p;
  // Clear the new pivot column from existing rows to keep the form reduced.
  for (auto& [pc, r] : rows_) {
    auto hit = std::lower_bound(
        r.begin(), r.end(), pivot,
        [](const auto& e, std::size_t c) { return e.first < c; });
    if (hit == r.end() || hit->first != pivot) continue;
    r = axpy(r, hit->second, row);
  }
  rows_.emplace(pivot, std::move(row));
  return true;
}

RatMatrix IncrementalRref::to_matrix() const {
  RatMatrix m(rows_.size(), cols_);
  std::size_t r = 0;
  for (const auto& [pc, row] : rows_) {
    for (const auto& [c, x] : row) m.at(r, c) = x;
    ++r;
  }
  return m;
}

}  // namespace operads
