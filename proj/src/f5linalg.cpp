#include "quintic/f5linalg.hpp"

#include <algorithm>
#include <sstream>

namespace quintic {

namespace {
inline uint8_t inv5(uint8_t a) {
  static const uint8_t t[5] = {0, 1, 3, 2, 4};
  return t[a];
}
}  // namespace

int rref(F5Matrix& m) {
  if (m.empty()) return 0;
  size_t ncols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < m.size(); ++c) {
    size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[r], m[piv]);
    uint8_t iv = inv5(m[r][c]);
    for (auto& x : m[r]) x = (uint8_t)(x * iv % 5);
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      uint8_t f = m[i][c];
      for (size_t j = 0; j < ncols; ++j)
        m[i][j] = (uint8_t)((m[i][j] + 5 - f * m[r][j] % 5) % 5);
    }
    ++r;
  }
  m.resize(r);
  return (int)r;
}

F5Matrix kernel(const F5Matrix& cond, size_t ncols) {
  F5Matrix m = cond;
  rref(m);
  std::vector<int> pivot_of_col(ncols, -1);
  for (size_t r = 0; r < m.size(); ++r) {
    size_t c = 0;
    while (c < ncols && m[r][c] == 0) ++c;
    if (c < ncols) pivot_of_col[c] = (int)r;
  }
  // columns without pivots are free; back-substitute each
  F5Matrix out;
  for (size_t c = 0; c < ncols; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    F5Vec v(ncols, 0);
    v[c] = 1;
    for (size_t c2 = 0; c2 < ncols; ++c2) {
      int pr = pivot_of_col[c2];
      if (pr >= 0) v[c2] = (uint8_t)((5 - m[pr][c] % 5) % 5);
    }
    out.push_back(v);
  }
  return out;
}

F5Subspace F5Subspace::span(AmbientPtr amb, const F5Matrix& vectors) {
  for (const auto& v : vectors)
    if (v.size() != amb->dim()) throw domain_error("span: vector/ambient size mismatch");
  F5Subspace s;
  s.amb_ = std::move(amb);
  s.rows_ = vectors;
  rref(s.rows_);
  return s;
}

F5Subspace F5Subspace::zero(AmbientPtr amb) { return span(std::move(amb), {}); }

F5Subspace F5Subspace::full(AmbientPtr amb) {
  F5Matrix id(amb->dim(), F5Vec(amb->dim(), 0));
  for (size_t i = 0; i < id.size(); ++i) id[i][i] = 1;
  return span(std::move(amb), id);
}

bool F5Subspace::contains(const F5Vec& v) const {
  if (v.size() != amb_->dim()) throw domain_error("contains: size mismatch");
  F5Vec w = v;
  for (const auto& row : rows_) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    uint8_t f = w[c];
    if (f)
      for (size_t j = 0; j < w.size(); ++j)
        w[j] = (uint8_t)((w[j] + 5 - f * row[j] % 5) % 5);
  }
  return std::all_of(w.begin(), w.end(), [](uint8_t x) { return x == 0; });
}

bool F5Subspace::operator==(const F5Subspace& o) const {
  return amb_ && o.amb_ && *amb_ == *o.amb_ && rows_ == o.rows_;
}

F5Matrix F5Subspace::annihilator() const { return kernel(rows_, amb_->dim()); }

F5Subspace F5Subspace::intersect(const F5Subspace& o) const {
  if (!(*amb_ == *o.amb_)) throw domain_error("intersect: ambient mismatch");
  F5Matrix cond = annihilator();
  F5Matrix c2 = o.annihilator();
  cond.insert(cond.end(), c2.begin(), c2.end());
  return span(amb_, kernel(cond, amb_->dim()));
}

F5Subspace F5Subspace::sum(const F5Subspace& o) const {
  if (!(*amb_ == *o.amb_)) throw domain_error("sum: ambient mismatch");
  F5Matrix rows = rows_;
  rows.insert(rows.end(), o.rows_.begin(), o.rows_.end());
  return span(amb_, rows);
}

std::string F5Subspace::render(const F5Vec& row) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < row.size(); ++i) {
    if (!row[i]) continue;
    if (!first) os << "*";
    const std::string& lab = amb_->labels[i];
    bool atom = lab.find_first_of("+-*/ ") == std::string::npos;
    if (atom)
      os << lab;
    else
      os << "(" << lab << ")";
    if (row[i] != 1) os << "^" << (int)row[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

std::vector<std::string> F5Subspace::render_basis() const {
  std::vector<std::string> out;
  for (const auto& r : rows_) out.push_back(render(r));
  return out;
}

F5Subspace preimage(AmbientPtr domain, const F5Matrix& A, const F5Subspace& T) {
  if (A.size() != domain->dim()) throw domain_error("preimage: map/domain shape mismatch");
  for (const auto& row : A)
    if (row.size() != T.ambient()->dim())
      throw domain_error("preimage: map/codomain shape mismatch");
  // x A in T  <=>  (x A) . c = 0 for all annihilator rows c of T
  F5Matrix cond;
  for (const auto& c : T.annihilator()) {
    F5Vec row(domain->dim(), 0);
    for (size_t i = 0; i < domain->dim(); ++i) {
      int acc = 0;
      for (size_t j = 0; j < c.size(); ++j) acc += A[i][j] * c[j];
      row[i] = (uint8_t)(acc % 5);
    }
    cond.push_back(row);
  }
  return F5Subspace::span(domain, kernel(cond, domain->dim()));
}

}  // namespace quintic
