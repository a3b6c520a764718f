#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "quintic/numtheory.hpp"

namespace quintic {

using F5Vec = std::vector<uint8_t>;
using F5Matrix = std::vector<F5Vec>;

// canonical reduced row-echelon form over F5 (in place); returns rank
int rref(F5Matrix& m);

// right kernel {x : M x = 0} of a matrix whose rows are linear conditions
F5Matrix kernel(const F5Matrix& m, size_t ncols);

// labeled basis of an ambient F5 space; cross-ambient ops are type errors
struct Ambient {
  std::string name;
  std::vector<std::string> labels;
  size_t dim() const { return labels.size(); }
  bool operator==(const Ambient& o) const { return name == o.name && labels == o.labels; }
};

using AmbientPtr = std::shared_ptr<const Ambient>;

class F5Subspace {
 public:
  F5Subspace() = default;
  static F5Subspace span(AmbientPtr amb, const F5Matrix& vectors);
  static F5Subspace zero(AmbientPtr amb);
  static F5Subspace full(AmbientPtr amb);

  const AmbientPtr& ambient() const { return amb_; }
  const F5Matrix& rows() const { return rows_; }
  int dim() const { return (int)rows_.size(); }

  bool contains(const F5Vec& v) const;
  bool operator==(const F5Subspace& o) const;

  F5Subspace intersect(const F5Subspace& o) const;
  F5Subspace sum(const F5Subspace& o) const;
  // annihilator rows: all c with v.c = 0 for v in the space
  F5Matrix annihilator() const;

  // multiplicative rendering of a row, e.g. "2*7^3" over labels {"2","7"}
  std::string render(const F5Vec& row) const;
  std::vector<std::string> render_basis() const;

 private:
  AmbientPtr amb_;
  F5Matrix rows_;  // canonical RREF, no zero rows
};

// preimage {x : x A in T} of a subspace under the row-vector action x -> x A,
// where A has domain->dim rows and T.ambient()->dim columns
F5Subspace preimage(AmbientPtr domain, const F5Matrix& A, const F5Subspace& T);

}  // namespace quintic
