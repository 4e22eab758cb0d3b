#ifndef KACIND_LINALG_HPP
#define KACIND_LINALG_HPP

#include <map>
#include <optional>
#include <vector>

#include "kacind/rational.hpp"

namespace kacind {

/// Sparse vector: index -> nonzero coefficient. Zero entries are never stored.
using SparseVec = std::map<int, Rational>;
using RatVector = std::vector<Rational>;

SparseVec toSparse(const RatVector& v);
RatVector toDense(const SparseVec& v, int dim);
void addScaled(SparseVec& dst, const SparseVec& src, const Rational& c);
SparseVec scaled(const SparseVec& v, const Rational& c);
bool sparseEq(const SparseVec& a, const SparseVec& b);

/// Sparse exact matrix, row-major. No zero entries stored, indices in bounds.
class RatMatrix {
public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int r, int c) const;
  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);

  const SparseVec& row(int r) const { return row_[r]; }
  long nnz() const;
  bool isZero() const { return nnz() == 0; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& c) const;
  bool operator==(const RatMatrix& o) const;

  /// Matrix applied to a column vector.
  RatVector apply(const RatVector& v) const;
  SparseVec apply(const SparseVec& v) const;

private:
  int rows_, cols_;
  std::vector<SparseVec> row_;
};

/// Incrementally maintained reduced row echelon basis of sparse vectors.
/// Canonical: every stored row has leading coefficient 1 and is fully
/// reduced against every other row, so two equal spans store equal rows.
class EchelonBasis {
public:
  /// Reduces v against the basis; inserts the remainder if nonzero.
  /// Returns true when the dimension grew.
  bool insert(SparseVec v);

  /// Fully reduced residue of v modulo the span.
  SparseVec reduce(SparseVec v) const;

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Rows sorted by pivot column (the canonical representative).
  std::vector<SparseVec> sortedRows() const;

private:
  std::map<int, int> pivotToRow_;
  std::vector<SparseVec> rows_;
};

/// Linear subspace of Q^ambient given by its reduced echelon basis.
class Subspace {
public:
  explicit Subspace(int ambient) : ambient_(ambient) {}
  Subspace(int ambient, const std::vector<SparseVec>& spanning);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<SparseVec>& basis() const { return basis_; }

  bool containsVector(const SparseVec& v) const;
  bool operator==(const Subspace& o) const;

private:
  int ambient_;
  std::vector<SparseVec> basis_;  // canonical RREF rows, sorted by pivot
};

/// Right null space; rank(M) + dim(kernel) = cols(M).
Subspace kernel(const RatMatrix& m);

int rank(const RatMatrix& m);

/// Some x with Ax = b, or nullopt when the system is inconsistent.
/// Throws on dimension mismatch.
std::optional<RatVector> solveLinear(const RatMatrix& a, const RatVector& b);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  bool contains;  // U >= V
};

/// Sum, intersection and containment (U >= V) in one pass.
/// Throws when ambient dimensions differ.
SubspaceOps subspaceOps(const Subspace& u, const Subspace& v);

}  // namespace kacind

#endif
