#include "kacind/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace kacind {

namespace {
const Rational kZero;
}

SparseVec toSparse(const RatVector& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].isZero()) out[i] = v[i];
  return out;
}

RatVector toDense(const SparseVec& v, int dim) {
  RatVector out(dim);
  for (const auto& [i, c] : v) out.at(i) = c;
  return out;
}

void addScaled(SparseVec& dst, const SparseVec& src, const Rational& c) {
  if (c.isZero()) return;
  for (const auto& [i, x] : src) {
    auto it = dst.find(i);
    if (it == dst.end()) {
      dst.emplace(i, x * c);
    } else {
      it->second += x * c;
      if (it->second.isZero()) dst.erase(it);
    }
  }
}

SparseVec scaled(const SparseVec& v, const Rational& c) {
  SparseVec out;
  if (c.isZero()) return out;
  for (const auto& [i, x] : v) out[i] = x * c;
  return out;
}

bool sparseEq(const SparseVec& a, const SparseVec& b) { return a == b; }

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

const Rational& RatMatrix::at(int r, int c) const {
  auto it = row_.at(r).find(c);
  return it == row_.at(r).end() ? kZero : it->second;
}

void RatMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw std::out_of_range("RatMatrix::set: index out of bounds");
  if (v.isZero())
    row_[r].erase(c);
  else
    row_[r][c] = v;
}

void RatMatrix::add(int r, int c, const Rational& v) {
  if (v.isZero()) return;
  auto it = row_.at(r).find(c);
  if (it == row_[r].end()) {
    set(r, c, v);
  } else {
    it->second += v;
    if (it->second.isZero()) row_[r].erase(it);
  }
}

long RatMatrix::nnz() const {
  long n = 0;
  for (const auto& r : row_) n += static_cast<long>(r.size());
  return n;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : row_[r]) t.set(c, r, v);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("RatMatrix: size mismatch in product");
  RatMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    SparseVec& dst = out.row_[r];
    for (const auto& [k, a] : row_[r]) addScaled(dst, o.row_[k], a);
  }
  return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: size mismatch in sum");
  RatMatrix out = *this;
  for (int r = 0; r < rows_; ++r) addScaled(out.row_[r], o.row_[r], Rational(1));
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RatMatrix: size mismatch in difference");
  RatMatrix out = *this;
  for (int r = 0; r < rows_; ++r) addScaled(out.row_[r], o.row_[r], Rational(-1));
  return out;
}

RatMatrix RatMatrix::scaled(const Rational& c) const {
  RatMatrix out(rows_, cols_);
  if (c.isZero()) return out;
  for (int r = 0; r < rows_; ++r) out.row_[r] = kacind::scaled(row_[r], c);
  return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
}

RatVector RatMatrix::apply(const RatVector& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("RatMatrix::apply: size mismatch");
  RatVector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational acc;
    for (const auto& [c, a] : row_[r]) acc += a * v[c];
    out[r] = acc;
  }
  return out;
}

SparseVec RatMatrix::apply(const SparseVec& v) const {
  SparseVec out;
  // column-oriented accumulation through rows
  for (int r = 0; r < rows_; ++r) {
    Rational acc;
    const SparseVec& rv = row_[r];
    if (rv.size() < v.size()) {
      for (const auto& [c, a] : rv) {
        auto it = v.find(c);
        if (it != v.end()) acc += a * it->second;
      }
    } else {
      for (const auto& [c, x] : v) {
        auto it = rv.find(c);
        if (it != rv.end()) acc += it->second * x;
      }
    }
    if (!acc.isZero()) out[r] = acc;
  }
  return out;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const int pivot = v.begin()->first;
  const Rational lead = v.begin()->second;
  if (!lead.isOne()) {
    for (auto& [i, c] : v) c /= lead;
  }
  // keep the stored set fully reduced: clear the new pivot everywhere
  for (auto& row : rows_) {
    auto it = row.find(pivot);
    if (it != row.end()) {
      Rational c = it->second;
      addScaled(row, v, -c);
    }
  }
  pivotToRow_[pivot] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  while (!v.empty()) {
    const int pivot = v.begin()->first;
    auto it = pivotToRow_.find(pivot);
    if (it == pivotToRow_.end()) {
      // leading index is not a pivot; eliminate deeper coordinates only
      bool touched = false;
      for (auto vit = std::next(v.begin()); vit != v.end();) {
        auto pit = pivotToRow_.find(vit->first);
        if (pit != pivotToRow_.end()) {
          Rational c = vit->second;
          addScaled(v, rows_[pit->second], -c);
          touched = true;
          vit = v.upper_bound(pivot);  // restart past the stable leading index
        } else {
          ++vit;
        }
      }
      if (!touched) return v;
      return v;  // all deeper pivots cleared in the loop above
    }
    Rational c = v.begin()->second;
    addScaled(v, rows_[it->second], -c);
  }
  return v;
}

std::vector<SparseVec> EchelonBasis::sortedRows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, idx] : pivotToRow_) out.push_back(rows_[idx]);
  return out;
}

Subspace::Subspace(int ambient, const std::vector<SparseVec>& spanning) : ambient_(ambient) {
  EchelonBasis eb;
  for (const auto& v : spanning) {
    for (const auto& [i, c] : v)
      if (i < 0 || i >= ambient)
        throw std::out_of_range("Subspace: coordinate outside ambient space");
    eb.insert(v);
  }
  basis_ = eb.sortedRows();
}

bool Subspace::containsVector(const SparseVec& v) const {
  EchelonBasis eb;
  for (const auto& row : basis_) eb.insert(row);
  return eb.contains(v);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && basis_ == o.basis_;
}

namespace {

// RREF rows of m together with the pivot column list.
std::pair<std::vector<SparseVec>, std::vector<int>> rref(const RatMatrix& m) {
  EchelonBasis eb;
  for (int r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
  std::vector<SparseVec> rows = eb.sortedRows();
  std::vector<int> pivots;
  pivots.reserve(rows.size());
  for (const auto& row : rows) pivots.push_back(row.begin()->first);
  return {std::move(rows), std::move(pivots)};
}

}  // namespace

Subspace kernel(const RatMatrix& m) {
  auto [rows, pivots] = rref(m);
  std::vector<bool> isPivot(m.cols(), false);
  for (int p : pivots) isPivot[p] = true;
  std::vector<SparseVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (isPivot[c]) continue;
    SparseVec v;
    v[c] = Rational(1);
    for (size_t r = 0; r < rows.size(); ++r) {
      auto it = rows[r].find(c);
      if (it != rows[r].end()) v[pivots[r]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return Subspace(m.cols(), basis);
}

int rank(const RatMatrix& m) {
  EchelonBasis eb;
  for (int r = 0; r < m.rows(); ++r) eb.insert(m.row(r));
  return eb.dim();
}

std::optional<RatVector> solveLinear(const RatMatrix& a, const RatVector& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solveLinear: rhs length != row count");
  // eliminate on [A | b] with b stored at a column index past the end
  const int bcol = a.cols();
  EchelonBasis eb;
  for (int r = 0; r < a.rows(); ++r) {
    SparseVec row = a.row(r);
    if (!b[r].isZero()) row[bcol] = b[r];
    eb.insert(std::move(row));
  }
  RatVector x(a.cols());
  for (const auto& row : eb.sortedRows()) {
    const int pivot = row.begin()->first;
    if (pivot == bcol) return std::nullopt;  // 0 = 1 row: inconsistent
    auto it = row.find(bcol);
    if (it != row.end()) x[pivot] = it->second;
  }
  return x;
}

SubspaceOps subspaceOps(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient())
    throw std::invalid_argument("subspaceOps: ambient dimension mismatch");
  std::vector<SparseVec> all = u.basis();
  for (const auto& row : v.basis()) all.push_back(row);
  Subspace sum(u.ambient(), all);

  // intersection: kernel of (a, b) -> sum a_i u_i - sum b_j v_j
  const int du = u.dim(), dv = v.dim();
  RatMatrix combine(u.ambient(), du + dv);
  for (int i = 0; i < du; ++i)
    for (const auto& [r, c] : u.basis()[i]) combine.add(r, i, c);
  for (int j = 0; j < dv; ++j)
    for (const auto& [r, c] : v.basis()[j]) combine.add(r, du + j, -c);
  Subspace coeff = kernel(combine);
  std::vector<SparseVec> inter;
  for (const auto& k : coeff.basis()) {
    SparseVec w;
    for (const auto& [i, c] : k) {
      if (i >= du) break;
      addScaled(w, u.basis()[i], c);
    }
    if (!w.empty()) inter.push_back(std::move(w));
  }
  Subspace intersection(u.ambient(), inter);
  bool contains = sum.dim() == u.dim();
  return {std::move(sum), std::move(intersection), contains};
}

}  // namespace kacind
