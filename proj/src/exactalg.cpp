#include "exactalg.hpp"

#include <algorithm>
#include <sstream>

#include "fm.hpp"

namespace latbar::exactalg {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; i++) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, int cols) {
  IntMat m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); i++) {
    if (int(rows[i].size()) != cols) throw input_error("row length mismatch");
    for (int j = 0; j < cols; j++) m.at(int(i), j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; j++) r[j] = at(i, j);
  return r;
}

IntVec IntMat::col(int j) const {
  IntVec c(rows_);
  for (int i = 0; i < rows_; i++) c[i] = at(i, j);
  return c;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++) t.at(j, i) = at(i, j);
  return t;
}

IntMat IntMat::select_cols(const std::vector<int>& idx) const {
  IntMat s(rows_, int(idx.size()));
  for (int i = 0; i < rows_; i++)
    for (size_t k = 0; k < idx.size(); k++) s.at(i, int(k)) = at(i, idx[k]);
  return s;
}

IntVec IntMat::mul(const IntVec& u) const {
  if (int(u.size()) != cols_) throw input_error("vector length mismatch");
  IntVec r(rows_, 0);
  for (int i = 0; i < rows_; i++)
    for (int j = 0; j < cols_; j++)
      if (u[j] != 0) r[i] += at(i, j) * u[j];
  return r;
}

IntVec IntMat::mul(const std::vector<int>& u) const {
  IntVec v(u.size());
  for (size_t i = 0; i < u.size(); i++) v[i] = u[i];
  return mul(v);
}

namespace {

// In-place row HNF on raw row vectors; returns number of nonzero rows.
// Column sweep with repeated Euclidean reduction keeps entries exact.
int hnf_rows(std::vector<IntVec>& a, int cols) {
  int n = int(a.size());
  int r = 0;
  for (int j = 0; j < cols && r < n; j++) {
    while (true) {
      // Pick the row at or below r with the smallest nonzero |a[i][j]|.
      int piv = -1;
      for (int i = r; i < n; i++) {
        if (a[i][j] == 0) continue;
        if (piv < 0 || mpz_cmpabs(a[i][j].get_mpz_t(), a[piv][j].get_mpz_t()) < 0) piv = i;
      }
      if (piv < 0) break;
      std::swap(a[r], a[piv]);
      bool clean = true;
      for (int i = r + 1; i < n; i++) {
        if (a[i][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
        if (q != 0)
          for (int k = 0; k < cols; k++) a[i][k] -= q * a[r][k];
        if (a[i][j] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[r][j] == 0) continue;
    if (a[r][j] < 0)
      for (int k = 0; k < cols; k++) a[r][k] = -a[r][k];
    for (int i = 0; i < r; i++) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[r][j].get_mpz_t());
      if (q != 0)
        for (int k = 0; k < cols; k++) a[i][k] -= q * a[r][k];
    }
    r++;
  }
  return r;
}

std::vector<IntVec> mat_rows(const IntMat& m) {
  std::vector<IntVec> rows;
  rows.reserve(m.rows());
  for (int i = 0; i < m.rows(); i++) rows.push_back(m.row(i));
  return rows;
}

}  // namespace

IntMat hnf(const IntMat& m) {
  auto rows = mat_rows(m);
  int r = hnf_rows(rows, m.cols());
  rows.resize(r);
  return IntMat::from_rows(rows, m.cols());
}

int rank(const IntMat& m) {
  auto rows = mat_rows(m);
  return hnf_rows(rows, m.cols());
}

IntMat LatticeBasis::as_matrix() const { return IntMat::from_rows(rows, ambient); }

LatticeBasis make_lattice(int ambient, const std::vector<IntVec>& gens) {
  auto rows = gens;
  for (auto& r : rows)
    if (int(r.size()) != ambient) throw input_error("generator length mismatch");
  int k = hnf_rows(rows, ambient);
  rows.resize(k);
  return LatticeBasis{ambient, rows};
}

LatticeBasis kernel_basis(const IntMat& m) {
  // Row-reduce [m^T | I]; rows whose left block vanished carry a kernel basis
  // in the right block. Unimodularity of HNF row operations makes it a basis
  // of the full integer kernel, which is saturated automatically.
  int n = m.rows(), c = m.cols();
  std::vector<IntVec> work(c, IntVec(n + c, 0));
  for (int i = 0; i < c; i++) {
    for (int j = 0; j < n; j++) work[i][j] = m.at(j, i);
    work[i][n + i] = 1;
  }
  hnf_rows(work, n + c);
  std::vector<IntVec> ker;
  for (const auto& row : work) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; j++) left_zero = (row[j] == 0);
    if (!left_zero) continue;
    IntVec v(row.begin() + n, row.end());
    bool nonzero = false;
    for (const auto& x : v) nonzero |= (x != 0);
    if (nonzero) ker.push_back(std::move(v));
  }
  return make_lattice(c, ker);
}

bool lattice_contains(const LatticeBasis& l, const IntVec& v) {
  if (int(v.size()) != l.ambient) throw input_error("vector length mismatch");
  IntVec w = v;
  for (const auto& row : l.rows) {
    int p = 0;
    while (p < l.ambient && row[p] == 0) p++;
    if (p == l.ambient) continue;
    if (w[p] == 0) continue;
    Int q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), w[p].get_mpz_t(), row[p].get_mpz_t());
    if (rem != 0) return false;
    for (int k = 0; k < l.ambient; k++) w[k] -= q * row[k];
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

IntMat orthogonal_complement(const LatticeBasis& l) {
  if (l.rows.empty()) return IntMat::identity(l.ambient);
  return kernel_basis(l.as_matrix()).as_matrix();
}

LatticeBasis saturate(const LatticeBasis& l) {
  for (const auto& r : l.rows) {
    bool nz = false;
    for (const auto& x : r) nz |= (x != 0);
    if (!nz) throw input_error("saturate: dependent basis rows");
  }
  if (exactalg::rank(l.as_matrix()) != l.rank()) throw input_error("saturate: dependent basis rows");
  if (l.rows.empty()) return l;
  // Sat(l) is the integer kernel of the orthogonal complement: it contains l,
  // is saturated, and has the same rank.
  return kernel_basis(orthogonal_complement(l));
}

std::optional<RatVec> pointed_weight(const IntMat& a) {
  // mu with (mu^T a)_j >= 1 for every column j.
  fm::System sys;
  sys.nvars = a.rows();
  for (int j = 0; j < a.cols(); j++) {
    RatVec row(a.rows());
    for (int i = 0; i < a.rows(); i++) row[i] = Rat(a.at(i, j));
    sys.ge_lhs.push_back(std::move(row));
    sys.ge_rhs.push_back(1);
  }
  return fm::solve(sys);
}

bool is_positive(const LatticeBasis& l) {
  // l cap N^ambient = {0} iff the orthogonal complement's row space contains
  // a strictly positive vector (Stiemke duality over Q, scaled to >= 1).
  return pointed_weight(orthogonal_complement(l)).has_value();
}

IntMat grading_matrix(const LatticeBasis& l) {
  IntMat a = orthogonal_complement(l);
  if (!pointed_weight(a).has_value()) throw input_error("grading_matrix: lattice is not positive");
  return a;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); i++) {
    if (i) os << ", ";
    os << v[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace latbar::exactalg
