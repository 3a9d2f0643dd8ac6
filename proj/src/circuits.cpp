#include "circuits.hpp"

#include <algorithm>
#include <cstdint>

#include "errors.hpp"
#include "fm.hpp"

namespace latbar::circuits {

using exactalg::Int;

std::set<int> Circuit::support() const {
  std::set<int> s;
  for (int i = 0; i < (int)u.size(); ++i)
    if (u[i] != 0) s.insert(i);
  return s;
}

std::set<int> Circuit::support_plus() const {
  std::set<int> s;
  for (int i = 0; i < (int)u.size(); ++i)
    if (u[i] > 0) s.insert(i);
  return s;
}

std::set<int> Circuit::support_minus() const {
  std::set<int> s;
  for (int i = 0; i < (int)u.size(); ++i)
    if (u[i] < 0) s.insert(i);
  return s;
}

bool Circuit::operator<(const Circuit& o) const {
  size_t a = 0, b = 0;
  for (auto& x : u) a += x != 0;
  for (auto& x : o.u) b += x != 0;
  if (a != b) return a < b;
  return u < o.u;
}

namespace {

Circuit canonical(IntVec u) {
  for (auto& x : u) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : u) y = -y;
    break;
  }
  return Circuit{std::move(u)};
}

uint64_t mask_of(const std::vector<int>& cols) {
  uint64_t m = 0;
  for (int c : cols) m |= uint64_t{1} << c;
  return m;
}

}  // namespace

std::vector<Circuit> enumerate_circuits(const IntMat& a) {
  const int m = a.cols();
  if (m > 62) throw resource_error("circuit enumeration limited to 62 columns");
  const int r = exactalg::rank(a);
  std::vector<Circuit> out;
  std::vector<uint64_t> found;

  std::vector<int> sel;
  for (int s = 1; s <= std::min(m, r + 1); ++s) {
    sel.assign(s, 0);
    for (int i = 0; i < s; ++i) sel[i] = i;
    while (true) {
      uint64_t mask = mask_of(sel);
      bool covered = false;
      for (uint64_t f : found)
        if ((f & mask) == f) {
          covered = true;
          break;
        }
      if (!covered) {
        auto ker = exactalg::kernel_basis(a.select_cols(sel));
        if (!ker.rows.empty()) {
          // Ascending-size order makes any dependent survivor a circuit.
          if (ker.rows.size() != 1) throw inconsistency_error("non-minimal subset escaped pruning");
          const IntVec& v = ker.rows[0];
          for (auto& x : v)
            if (x == 0) throw inconsistency_error("non-minimal subset escaped pruning");
          IntVec full(m, Int(0));
          for (int i = 0; i < s; ++i) full[sel[i]] = v[i];
          out.push_back(canonical(std::move(full)));
          found.push_back(mask);
        }
      }
      int i = s - 1;
      while (i >= 0 && sel[i] == m - s + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < s; ++j) sel[j] = sel[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Circuit conformal_circuit(const IntVec& v, const IntMat& a, const std::vector<Circuit>& circuits) {
  if ((int)v.size() != a.cols()) throw input_error("vector length does not match column count");
  bool zero = true;
  for (auto& x : v) zero = zero && x == 0;
  if (zero) throw input_error("conformal circuit of the zero vector");
  for (const Int& x : a.mul(v))
    if (x != 0) throw input_error("vector is not in the kernel");

  auto fits = [&](const IntVec& u) {
    for (int i = 0; i < (int)u.size(); ++i) {
      if (u[i] > 0 && v[i] <= 0) return false;
      if (u[i] < 0 && v[i] >= 0) return false;
    }
    return true;
  };
  for (const Circuit& c : circuits) {
    if (fits(c.u)) return c;
    IntVec neg(c.u.size());
    for (size_t i = 0; i < c.u.size(); ++i) neg[i] = -c.u[i];
    if (fits(neg)) return Circuit{std::move(neg)};
  }
  throw inconsistency_error("kernel vector admits no conformal circuit");
}

Circuit conformal_circuit(const IntVec& v, const IntMat& a) {
  return conformal_circuit(v, a, enumerate_circuits(a));
}

SupportFamily support_family(const std::vector<Circuit>& cs) {
  std::set<std::set<int>> seen;
  for (const Circuit& c : cs) {
    seen.insert(c.support_plus());
    seen.insert(c.support_minus());
  }
  SupportFamily fam;
  fam.all.assign(seen.begin(), seen.end());
  std::sort(fam.all.begin(), fam.all.end(), [](const std::set<int>& x, const std::set<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  for (const auto& s : fam.all) {
    bool minimal = true;
    for (const auto& t : fam.all) {
      if (t.size() >= s.size()) break;
      if (std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) fam.minimal.push_back(s);
  }
  return fam;
}

std::vector<Circuit> restrict_circuits(const std::vector<Circuit>& cs, const std::set<int>& cols) {
  std::vector<Circuit> out;
  for (const Circuit& c : cs) {
    auto s = c.support();
    if (std::includes(cols.begin(), cols.end(), s.begin(), s.end())) out.push_back(c);
  }
  return out;
}

bool is_extremal(const IntMat& a) {
  for (int i = 0; i < a.cols(); ++i) {
    fm::System sys;
    sys.nvars = a.cols() - 1;
    for (int r = 0; r < a.rows(); ++r) {
      exactalg::RatVec row(sys.nvars);
      int k = 0;
      for (int j = 0; j < a.cols(); ++j) {
        if (j == i) continue;
        row[k++] = exactalg::Rat(a.at(r, j));
      }
      sys.eq_lhs.push_back(std::move(row));
      sys.eq_rhs.push_back(exactalg::Rat(a.at(r, i)));
    }
    for (int j = 0; j < sys.nvars; ++j) {
      exactalg::RatVec row(sys.nvars, exactalg::Rat(0));
      row[j] = 1;
      sys.ge_lhs.push_back(std::move(row));
      sys.ge_rhs.push_back(exactalg::Rat(0));
    }
    if (fm::solve(sys).has_value()) return false;
  }
  return true;
}

}  // namespace latbar::circuits
