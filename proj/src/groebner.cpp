#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "errors.hpp"

namespace latbar::groebner {

Monomial mono_one(int nvars) { return Monomial(nvars, 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = a[i] + b[i];
  return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r(b.size());
  for (size_t i = 0; i < b.size(); i++) {
    r[i] = b[i] - a[i];
    if (r[i] < 0) throw inconsistency_error("mono_div: not divisible");
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); i++) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

int mono_degree(const Monomial& a) {
  int d = 0;
  for (int e : a) d += e;
  return d;
}

bool mono_squarefree(const Monomial& a) {
  for (int e : a)
    if (e > 1) return false;
  return true;
}

std::vector<int> mono_support(const Monomial& a) {
  std::vector<int> s;
  for (size_t i = 0; i < a.size(); i++)
    if (a[i] != 0) s.push_back(int(i));
  return s;
}

bool Binomial::is_zero() const {
  for (int x : u)
    if (x != 0) return false;
  return true;
}

Monomial Binomial::plus() const {
  Monomial m(u.size(), 0);
  for (size_t i = 0; i < u.size(); i++)
    if (u[i] > 0) m[i] = u[i];
  return m;
}

Monomial Binomial::minus() const {
  Monomial m(u.size(), 0);
  for (size_t i = 0; i < u.size(); i++)
    if (u[i] < 0) m[i] = -u[i];
  return m;
}

Binomial Binomial::canonical() const {
  for (int x : u) {
    if (x > 0) return *this;
    if (x < 0) return negated();
  }
  return *this;
}

Binomial Binomial::negated() const {
  Binomial b = *this;
  for (auto& x : b.u) x = -x;
  return b;
}

Binomial binomial_from_vec(const IntVec& v) {
  Binomial b;
  b.u.resize(v.size());
  for (size_t i = 0; i < v.size(); i++) {
    if (!v[i].fits_sint_p()) throw resource_error("binomial exponent too large");
    b.u[i] = int(v[i].get_si());
  }
  return b;
}

IntVec binomial_to_vec(const Binomial& b) {
  IntVec v(b.u.size());
  for (size_t i = 0; i < b.u.size(); i++) v[i] = b.u[i];
  return v;
}

Polynomial::Polynomial(std::vector<Term> terms) {
  std::map<Monomial, Rat> acc;
  for (auto& t : terms) {
    if (t.c == 0) continue;
    acc[t.m] += t.c;
  }
  for (auto& [m, c] : acc)
    if (c != 0) t_.push_back({m, c});
  std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.m > b.m; });
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
  return Polynomial({Term{mono_one(nvars), c}});
}

Polynomial Polynomial::from_term(const Monomial& m, const Rat& c) { return Polynomial({Term{m, c}}); }

Polynomial Polynomial::from_binomial(const Binomial& b) {
  return Polynomial({Term{b.plus(), Rat(1)}, Term{b.minus(), Rat(-1)}});
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Term> all = t_;
  all.insert(all.end(), o.t_.begin(), o.t_.end());
  return Polynomial(std::move(all));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  std::vector<Term> all;
  all.reserve(t_.size() * o.t_.size());
  for (const auto& a : t_)
    for (const auto& b : o.t_) all.push_back({mono_mul(a.m, b.m), a.c * b.c});
  return Polynomial(std::move(all));
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
  std::vector<Term> all;
  all.reserve(t_.size());
  for (const auto& t : t_) all.push_back({mono_mul(t.m, m), t.c * c});
  return Polynomial(std::move(all));
}

Polynomial Polynomial::pow(int k) const {
  if (t_.empty() && k == 0) throw input_error("0^0");
  Polynomial r = Polynomial::constant(t_.empty() ? 0 : int(t_[0].m.size()), 1);
  for (int i = 0; i < k; i++) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); i++)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool Polynomial::operator<(const Polynomial& o) const {
  for (size_t i = 0; i < t_.size() && i < o.t_.size(); i++) {
    if (t_[i].m != o.t_[i].m) return t_[i].m < o.t_[i].m;
    if (t_[i].c != o.t_[i].c) return t_[i].c < o.t_[i].c;
  }
  return t_.size() < o.t_.size();
}

TermOrder TermOrder::lex(int nvars) {
  TermOrder o;
  o.kind = Kind::Lex;
  o.priority.resize(nvars);
  for (int i = 0; i < nvars; i++) o.priority[i] = i;
  return o;
}

TermOrder TermOrder::grevlex(int nvars) {
  TermOrder o = lex(nvars);
  o.kind = Kind::GrevLex;
  return o;
}

TermOrder TermOrder::with_priority(Kind kind, const std::vector<int>& priority) {
  TermOrder o;
  o.kind = kind;
  o.priority = priority;
  return o;
}

TermOrder TermOrder::elimination(const std::vector<int>& eliminated, int nvars, Kind rest) {
  TermOrder o;
  o.kind = rest;
  o.elim_count = int(eliminated.size());
  o.priority = eliminated;
  std::vector<bool> in(nvars, false);
  for (int v : eliminated) in[v] = true;
  for (int i = 0; i < nvars; i++)
    if (!in[i]) o.priority.push_back(i);
  return o;
}

namespace {

int cmp_block(const Monomial& a, const Monomial& b, const std::vector<int>& pr, int first, int last,
              TermOrder::Kind kind) {
  if (kind == TermOrder::Kind::GrevLex) {
    long da = 0, db = 0;
    for (int i = first; i < last; i++) {
      da += a[pr[i]];
      db += b[pr[i]];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = last - 1; i >= first; i--) {
      int va = a[pr[i]], vb = b[pr[i]];
      if (va != vb) return va > vb ? -1 : 1;
    }
    return 0;
  }
  for (int i = first; i < last; i++) {
    int va = a[pr[i]], vb = b[pr[i]];
    if (va != vb) return va < vb ? -1 : 1;
  }
  return 0;
}

}  // namespace

bool TermOrder::less(const Monomial& a, const Monomial& b) const {
  int n = int(priority.size());
  if (elim_count > 0) {
    int c = cmp_block(a, b, priority, 0, elim_count, Kind::GrevLex);
    if (c != 0) return c < 0;
    return cmp_block(a, b, priority, elim_count, n, kind) < 0;
  }
  return cmp_block(a, b, priority, 0, n, kind) < 0;
}

IntVec adeg(const Monomial& m, const IntMat& a) { return a.mul(m); }

bool is_homogeneous(const Polynomial& f, const IntMat& a) {
  if (f.is_zero()) return true;
  IntVec d = adeg(f.terms()[0].m, a);
  for (const auto& t : f.terms())
    if (adeg(t.m, a) != d) return false;
  return true;
}

namespace {

// Working form: terms sorted descending under the active order.
using OPoly = std::vector<Term>;

OPoly to_op(const Polynomial& f, const TermOrder& ord) {
  OPoly p = f.terms();
  std::sort(p.begin(), p.end(), [&](const Term& x, const Term& y) { return ord.greater(x.m, y.m); });
  return p;
}

// a - c * x^m * b, both sorted; result sorted.
OPoly sub_mul(const OPoly& a, const Rat& c, const Monomial& m, const OPoly& b, const TermOrder& ord) {
  OPoly out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = mono_mul(b[j].m, m);
    Rat bc = -c * b[j].c;
    if (i == a.size()) {
      out.push_back({std::move(bm), std::move(bc)});
      j++;
      continue;
    }
    if (ord.greater(a[i].m, bm)) {
      out.push_back(a[i++]);
    } else if (ord.greater(bm, a[i].m)) {
      out.push_back({std::move(bm), std::move(bc)});
      j++;
    } else {
      Rat s = a[i].c + bc;
      if (s != 0) out.push_back({a[i].m, std::move(s)});
      i++;
      j++;
    }
  }
  return out;
}

OPoly mul_op(const OPoly& a, const Monomial& m, const Rat& c) {
  OPoly out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({mono_mul(t.m, m), t.c * c});
  return out;
}

OPoly nf_op(const OPoly& f, const std::vector<OPoly>& g, const TermOrder& ord) {
  OPoly work = f;
  OPoly rem;
  while (!work.empty()) {
    const Term& lt = work.front();
    bool reduced = false;
    for (const auto& gi : g) {
      if (!mono_divides(gi.front().m, lt.m)) continue;
      work = sub_mul(work, lt.c / gi.front().c, mono_div(lt.m, gi.front().m), gi, ord);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem.push_back(work.front());
      work.erase(work.begin());
    }
  }
  return rem;
}

// Canonical ordering of the divisor list so reduction is input-order
// independent: descending leading terms.
std::vector<OPoly> prep_divisors(const std::vector<Polynomial>& g, const TermOrder& ord) {
  std::vector<OPoly> gs;
  for (const auto& p : g)
    if (!p.is_zero()) gs.push_back(to_op(p, ord));
  std::sort(gs.begin(), gs.end(), [&](const OPoly& x, const OPoly& y) {
    if (x.front().m != y.front().m) return ord.greater(x.front().m, y.front().m);
    return x.front().m < y.front().m;
  });
  return gs;
}

}  // namespace

Term leading_term(const Polynomial& f, const TermOrder& ord) {
  if (f.is_zero()) throw input_error("leading term of zero");
  const Term* best = &f.terms()[0];
  for (const auto& t : f.terms())
    if (ord.greater(t.m, best->m)) best = &t;
  return *best;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g, const TermOrder& ord) {
  auto gs = prep_divisors(g, ord);
  return Polynomial(nf_op(to_op(f, ord), gs, ord));
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord) {
  std::vector<OPoly> g;
  for (const auto& p : gens) {
    if (p.is_zero()) continue;
    OPoly op = to_op(p, ord);
    Rat lc = op.front().c;
    for (auto& t : op) t.c /= lc;
    g.push_back(std::move(op));
  }
  std::sort(g.begin(), g.end(), [&](const OPoly& x, const OPoly& y) {
    return ord.less(x.front().m, y.front().m);
  });
  g.erase(std::unique(g.begin(), g.end(),
                      [](const OPoly& x, const OPoly& y) {
                        if (x.size() != y.size()) return false;
                        for (size_t i = 0; i < x.size(); i++)
                          if (x[i].m != y[i].m || x[i].c != y[i].c) return false;
                        return true;
                      }),
          g.end());

  struct PairKey {
    Monomial lcm;
    int i, j;
  };
  auto cmp = [&](const PairKey& a, const PairKey& b) {
    if (a.lcm != b.lcm) return ord.less(a.lcm, b.lcm);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(cmp)> pairs(cmp);
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; i++) pairs.insert({mono_lcm(g[i].front().m, g[j].front().m), i, j});
  };
  for (int j = 1; j < int(g.size()); j++) push_pairs(j);

  while (!pairs.empty()) {
    PairKey pk = *pairs.begin();
    pairs.erase(pairs.begin());
    const OPoly& f1 = g[pk.i];
    const OPoly& f2 = g[pk.j];
    if (mono_coprime(f1.front().m, f2.front().m)) continue;
    OPoly s = sub_mul(mul_op(f1, mono_div(pk.lcm, f1.front().m), 1),
                      Rat(1), mono_div(pk.lcm, f2.front().m), f2, ord);
    OPoly r = nf_op(s, g, ord);
    if (r.empty()) continue;
    Rat lc = r.front().c;
    for (auto& t : r) t.c /= lc;
    g.push_back(std::move(r));
    push_pairs(int(g.size()) - 1);
  }

  // Minimalize: drop elements whose leading term another leading term divides.
  std::vector<int> order_idx(g.size());
  for (size_t i = 0; i < g.size(); i++) order_idx[i] = int(i);
  std::sort(order_idx.begin(), order_idx.end(),
            [&](int a, int b) { return ord.less(g[a].front().m, g[b].front().m); });
  std::vector<OPoly> minimal;
  for (int idx : order_idx) {
    bool divisible = false;
    for (const auto& kept : minimal)
      if (mono_divides(kept.front().m, g[idx].front().m)) {
        divisible = true;
        break;
      }
    if (!divisible) minimal.push_back(g[idx]);
  }

  // Tail-reduce to the unique reduced basis.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); i++) {
      std::vector<OPoly> others;
      for (size_t k = 0; k < minimal.size(); k++)
        if (k != i) others.push_back(minimal[k]);
      OPoly r = nf_op(minimal[i], others, ord);
      if (r.size() != minimal[i].size()) changed = true;
      else {
        for (size_t t = 0; t < r.size(); t++)
          if (r[t].m != minimal[i][t].m || r[t].c != minimal[i][t].c) {
            changed = true;
            break;
          }
      }
      if (r.empty()) throw inconsistency_error("buchberger: minimal element reduced to zero");
      Rat lc = r.front().c;
      for (auto& t : r) t.c /= lc;
      minimal[i] = std::move(r);
    }
  }

  std::vector<Polynomial> out;
  out.reserve(minimal.size());
  for (auto& p : minimal) out.push_back(Polynomial(std::move(p)));
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    const Monomial& ma = leading_term(a, ord).m;
    const Monomial& mb = leading_term(b, ord).m;
    if (ma != mb) return ord.less(ma, mb);
    return a < b;
  });
  return out;
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gens, const TermOrder& ord) {
  auto gb = buchberger(gens, ord);
  return normal_form(f, gb, ord).is_zero();
}

Polynomial widen(const Polynomial& f, int extra) {
  std::vector<Term> ts = f.terms();
  for (auto& t : ts) t.m.resize(t.m.size() + extra, 0);
  return Polynomial(std::move(ts));
}

bool radical_member(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  int n = int(f.terms()[0].m.size());
  std::vector<Polynomial> j;
  for (const auto& g : gens) j.push_back(widen(g, 1));
  Monomial t = mono_one(n + 1);
  t[n] = 1;
  j.push_back(Polynomial::constant(n + 1, 1) - widen(f, 1).mul_term(t, 1));
  auto gb = buchberger(j, TermOrder::grevlex(n + 1));
  for (const auto& g : gb)
    if (g.nterms() == 1 && mono_degree(g.terms()[0].m) == 0) return true;
  return false;
}

std::vector<Polynomial> eliminate(const std::vector<Polynomial>& gens, const std::vector<int>& keep,
                                  int nvars) {
  std::vector<bool> keep_mask(nvars, false);
  for (int v : keep) keep_mask[v] = true;
  std::vector<int> elim;
  for (int i = 0; i < nvars; i++)
    if (!keep_mask[i]) elim.push_back(i);
  TermOrder ord = TermOrder::elimination(elim, nvars);
  auto gb = buchberger(gens, ord);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool ok = true;
    for (const auto& t : g.terms())
      for (int v : elim)
        if (t.m[v] != 0) ok = false;
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<Binomial> lattice_ideal_generators(const LatticeBasis& l) {
  if (!exactalg::is_positive(l)) throw input_error("lattice_ideal_generators: lattice is not positive");
  int m = l.ambient;
  std::vector<Polynomial> gens;
  for (const auto& row : l.rows)
    gens.push_back(widen(Polynomial::from_binomial(binomial_from_vec(row)), 1));
  Monomial prod(m + 1, 1);  // t * x1 ... xm
  gens.push_back(Polynomial::from_term(prod, 1) - Polynomial::constant(m + 1, 1));

  std::vector<int> keep(m);
  for (int i = 0; i < m; i++) keep[i] = i;
  auto cut = eliminate(gens, keep, m + 1);

  std::vector<Binomial> out;
  for (const auto& g : cut) {
    if (g.nterms() != 2) throw inconsistency_error("lattice_ideal_generators: non-binomial element");
    const auto& ts = g.terms();
    if (!(ts[0].c == 1 && ts[1].c == -1) && !(ts[0].c == -1 && ts[1].c == 1))
      throw inconsistency_error("lattice_ideal_generators: non-unit coefficients");
    const Monomial& p = ts[0].c == 1 ? ts[0].m : ts[1].m;
    const Monomial& q = ts[0].c == 1 ? ts[1].m : ts[0].m;
    Binomial b;
    b.u.resize(m);
    for (int i = 0; i < m; i++) b.u[i] = p[i] - q[i];
    b = b.canonical();
    if (!lattice_contains(l, binomial_to_vec(b)))
      throw inconsistency_error("lattice_ideal_generators: vector escapes the lattice");
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace latbar::groebner
