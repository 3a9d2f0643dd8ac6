#include "determinantal.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <random>
#include <set>

#include "circuits.hpp"
#include "errors.hpp"

namespace latbar::determinantal {

using groebner::Term;

namespace {

Polynomial monic_under(const Polynomial& p, const TermOrder& ord) {
  if (groebner::leading_term(p, ord).c < 0) return -p;
  return p;
}

void sort_like_basis(std::vector<Polynomial>& ps, const TermOrder& ord) {
  std::sort(ps.begin(), ps.end(), [&](const Polynomial& a, const Polynomial& b) {
    const groebner::Monomial& ma = groebner::leading_term(a, ord).m;
    const groebner::Monomial& mb = groebner::leading_term(b, ord).m;
    if (ma != mb) return ord.less(ma, mb);
    return a < b;
  });
}

std::vector<Polynomial> minor_polys(const Spec& s) {
  std::vector<Polynomial> out;
  for (const auto& b : minor_generators(s)) out.push_back(Polynomial::from_binomial(b));
  return out;
}

// Drops the auxiliary last variable; every term must have exponent 0 there.
std::vector<Polynomial> shrink1(const std::vector<Polynomial>& fs, int nvars) {
  std::vector<Polynomial> out;
  for (const auto& f : fs) {
    std::vector<Term> ts;
    for (const auto& t : f.terms()) {
      if (t.m[nvars] != 0) throw inconsistency_error("elimination left the auxiliary variable");
      ts.push_back({Monomial(t.m.begin(), t.m.begin() + nvars), t.c});
    }
    out.push_back(Polynomial(std::move(ts)));
  }
  return out;
}

// ideal(a) cap ideal(q): eliminate t from t*a + (1-t)*q.
std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& q, int nvars) {
  Monomial tm(nvars + 1, 0);
  tm[nvars] = 1;
  auto t = Polynomial::from_term(tm, 1);
  auto one_minus_t = Polynomial::constant(nvars + 1, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(groebner::widen(f, 1) * t);
  for (const auto& g : q) gens.push_back(groebner::widen(g, 1) * one_minus_t);
  std::vector<int> keep(nvars);
  std::iota(keep.begin(), keep.end(), 0);
  return shrink1(groebner::eliminate(gens, keep, nvars + 1), nvars);
}

Polynomial var_power(int nvars, int idx, int e) {
  Monomial m(nvars, 0);
  m[idx] = e;
  return Polynomial::from_term(m, 1);
}

}  // namespace

Spec make_spec(const std::vector<int>& d) {
  if (d.size() < 2) throw input_error("need at least two columns");
  for (int x : d)
    if (x < 1) throw input_error("column exponents must be positive");
  return Spec{int(d.size()), d};
}

Binomial minor_generator(const Spec& s, int i, int j) {
  if (i < 0 || j <= i || j >= s.m) throw input_error("minor indices need 0 <= i < j < m");
  std::vector<int> u(2 * s.m, 0);
  u[i] = s.d[i];
  u[j] = -s.d[j];
  u[s.m + i] = -s.d[i];
  u[s.m + j] = s.d[j];
  return Binomial{u};
}

std::vector<Binomial> minor_generators(const Spec& s) {
  std::vector<Binomial> out;
  for (int i = 0; i < s.m; i++)
    for (int j = i + 1; j < s.m; j++) out.push_back(minor_generator(s, i, j));
  return out;
}

bool verify_universal_gb(const Spec& s, const std::vector<TermOrder>& orders) {
  auto gens = minor_polys(s);
  for (const auto& ord : orders) {
    std::vector<Polynomial> expect;
    for (const auto& g : gens) expect.push_back(monic_under(g, ord));
    sort_like_basis(expect, ord);
    if (groebner::buchberger(gens, ord) != expect) return false;
  }
  return true;
}

bool verify_universal_gb(const Spec& s, int samples, unsigned seed) {
  int n = 2 * s.m;
  std::vector<TermOrder> orders{TermOrder::lex(n), TermOrder::grevlex(n)};
  std::vector<int> rev(n);
  for (int i = 0; i < n; i++) rev[i] = n - 1 - i;
  orders.push_back(TermOrder::with_priority(TermOrder::Kind::Lex, rev));
  orders.push_back(TermOrder::with_priority(TermOrder::Kind::GrevLex, rev));
  std::mt19937 rng(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = 0; k < samples; k++) {
    std::shuffle(perm.begin(), perm.end(), rng);
    auto kind = (k % 2 == 0) ? TermOrder::Kind::Lex : TermOrder::Kind::GrevLex;
    orders.push_back(TermOrder::with_priority(kind, perm));
  }
  return verify_universal_gb(s, orders);
}

LatticeBasis lattice_of(const Spec& s) {
  int m = s.m, n = 2 * m;
  auto vrow = [&](int i, int j) {
    exactalg::IntVec v(n, 0);
    v[i] = s.d[i];
    v[j] = -s.d[j];
    v[m + i] = -s.d[i];
    v[m + j] = s.d[j];
    return v;
  };
  std::vector<exactalg::IntVec> rows;
  for (int j = 1; j < m; j++) rows.push_back(vrow(0, j));
  auto l = exactalg::make_lattice(n, rows);
  if (l.rank() != m - 1) throw inconsistency_error("minor lattice rank is not m-1");
  for (int i = 1; i < m; i++)
    for (int j = i + 1; j < m; j++) {
      exactalg::IntVec diff(n);
      for (int k = 0; k < n; k++) diff[k] = rows[j - 1][k] - rows[i - 1][k];
      if (diff != vrow(i, j) || !exactalg::lattice_contains(l, diff))
        throw inconsistency_error("pair minor vector is not the basis difference");
    }
  return l;
}

std::vector<Monomial> initial_ideal_lex(const Spec& s) {
  int m = s.m, n = 2 * m;
  auto lex = TermOrder::lex(n);
  auto gb = groebner::buchberger(minor_polys(s), lex);
  std::vector<Monomial> lts;
  for (const auto& g : gb) lts.push_back(groebner::leading_term(g, lex).m);
  std::sort(lts.begin(), lts.end());
  std::vector<Monomial> expect;
  for (int i = 0; i < m; i++)
    for (int j = i + 1; j < m; j++) {
      Monomial mo(n, 0);
      mo[i] = s.d[i];
      mo[m + j] = s.d[j];
      expect.push_back(mo);
    }
  std::sort(expect.begin(), expect.end());
  if (lts != expect) throw inconsistency_error("lex initial ideal mismatch");
  return lts;
}

bool is_prime(const Spec& s) {
  bool coprime = true;
  for (int i = 0; i < s.m && coprime; i++)
    for (int j = i + 1; j < s.m; j++)
      if (std::gcd(s.d[i], s.d[j]) != 1) {
        coprime = false;
        break;
      }
  auto l = lattice_of(s);
  bool saturated = exactalg::saturate(l) == l;
  if (coprime != saturated) throw inconsistency_error("coprimality and saturation disagree");
  return coprime;
}

int bar_certificate(const Spec& s) {
  int expect = s.m * (s.m - 1) / 2;
  auto rep = complexes::bounds_report(lattice_of(s));
  if (rep.q != s.m * (s.m - 1))
    throw inconsistency_error("circuit complex vertex count is not m(m-1)");
  if (rep.mu != expect) throw inconsistency_error("mu is not m(m-1)/2");
  if (rep.ceil_q2 != expect) throw inconsistency_error("ceil(q/2) does not reach mu");
  return expect;
}

LawrenceReport lawrence_ideal(const Spec& s, size_t max_states) {
  int m = s.m, n = 2 * m;
  LawrenceReport rep;
  rep.b.resize(m);
  for (int i = 0; i < m; i++) {
    Int p = 1;
    for (int j = 0; j < m; j++)
      if (j != i) p *= s.d[j];
    rep.b[i] = p;
  }
  rep.lifting = IntMat(m + 1, n);
  for (int i = 0; i < m; i++) {
    rep.lifting.at(0, i) = rep.b[i];
    rep.lifting.at(i + 1, i) = 1;
    rep.lifting.at(i + 1, m + i) = 1;
  }
  markov::MarkovOptions opt;
  opt.max_fiber = max_states;
  rep.markov = markov::markov_basis(exactalg::kernel_basis(rep.lifting), opt);
  for (const auto& g : rep.markov.generators)
    if (groebner::mono_support(g.plus()).size() < 2 || groebner::mono_support(g.minus()).size() < 2)
      throw inconsistency_error("lifted toric ideal has a generator with a single-variable monomial");

  auto gamma = complexes::build_gamma(rep.lifting, circuits::enumerate_circuits(rep.lifting));
  rep.gamma_vertices = int(gamma.vertices.size());
  if (rep.gamma_vertices < m * (m - 1))
    throw inconsistency_error("circuit complex of the lifting has fewer than m(m-1) vertices");
  rep.bar_lower = m * (m - 1) / 2;

  // Generators whose monomial supports are both complex vertices cover two
  // vertices each; when exactly bar_lower of them absorb the remaining
  // generators radically, the lower bound is attained.
  std::set<std::set<int>> verts(gamma.vertices.begin(), gamma.vertices.end());
  std::vector<Polynomial> core, rest;
  for (const auto& g : rep.markov.generators) {
    auto sp = groebner::mono_support(g.plus());
    auto sm = groebner::mono_support(g.minus());
    bool doubly = verts.count(std::set<int>(sp.begin(), sp.end())) &&
                  verts.count(std::set<int>(sm.begin(), sm.end()));
    (doubly ? core : rest).push_back(Polynomial::from_binomial(g));
  }
  if (int(core.size()) == rep.bar_lower) {
    bool absorbed = true;
    for (const auto& f : rest)
      if (!groebner::radical_member(f, core)) {
        absorbed = false;
        break;
      }
    if (absorbed) rep.bar = rep.bar_lower;
  }
  return rep;
}

BasisIdealReport lattice_basis_ideal(const Spec& s) {
  int m = s.m, n = 2 * m;
  BasisIdealReport rep;
  for (int j = 1; j < m; j++) rep.generators.push_back(minor_generator(s, 0, j));
  rep.prime = is_prime(s);

  std::vector<Polynomial> jgens;
  for (const auto& b : rep.generators) jgens.push_back(Polynomial::from_binomial(b));
  auto igens = minor_polys(s);
  auto lex = TermOrder::lex(n);

  auto check_gb = [&]() -> std::string {
    std::vector<Polynomial> expect = jgens;
    Monomial y1(n, 0);
    y1[m] = s.d[0];
    for (int i = 1; i < m; i++)
      for (int j = i + 1; j < m; j++) {
        auto gij = Polynomial::from_binomial(minor_generator(s, i, j)).mul_term(y1, 1);
        Monomial yi(n, 0), yj(n, 0);
        yi[m + i] = s.d[i];
        yj[m + j] = s.d[j];
        if (!(jgens[j - 1].mul_term(yi, 1) - jgens[i - 1].mul_term(yj, 1) == gij))
          return "product identity for the lifted minor failed";
        expect.push_back(gij);
      }
    sort_like_basis(expect, lex);
    if (!(groebner::buchberger(jgens, lex) == expect))
      return "basis ideal lex Groebner basis mismatch";
    return "";
  };

  auto check_intersection = [&]() -> std::string {
    std::vector<Polynomial> qgens{var_power(n, 0, s.d[0]), var_power(n, m, s.d[0])};
    auto inter = intersect_ideals(igens, qgens, n);
    auto gbj = groebner::buchberger(jgens, lex);
    for (const auto& g : inter)
      if (!groebner::normal_form(g, gbj, lex).is_zero())
        return "intersection is not inside the basis ideal";
    auto gbq = groebner::buchberger(inter, lex);
    for (const auto& f : jgens)
      if (!groebner::normal_form(f, gbq, lex).is_zero())
        return "basis ideal is not inside the intersection";
    return "";
  };

  auto check_radical = [&]() -> std::string {
    std::vector<Polynomial> qgens{var_power(n, 0, 1), var_power(n, m, 1)};
    auto inter = intersect_ideals(igens, qgens, n);
    for (const auto& g : inter)
      if (!groebner::radical_member(g, jgens)) return "radical misses an intersection generator";
    for (const auto& f : jgens)
      if (!groebner::radical_member(f, inter)) return "basis generator escapes the intersection radical";
    return "";
  };

  auto fgb = std::async(std::launch::async, check_gb);
  auto fin = std::async(std::launch::async, check_intersection);
  std::future<std::string> frad;
  if (rep.prime) frad = std::async(std::launch::async, check_radical);

  std::string e1 = fgb.get(), e2 = fin.get(), e3;
  rep.groebner_ok = e1.empty();
  rep.intersection_ok = e2.empty();
  if (rep.prime) {
    e3 = frad.get();
    rep.radical_ok = e3.empty();
  }
  if (!e1.empty())
    rep.failure = e1;
  else if (!e2.empty())
    rep.failure = e2;
  else if (!e3.empty())
    rep.failure = e3;
  return rep;
}

}  // namespace latbar::determinantal
