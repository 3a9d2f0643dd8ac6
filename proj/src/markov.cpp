#include "markov.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace latbar::markov {

using exactalg::Int;
using exactalg::Rat;
using exactalg::RatVec;

namespace {

Rat dot(const RatVec& mu, const IntVec& v) {
  Rat s(0);
  for (size_t i = 0; i < v.size(); ++i) s += mu[i] * Rat(v[i]);
  return s;
}

int sgn(const Int& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// floor(w) for a nonnegative rational bound, as long.
long floor_long(const Rat& w) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), w.get_num().get_mpz_t(), w.get_den().get_mpz_t());
  if (!q.fits_slong_p()) throw resource_error("fiber coordinate bound overflows");
  return q.get_si();
}

}  // namespace

Fiber fiber(const IntVec& b, const IntMat& a) {
  const int n = a.rows(), m = a.cols();
  if ((int)b.size() != n) throw input_error("degree length does not match row count");
  auto mu = exactalg::pointed_weight(a);
  if (!mu) throw input_error("fiber is not certifiably finite: lattice not positive");

  RatVec w(n);
  for (int i = 0; i < n; ++i) w[i] = (*mu)[i];
  std::vector<Rat> colw(m);
  for (int j = 0; j < m; ++j) colw[j] = dot(w, a.col(j));

  // Suffix entry signs per row: rows whose remaining columns are
  // single-signed force the sign of the remaining requirement.
  std::vector<std::vector<int>> minsuf(n, std::vector<int>(m + 1, 0));
  std::vector<std::vector<int>> maxsuf(n, std::vector<int>(m + 1, 0));
  for (int r = 0; r < n; ++r)
    for (int j = m - 1; j >= 0; --j) {
      int v = sgn(a.at(r, j));
      minsuf[r][j] = std::min(v, minsuf[r][j + 1]);
      maxsuf[r][j] = std::max(v, maxsuf[r][j + 1]);
    }

  Fiber out;
  out.degree = b;
  std::vector<int> cur(m, 0);
  IntVec rem = b;
  Rat wrem = dot(w, b);
  if (wrem < 0) return out;

  const size_t cap = 2000000;
  auto emit_if_done = [&]() {
    for (const Int& x : rem)
      if (x != 0) return;
    if (out.monomials.size() >= cap) throw resource_error("fiber exceeds size cap");
    out.monomials.push_back(cur);
  };

  // DFS over coordinates with exact weight pruning.
  auto rec = [&](auto&& self, int j) -> void {
    if (j == m) {
      emit_if_done();
      return;
    }
    if (wrem == 0) {
      emit_if_done();
      return;
    }
    for (int r = 0; r < n; ++r) {
      if (rem[r] < 0 && minsuf[r][j] >= 0) return;
      if (rem[r] > 0 && maxsuf[r][j] <= 0) return;
    }
    long hi = floor_long(wrem / colw[j]);
    for (long u = 0; u <= hi; ++u) {
      if (u > 0) {
        cur[j] = (int)u;
        for (int r = 0; r < n; ++r) rem[r] -= a.at(r, j);
        wrem -= colw[j];
      }
      self(self, j + 1);
    }
    for (int r = 0; r < n; ++r) rem[r] += Int(cur[j]) * a.at(r, j);
    wrem += Rat(cur[j]) * colw[j];
    cur[j] = 0;
  };
  rec(rec, 0);
  std::sort(out.monomials.begin(), out.monomials.end());
  return out;
}

namespace {

// Canonical coset representative of v modulo the HNF basis rows.
IntVec coset_residue(const LatticeBasis& l, IntVec v) {
  for (const IntVec& row : l.rows) {
    int p = 0;
    while (row[p] == 0) ++p;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
    if (q == 0) continue;
    for (size_t j = p; j < v.size(); ++j) v[j] -= q * row[j];
  }
  return v;
}

IntVec to_intvec(const Monomial& m) {
  IntVec v(m.size());
  for (size_t i = 0; i < m.size(); ++i) v[i] = m[i];
  return v;
}

struct Accepted {
  Binomial b;
  Monomial plus, minus;
};

// Monomials reachable from m in one move by g, staying nonnegative.
void step_neighbors(const Monomial& m, const Accepted& g, std::vector<Monomial>& out) {
  auto apply = [&](const Monomial& from, const Monomial& to) {
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] < from[i]) return;
    Monomial r(m.size());
    for (size_t i = 0; i < m.size(); ++i) r[i] = m[i] - from[i] + to[i];
    out.push_back(std::move(r));
  };
  apply(g.plus, g.minus);
  apply(g.minus, g.plus);
}

}  // namespace

MarkovReport markov_basis(const LatticeBasis& l, const MarkovOptions& opt) {
  IntMat a = exactalg::grading_matrix(l);
  auto mu = exactalg::pointed_weight(a);
  if (!mu) throw input_error("lattice is not positive");

  auto gens0 = groebner::lattice_ideal_generators(l);

  // Process occurring A-degrees in a linear extension of the NA-divisibility
  // order: ascending total weight, lex ties.
  struct DegKey {
    Rat w;
    IntVec b;
  };
  const bool rev = opt.reverse_ties;
  auto deg_less = [rev](const DegKey& x, const DegKey& y) {
    if (x.w != y.w) return x.w < y.w;
    return rev ? y.b < x.b : x.b < y.b;
  };
  std::vector<DegKey> degrees;
  for (const Binomial& g : gens0) {
    IntVec b = a.mul(g.plus());
    DegKey k{dot(*mu, b), b};
    bool seen = false;
    for (const DegKey& d : degrees) seen = seen || d.b == k.b;
    if (!seen) degrees.push_back(std::move(k));
  }
  std::sort(degrees.begin(), degrees.end(), deg_less);

  auto mono_less = [rev](const Monomial& x, const Monomial& y) { return rev ? y < x : x < y; };

  MarkovReport rep;
  std::vector<Accepted> accepted;
  std::vector<bool> indisp_flags;

  for (const DegKey& deg : degrees) {
    Fiber f = fiber(deg.b, a);
    if (f.monomials.size() > opt.max_fiber) throw resource_error("fiber exceeds configured cap");

    // Split into cosets of L; moves never leave a coset.
    std::map<IntVec, std::vector<Monomial>> classes;
    for (const Monomial& m : f.monomials) classes[coset_residue(l, to_intvec(m))].push_back(m);

    for (auto& [residue, members] : classes) {
      if (members.size() < 2) continue;
      std::map<Monomial, int> index;
      for (int i = 0; i < (int)members.size(); ++i) index[members[i]] = i;

      // Connected components under previously accepted moves.
      std::vector<int> comp(members.size(), -1);
      int ncomp = 0;
      std::vector<Monomial> nb;
      for (int s = 0; s < (int)members.size(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
          int v = stack.back();
          stack.pop_back();
          for (const Accepted& g : accepted) {
            nb.clear();
            step_neighbors(members[v], g, nb);
            for (const Monomial& t : nb) {
              auto it = index.find(t);
              if (it == index.end()) throw inconsistency_error("move left its coset");
              if (comp[it->second] == -1) {
                comp[it->second] = ncomp;
                stack.push_back(it->second);
              }
            }
          }
        }
        ++ncomp;
      }
      if (ncomp < 2) continue;

      // Anchor: component of the extreme monomial; connect it to each other
      // component's extreme member.
      std::vector<Monomial> best(ncomp);
      std::vector<int> size(ncomp, 0);
      for (int i = 0; i < (int)members.size(); ++i) {
        int c = comp[i];
        if (size[c] == 0 || mono_less(members[i], best[c])) best[c] = members[i];
        ++size[c];
      }
      int anchor = 0;
      for (int c = 1; c < ncomp; ++c)
        if (mono_less(best[c], best[anchor])) anchor = c;

      bool indisp = ncomp == 2 && members.size() == 2;
      for (int c = 0; c < ncomp; ++c) {
        if (c == anchor) continue;
        std::vector<int> u(members[0].size());
        for (size_t i = 0; i < u.size(); ++i) u[i] = best[anchor][i] - best[c][i];
        Binomial g = Binomial{u}.canonical();
        accepted.push_back({g, g.plus(), g.minus()});
        indisp_flags.push_back(indisp);
      }
    }
  }

  for (size_t i = 0; i < accepted.size(); ++i) {
    rep.generators.push_back(accepted[i].b);
    if (indisp_flags[i]) rep.indispensable_binomials.push_back(accepted[i].b);
  }
  rep.mu = (int)rep.generators.size();
  std::sort(rep.indispensable_binomials.begin(), rep.indispensable_binomials.end());

  // Indispensable monomials: divisibility-minimal monomials of the minimal
  // generating set (they minimally generate the monomial ideal M_L).
  std::set<Monomial> monos;
  for (const Accepted& g : accepted) {
    monos.insert(g.plus);
    monos.insert(g.minus);
  }
  for (const Monomial& m : monos) {
    bool minimal = true;
    for (const Monomial& d : monos)
      if (d != m && groebner::mono_divides(d, m)) {
        minimal = false;
        break;
      }
    if (minimal) rep.indispensable_monomials.push_back(m);
  }

  std::set<std::set<int>> supports;
  for (const Monomial& m : rep.indispensable_monomials) {
    auto sup = groebner::mono_support(m);
    supports.insert(std::set<int>(sup.begin(), sup.end()));
  }
  for (const auto& s : supports) {
    bool minimal = true;
    for (const auto& t : supports)
      if (t != s && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
        minimal = false;
        break;
      }
    if (minimal) rep.tmin.push_back(s);
  }
  std::sort(rep.tmin.begin(), rep.tmin.end(), [](const std::set<int>& x, const std::set<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return rep;
}

std::vector<Monomial> indispensable_monomials(const LatticeBasis& l) {
  return markov_basis(l).indispensable_monomials;
}

std::vector<Binomial> indispensable_binomials(const LatticeBasis& l) {
  return markov_basis(l).indispensable_binomials;
}

std::vector<std::set<int>> tmin(const LatticeBasis& l) { return markov_basis(l).tmin; }

std::optional<int> bar_mu_certificate(const MarkovReport& rep) {
  if ((int)rep.indispensable_binomials.size() != rep.mu) return std::nullopt;
  for (const Binomial& g : rep.generators)
    if (!groebner::mono_squarefree(g.plus()) || !groebner::mono_squarefree(g.minus()))
      return std::nullopt;
  return rep.mu;
}

std::optional<int> bar_mu_certificate(const LatticeBasis& l) {
  return bar_mu_certificate(markov_basis(l));
}

}  // namespace latbar::markov
