#include "complexes.hpp"

#include <algorithm>

#include "errors.hpp"
#include "fm.hpp"

namespace latbar::complexes {

using exactalg::Int;
using exactalg::Rat;
using exactalg::RatVec;

namespace {

std::string face_name(const std::vector<int>& ids) {
  std::string s = "{";
  for (size_t i = 0; i < ids.size(); ++i) s += (i ? "," : "") + std::to_string(ids[i]);
  return s + "}";
}

Monomial half_monomial(const Circuit& c, bool plus) {
  Monomial m(c.u.size(), 0);
  for (size_t i = 0; i < c.u.size(); ++i) {
    const Int& x = c.u[i];
    if (plus && x > 0) {
      if (!x.fits_sint_p()) throw resource_error("circuit exponent overflows");
      m[i] = (int)x.get_si();
    }
    if (!plus && x < 0) {
      Int y = -x;
      if (!y.fits_sint_p()) throw resource_error("circuit exponent overflows");
      m[i] = (int)y.get_si();
    }
  }
  return m;
}

std::set<int> mono_support_set(const Monomial& m) {
  std::set<int> s;
  for (int i = 0; i < (int)m.size(); ++i)
    if (m[i] > 0) s.insert(i);
  return s;
}

// All monomials with support exactly `sup` and total degree <= bound, keyed
// by A-degree; the stored representative is the lex-smallest of its degree.
std::map<IntVec, Monomial> degree_pool(const std::set<int>& sup, int bound, const IntMat& a) {
  std::vector<int> coords(sup.begin(), sup.end());
  std::map<IntVec, Monomial> pool;
  Monomial cur(a.cols(), 0);
  auto rec = [&](auto&& self, size_t i, int left) -> void {
    if (i == coords.size()) {
      IntVec d = groebner::adeg(cur, a);
      auto it = pool.find(d);
      if (it == pool.end())
        pool.emplace(std::move(d), cur);
      else if (cur < it->second)
        it->second = cur;
      return;
    }
    for (int e = 1; e <= left - (int)(coords.size() - i - 1); ++e) {
      cur[coords[i]] = e;
      self(self, i + 1, left - e);
    }
    cur[coords[i]] = 0;
  };
  if ((int)coords.size() <= bound) rec(rec, 0, bound);
  return pool;
}

// Exact witness decision for a candidate vertex set: rational monomials with
// support exactly the vertices and equal A-degrees scale to integer ones.
std::optional<std::vector<Monomial>> lp_witness(const std::vector<std::set<int>>& sups,
                                                const IntMat& a) {
  std::vector<std::vector<int>> vars;  // per set, per coordinate: LP variable
  int nv = 0;
  for (const auto& s : sups) {
    std::vector<int> idx;
    for (int c : s) {
      (void)c;
      idx.push_back(nv++);
    }
    vars.push_back(idx);
  }
  fm::System sys;
  sys.nvars = nv;
  for (int v = 0; v < nv; ++v) {
    RatVec row(nv, Rat(0));
    row[v] = 1;
    sys.ge_lhs.push_back(std::move(row));
    sys.ge_rhs.push_back(Rat(1));
  }
  for (size_t i = 1; i < sups.size(); ++i)
    for (int r = 0; r < a.rows(); ++r) {
      RatVec row(nv, Rat(0));
      int k = 0;
      for (int c : sups[0]) row[vars[0][k++]] += Rat(a.at(r, c));
      k = 0;
      for (int c : sups[i]) row[vars[i][k++]] -= Rat(a.at(r, c));
      sys.eq_lhs.push_back(std::move(row));
      sys.eq_rhs.push_back(Rat(0));
    }
  auto sol = fm::solve(sys);
  if (!sol) return std::nullopt;

  Int scale(1);
  for (const Rat& y : *sol) scale = lcm(scale, y.get_den());
  std::vector<Monomial> ws;
  for (size_t i = 0; i < sups.size(); ++i) {
    Monomial m(a.cols(), 0);
    int k = 0;
    for (int c : sups[i]) {
      Rat v = (*sol)[vars[i][k++]] * Rat(scale);
      Int z = v.get_num();
      if (v.get_den() != 1 || !z.fits_sint_p()) throw resource_error("witness scaling overflow");
      m[c] = (int)z.get_si();
    }
    ws.push_back(std::move(m));
  }
  return ws;
}

void check_witness(const std::vector<int>& ids, const std::vector<Monomial>& ws,
                   const std::vector<std::set<int>>& vertices, const IntMat& a) {
  if (ids.size() != ws.size()) throw inconsistency_error("witness arity mismatch");
  for (size_t i = 0; i < ids.size(); ++i) {
    if (mono_support_set(ws[i]) != vertices[ids[i]])
      throw inconsistency_error("witness support mismatch on face " + face_name(ids));
    if (groebner::adeg(ws[i], a) != groebner::adeg(ws[0], a))
      throw inconsistency_error("witness degrees differ on face " + face_name(ids));
  }
}

}  // namespace

int GammaComplex::max_dim() const {
  int d = -1;
  for (const auto& f : faces) d = std::max(d, (int)f.size() - 1);
  return d;
}

bool GammaComplex::is_face(const std::vector<int>& ids) const {
  std::vector<int> s(ids);
  std::sort(s.begin(), s.end());
  return faces.count(s) != 0;
}

GammaComplex build_gamma(const IntMat& a, const std::vector<Circuit>& cs, int degree_bound,
                         int face_cap) {
  GammaComplex g;
  g.a = a;
  g.face_cap = face_cap;
  auto fam = circuits::support_family(cs);
  g.vertices = fam.minimal;
  const int nv = (int)g.vertices.size();

  if (degree_bound <= 0) {
    int md = 1;
    for (const Circuit& c : cs) {
      int dp = 0, dm = 0;
      for (const Int& x : c.u) {
        if (x > 0) dp += (int)x.get_si();
        if (x < 0) dm -= (int)x.get_si();
      }
      md = std::max({md, dp, dm});
    }
    degree_bound = 2 * md;
  }
  g.degree_bound = degree_bound;

  std::map<std::set<int>, int> vid;
  for (int i = 0; i < nv; ++i) vid[g.vertices[i]] = i;

  // Vertices, witnessed by a circuit half of that exact support.
  std::vector<Monomial> vertex_mono(nv);
  std::vector<bool> have(nv, false);
  for (const Circuit& c : cs)
    for (bool plus : {true, false}) {
      Monomial m = half_monomial(c, plus);
      auto it = vid.find(mono_support_set(m));
      if (it != vid.end() && (!have[it->second] || m < vertex_mono[it->second])) {
        vertex_mono[it->second] = m;
        have[it->second] = true;
      }
    }
  for (int i = 0; i < nv; ++i) {
    if (!have[i]) throw inconsistency_error("vertex without witnessing circuit half");
    g.faces.insert({i});
    g.witnesses[{i}] = {vertex_mono[i]};
  }

  // Edges: both halves of one circuit are minimal supports.
  for (const Circuit& c : cs) {
    auto ip = vid.find(c.support_plus());
    auto im = vid.find(c.support_minus());
    if (ip == vid.end() || im == vid.end()) continue;
    std::vector<int> ids{ip->second, im->second};
    std::vector<Monomial> ws{half_monomial(c, true), half_monomial(c, false)};
    if (ids[0] > ids[1]) {
      std::swap(ids[0], ids[1]);
      std::swap(ws[0], ws[1]);
    }
    if (!g.faces.count(ids)) {
      g.faces.insert(ids);
      g.witnesses[ids] = ws;
    }
  }

  // Non-edges must also fail the witness relaxation; a disagreement means the
  // circuit edge criterion broke down.
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j) {
      std::vector<int> ids{i, j};
      if (g.faces.count(ids)) continue;
      if (lp_witness({g.vertices[i], g.vertices[j]}, a))
        throw inconsistency_error("witnessed pair " + face_name(ids) + " is not a circuit edge");
    }

  // Higher faces: subsets whose proper subsets are faces, decided by bounded
  // enumeration and then exactly by the rational relaxation.
  std::vector<std::map<IntVec, Monomial>> pools(nv);
  for (int i = 0; i < nv; ++i) pools[i] = degree_pool(g.vertices[i], degree_bound, a);

  for (int k = 3; k <= std::min(face_cap, nv); ++k) {
    std::vector<int> sel(k);
    for (int i = 0; i < k; ++i) sel[i] = i;
    while (true) {
      bool closed = true;
      for (int drop = 0; drop < k && closed; ++drop) {
        std::vector<int> sub;
        for (int i = 0; i < k; ++i)
          if (i != drop) sub.push_back(sel[i]);
        closed = g.faces.count(sub) != 0;
      }
      if (closed) {
        // Intersect per-vertex A-degree pools.
        std::map<IntVec, std::vector<Monomial>> common;
        for (const auto& [d, m] : pools[sel[0]]) common[d] = {m};
        for (int i = 1; i < k; ++i) {
          std::map<IntVec, std::vector<Monomial>> next;
          for (auto& [d, tup] : common) {
            auto it = pools[sel[i]].find(d);
            if (it == pools[sel[i]].end()) continue;
            tup.push_back(it->second);
            next.emplace(d, std::move(tup));
          }
          common.swap(next);
        }
        std::optional<std::vector<Monomial>> ws;
        if (!common.empty())
          ws = common.begin()->second;
        else {
          std::vector<std::set<int>> sups;
          for (int i = 0; i < k; ++i) sups.push_back(g.vertices[sel[i]]);
          ws = lp_witness(sups, a);
        }
        if (ws) {
          g.faces.insert(sel);
          g.witnesses[sel] = *ws;
        }
      }
      int i = k - 1;
      while (i >= 0 && sel[i] == nv - k + i) --i;
      if (i < 0) break;
      ++sel[i];
      for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
    }
  }

  for (const auto& [ids, ws] : g.witnesses) check_witness(ids, ws, g.vertices, a);
  return g;
}

std::vector<ComponentInfo> components(const GammaComplex& g) {
  const int nv = (int)g.vertices.size();
  std::vector<int> parent(nv);
  for (int i = 0; i < nv; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : g.faces)
    for (size_t i = 1; i < f.size(); ++i) parent[find(f[i])] = find(f[0]);

  std::map<int, ComponentInfo> comps;
  for (int i = 0; i < nv; ++i) comps[find(i)].vertex_ids.push_back(i);
  for (const auto& f : g.faces) {
    auto& c = comps[find(f[0])];
    c.max_dim = std::max(c.max_dim, (int)f.size() - 1);
  }
  std::vector<ComponentInfo> out;
  for (auto& [root, c] : comps) {
    c.is_simplex = g.faces.count(c.vertex_ids) != 0;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const ComponentInfo& x, const ComponentInfo& y) {
    return x.vertex_ids < y.vertex_ids;
  });
  return out;
}

InducedSubcomplex gamma_of_polynomial(const Polynomial& f, const GammaComplex& g) {
  std::set<int> ids;
  for (const auto& t : f.terms()) {
    auto sup = mono_support_set(t.m);
    for (int i = 0; i < (int)g.vertices.size(); ++i)
      if (g.vertices[i] == sup) ids.insert(i);
  }
  InducedSubcomplex sub;
  sub.vertex_ids.assign(ids.begin(), ids.end());
  sub.simplex = !sub.vertex_ids.empty() && g.faces.count(sub.vertex_ids) != 0;
  return sub;
}

bool spanning_check(const std::vector<InducedSubcomplex>& subs, const GammaComplex& g) {
  std::set<int> seen;
  for (const auto& s : subs) seen.insert(s.vertex_ids.begin(), s.vertex_ids.end());
  return (int)seen.size() == (int)g.vertices.size();
}

std::set<int> all_dims(const GammaComplex& g) {
  std::set<int> dims;
  for (const auto& f : g.faces) dims.insert((int)f.size() - 1);
  return dims;
}

namespace {

struct CompSearch {
  std::vector<uint32_t> facebits;            // faces with dimension in J, as local masks
  std::vector<std::vector<int>> face_ids;    // corresponding global faces
  std::vector<std::vector<int>> at_vertex;   // local vertex -> faces containing it
  int n = 0;

  int best_cover = 0;
  void phase1(uint32_t covered, uint32_t decided) {
    int pc = __builtin_popcount(covered);
    int undecided = n - __builtin_popcount(decided);
    if (pc + undecided <= best_cover) return;
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!(decided >> i & 1)) {
        v = i;
        break;
      }
    if (v < 0) {
      best_cover = std::max(best_cover, pc);
      return;
    }
    for (int fi : at_vertex[v])
      if (!(facebits[fi] & decided)) phase1(covered | facebits[fi], decided | facebits[fi]);
    phase1(covered, decided | (1u << v));
  }

  int target = 0;
  int best_count = -1;
  std::vector<int> chosen, best_chosen;
  void phase2(uint32_t covered, uint32_t decided) {
    int pc = __builtin_popcount(covered);
    int undecided = n - __builtin_popcount(decided);
    if (pc + undecided < target) return;
    if (best_count >= 0 && (int)chosen.size() >= best_count) return;
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!(decided >> i & 1)) {
        v = i;
        break;
      }
    if (v < 0) {
      if (pc == target && (best_count < 0 || (int)chosen.size() < best_count)) {
        best_count = (int)chosen.size();
        best_chosen = chosen;
      }
      return;
    }
    for (int fi : at_vertex[v])
      if (!(facebits[fi] & decided)) {
        chosen.push_back(fi);
        phase2(covered | facebits[fi], decided | facebits[fi]);
        chosen.pop_back();
      }
    phase2(covered, decided | (1u << v));
  }

  int best_cover_count = -1;
  void cover(uint32_t covered, int count) {
    if (best_cover_count >= 0 && count >= best_cover_count) return;
    int v = -1;
    for (int i = 0; i < n; ++i)
      if (!(covered >> i & 1)) {
        v = i;
        break;
      }
    if (v < 0) {
      best_cover_count = count;
      return;
    }
    for (int fi : at_vertex[v]) cover(covered | facebits[fi], count + 1);
  }
};

CompSearch make_search(const GammaComplex& g, const ComponentInfo& comp,
                       const std::set<int>& dims) {
  CompSearch s;
  s.n = (int)comp.vertex_ids.size();
  if (s.n > 31) throw resource_error("component too large for exact matching search");
  std::map<int, int> local;
  for (int i = 0; i < s.n; ++i) local[comp.vertex_ids[i]] = i;
  s.at_vertex.assign(s.n, {});
  for (const auto& f : g.faces) {
    if (!dims.count((int)f.size() - 1)) continue;
    if (!local.count(f[0])) continue;
    uint32_t bits = 0;
    for (int v : f) {
      auto it = local.find(v);
      if (it == local.end()) throw inconsistency_error("face crosses components");
      bits |= 1u << it->second;
    }
    int fi = (int)s.facebits.size();
    s.facebits.push_back(bits);
    s.face_ids.push_back(f);
    for (int v : f) s.at_vertex[local[v]].push_back(fi);
  }
  return s;
}

}  // namespace

DeltaResult delta(const GammaComplex& g, const std::set<int>& j) {
  for (const auto& u : g.unknown)
    if (j.count((int)u.size() - 1))
      throw input_error("face status unresolved for candidate " + face_name(u));

  DeltaResult out;
  for (const auto& comp : components(g)) {
    CompSearch s = make_search(g, comp, j);
    s.phase1(0, 0);
    s.target = s.best_cover;
    s.phase2(0, 0);
    if (s.best_count < 0) throw inconsistency_error("matching search lost its optimum");
    out.delta += s.best_count;
    out.coverage += s.best_cover;
    for (int fi : s.best_chosen) out.matching.push_back(s.face_ids[fi]);
  }
  return out;
}

CoveringNumbers covering_numbers(const GammaComplex& g) {
  for (const auto& u : g.unknown)
    throw input_error("face status unresolved for candidate " + face_name(u));
  CoveringNumbers out;
  std::set<int> low{0, 1};
  for (const auto& comp : components(g)) {
    CompSearch sb = make_search(g, comp, low);
    sb.cover(0, 0);
    out.b += sb.best_cover_count;
    CompSearch sc = make_search(g, comp, all_dims(g));
    sc.cover(0, 0);
    out.c += sc.best_cover_count;
  }
  return out;
}

BoundsReport bounds_report(const LatticeBasis& l, int degree_bound, int face_cap) {
  IntMat a = exactalg::grading_matrix(l);
  auto cs = circuits::enumerate_circuits(a);
  GammaComplex g = build_gamma(a, cs, degree_bound, face_cap);
  auto mk = markov::markov_basis(l);

  // T_min and C_min must coincide; both sides are computed independently.
  std::vector<std::set<int>> cmin = g.vertices;
  if (mk.tmin != cmin) throw inconsistency_error("T_min differs from C_min");

  BoundsReport r;
  r.ht = l.rank();
  r.q = (int)g.vertices.size();
  r.ceil_q2 = (r.q + 1) / 2;
  r.delta01 = delta(g, {0, 1}).delta;
  r.delta_omega = delta(g, all_dims(g)).delta;
  auto cov = covering_numbers(g);
  r.b_cover = cov.b;
  r.c_cover = cov.c;
  r.mu = mk.mu;
  r.bar_lower = std::max(r.ceil_q2, r.delta01);
  r.ara_a_lower = r.delta_omega;
  if (r.delta01 > r.mu) throw inconsistency_error("delta exceeds mu");
  if (r.delta01 == r.mu)
    r.bar = r.mu;
  else if (auto cert = markov::bar_mu_certificate(mk))
    r.bar = *cert;
  r.complete_intersection = r.mu == r.ht;
  return r;
}

}  // namespace latbar::complexes
