#include "fm.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"

namespace latbar::fm {

namespace {

using Int = mpz_class;

struct Constraint {
  RatVec a;
  Rat b;
};

// Scale so a becomes a primitive integer vector (sign preserved). Returns the
// integer key used for deduplication.
std::vector<Int> normalize(Constraint& c) {
  Int den = 1;
  for (const auto& q : c.a) den = lcm(den, q.get_den());
  den = lcm(den, c.b.get_den());
  Int g = 0;
  std::vector<Int> key(c.a.size());
  for (size_t i = 0; i < c.a.size(); i++) {
    key[i] = Int(c.a[i] * den);
    g = gcd(g, key[i]);
  }
  if (g == 0) g = 1;
  Rat scale(den, g);
  for (size_t i = 0; i < c.a.size(); i++) {
    c.a[i] *= scale;
    key[i] /= g;
  }
  c.b *= scale;
  return key;
}

// Stage record for witness back-substitution: the variable eliminated and the
// constraints that mentioned it at that point.
struct Stage {
  int var;
  std::vector<Constraint> involved;
};

}  // namespace

std::optional<RatVec> solve(const System& sys) {
  int n = sys.nvars;
  std::vector<Constraint> ineq;
  for (size_t i = 0; i < sys.ge_lhs.size(); i++) {
    if (int(sys.ge_lhs[i].size()) != n) throw input_error("fm: constraint width mismatch");
    ineq.push_back({sys.ge_lhs[i], sys.ge_rhs[i]});
  }
  std::vector<Constraint> eqs;
  for (size_t i = 0; i < sys.eq_lhs.size(); i++) {
    if (int(sys.eq_lhs[i].size()) != n) throw input_error("fm: constraint width mismatch");
    eqs.push_back({sys.eq_lhs[i], sys.eq_rhs[i]});
  }

  // Substitutions x_var = expr.a . x + expr.b produced from the equalities.
  struct Subst {
    int var;
    RatVec a;
    Rat b;
  };
  std::vector<Subst> substs;
  std::vector<bool> eliminated(n, false);

  auto apply_subst = [&](Constraint& c, const Subst& s) {
    Rat coef = c.a[s.var];
    if (coef == 0) return;
    c.a[s.var] = 0;
    for (int j = 0; j < n; j++)
      if (s.a[j] != 0) c.a[j] += coef * s.a[j];
    c.b -= coef * s.b;
  };

  for (size_t e = 0; e < eqs.size(); e++) {
    Constraint& cur = eqs[e];
    int p = -1;
    for (int j = 0; j < n; j++)
      if (cur.a[j] != 0) { p = j; break; }
    if (p < 0) {
      if (cur.b != 0) return std::nullopt;
      continue;
    }
    Subst s;
    s.var = p;
    s.a.assign(n, 0);
    Rat inv = 1 / cur.a[p];
    for (int j = 0; j < n; j++)
      if (j != p) s.a[j] = -cur.a[j] * inv;
    s.b = cur.b * inv;
    for (size_t k = e + 1; k < eqs.size(); k++) apply_subst(eqs[k], s);
    for (auto& c : ineq) apply_subst(c, s);
    eliminated[p] = true;
    substs.push_back(std::move(s));
  }

  // Deduplicate, keeping the strongest right-hand side per direction.
  auto dedupe = [&](std::vector<Constraint>& cs) -> bool {
    std::map<std::vector<Int>, Constraint> best;
    for (auto& c : cs) {
      auto key = normalize(c);
      bool zero = std::all_of(key.begin(), key.end(), [](const Int& x) { return x == 0; });
      if (zero) {
        if (c.b > 0) return false;  // 0 >= positive: infeasible
        continue;
      }
      auto it = best.find(key);
      if (it == best.end())
        best.emplace(std::move(key), std::move(c));
      else if (c.b > it->second.b)
        it->second = std::move(c);
    }
    cs.clear();
    for (auto& [k, c] : best) cs.push_back(std::move(c));
    return true;
  };
  if (!dedupe(ineq)) return std::nullopt;

  std::vector<Stage> stages;
  for (int step = 0; step < n; step++) {
    // Next variable: fewest pos*neg products among the not yet eliminated.
    int var = -1;
    size_t best_cost = 0;
    for (int j = 0; j < n; j++) {
      if (eliminated[j]) continue;
      size_t pos = 0, neg = 0;
      for (const auto& c : ineq) {
        if (c.a[j] > 0) pos++;
        else if (c.a[j] < 0) neg++;
      }
      size_t cost = pos * neg + pos + neg;
      if (var < 0 || cost < best_cost) { var = j; best_cost = cost; }
    }
    if (var < 0) break;
    eliminated[var] = true;

    std::vector<Constraint> lower, upper, rest;
    for (auto& c : ineq) {
      if (c.a[var] > 0) lower.push_back(std::move(c));       // x_var >= ...
      else if (c.a[var] < 0) upper.push_back(std::move(c));  // x_var <= ...
      else rest.push_back(std::move(c));
    }
    Stage st;
    st.var = var;
    for (const auto& c : lower) st.involved.push_back(c);
    for (const auto& c : upper) st.involved.push_back(c);
    stages.push_back(std::move(st));

    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // lo: a x >= b with a_var > 0; up: a x >= b with a_var < 0.
        Rat s = lo.a[var] / -up.a[var];
        Constraint c;
        c.a.resize(n);
        for (int j = 0; j < n; j++) c.a[j] = lo.a[j] + s * up.a[j];
        c.b = lo.b + s * up.b;
        rest.push_back(std::move(c));
        if (rest.size() > sys.max_constraints)
          throw resource_error("fm: constraint ceiling exceeded");
      }
    ineq = std::move(rest);
    if (!dedupe(ineq)) return std::nullopt;
  }

  for (const auto& c : ineq)
    if (c.b > 0) return std::nullopt;

  // Back-substitute a witness.
  RatVec x(n, 0);
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    bool have_lo = false, have_hi = false;
    Rat lo = 0, hi = 0;
    for (const auto& c : it->involved) {
      Rat rest = c.b;
      for (int j = 0; j < n; j++)
        if (j != it->var && c.a[j] != 0) rest -= c.a[j] * x[j];
      Rat bound = rest / c.a[it->var];
      if (c.a[it->var] > 0) {
        if (!have_lo || bound > lo) { lo = bound; have_lo = true; }
      } else {
        if (!have_hi || bound < hi) { hi = bound; have_hi = true; }
      }
    }
    if (have_lo && have_hi && lo > hi)
      throw inconsistency_error("fm: empty interval during back-substitution");
    x[it->var] = have_lo ? lo : (have_hi ? hi : Rat(0));
  }
  for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
    Rat v = it->b;
    for (int j = 0; j < n; j++)
      if (it->a[j] != 0) v += it->a[j] * x[j];
    x[it->var] = v;
  }
  return x;
}

}  // namespace latbar::fm
