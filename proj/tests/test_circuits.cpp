#include <algorithm>
#include <random>
#include <set>

#include "circuits.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "fixtures.hpp"

using namespace latbar;
using circuits::Circuit;
using exactalg::Int;
using exactalg::IntMat;
using exactalg::IntVec;

namespace {

IntMat mat(std::vector<std::vector<int>> rows) {
  IntMat m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

IntVec vec(const std::vector<int>& v) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

Circuit canon(std::vector<int> v) {
  IntVec u = vec(v);
  for (auto& x : u) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : u) y = -y;
    break;
  }
  return Circuit{u};
}

// Reference enumeration: test every column subset for minimal dependence.
std::vector<Circuit> oracle_circuits(const IntMat& a) {
  const int m = a.cols();
  std::vector<Circuit> out;
  for (uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> cols;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) cols.push_back(i);
    const int s = (int)cols.size();
    if (exactalg::rank(a.select_cols(cols)) == s) continue;
    bool minimal = true;
    for (int drop = 0; drop < s && minimal; ++drop) {
      std::vector<int> sub;
      for (int i = 0; i < s; ++i)
        if (i != drop) sub.push_back(cols[i]);
      if (!sub.empty() && exactalg::rank(a.select_cols(sub)) < s - 1) minimal = false;
    }
    if (!minimal) continue;
    auto ker = exactalg::kernel_basis(a.select_cols(cols));
    REQUIRE(ker.rows.size() == 1);
    IntVec full(m, Int(0));
    for (int i = 0; i < s; ++i) full[cols[i]] = ker.rows[0][i];
    for (auto& x : full) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : full) y = -y;
      break;
    }
    out.push_back(Circuit{full});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("circuits of small hand-checked configurations") {
  auto cs = circuits::enumerate_circuits(mat({{1, 1, 1}, {0, 1, 2}}));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].u == vec({1, -2, 1}));

  cs = circuits::enumerate_circuits(mat({{1, 0, 1}, {0, 1, 1}}));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].u == vec({1, 1, -1}));

  cs = circuits::enumerate_circuits(mat({{1, 1, 0}, {0, 0, 1}}));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].u == vec({1, -1, 0}));
  CHECK(cs[0].support() == std::set<int>{0, 1});

  cs = circuits::enumerate_circuits(mat({{1, 0, 0}, {0, 1, 0}}));
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].u == vec({0, 0, 1}));

  CHECK(circuits::enumerate_circuits(mat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("circuit enumeration matches subset oracle on random configurations") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 6; ++trial) {
    const int rows = 3 + trial % 2, cols = 5 + trial % 2;
    IntMat a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = entry(rng);
    auto fast = circuits::enumerate_circuits(a);
    auto slow = oracle_circuits(a);
    CHECK(fast == slow);
  }
}

TEST_CASE("benchmark configuration has exactly the 36 known circuits") {
  auto cs = circuits::enumerate_circuits(bench::config12());
  REQUIRE(cs.size() == 36);

  std::vector<Circuit> expected;
  for (const auto& v : bench::config12_circuits()) expected.push_back(canon(v));
  std::sort(expected.begin(), expected.end());
  CHECK(cs == expected);
}

TEST_CASE("benchmark minimal circuit supports") {
  auto cs = circuits::enumerate_circuits(bench::config12());
  auto fam = circuits::support_family(cs);

  std::vector<std::set<int>> want;
  for (const auto& s : bench::config12_min_supports()) {
    std::set<int> z;
    for (int v : s) z.insert(v - 1);
    want.push_back(z);
  }
  std::sort(want.begin(), want.end(), [](const std::set<int>& x, const std::set<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  CHECK(fam.minimal == want);
  CHECK(fam.all.size() >= fam.minimal.size());
}

TEST_CASE("conformal circuit search") {
  auto a = bench::config12();
  // 2*(x9^2 - x12) + (x11^2 - x8 x9^2) decomposes conformally.
  IntVec v = vec({0, 0, 0, 0, 0, 0, 0, -1, 2, 0, 2, -2});
  auto c = circuits::conformal_circuit(v, a);
  CHECK(c.u == vec({0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, -1}));

  IntVec neg(v.size());
  for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
  auto cn = circuits::conformal_circuit(neg, a);
  CHECK(cn.u == vec({0, 0, 0, 0, 0, 0, 0, 0, -2, 0, 0, 1}));

  CHECK_THROWS_AS(circuits::conformal_circuit(vec({1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), a),
                  input_error);
  CHECK_THROWS_AS(circuits::conformal_circuit(vec({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}), a),
                  input_error);
}

TEST_CASE("restriction agrees with enumeration of the column submatrix") {
  auto a = bench::config12();
  auto cs = circuits::enumerate_circuits(a);
  std::set<int> keep{0, 1, 2, 3, 4, 5};
  auto restricted = circuits::restrict_circuits(cs, keep);
  CHECK(restricted.size() == 3);

  std::vector<int> sel(keep.begin(), keep.end());
  auto direct = circuits::enumerate_circuits(a.select_cols(sel));
  std::vector<Circuit> embedded;
  for (const Circuit& c : direct) {
    IntVec full(a.cols(), Int(0));
    for (size_t i = 0; i < sel.size(); ++i) full[sel[i]] = c.u[i];
    embedded.push_back(Circuit{full});
  }
  std::sort(embedded.begin(), embedded.end());
  CHECK(restricted == embedded);
}

TEST_CASE("extremality of column configurations") {
  CHECK(circuits::is_extremal(mat({{1, 0}, {0, 1}})));
  CHECK(circuits::is_extremal(mat({{1, 0, -1}, {0, 1, -1}})));
  CHECK_FALSE(circuits::is_extremal(mat({{1, 1, 1}, {0, 1, 2}})));
  CHECK_FALSE(circuits::is_extremal(mat({{1, 0, 1}, {0, 1, 1}})));
  CHECK_FALSE(circuits::is_extremal(bench::config12()));
}
