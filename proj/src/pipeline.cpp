#include "pipeline.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circuits.hpp"
#include "complexes.hpp"
#include "determinantal.hpp"
#include "errors.hpp"
#include "exactalg.hpp"
#include "graphs.hpp"
#include "groebner.hpp"
#include "io.hpp"
#include "json.hpp"
#include "markov.hpp"

namespace latbar::pipeline {
namespace {

using json = nlohmann::ordered_json;
using exactalg::IntMat;
using exactalg::IntVec;
using exactalg::LatticeBasis;
using groebner::Binomial;
using groebner::Monomial;
using groebner::Polynomial;

struct Problem {
  LatticeBasis lattice;
  IntMat config;  // column configuration whose kernel saturates to the lattice
  io::VarNames vars;
  std::optional<graphs::Graph> graph;
  std::optional<determinantal::Spec> det;
};

Problem resolve(const std::string& kind, const std::string& input) {
  Problem p;
  if (kind == "matrix-kernel") {
    p.config = io::parse_matrix(input);
    p.lattice = exactalg::kernel_basis(p.config);
    p.vars = {p.config.cols(), 0};
  } else if (kind == "lattice-basis") {
    IntMat rows = io::parse_matrix(input);
    std::vector<IntVec> gens;
    for (int i = 0; i < rows.rows(); ++i) gens.push_back(rows.row(i));
    p.lattice = exactalg::make_lattice(rows.cols(), gens);
    p.config = exactalg::grading_matrix(p.lattice);
    p.vars = {rows.cols(), 0};
  } else if (kind == "graph") {
    p.graph = io::parse_graph_input(input);
    p.config = graphs::incidence_config(*p.graph);
    p.lattice = exactalg::kernel_basis(p.config);
    p.vars = {p.graph->m(), 0};
  } else if (kind == "determinantal") {
    p.det = io::parse_det_spec(input);
    p.lattice = determinantal::lattice_of(*p.det);
    p.config = exactalg::grading_matrix(p.lattice);
    p.vars = {2 * p.det->m, p.det->m};
  } else {
    throw input_error("unknown input kind: " + kind);
  }
  return p;
}

struct Result {
  std::string text;
  json j;
  std::optional<std::string> failure;
};

std::string support_str(const std::set<int>& sup, const io::VarNames& vars) {
  std::string s;
  for (int v : sup) {
    if (!s.empty()) s += ' ';
    s += vars.name(v);
  }
  return s;
}

json support_json(const std::set<int>& sup, const io::VarNames& vars) {
  json a = json::array();
  for (int v : sup) a.push_back(vars.name(v));
  return a;
}

std::string bin_str(const Binomial& b, const io::VarNames& vars) {
  return io::format_binomial(b, vars);
}

std::string ids_str(const std::vector<int>& ids) {
  std::string s;
  for (int v : ids) {
    if (!s.empty()) s += ' ';
    s += std::to_string(v);
  }
  return s.empty() ? "-" : s;
}

std::string braced_vertices(const std::vector<int>& ids, const complexes::GammaComplex& g,
                            const io::VarNames& vars) {
  std::string s;
  for (int id : ids) {
    if (!s.empty()) s += ' ';
    s += '{' + support_str(g.vertices[id], vars) + '}';
  }
  return s;
}

Result cmd_circuits(const Problem& p, const Options&) {
  auto cs = circuits::enumerate_circuits(p.config);
  auto fam = circuits::support_family(cs);
  std::sort(fam.minimal.begin(), fam.minimal.end());

  Result r;
  std::ostringstream os;
  os << "circuits " << cs.size() << "\n";
  json jc = json::array();
  for (const auto& c : cs) {
    std::string s = bin_str(groebner::binomial_from_vec(c.u), p.vars);
    os << "  " << s << "\n";
    jc.push_back(s);
  }
  os << "minimal-supports " << fam.minimal.size() << "\n";
  json jm = json::array();
  for (const auto& sup : fam.minimal) {
    os << "  " << support_str(sup, p.vars) << "\n";
    jm.push_back(support_json(sup, p.vars));
  }
  r.j["circuits"] = jc;
  r.j["minimal_supports"] = jm;
  r.text = os.str();
  return r;
}

Result cmd_complex(const Problem& p, const Options& opt) {
  auto cs = circuits::enumerate_circuits(p.config);
  auto g = complexes::build_gamma(p.config, cs, opt.degree_bound, opt.face_cap);

  Result r;
  std::ostringstream os;
  os << "vertices " << g.vertices.size() << "\n";
  json jv = json::array();
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  " << i << ": " << support_str(g.vertices[i], p.vars) << "\n";
    jv.push_back(support_json(g.vertices[i], p.vars));
  }
  os << "faces " << g.faces.size() << "\n";
  json jf = json::array();
  for (const auto& face : g.faces) {
    std::string wit;
    auto it = g.witnesses.find(face);
    if (it != g.witnesses.end()) {
      for (const auto& m : it->second) {
        if (!wit.empty()) wit += ", ";
        wit += io::format_monomial(m, p.vars);
      }
    }
    os << "  " << int(face.size()) - 1 << " | " << ids_str(face) << " | " << wit << "\n";
    json f;
    f["dim"] = int(face.size()) - 1;
    f["vertex_ids"] = face;
    json w = json::array();
    if (it != g.witnesses.end())
      for (const auto& m : it->second) w.push_back(io::format_monomial(m, p.vars));
    f["witnesses"] = w;
    jf.push_back(f);
  }
  os << "unknown " << g.unknown.size() << "\n";
  json ju = json::array();
  for (const auto& cand : g.unknown) {
    os << "  " << ids_str(cand) << "\n";
    ju.push_back(cand);
  }
  os << "degree-bound " << g.degree_bound << "\n";
  os << "face-cap " << g.face_cap << "\n";
  r.j["vertices"] = jv;
  r.j["faces"] = jf;
  r.j["unknown"] = ju;
  r.j["degree_bound"] = g.degree_bound;
  r.j["face_cap"] = g.face_cap;
  r.text = os.str();
  return r;
}

Result cmd_bounds(const Problem& p, const Options& opt) {
  auto rep = complexes::bounds_report(p.lattice, opt.degree_bound, opt.face_cap);
  auto cs = circuits::enumerate_circuits(p.config);
  auto g = complexes::build_gamma(p.config, cs, opt.degree_bound, opt.face_cap);
  auto d01 = complexes::delta(g, {0, 1});

  Result r;
  std::ostringstream os;
  os << "ht " << rep.ht << "\n";
  os << "vertices " << rep.q << "\n";
  os << "ceil-q2 " << rep.ceil_q2 << "\n";
  os << "delta01 " << rep.delta01 << "\n";
  os << "delta-omega " << rep.delta_omega << "\n";
  os << "b-cover " << rep.b_cover << "\n";
  os << "c-cover " << rep.c_cover << "\n";
  os << "mu " << rep.mu << "\n";
  os << "bar-lower " << rep.bar_lower << "\n";
  os << "ara-lower " << rep.ara_a_lower << "\n";
  if (rep.bar)
    os << "bar " << *rep.bar << "\n";
  else
    os << "bar unknown\n";
  os << "complete-intersection " << (rep.complete_intersection ? "true" : "false") << "\n";
  os << "matching01 " << d01.matching.size() << "\n";
  for (const auto& face : d01.matching) os << "  " << braced_vertices(face, g, p.vars) << "\n";

  r.j["ht"] = rep.ht;
  r.j["vertices"] = rep.q;
  r.j["ceil_q2"] = rep.ceil_q2;
  r.j["delta01"] = rep.delta01;
  r.j["delta_omega"] = rep.delta_omega;
  r.j["b_cover"] = rep.b_cover;
  r.j["c_cover"] = rep.c_cover;
  r.j["mu"] = rep.mu;
  r.j["bar_lower"] = rep.bar_lower;
  r.j["ara_lower"] = rep.ara_a_lower;
  if (rep.bar)
    r.j["bar"] = *rep.bar;
  else
    r.j["bar"] = nullptr;
  r.j["complete_intersection"] = rep.complete_intersection;
  json jv = json::array();
  for (const auto& sup : g.vertices) jv.push_back(support_json(sup, p.vars));
  r.j["vertex_supports"] = jv;
  r.j["matching01"] = d01.matching;
  r.text = os.str();
  return r;
}

Result cmd_markov(const Problem& p, const Options& opt) {
  markov::MarkovOptions mo;
  mo.max_fiber = opt.limit_states;
  auto rep = markov::markov_basis(p.lattice, mo);

  Result r;
  std::ostringstream os;
  os << "mu " << rep.mu << "\n";
  os << "generators " << rep.generators.size() << "\n";
  json jg = json::array();
  for (const auto& b : rep.generators) {
    std::string s = bin_str(b, p.vars);
    os << "  " << s << "\n";
    jg.push_back(s);
  }
  os << "indispensable-monomials " << rep.indispensable_monomials.size() << "\n";
  json jim = json::array();
  for (const auto& m : rep.indispensable_monomials) {
    std::string s = io::format_monomial(m, p.vars);
    os << "  " << s << "\n";
    jim.push_back(s);
  }
  os << "indispensable-binomials " << rep.indispensable_binomials.size() << "\n";
  json jib = json::array();
  for (const auto& b : rep.indispensable_binomials) {
    std::string s = bin_str(b, p.vars);
    os << "  " << s << "\n";
    jib.push_back(s);
  }
  os << "tmin " << rep.tmin.size() << "\n";
  json jt = json::array();
  for (const auto& sup : rep.tmin) {
    os << "  " << support_str(sup, p.vars) << "\n";
    jt.push_back(support_json(sup, p.vars));
  }
  r.j["mu"] = rep.mu;
  r.j["generators"] = jg;
  r.j["indispensable_monomials"] = jim;
  r.j["indispensable_binomials"] = jib;
  r.j["tmin"] = jt;
  r.text = os.str();
  return r;
}

const char* shape_name(graphs::WalkShape s) {
  switch (s) {
    case graphs::WalkShape::EvenCycle:
      return "even-cycle";
    case graphs::WalkShape::TwoOddCyclesSharedVertex:
      return "two-odd-cycles-shared-vertex";
    default:
      return "two-odd-cycles-path";
  }
}

const char* comp_shape_name(graphs::ComponentShape s) {
  switch (s) {
    case graphs::ComponentShape::Vertex:
      return "vertex";
    case graphs::ComponentShape::Edge:
      return "edge";
    case graphs::ComponentShape::TwoSimplex:
      return "2-simplex";
    default:
      return "other";
  }
}

Result cmd_graph(const Problem& p, const Options&) {
  if (!p.graph) throw input_error("command graph needs a graph input");
  const auto& g = *p.graph;
  auto ename = [&](int e) { return p.vars.name(e); };

  auto walks = graphs::enumerate_circuit_walks(g);
  auto gg = graphs::gamma_complex(g);
  auto cert = graphs::bar_mu_certificate(g);

  Result r;
  std::ostringstream os;
  os << "graph vertices " << g.n << " edges " << g.m() << "\n";
  os << "sharp " << (gg.sharp ? "true" : "false") << "\n";
  os << "circuit-walks " << walks.size() << "\n";
  json jw = json::array();
  int idx = 0;
  for (const auto& cw : walks) {
    ++idx;
    os << "walk " << idx << " " << shape_name(cw.shape) << "\n";
    os << "  binomial " << bin_str(cw.binomial, p.vars) << "\n";
    auto cr = graphs::chord_report(cw.walk, g);
    os << "  chords " << cr.chords.size() << "\n";
    json jch = json::array();
    for (const auto& c : cr.chords) {
      json jc;
      jc["edge"] = ename(c.edge);
      if (c.kind == graphs::Chord::Kind::Bridge) {
        os << "    " << ename(c.edge) << " bridge\n";
        jc["kind"] = "bridge";
      } else {
        const char* k = c.kind == graphs::Chord::Kind::Odd ? "odd" : "even";
        os << "    " << ename(c.edge) << " " << k << " " << c.pos_u << " " << c.pos_v << "\n";
        jc["kind"] = k;
        jc["pos_u"] = c.pos_u;
        jc["pos_v"] = c.pos_v;
      }
      jch.push_back(jc);
    }
    os << "  odd-pairs " << cr.pairs.size() << "\n";
    json jop = json::array();
    for (const auto& pr : cr.pairs) {
      os << "    " << ename(pr.c1) << " " << ename(pr.c2) << " "
         << (pr.effective ? (pr.strong ? "effective strong" : "effective") : "ineffective")
         << "\n";
      json jp;
      jp["chords"] = {ename(pr.c1), ename(pr.c2)};
      jp["effective"] = pr.effective;
      jp["strong"] = pr.strong;
      jop.push_back(jp);
    }
    os << "  f4s " << cr.f4s.size() << "\n";
    json jf4 = json::array();
    for (size_t i = 0; i < cr.f4s.size(); ++i) {
      const auto& f = cr.f4s[i];
      os << "    cycle " << ename(f.cycle[0]) << " " << ename(f.cycle[1]) << " "
         << ename(f.cycle[2]) << " " << ename(f.cycle[3]) << " | sides";
      for (int v : f.side1) os << " v" << v + 1;
      os << " /";
      for (int v : f.side2) os << " v" << v + 1;
      os << " | crossing";
      if (cr.crossing[i].empty()) os << " none";
      for (int e : cr.crossing[i]) os << " " << ename(e);
      os << "\n";
      json jf;
      json cyc = json::array();
      for (int e : f.cycle) cyc.push_back(ename(e));
      jf["cycle"] = cyc;
      json s1 = json::array(), s2 = json::array();
      for (int v : f.side1) s1.push_back(v + 1);
      for (int v : f.side2) s2.push_back(v + 1);
      jf["side1"] = s1;
      jf["side2"] = s2;
      json cx = json::array();
      for (int e : cr.crossing[i]) cx.push_back(ename(e));
      jf["crossing"] = cx;
      jf4.push_back(jf);
    }
    json w;
    w["shape"] = shape_name(cw.shape);
    w["binomial"] = bin_str(cw.binomial, p.vars);
    w["chords"] = jch;
    w["odd_pairs"] = jop;
    w["f4s"] = jf4;
    jw.push_back(w);
  }
  os << "gamma-components " << gg.comps.size() << "\n";
  json jcomp = json::array();
  for (const auto& c : gg.comps) {
    os << "  " << comp_shape_name(c.shape) << " " << braced_vertices(c.vertex_ids, gg.gamma, p.vars)
       << "\n";
    json jc;
    jc["shape"] = comp_shape_name(c.shape);
    json vs = json::array();
    for (int id : c.vertex_ids) vs.push_back(support_json(gg.gamma.vertices[id], p.vars));
    jc["vertices"] = vs;
    jcomp.push_back(jc);
  }
  os << "mu " << cert.mu << "\n";
  if (cert.bar)
    os << "bar " << *cert.bar << "\n";
  else
    os << "bar unknown\n";
  os << "violators " << cert.violators.size() << "\n";
  json jviol = json::array();
  for (const auto& b : cert.violators) {
    std::string s = bin_str(b, p.vars);
    os << "  " << s << "\n";
    jviol.push_back(s);
  }
  r.j["vertices"] = g.n;
  r.j["edges"] = g.m();
  r.j["sharp"] = gg.sharp;
  r.j["walks"] = jw;
  r.j["gamma_components"] = jcomp;
  r.j["mu"] = cert.mu;
  if (cert.bar)
    r.j["bar"] = *cert.bar;
  else
    r.j["bar"] = nullptr;
  r.j["violators"] = jviol;
  r.text = os.str();
  return r;
}

Result cmd_det(const Problem& p, const Options& opt) {
  if (!p.det) throw input_error("command det needs a determinantal input");
  const auto& s = *p.det;

  auto minors = determinantal::minor_generators(s);
  bool ugb = determinantal::verify_universal_gb(s, opt.orders, opt.seed);
  bool prime = determinantal::is_prime(s);
  auto init = determinantal::initial_ideal_lex(s);
  int bar = determinantal::bar_certificate(s);
  auto law = determinantal::lawrence_ideal(s, opt.limit_states);
  auto bir = determinantal::lattice_basis_ideal(s);

  Result r;
  std::ostringstream os;
  os << "m " << s.m << "\n";
  os << "d";
  for (int di : s.d) os << " " << di;
  os << "\n";
  os << "minors " << minors.size() << "\n";
  json jmin = json::array();
  for (const auto& b : minors) {
    std::string t = bin_str(b, p.vars);
    os << "  " << t << "\n";
    jmin.push_back(t);
  }
  os << "universal-groebner " << (ugb ? "pass" : "fail") << "\n";
  os << "lattice-rank " << p.lattice.rank() << "\n";
  os << "height " << s.m - 1 << "\n";
  os << "prime " << (prime ? "true" : "false") << "\n";
  os << "initial-ideal-lex " << init.size() << "\n";
  json jinit = json::array();
  for (const auto& m : init) {
    std::string t = io::format_monomial(m, p.vars);
    os << "  " << t << "\n";
    jinit.push_back(t);
  }
  os << "bar " << bar << "\n";
  os << "lawrence-b";
  json jb = json::array();
  for (const auto& bi : law.b) {
    os << " " << bi.get_str();
    jb.push_back(bi.get_str());
  }
  os << "\n";
  os << "lawrence-mu " << law.markov.mu << "\n";
  io::VarNames lvars{2 * s.m, s.m};
  os << "lawrence-generators " << law.markov.generators.size() << "\n";
  json jlg = json::array();
  for (const auto& b : law.markov.generators) {
    std::string t = bin_str(b, lvars);
    os << "  " << t << "\n";
    jlg.push_back(t);
  }
  os << "lawrence-gamma-vertices " << law.gamma_vertices << "\n";
  os << "lawrence-bar-lower " << law.bar_lower << "\n";
  if (law.bar)
    os << "lawrence-bar " << *law.bar << "\n";
  else
    os << "lawrence-bar unknown\n";
  os << "basis-ideal-generators " << bir.generators.size() << "\n";
  json jbg = json::array();
  for (const auto& b : bir.generators) {
    std::string t = bin_str(b, p.vars);
    os << "  " << t << "\n";
    jbg.push_back(t);
  }
  os << "basis-ideal-groebner " << (bir.groebner_ok ? "pass" : "fail") << "\n";
  os << "basis-ideal-intersection " << (bir.intersection_ok ? "pass" : "fail") << "\n";
  if (bir.radical_ok)
    os << "basis-ideal-radical " << (*bir.radical_ok ? "pass" : "fail") << "\n";
  else
    os << "basis-ideal-radical skipped\n";

  r.j["m"] = s.m;
  r.j["d"] = s.d;
  r.j["minors"] = jmin;
  r.j["universal_groebner"] = ugb;
  r.j["lattice_rank"] = p.lattice.rank();
  r.j["height"] = s.m - 1;
  r.j["prime"] = prime;
  r.j["initial_ideal_lex"] = jinit;
  r.j["bar"] = bar;
  r.j["lawrence_b"] = jb;
  r.j["lawrence_mu"] = law.markov.mu;
  r.j["lawrence_generators"] = jlg;
  r.j["lawrence_gamma_vertices"] = law.gamma_vertices;
  r.j["lawrence_bar_lower"] = law.bar_lower;
  if (law.bar)
    r.j["lawrence_bar"] = *law.bar;
  else
    r.j["lawrence_bar"] = nullptr;
  r.j["basis_ideal_generators"] = jbg;
  r.j["basis_ideal_groebner"] = bir.groebner_ok;
  r.j["basis_ideal_intersection"] = bir.intersection_ok;
  if (bir.radical_ok)
    r.j["basis_ideal_radical"] = *bir.radical_ok;
  else
    r.j["basis_ideal_radical"] = nullptr;
  r.text = os.str();

  if (!ugb)
    r.failure = "universal Groebner verification failed";
  else if (!bir.ok())
    r.failure = bir.failure.empty() ? "basis ideal verification failed" : bir.failure;
  return r;
}

Result cmd_verify_witness(const Problem& p, const std::string& aux, const Options& opt) {
  auto witnesses = io::parse_polynomials(aux, p.vars);
  if (witnesses.empty()) throw input_error("verify-witness needs witness polynomials");

  auto cs = circuits::enumerate_circuits(p.config);
  auto g = complexes::build_gamma(p.config, cs, opt.degree_bound, opt.face_cap);

  Result r;
  std::ostringstream os;
  os << "witnesses " << witnesses.size() << "\n";
  json jw = json::array();
  std::vector<complexes::InducedSubcomplex> subs;
  for (size_t i = 0; i < witnesses.size(); ++i) {
    auto sub = complexes::gamma_of_polynomial(witnesses[i], g);
    os << "  " << i + 1 << ": vertices " << ids_str(sub.vertex_ids) << " | simplex "
       << (sub.simplex ? "true" : "false") << "\n";
    json js;
    js["vertex_ids"] = sub.vertex_ids;
    js["simplex"] = sub.simplex;
    jw.push_back(js);
    subs.push_back(std::move(sub));
  }
  bool spanning = complexes::spanning_check(subs, g);
  os << "spanning " << (spanning ? "true" : "false") << "\n";

  markov::MarkovOptions mo;
  mo.max_fiber = opt.limit_states;
  auto rep = markov::markov_basis(p.lattice, mo);
  os << "reference-generators " << rep.generators.size() << "\n";
  json jg = json::array();
  bool all_radical = true;
  for (const auto& b : rep.generators) {
    bool in = groebner::radical_member(Polynomial::from_binomial(b), witnesses);
    all_radical = all_radical && in;
    os << "  " << bin_str(b, p.vars) << " | radical-member " << (in ? "true" : "false") << "\n";
    json je;
    je["binomial"] = bin_str(b, p.vars);
    je["radical_member"] = in;
    jg.push_back(je);
  }
  bool pass = spanning && all_radical;
  os << "verdict " << (pass ? "pass" : "fail") << "\n";

  r.j["witnesses"] = jw;
  r.j["spanning"] = spanning;
  r.j["generators"] = jg;
  r.j["verdict"] = pass ? "pass" : "fail";
  r.text = os.str();
  if (!pass) {
    if (!spanning)
      r.failure = "witness subcomplexes do not span the vertices";
    else
      r.failure = "a reference generator is outside the radical of the witnesses";
  }
  return r;
}

}  // namespace

Outcome run(const std::string& kind, const std::string& command, const std::string& input,
            const std::string& aux, const Options& opt) {
  Outcome out;
  try {
    Problem p = resolve(kind, input);
    Result r;
    if (command == "circuits")
      r = cmd_circuits(p, opt);
    else if (command == "complex")
      r = cmd_complex(p, opt);
    else if (command == "bounds")
      r = cmd_bounds(p, opt);
    else if (command == "markov")
      r = cmd_markov(p, opt);
    else if (command == "graph")
      r = cmd_graph(p, opt);
    else if (command == "det")
      r = cmd_det(p, opt);
    else if (command == "verify-witness")
      r = cmd_verify_witness(p, aux, opt);
    else
      throw input_error("unknown command: " + command);
    if (opt.machine) {
      json top;
      top["command"] = command;
      top["kind"] = kind;
      top["report"] = r.j;
      out.report = top.dump(2) + "\n";
    } else {
      out.report = r.text;
    }
    if (r.failure) {
      out.status = 2;
      out.error = *r.failure;
    }
  } catch (const input_error& e) {
    out.status = 1;
    out.error = e.what();
  } catch (const resource_error& e) {
    out.status = 3;
    out.error = e.what();
  } catch (const std::exception& e) {
    out.status = 2;
    out.error = e.what();
  }
  return out;
}

}  // namespace latbar::pipeline
