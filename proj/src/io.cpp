#include "io.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace latbar::io {

namespace {

// Comment-stripped token stream.
std::vector<std::string> tokens_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) out.push_back(tok);
  }
  return out;
}

long to_long(const std::string& tok, const char* what) {
  size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (...) {
    throw input_error(std::string("expected ") + what + ", got '" + tok + "'");
  }
  if (pos != tok.size()) throw input_error(std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

}  // namespace

std::string VarNames::name(int idx) const {
  int nx = nvars - ny;
  if (idx < 0 || idx >= nvars) throw input_error("variable index out of range");
  if (idx < nx) return "x" + std::to_string(idx + 1);
  return "y" + std::to_string(idx - nx + 1);
}

int VarNames::index(const std::string& tok) const {
  if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y')) return -1;
  std::string num = tok.substr(1);
  if (!all_digits(num)) return -1;
  int i = int(to_long(num, "variable index"));
  int nx = nvars - ny;
  if (tok[0] == 'x') return (i >= 1 && i <= nx) ? i - 1 : -1;
  return (i >= 1 && i <= ny) ? nx + i - 1 : -1;
}

IntMat parse_matrix(const std::string& text) {
  auto toks = tokens_of(text);
  if (toks.size() < 2) throw input_error("matrix needs a 'rows cols' header");
  long r = to_long(toks[0], "row count"), c = to_long(toks[1], "column count");
  if (r < 1 || c < 1) throw input_error("matrix dimensions must be positive");
  if (toks.size() != size_t(2 + r * c))
    throw input_error("matrix entry count does not match the header");
  IntMat m{int(r), int(c)};
  for (long i = 0; i < r; i++)
    for (long j = 0; j < c; j++) {
      const std::string& tok = toks[size_t(2 + i * c + j)];
      std::string digits = (tok[0] == '-' || tok[0] == '+') ? tok.substr(1) : tok;
      if (digits.empty() || !all_digits(digits))
        throw input_error("expected a matrix entry, got '" + tok + "'");
      m.at(int(i), int(j)) = exactalg::Int(tok);
    }
  return m;
}

std::string format_matrix(const IntMat& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); i++) {
    for (int j = 0; j < m.cols(); j++) out << (j ? " " : "") << m.at(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

graphs::Graph parse_graph(const std::string& text) {
  auto toks = tokens_of(text);
  if (toks.size() < 2) throw input_error("graph needs an 'n m' header");
  long n = to_long(toks[0], "vertex count"), m = to_long(toks[1], "edge count");
  if (toks.size() != size_t(2 + 2 * m)) throw input_error("graph edge count does not match the header");
  std::vector<std::pair<int, int>> edges;
  for (long k = 0; k < m; k++) {
    long u = to_long(toks[size_t(2 + 2 * k)], "vertex id");
    long v = to_long(toks[size_t(3 + 2 * k)], "vertex id");
    if (u < 1 || u > n || v < 1 || v > n) throw input_error("vertex id out of range (ids are 1-based)");
    edges.push_back({int(u - 1), int(v - 1)});
  }
  return graphs::make_graph(int(n), edges);
}

std::string format_graph(const graphs::Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

graphs::Graph graph_by_name(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos) throw input_error("generator name needs the form kind:size");
  std::string kind = name.substr(0, colon);
  long k = to_long(name.substr(colon + 1), "generator size");
  if (kind == "wheel") return graphs::wheel_graph(int(k));
  if (kind == "cycle") return graphs::cycle_graph(int(k));
  if (kind == "complete") return graphs::complete_graph(int(k));
  throw input_error("unknown graph generator '" + kind + "' (wheel, cycle, complete)");
}

graphs::Graph parse_graph_input(const std::string& text) {
  std::string trimmed;
  for (char c : text)
    if (!std::isspace((unsigned char)c)) trimmed += c;
  if (trimmed.find(':') != std::string::npos) return graph_by_name(trimmed);
  return parse_graph(text);
}

determinantal::Spec parse_det_spec(const std::string& text) {
  auto toks = tokens_of(text);
  if (toks.empty()) throw input_error("spec needs a column count");
  long m = to_long(toks[0], "column count");
  if (toks.size() != size_t(1 + m)) throw input_error("spec exponent count does not match the header");
  std::vector<int> d;
  for (long i = 0; i < m; i++) d.push_back(int(to_long(toks[size_t(1 + i)], "column exponent")));
  return determinantal::make_spec(d);
}

Polynomial parse_polynomial(const std::string& text, const VarNames& vars) {
  // sign characters split atoms; everything else groups by whitespace
  std::vector<std::string> toks;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      toks.push_back(cur);
      cur.clear();
    }
  };
  for (char c : text) {
    if (c == '#') break;
    if (std::isspace((unsigned char)c)) {
      flush();
    } else if (c == '+' || c == '-') {
      flush();
      toks.push_back(std::string(1, c));
    } else {
      cur += c;
    }
  }
  flush();
  if (toks.empty()) throw input_error("empty polynomial");

  std::vector<groebner::Term> terms;
  size_t i = 0;
  bool first = true;
  while (i < toks.size()) {
    int sign = 1;
    bool saw_sign = false;
    while (i < toks.size() && (toks[i] == "+" || toks[i] == "-")) {
      if (toks[i] == "-") sign = -sign;
      saw_sign = true;
      i++;
    }
    if (!first && !saw_sign) throw input_error("missing sign between terms");
    if (i >= toks.size()) throw input_error("dangling sign");

    groebner::Rat coeff(sign);
    bool have_body = false;
    if (all_digits(toks[i]) ||
        (toks[i].find('/') != std::string::npos && toks[i][0] != 'x' && toks[i][0] != 'y')) {
      try {
        groebner::Rat c(toks[i]);
        if (c.get_den() == 0) throw input_error("");
        c.canonicalize();
        coeff *= c;
      } catch (...) {
        throw input_error("bad coefficient '" + toks[i] + "'");
      }
      i++;
      have_body = true;
    }
    Monomial m(vars.nvars, 0);
    while (i < toks.size() && toks[i] != "+" && toks[i] != "-") {
      std::string atom = toks[i];
      if (atom == "t" || atom.rfind("t^", 0) == 0)
        throw input_error("the variable t is reserved");
      std::string base = atom;
      int exp = 1;
      auto caret = atom.find('^');
      if (caret != std::string::npos) {
        base = atom.substr(0, caret);
        exp = int(to_long(atom.substr(caret + 1), "exponent"));
        if (exp < 0) throw input_error("negative exponent");
      }
      int idx = vars.index(base);
      if (idx < 0) throw input_error("unknown variable '" + base + "'");
      m[idx] += exp;
      i++;
      have_body = true;
    }
    if (!have_body) throw input_error("empty term");
    terms.push_back({m, coeff});
    first = false;
  }
  return Polynomial(std::move(terms));
}

std::vector<Polynomial> parse_polynomials(const std::string& text, const VarNames& vars) {
  std::vector<Polynomial> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace((unsigned char)c)) blank = false;
    if (blank) continue;
    out.push_back(parse_polynomial(line, vars));
  }
  return out;
}

std::string format_monomial(const Monomial& m, const VarNames& vars) {
  std::string out;
  for (int i = 0; i < vars.nvars; i++) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += vars.name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_polynomial(const Polynomial& f, const VarNames& vars) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    groebner::Rat c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "- ";
    } else {
      out += neg ? " - " : " + ";
    }
    bool unit_mono = groebner::mono_degree(t.m) == 0;
    if (c != 1 || unit_mono) {
      out += c.get_str();
      if (!unit_mono) out += ' ';
    }
    if (!unit_mono) out += format_monomial(t.m, vars);
  }
  return out;
}

std::string format_binomial(const Binomial& b, const VarNames& vars) {
  return format_monomial(b.plus(), vars) + " - " + format_monomial(b.minus(), vars);
}

}  // namespace latbar::io
