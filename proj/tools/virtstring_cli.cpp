#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "virtstring/virtstring.hpp"

using json = nlohmann::ordered_json;
using namespace vstr;

namespace {

constexpr const char* kSchema = "virtstring.report/1";

// a path to a file holding the text, or the text itself
std::string read_input(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::string line;
  while (std::getline(in, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return line;
  }
  return "";
}

bool looks_signed(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  while (in >> tok)
    if (tok.back() == '+' || tok.back() == '-') return true;
  return false;
}

std::string matrix_text(const BasedMatrix& t) {
  std::ostringstream os;
  for (const auto& row : t.rows()) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

json caps_json(const NormalizeCaps& c) { return {{"slack", c.slack}, {"node_budget", c.node_budget}}; }

json sum_json(const FormalSum& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) {
    json fs = json::array();
    for (const auto& k : m.factors) fs.push_back(k.str());
    terms.push_back({{"coeff", to_string(c)}, {"z", m.z}, {"factors", fs}});
  }
  json out = {{"tensor", f.tensor()}, {"terms", terms}};
  if (f.caps()) out["caps"] = caps_json(*f.caps());
  return out;
}

void emit(const json& j, bool as_json, const std::string& text) {
  const std::string out = as_json ? j.dump(2) + "\n" : text;
  std::fwrite(out.data(), 1, out.size(), stdout);
}

struct FillingFlags {
  int max_filling_size = kDefaultMaxFillingSize;
  int cover_depth = 2;
  int r_max = 3;
  int prime = 2;
  long long lagrangian_budget = 100000;
};

int cmd_invariants(const std::string& input, const FillingFlags& ff, bool as_json) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto lab = parse_closed_labeled(read_input(input));
  const VirtualString& s = lab.value;
  json rep;
  std::ostringstream tx;
  rep["schema"] = kSchema;
  rep["input"] = serialize(s, lab.labels);
  rep["rank"] = s.rank();
  rep["u"] = u(s).to_string();
  json hu = json::object();
  std::vector<std::vector<int>> seqs;
  for (int r = 2; r <= ff.r_max; ++r) seqs.push_back({r});
  for (int r = 2; r <= ff.r_max; ++r)
    for (int q = 2; q <= ff.r_max; ++q) seqs.push_back({r, q});
  for (const auto& rs : seqs) {
    std::string name = "u^(";
    for (size_t i = 0; i < rs.size(); ++i) name += (i ? "," : "") + std::to_string(rs[i]);
    hu[name + ")"] = higher_u(s, rs).to_string();
  }
  rep["higher_u"] = hu;
  rep["rho"] = rho(s);
  rep["genus"] = genus(s);
  const auto T = from_string(s);
  rep["matrix"] = T.rows();
  const auto P = primitive_reduce(T);
  rep["primitive_matrix"] = P.rows();
  try {
    const auto sg = sigma(T, ff.max_filling_size);
    rep["sigma"] = sg.sigma;
    rep["sigma_filling"] = sg.filling.blocks;
    rep["hyperbolic"] = is_hyperbolic(T, ff.max_filling_size);
  } catch (const CapExceeded&) {
    rep["sigma"] = "Unknown";
    rep["hyperbolic"] = "Unknown";
  }
  rep["ribbon"] = is_ribbon(s);
  std::string verdict = "NoObstructionFound", witness;
  try {
    const auto ob = slice_obstruction(s, ff.cover_depth, ff.r_max, ff.max_filling_size);
    if (ob.not_slice) verdict = "NotSlice", witness = ob.witness;
  } catch (const CapExceeded&) {
    verdict = "Unknown";
  }
  if (verdict == "NoObstructionFound") {
    const auto sc = lagrangian_scan(s, ff.prime, ff.lagrangian_budget);
    if (sc.verdict == ScanVerdict::NotSlice) verdict = "NotSlice", witness = "lagrangian scan mod " + std::to_string(ff.prime);
    else if (sc.verdict == ScanVerdict::BudgetExceeded) verdict = "Unknown";
  }
  rep["slice"] = verdict;
  if (!witness.empty()) rep["slice_witness"] = witness;
  rep["caps"] = {{"max_filling_size", ff.max_filling_size}, {"cover_depth", ff.cover_depth}, {"r_max", ff.r_max},
                 {"prime", ff.prime}, {"lagrangian_budget", ff.lagrangian_budget}};
  rep["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

  tx << "input: " << rep["input"].get<std::string>() << "\n";
  tx << "rank: " << s.rank() << "\nu: " << rep["u"].get<std::string>() << "\n";
  for (auto& [k, v] : hu.items()) tx << k << ": " << v.get<std::string>() << "\n";
  tx << "rho: " << rep["rho"] << "\ngenus: " << rep["genus"] << "\n";
  tx << "matrix:\n" << matrix_text(T) << "primitive matrix:\n" << matrix_text(P);
  tx << "sigma: " << (rep["sigma"].is_string() ? rep["sigma"].get<std::string>() : rep["sigma"].dump()) << "\n";
  tx << "hyperbolic: " << (rep["hyperbolic"].is_string() ? rep["hyperbolic"].get<std::string>() : rep["hyperbolic"].dump()) << "\n";
  tx << "ribbon: " << (rep["ribbon"].get<bool>() ? "true" : "false") << "\n";
  tx << "slice: " << verdict << (witness.empty() ? "" : " (" + witness + ")") << "\n";
  emit(rep, as_json, tx.str());
  return 0;
}

int cmd_classify(int m, NormalizeCaps caps, bool as_json) {
  const auto c = classify_rank(m, caps);
  json rep;
  std::ostringstream tx;
  rep["schema"] = kSchema;
  rep["rank"] = m;
  rep["caps"] = caps_json(caps);
  json cls = json::array();
  for (const auto& ci : c.classes) {
    json mem = json::array();
    for (const auto& code : ci.members) mem.push_back(serialize(from_canonical(code)));
    cls.push_back({{"key", ci.key.str()}, {"exact", ci.key.exact}, {"size", ci.members.size()}, {"invariants", ci.invariants}, {"members", mem}});
    tx << ci.key.str() << "  size=" << ci.members.size() << "  " << ci.invariants << (ci.key.exact ? "" : "  (inexact)") << "\n";
  }
  rep["classes"] = cls;
  json un = json::array();
  for (auto [a, b] : c.unresolved) {
    un.push_back({c.classes[a].key.str(), c.classes[b].key.str()});
    tx << "unresolved: " << c.classes[a].key.str() << " ~ " << c.classes[b].key.str() << "\n";
  }
  rep["unresolved"] = un;
  tx << c.classes.size() << " classes, " << c.unresolved.size() << " unresolved pairs\n";
  emit(rep, as_json, tx.str());
  return 0;
}

int cmd_equal(const std::string& a, const std::string& b, int rank_cap, long long budget, bool as_json) {
  const auto s1 = parse_closed(read_input(a)), s2 = parse_closed(read_input(b));
  const auto v = bfs_equal(s1, s2, rank_cap, budget);
  json rep;
  rep["schema"] = kSchema;
  rep["verdict"] = to_string(v.status);
  rep["witness"] = v.witness;
  json p1 = json::array(), p2 = json::array();
  for (const auto& mv : v.path_from_first) p1.push_back(mv.describe());
  for (const auto& mv : v.path_from_second) p2.push_back(mv.describe());
  rep["path_from_first"] = p1;
  rep["path_from_second"] = p2;
  rep["path_length"] = v.path_from_first.size() + v.path_from_second.size();
  rep["nodes"] = v.nodes;
  rep["rank_cap"] = v.rank_cap;
  std::ostringstream tx;
  tx << to_string(v.status);
  if (!v.witness.empty()) tx << " (" << v.witness << ")";
  if (v.status == BfsStatus::Equal) tx << " path length " << rep["path_length"];
  tx << "\nnodes: " << v.nodes << " rank cap: " << v.rank_cap << "\n";
  for (auto& x : p1) tx << "  first: " << x.get<std::string>() << "\n";
  for (auto& x : p2) tx << "  second: " << x.get<std::string>() << "\n";
  emit(rep, as_json, tx.str());
  return 0;
}

int cmd_cobracket(const std::string& input, bool open, NormalizeCaps caps, bool check, bool as_json) {
  Normalizer norm(caps);
  const std::string text = read_input(input);
  json rep;
  rep["schema"] = kSchema;
  std::ostringstream tx;
  if (open) {
    const auto mu = parse_open(text);
    const auto r = comodule_rho(mu, norm);
    rep["rho"] = sum_json(r);
    tx << "rho: " << r.to_string() << "\n";
  } else {
    const auto s = parse_closed(text);
    const auto nu = cobracket(s, norm);
    rep["nu"] = sum_json(nu);
    tx << "nu: " << nu.to_string() << "\n";
    if (check) {
      const auto c = cojacobi_check(s, norm);
      rep["cojacobi"] = {{"antisymmetric", c.antisymmetric}, {"cyclic_sum_zero", c.cyclic_sum_zero}, {"expansion_matches", c.expansion_matches}};
      tx << "co-Jacobi: " << (c.ok() ? "ok" : "FAILED") << "\n";
    }
  }
  emit(rep, as_json, tx.str());
  return 0;
}

int cmd_nabla(const std::string& input, bool ut, int cover, NormalizeCaps caps, bool as_json) {
  auto d = parse_diagram(read_input(input));
  if (cover > 1) d = knot_covering(d, cover);
  json rep;
  rep["schema"] = kSchema;
  rep["diagram"] = serialize(d);
  std::ostringstream tx;
  if (ut) {
    const auto p = nabla_ut(d);
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"z", e.first}, {"t", e.second}, {"coeff", to_string(c)}});
    rep["nabla_ut"] = terms;
    tx << p.to_string() << "\n";
  } else {
    Normalizer norm(caps);
    const auto v = nabla(d, norm);
    rep["nabla"] = sum_json(v);
    bool exact = true;
    for (const auto& [m, c] : v.terms())
      for (const auto& k : m.factors) exact = exact && k.exact;
    rep["cap_sensitive"] = !exact;
    tx << v.to_string() << "\n";
    if (!exact) tx << "(cap-sensitive: some keys hit the search budget; use --ut)\n";
  }
  emit(rep, as_json, tx.str());
  return 0;
}

std::string svg_of(const std::string& text) {
  const bool signed_ = looks_signed(text);
  ArrowDiagram d;
  VirtualString s;
  std::vector<std::string> labels;
  if (signed_) {
    auto l = parse_diagram_labeled(text);
    d = l.value;
    s = d.str;
    labels = l.labels;
  } else {
    auto l = parse_closed_labeled(text);
    s = l.value;
    labels = l.labels;
  }
  const double R = 150, C = 200, pi = std::acos(-1.0);
  const int N = s.length();
  auto pt = [&](int p, double r) {
    const double a = pi / 2 - 2 * pi * p / std::max(1, N);
    return std::make_pair(C + r * std::cos(a), C - r * std::sin(a));
  };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n";
  os << "<defs><marker id=\"head\" markerWidth=\"10\" markerHeight=\"8\" refX=\"9\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L10,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
  os << "<circle cx=\"" << C << "\" cy=\"" << C << "\" r=\"" << R << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os.setf(std::ios::fixed);
  os.precision(2);
  for (int e = 0; e < s.rank(); ++e) {
    auto [x1, y1] = pt(s.tail(e), R);
    auto [x2, y2] = pt(s.head(e), R);
    os << "<line class=\"chord\" x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
       << "\" stroke=\"black\" marker-end=\"url(#head)\"/>\n";
    auto [lx, ly] = pt(s.tail(e), R + 16);
    const std::string name = e < static_cast<int>(labels.size()) ? labels[e] : std::to_string(e);
    os << "<text x=\"" << lx << "\" y=\"" << ly << "\" font-size=\"12\" text-anchor=\"middle\">" << name;
    if (signed_) os << (d.sign[e] > 0 ? "+" : "-");
    os << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

int cmd_svg(const std::string& input, const std::string& out) {
  const std::string svg = svg_of(read_input(input));
  if (out.empty() || out == "-") {
    std::fwrite(svg.data(), 1, svg.size(), stdout);
    return 0;
  }
  const std::string tmp = out + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << svg;
    if (!f) throw std::runtime_error("cannot write " + out);
  }
  std::filesystem::rename(tmp, out);
  return 0;
}

int cmd_realize(const std::string& poly, bool as_json) {
  const auto p = IntPoly::parse(poly);
  const auto s = realize_u(p);
  json rep = {{"schema", kSchema}, {"u", p.to_string()}, {"string", serialize(s)}, {"rank", s.rank()}, {"check", u(s) == p}};
  emit(rep, as_json, serialize(s) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"virtual string invariants"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  FillingFlags ff;
  NormalizeCaps caps;
  std::string input, input2, out, poly;

  auto* inv = app.add_subcommand("invariants", "full invariant report of a closed string");
  inv->add_option("input", input, "string text or file")->required();
  inv->add_option("--max-filling-size", ff.max_filling_size);
  inv->add_option("--cover-depth", ff.cover_depth);
  inv->add_option("--r-max", ff.r_max);
  inv->add_option("--prime", ff.prime);
  inv->add_option("--lagrangian-budget", ff.lagrangian_budget);

  int rank = 3;
  auto* cls = app.add_subcommand("classify", "homotopy classes of strings of a given rank");
  cls->add_option("--rank", rank)->required();
  cls->add_option("--slack", caps.slack);
  cls->add_option("--node-budget", caps.node_budget);

  int rank_cap = -1;
  long long budget = 200000;
  auto* eq = app.add_subcommand("homotopy-equal", "decide homotopy of two strings");
  eq->add_option("a", input)->required();
  eq->add_option("b", input2)->required();
  eq->add_option("--rank-cap", rank_cap);
  eq->add_option("--node-budget", budget);

  bool open = false, check = false;
  auto* cb = app.add_subcommand("cobracket", "Lie cobracket (or the comodule map for --open)");
  cb->add_option("input", input)->required();
  cb->add_flag("--open", open);
  cb->add_flag("--check", check, "co-Jacobi and antisymmetry");
  cb->add_option("--slack", caps.slack);
  cb->add_option("--node-budget", caps.node_budget);

  bool ut = false;
  int cover = 1;
  auto* knot = app.add_subcommand("knot", "virtual knot invariants");
  knot->require_subcommand(1);
  knot->fallthrough();
  auto* nab = knot->add_subcommand("nabla", "the nabla polynomial of a signed diagram");
  nab->add_option("input", input)->required();
  nab->add_flag("--ut", ut, "replace strings by u");
  nab->add_option("--cover", cover)->check(CLI::PositiveNumber);
  nab->add_option("--slack", caps.slack);
  nab->add_option("--node-budget", caps.node_budget);

  auto* svg = app.add_subcommand("svg", "chord picture");
  svg->add_option("input", input)->required();
  svg->add_option("-o,--out", out);

  auto* real = app.add_subcommand("realize-u", "a string with the given u polynomial");
  real->add_option("poly", poly)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*inv) return cmd_invariants(input, ff, as_json);
    if (*cls) return cmd_classify(rank, caps, as_json);
    if (*eq) return cmd_equal(input, input2, rank_cap, budget, as_json);
    if (*cb) return cmd_cobracket(input, open, caps, check, as_json);
    if (*nab) return cmd_nabla(input, ut, cover, caps, as_json);
    if (*svg) return cmd_svg(input, out);
    if (*real) return cmd_realize(poly, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
