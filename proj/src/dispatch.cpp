#include <filesystem>
#include <fstream>
#include <sstream>

#include "sf/cli.hpp"

namespace sf {

namespace fs = std::filesystem;

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return 0;
    case Verdict::fail:
      return 1;
    default:
      return 2;
  }
}

namespace {

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
  if (a == Verdict::undetermined || b == Verdict::undetermined) return Verdict::undetermined;
  return Verdict::pass;
}

nlohmann::json datum_json(const RootDatum& d, const ValuationProfile& v) {
  return {{"name", d.name}, {"rank", d.n}, {"positive_roots", d.positive.size()}, {"valuations", v.values}};
}

struct Output {
  nlohmann::json json;
  std::string text;
  Verdict verdict = Verdict::pass;
};

Output run_lemmas(const RunConfig& c) {
  VerificationReport rep = run_lemma_suite(c);
  Output o{report_json(rep), {}, rep.overall()};
  std::ostringstream os;
  for (auto& ch : rep.checks) os << verdict_str(ch.verdict) << "  " << ch.id << "  " << ch.details << "\n";
  os << rep.checks.size() << " checks, verdict " << verdict_str(o.verdict) << "\n";
  o.text = os.str();
  return o;
}

Output run_present(const RunConfig& c) {
  RootDatum d = c.datum();
  ValuationProfile v = c.profile(d);
  GradedPresentation gp = GradedPresentation::build(c.space, d, v, c.kmax);
  Output o;
  o.json["datum"] = datum_json(d, v);
  o.json["space"] = space_name(c.space);
  std::ostringstream os;
  os << d.name << " " << space_name(c.space) << ", valuations";
  for (int x : v.values) os << " " << x;
  os << "\n  k  deg  structure\n";
  for (auto& [k, m] : gp.pieces) {
    nlohmann::json e{{"k", k}, {"homological_degree", 2 * k}, {"generators", m.gens}, {"relations", m.relations.rows}};
    std::string desc;
    if (d.n == 1) {
      RankOneStructure rs = rank_one_structure(m);
      e["free_rank"] = rs.free_rank;
      e["invariant_factors"] = nlohmann::json::array();
      for (auto& f : rs.torsion) e["invariant_factors"].push_back(f.str());
      desc = rs.str();
    } else {
      desc = std::to_string(m.gens) + " generators, " + std::to_string(m.relations.rows) + " relations";
    }
    o.json["pieces"].push_back(e);
    os << "  " << k << "  " << 2 * k << "    " << desc << "\n";
  }
  o.text = os.str();
  return o;
}

Output run_graph(const RunConfig& c) {
  RootDatum d = c.datum();
  ValuationProfile v = c.profile(d);
  MomentGraph g = build_moment_graph(d, v, c.space, Window::cube(d.n, -c.window, c.window));
  Output o;
  o.json = g.to_json(d);
  o.json["datum"] = datum_json(d, v);
  std::ostringstream os;
  os << d.name << " " << space_name(c.space) << " moment graph on [" << -c.window << ", " << c.window << "]^" << d.n
     << ": " << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
  for (auto& e : g.edges)
    os << "  " << g.vertices[e.v1].w << ":" << nlohmann::json(g.vertices[e.v1].lambda).dump() << " -- "
       << g.vertices[e.v2].w << ":" << nlohmann::json(g.vertices[e.v2].lambda).dump() << "  root " << e.root
       << "  level " << e.level << "  bound " << e.bound << "\n";
  o.text = os.str();
  return o;
}

std::string checks_text(const ComparisonReport& r) {
  std::ostringstream os;
  for (auto& ch : r.checks.checks) os << "  " << verdict_str(ch.verdict) << "  " << ch.id << "  " << ch.details << "\n";
  return os.str();
}

Output run_endoscopy(const RunConfig& c) {
  RootDatum d = c.datum();
  ValuationProfile v = c.profile(d);
  Character s = parse_character(d, c.s);
  TransferData t = make_transfer(d, EndoscopicData{s}, v);
  ComparisonReport iso = verify_localized_iso(t, c.space, c.kmax);
  ComparisonReport e2 = verify_E2_shift(t, c.space, s, 2 * c.kmax + 1);
  VerificationReport eta = check_eta_multiplicativity(t, 100, c.seed);
  Output o;
  o.json["datum"] = datum_json(d, v);
  o.json["r"] = t.r;
  o.json["transfer_factor"] = t.delta.str();
  o.json["localized_iso"] = iso.to_json();
  o.json["E2_shift"] = e2.to_json();
  o.json["eta"] = report_json(eta);
  o.verdict = combine(combine(iso.overall(), e2.overall()), eta.overall());
  std::ostringstream os;
  os << d.name << " " << space_name(c.space) << ": r = " << t.r << ", transfer factor " << t.delta.str() << "\n";
  os << "localized isomorphism (" << verdict_str(iso.overall()) << ")\n" << checks_text(iso);
  os << "E2 shift (" << verdict_str(e2.overall()) << ")\n  G:";
  for (auto x : e2.left_table) os << " " << x;
  os << "\n  H:";
  for (auto x : e2.right_table) os << " " << x;
  os << "\neta multiplicativity: " << verdict_str(eta.overall()) << "\n";
  o.text = os.str();
  return o;
}

Output run_orbital(const RunConfig& c) {
  RootDatum d = c.datum();
  ValuationProfile v = c.profile(d);
  Output o;
  o.json["datum"] = datum_json(d, v);
  o.json["tau"] = c.tau;
  o.json["kappa"] = c.kappa;
  o.json["note"] = "Tor tables carry the induced sigma-action; identifying them with sheaf cohomology is a hypothesis";
  o.json["reports"] = nlohmann::json::array();
  std::ostringstream os;
  for (long q : c.q) {
    FrobeniusData f{q, parse_tau(d, c.tau), parse_character(d, c.kappa)};
    TraceReport r = lefschetz_trace(c.space, d, v, f);
    o.json["reports"].push_back(r.to_json());
    os << r.table();
    o.verdict = combine(o.verdict, r.verdict);
  }
  o.text = os.str();
  return o;
}

void write_file(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw MathError("cannot write " + p.string());
  out << s;
}

}  // namespace

DispatchResult dispatch(const std::string& subcommand, const RunConfig& c, const std::string& out_dir) {
  c.validate();
  Output o;
  if (subcommand == "lemmas")
    o = run_lemmas(c);
  else if (subcommand == "present")
    o = run_present(c);
  else if (subcommand == "graph")
    o = run_graph(c);
  else if (subcommand == "endoscopy")
    o = run_endoscopy(c);
  else if (subcommand == "orbital")
    o = run_orbital(c);
  else
    throw MathError("unknown subcommand '" + subcommand + "'");
  nlohmann::json doc{{"schema_version", kSchemaVersion}, {"subcommand", subcommand}, {"verdict", verdict_str(o.verdict)},
                     {"result", o.json}};
  fs::create_directories(out_dir);
  fs::path jp = fs::path(out_dir) / (subcommand + ".json");
  fs::path tp = fs::path(out_dir) / (subcommand + ".txt");
  write_file(jp, doc.dump(2) + "\n");
  write_file(tp, o.text);
  return {exit_code_for(o.verdict), {jp.string(), tp.string()}, o.text};
}

}  // namespace sf
