// quiv: command-line front end for the quiver invariants library.
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quiver/quiver.hpp"

using json = nlohmann::ordered_json;
using namespace quiv;

namespace {

json vec_json(const Vec &v) { return json(v); }

json one_based(const std::vector<int> &v) {
  json out = json::array();
  for (int x : v)
    out.push_back(x + 1);
  return out;
}

json quiver_json(const Quiver &q) {
  json arrows = json::array();
  for (const auto &a : q.arrows())
    arrows.push_back({a.source + 1, a.target + 1});
  return {{"vertices", q.vertex_count()}, {"arrows", arrows}};
}

json report_json(const EdReport &r) {
  return {{"quantity", r.quantity},
          {"lower", r.lower},
          {"upper", r.upper},
          {"status", ed_status_name(r.status)},
          {"base", r.base},
          {"gcd", r.gcd},
          {"tower_sum", r.tower_sum},
          {"tower_max", r.tower_max},
          {"routed", r.routed.empty() ? json(nullptr) : vec_json(r.routed)},
          {"note", r.note}};
}

json decomposition_json(const CanonicalDecomposition &d) {
  json out = json::array();
  for (const auto &s : d.summands)
    out.push_back({{"root", vec_json(s.root)}, {"multiplicity", s.multiplicity}});
  return out;
}

json witness_json(const SubquiverWitness &w) {
  return {{"kind", witness_kind_name(w.kind)},
          {"vertices", one_based(w.vertices)},
          {"r", w.r},
          {"s", w.s}};
}

json counterexample_json(const Counterexample &ce) {
  return {{"alpha", vec_json(ce.alpha)},
          {"beta", vec_json(ce.beta)},
          {"alpha_report", report_json(ce.alpha_report)},
          {"beta_report", report_json(ce.beta_report)},
          {"note", ce.note}};
}

struct Report {
  json doc;
  Report(const std::string &command) {
    doc = {{"command", command}, {"quiver", nullptr}, {"vector", nullptr},
           {"result", nullptr},  {"bounds", nullptr}, {"status", nullptr},
           {"notes", json::array()}, {"seed", nullptr}};
  }
  void note(const std::string &s) { doc["notes"].push_back(s); }
  void bounds(const EdReport &r) {
    doc["bounds"] = {{"lower", r.lower}, {"upper", r.upper}};
    doc["status"] = ed_status_name(r.status);
  }
};

void render_human(const json &j, const std::string &prefix, std::ostream &out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      render_human(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array()) &&
             !(j.front().is_array() && !j.front().empty() && j.front().front().is_number())) {
    for (std::size_t k = 0; k < j.size(); ++k)
      render_human(j[k], prefix + "[" + std::to_string(k) + "]", out);
  } else if (j.is_string()) {
    out << prefix << ": " << j.get<std::string>() << "\n";
  } else {
    out << prefix << ": " << j.dump() << "\n";
  }
}

Vec read_vector(const Quiver &q, const std::string &text) {
  Vec v = parse_vector(text);
  check_size(q, v);
  return v;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Quiver representation invariants: roots, canonical decompositions, "
               "essential dimension bounds"};
  app.require_subcommand(1);
  bool as_json = false;
  i64 cap = 0;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "emit one JSON document");
  app.add_option("--cap", cap, "override search and enumeration limits");
  app.add_option("--seed", seed, "seed for sampled oracle runs")->capture_default_str();

  std::string file, vector_text;
  i64 prime = 7, trials = 200, m = 0, n = 0, r = 0, a = 0, b = 0;

  auto *classify = app.add_subcommand("classify", "representation type and witness subquiver");
  classify->add_option("quiver", file, "quiver file")->required();
  auto *root = app.add_subcommand("root", "root classification of a dimension vector");
  root->add_option("quiver", file)->required();
  root->add_option("vector", vector_text, "comma-separated entries")->required();
  auto *ged = app.add_subcommand("ged", "generic essential dimension report");
  ged->add_option("quiver", file)->required();
  ged->add_option("vector", vector_text)->required();
  auto *gen = app.add_subcommand("genericity", "genericity property decision");
  gen->add_option("quiver", file)->required();
  gen->add_option("vector", vector_text);
  auto *decomp = app.add_subcommand("decomp", "canonical decomposition");
  decomp->add_option("quiver", file)->required();
  decomp->add_option("vector", vector_text)->required();
  auto *oracle = app.add_subcommand("oracle", "finite-field brick search and sampled decomposition");
  oracle->add_option("quiver", file)->required();
  oracle->add_option("vector", vector_text)->required();
  oracle->add_option("--prime", prime)->capture_default_str();
  oracle->add_option("--trials", trials)->capture_default_str();
  oracle->add_option("--seed", seed);
  auto *star = app.add_subcommand("star", "star quiver with m arms, vector (n+1,1,...,1)");
  star->add_option("--m", m)->required();
  star->add_option("--n", n)->required();
  auto *kron = app.add_subcommand("kron", "essential dimension on the Kronecker quiver K_r");
  kron->add_option("--r", r)->required();
  kron->add_option("--a", a)->required();
  kron->add_option("--b", b)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  std::string command = app.get_subcommands().front()->get_name();
  Report rep(command);
  i64 orbit_cap = cap > 0 ? cap : kOrbitCap;
  try {
    std::optional<Quiver> q;
    if (command != "star" && command != "kron") {
      q = load_quiver(file);
      rep.doc["quiver"] = quiver_json(*q);
    }
    std::optional<Vec> v;
    if (q && !vector_text.empty()) {
      v = read_vector(*q, vector_text);
      rep.doc["vector"] = vec_json(*v);
    }

    if (command == "classify") {
      auto t = rep_type(*q);
      json comps = json::array();
      for (const auto &c : t.components)
        comps.push_back({{"vertices", one_based(c.vertices)}, {"verdict", rep_kind_name(c.verdict)}});
      json res = {{"rep_type", rep_kind_name(t.verdict)},
                  {"components", comps},
                  {"loops_everywhere", has_loop_everywhere(*q)},
                  {"genericity_all_alpha", genericity_all_alpha(*q)},
                  {"witness", nullptr}};
      if (!genericity_all_alpha(*q))
        res["witness"] = witness_json(find_witness_subquiver(*q));
      rep.doc["result"] = res;
    } else if (command == "root") {
      auto c = classify_root(*q, *v);
      json res = {{"verdict", root_verdict_name(c.verdict)},
                  {"sign", c.sign},
                  {"euler_form", euler_form(*q, *v, *v)},
                  {"trace", one_based(c.trace)},
                  {"terminal", c.terminal.empty() ? json(nullptr) : vec_json(c.terminal)},
                  {"fundamental_region", nullptr}};
      if (non_negative(*v)) {
        auto fr = in_fundamental_region(*q, *v);
        res["fundamental_region"] = {{"in_region", fr.in_region},
                                     {"connected_support", fr.connected},
                                     {"failing_vertices", one_based(fr.failing)}};
      }
      rep.doc["result"] = res;
    } else if (command == "ged") {
      GenericCalculus g(*q);
      require_nonzero_nonnegative(*q, *v);
      auto c = classify_root(*q, *v);
      if (c.verdict != RootVerdict::NotRoot) {
        bool schur = is_schur_root(g, *v);
        EdReport er = schur ? ged_schur_root(g, *v) : ged_root(g, *v);
        rep.doc["result"] = {{"route", schur ? "schur_root" : "root"},
                             {"root_type", root_verdict_name(c.verdict)},
                             {"value", er.status == EdStatus::Exact ? json(er.upper) : json(nullptr)},
                             {"report", report_json(er)}};
        rep.bounds(er);
        rep.note(er.note);
      } else {
        json parts = json::array();
        for (const auto &s : canonical_decomposition(g, *v).summands) {
          json item = {{"root", vec_json(s.root)},
                       {"multiplicity", s.multiplicity},
                       {"root_type", root_verdict_name(classify_root(*q, s.root).verdict)},
                       {"report", report_json(ged_schur_root(g, s.root))}};
          parts.push_back(item);
        }
        rep.doc["result"] = {{"route", "unsupported"}, {"summands", parts}};
        rep.doc["status"] = "Unsupported";
        rep.note("unsupported by the available results: the vector is not a root; "
                 "per-summand Schur root reports are informational only");
      }
    } else if (command == "genericity") {
      GenericCalculus g(*q);
      if (v) {
        auto gv = genericity_for(g, *v, orbit_cap);
        json res = {{"verdict", genericity_name(gv.verdict)}, {"reason", gv.reason},
                    {"pair", nullptr}};
        if (gv.pair)
          res["pair"] = counterexample_json(*gv.pair);
        rep.doc["result"] = res;
        rep.doc["status"] = genericity_name(gv.verdict);
        rep.note(gv.reason);
      } else {
        bool all = genericity_all_alpha(*q);
        json res = {{"genericity_all_alpha", all}, {"counterexample", nullptr}};
        if (!all) {
          auto ce = genericity_counterexample(g, orbit_cap);
          res["witness"] = witness_json(ce.witness);
          res["counterexample"] = counterexample_json(ce);
          rep.note(ce.note);
          if (!ce.beta_report.note.empty())
            rep.note(ce.beta_report.note);
        }
        rep.doc["result"] = res;
        rep.doc["status"] = all ? "Holds" : "Fails";
      }
    } else if (command == "decomp") {
      GenericCalculus g(*q);
      auto d = canonical_decomposition(g, *v);
      json parts = decomposition_json(d);
      for (auto &p : parts)
        p["root_type"] = root_verdict_name(classify_root(*q, p["root"].get<Vec>()).verdict);
      rep.doc["result"] = {{"summands", parts},
                           {"schur_root", d.summands.size() == 1 && d.summands[0].multiplicity == 1},
                           {"provenance", d.provenance}};
    } else if (command == "oracle") {
      rep.doc["seed"] = seed;
      ff::u64 ecap = cap > 0 ? static_cast<ff::u64>(cap) : ff::kEnumerationCap;
      auto bw = ff::brick_witness(*q, *v, prime, trials, seed, ecap);
      auto sd = ff::sampled_generic_decomposition(*q, *v, prime, trials, seed, ecap);
      json freq = json::array();
      for (const auto &[part, cnt] : sd.frequency)
        freq.push_back({{"partition", part}, {"count", cnt}});
      GenericCalculus g(*q);
      auto canon = expand(canonical_decomposition(g, *v));
      rep.doc["result"] = {
          {"prime", prime},
          {"trials", trials},
          {"brick", {{"found", bw.found}, {"definitive", bw.definitive},
                     {"examined", bw.examined}, {"note", bw.note}}},
          {"sampled", {{"frequency", freq}, {"modal", sd.modal}, {"skipped", sd.skipped}}},
          {"canonical", canon},
          {"agrees", sd.modal == canon}};
      rep.note("representations sampled with std::mt19937_64 seeded by " + std::to_string(seed));
    } else if (command == "star") {
      if (m < 0 || n < 0)
        throw Error(Errc::NegativeEntry, "m and n must be non-negative");
      i64 ed = star_ed(m, n), sg = star_ged(m, n);
      rep.doc["result"] = {{"m", m}, {"n", n}, {"ed", ed}, {"ged", sg},
                           {"genericity", ed == sg ? "Holds" : "Fails"}};
      rep.doc["bounds"] = {{"lower", ed}, {"upper", ed}};
      rep.doc["status"] = "Exact";
    } else if (command == "kron") {
      if (r < 1)
        throw Error(Errc::UnsupportedR, "r must be at least 1");
      if (r <= 2) {
        i64 ed = kronecker_ed(static_cast<int>(r), a, b);
        rep.doc["result"] = {{"r", r}, {"a", a}, {"b", b}, {"ed", ed}};
        rep.doc["bounds"] = {{"lower", ed}, {"upper", ed}};
        rep.doc["status"] = "Exact";
      } else {
        std::vector<std::pair<int, int>> arrows(r, {1, 2});
        Quiver kq = build_quiver(2, arrows);
        Vec av{a, b};
        rep.doc["quiver"] = quiver_json(kq);
        rep.doc["vector"] = vec_json(av);
        require_nonzero_nonnegative(kq, av);
        if (!in_fundamental_region(kq, av).in_region)
          throw Error(Errc::UnsupportedR,
                      "for r >= 3 only vectors in the fundamental region are covered");
        EdReport er = ged_schur_root(kq, av);
        er.quantity = "ed";
        rep.doc["result"] = {{"r", r}, {"a", a}, {"b", b}, {"report", report_json(er)}};
        rep.bounds(er);
        rep.note("genericity holds in the fundamental region, so ed equals the generic value");
      }
    }
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::Parse)
      return 2;
    return is_cap_error(e.code()) ? 4 : 3;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  if (as_json)
    std::cout << rep.doc.dump(2) << "\n";
  else
    render_human(rep.doc, "", std::cout);
  return 0;
}
