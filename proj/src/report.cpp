#include "sfs/report.hpp"

#include <sstream>

#include "sfs/lattice.hpp"
#include "sfs/mubar.hpp"
#include "sfs/parse.hpp"
#include "sfs/plumbing.hpp"

namespace sfs {

Json to_json(const StandardForm& s) {
  Json f = Json::array();
  for (const auto& r : s.fibers) f.push_back(r.str());
  return Json{{"text", to_string(s)},
              {"genus", s.genus},
              {"e", s.central.get_str()},
              {"fibers", f},
              {"orientation_reversed", s.orientation_reversed}};
}

Json to_json(const AbelianGroup& g) {
  Json inv = Json::array();
  for (const auto& d : g.invariant_factors) inv.push_back(d.get_str());
  return Json{{"text", g.str()}, {"free_rank", g.free_rank}, {"invariant_factors", inv}};
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const auto& c : p) {
    Json cls = Json::array();
    for (auto i : c) cls.push_back(i + 1);
    out.push_back(cls);
  }
  return out;
}

namespace {

Json pair_json(const PartitionPair& w) {
  return Json{{"p1", to_json(w.p1)}, {"p2", to_json(w.p2)}, {"deficit1", w.deficit1 + 1}, {"deficit2", w.deficit2 + 1}};
}

Json source_of(const std::string& rule) {
  for (const auto& r : cited_rules())
    if (rule == r.id) return Json{{"statement", r.statement}, {"source", r.source}};
  return nullptr;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json exps = Json::array();
  for (auto j : c.expansions) exps.push_back(j + 1);
  Json out{{"rule", c.rule},
           {"base", to_json(c.base)},
           {"expansions", exps},
           {"genus_bumps", c.genus_bumps},
           {"doubled", c.doubled},
           {"replayed", to_string(replay(c))}};
  if (auto s = source_of(c.rule); !s.is_null()) out["cited"] = s;
  return out;
}

Json to_json(const Verdict& v) {
  Json out;
  out["input"] = to_string(v.input);
  out["standard_form"] = to_json(v.standard_form);
  out["epsilon"] = v.epsilon.str();
  out["h1"] = to_json(v.h1);
  out["verdict"] = to_string(v.tag);
  if (v.certificate) out["certificate"] = to_json(*v.certificate);
  if (v.obstruction) {
    Json o{{"name", v.obstruction->name}, {"witness", v.obstruction->witness}};
    if (auto s = source_of(v.obstruction->name); !s.is_null()) o["cited"] = s;
    out["obstruction"] = o;
  }
  if (v.family) {
    const auto& f = *v.family;
    Json fj{{"tag", to_string(f.tag)}};
    if (f.tag == FamilyTag::HalfBound)
      fj["a"] = f.a.get_str();
    else
      fj["pqrs"] = Json::array({f.p.get_str(), f.q.get_str(), f.r.get_str(), f.s.get_str()});
    out["family"] = fj;
  }
  if (v.partitions) out["partitions"] = pair_json(*v.partitions);
  Json tr = Json::array();
  for (const auto& t : v.trace) tr.push_back(Json{{"test", t.test}, {"result", t.result}, {"witness", t.witness}});
  out["trace"] = tr;
  return out;
}

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

SeifertData need_seifert(const ParsedInput& in) {
  if (auto s = std::get_if<SeifertData>(&in)) return *s;
  throw UsageError("this command expects an SFS(...) input");
}

StandardForm need_genus0_positive(const SeifertData& d) {
  StandardForm s = normalize(d);
  if (s.genus != 0) throw UsageError("this command needs genus 0");
  if (euler_invariant(s).sign() <= 0) throw UsageError("this command needs eps != 0");
  return s;
}

CommandResult cmd_classify(const SeifertData& d, const CommandOptions& o) {
  ClassifyOptions co;
  co.node_budget = o.node_budget;
  co.max_k = o.max_k;
  Verdict v = classify(d, co);
  Json j{{"command", "classify"}};
  j.update(to_json(v));
  return {j, v.tag == VerdictTag::BudgetExceeded ? ExitCode::BudgetExceeded : ExitCode::Ok};
}

CommandResult cmd_homology(const SeifertData& d) {
  StandardForm s = normalize(d);
  AbelianGroup f = h1_formula(s), o = h1_oracle(d);
  Json j{{"command", "homology"}, {"input", to_string(d)}, {"standard_form", to_json(s)}};
  j["epsilon"] = euler_invariant(s).str();
  j["h1"] = to_json(f);
  j["h1_oracle"] = to_json(o);
  j["agree"] = f.free_rank == o.free_rank && f.invariant_factors == o.invariant_factors;
  j["direct_double"] = is_direct_double(f);
  j["dim_h1_z2"] = dim_h1_z2(s);
  return {j, ExitCode::Ok};
}

CommandResult cmd_partitions(const SeifertData& d, const CommandOptions& o) {
  StandardForm s = normalize(d);
  PartitionSearchOptions po;
  po.node_budget = o.node_budget;
  po.max_k = o.max_k;
  auto r = is_partitionable(s, po);
  Json j{{"command", "partitions"}, {"input", to_string(d)}, {"standard_form", to_json(s)}};
  j["epsilon"] = euler_invariant(s).str();
  j["partitionable"] = r.partitionable();
  if (r.witness) j["witness"] = pair_json(*r.witness);
  j["refutation"] = to_string(r.refutation);
  j["detail"] = r.detail;
  j["admissible_partitions"] = r.admissible_partitions;
  j["nodes"] = r.nodes;
  if (auto f = match_theorem_families(s)) j["family"] = to_string(f->tag);
  return {j, r.refutation == Refutation::BudgetExceeded ? ExitCode::BudgetExceeded : ExitCode::Ok};
}

CommandResult cmd_mubar(const SeifertData& d) {
  StandardForm s = need_genus0_positive(d);
  auto table = spin_mubar_table(s);
  auto mc = mubar_embedding_conditions(s);
  Json j{{"command", "mubar"}, {"input", to_string(d)}, {"standard_form", to_json(s)}};
  Json sp = Json::array();
  for (const auto& t : table) sp.push_back(Json{{"subset", t.subset}, {"mubar", t.mubar.get_str()}});
  j["dim_h1_z2"] = mc.dim_h1_z2;
  j["spin_structures"] = sp;
  Json checks = Json::array();
  for (const auto& c : mc.checks)
    checks.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  j["checks"] = checks;
  return {j, ExitCode::Ok};
}

CommandResult cmd_plumbing(const SeifertData& d) {
  StandardForm s = normalize(d);
  if (s.genus != 0) throw UsageError("this command needs genus 0");
  PlumbingGraph g = build_plumbing(s);
  auto w = g.weights();
  auto arm = g.arm_of_vertex();
  Json vs = Json::array();
  for (std::size_t i = 0; i < w.size(); ++i)
    vs.push_back(Json{{"index", i}, {"weight", w[i].get_str()}, {"arm", arm[i] < 0 ? Json(nullptr) : Json(arm[i] + 1)}});
  Json es = Json::array();
  for (auto [u, v] : g.edges()) es.push_back(Json::array({u, v}));
  Json j{{"command", "plumbing"}, {"input", to_string(d)}, {"standard_form", to_json(s)}};
  j["vertices"] = vs;
  j["edges"] = es;
  j["positive_definite"] = is_positive_definite(intersection_form(g));
  return {j, ExitCode::Ok};
}

CommandResult cmd_lattice(const SeifertData& d, const CommandOptions& o) {
  StandardForm s = need_genus0_positive(d);
  PlumbingGraph g = build_plumbing(s);
  LatticeSearchOptions lo;
  lo.structure = o.structure;
  lo.node_budget = o.node_budget;
  lo.max_results = o.max_results;
  lo.ambient = o.ambient;
  auto r = enumerate_embeddings(g, lo);
  Json j{{"command", "lattice"}, {"input", to_string(d)}, {"standard_form", to_json(s)}};
  j["vertices"] = g.vertex_count();
  j["structure"] = o.structure;
  std::vector<std::optional<InducedPartition>> parts;
  Json es = Json::array();
  for (const auto& a : r.embeddings) {
    Json ej{{"rows", a.rows}};
    parts.emplace_back();
    if (o.structure) {
      try {
        parts.back() = induced_partition(a, s);
        ej["induced_partition"] = to_json(parts.back()->classes);
        ej["deficit_class"] = parts.back()->deficit + 1;
      } catch (const StructureError& e) {
        ej["structure_error"] = e.what();
      }
    }
    es.push_back(ej);
  }
  j["embeddings"] = es;
  j["count"] = r.embeddings.size();
  if (o.structure) {
    Json pair = nullptr;
    for (std::size_t a = 0; a < parts.size() && pair.is_null(); ++a)
      for (std::size_t b = a; b < parts.size() && pair.is_null(); ++b) {
        if (!parts[a] || !parts[b]) continue;
        if (!complementary_union_check(parts[a]->classes, parts[a]->deficit, parts[b]->classes, parts[b]->deficit))
          continue;
        if (pair_surjective(r.embeddings[a], r.embeddings[b])) pair = Json::array({a, b});
      }
    j["surjective_pair"] = pair;
  }
  j["budget_exceeded"] = r.budget_exceeded;
  j["truncated"] = r.truncated;
  j["nodes"] = r.nodes;
  return {j, r.budget_exceeded ? ExitCode::BudgetExceeded : ExitCode::Ok};
}

CommandResult cmd_reduce(const SeifertData& d) {
  StandardForm s = normalize(d);
  Json chain = Json::array();
  for (const auto& c : contraction_chain(s)) chain.push_back(to_string(c));
  Json j{{"command", "reduce"}, {"input", to_string(d)}, {"standard_form", to_json(s)}};
  j["chain"] = chain;
  auto red = reduce_to_base(s);
  if (red) {
    Json exps = Json::array();
    for (auto x : red->expansions) exps.push_back(x + 1);
    j["base"] = Json{{"form", to_json(red->base)}, {"kind", red->base_kind}, {"expansions", exps}};
  } else {
    j["base"] = nullptr;
  }
  return {j, ExitCode::Ok};
}

CommandResult cmd_pretzel(const OddPretzel& k, const CommandOptions& o) {
  Json j{{"command", "pretzel"}, {"input", k.str()}, {"strands", k.strands}};
  SeifertData d = double_branched_cover(k);
  j["double_cover"] = to_string(d);
  j["determinant"] = pretzel_determinant(k).get_str();
  if (!k.is_knot()) throw UsageError(k.str() + " is a link; the classification covers knots only");
  auto ds = doubly_slice_classify(k);
  j["doubly_slice"] = ds.doubly_slice;
  j["family_a"] = ds.a ? Json(*ds.a) : Json(nullptr);
  j["failed"] = ds.failed;
  j["detail"] = ds.detail;
  j["mubar"] = pretzel_mubar(k).get_str();
  auto inner = cmd_classify(d, o);
  j["cover_report"] = inner.json;
  return {j, inner.code};
}

}  // namespace

bool is_command(const std::string& c) {
  for (const char* n : {"classify", "homology", "partitions", "mubar", "plumbing", "lattice", "pretzel", "reduce"})
    if (c == n) return true;
  return false;
}

CommandResult run_command(const std::string& command, const std::string& line, const CommandOptions& opts) {
  auto error = [&](const std::string& what) {
    return CommandResult{Json{{"command", command}, {"input", line}, {"error", what}}, ExitCode::UsageError};
  };
  try {
    ParsedInput in = parse_input(line);
    if (command == "pretzel") {
      if (auto k = std::get_if<OddPretzel>(&in)) return cmd_pretzel(*k, opts);
      throw UsageError("pretzel expects a P(...) input");
    }
    SeifertData d = need_seifert(in);
    if (command == "classify") return cmd_classify(d, opts);
    if (command == "homology") return cmd_homology(d);
    if (command == "partitions") return cmd_partitions(d, opts);
    if (command == "mubar") return cmd_mubar(d);
    if (command == "plumbing") return cmd_plumbing(d);
    if (command == "lattice") return cmd_lattice(d, opts);
    if (command == "reduce") return cmd_reduce(d);
    return error("unknown command " + command);
  } catch (const ParseError& e) {
    return error(std::string("parse error: ") + e.what());
  } catch (const UsageError& e) {
    return error(e.what());
  } catch (const std::invalid_argument& e) {
    return error(e.what());
  }
}

namespace {

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (x.is_object()) return false;
  return true;
}

void render(const Json& j, int depth, std::ostringstream& os) {
  std::string pad(2 * depth, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (flat(v)) {
      os << pad << it.key() << ": " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
    } else if (v.is_object()) {
      os << pad << it.key() << ":\n";
      render(v, depth + 1, os);
    } else {
      os << pad << it.key() << ":\n";
      for (const auto& x : v) {
        if (x.is_object() && x.contains("test")) {
          os << pad << "  " << scalar(x["test"]) << " " << scalar(x["result"]);
          if (!x["witness"].get<std::string>().empty()) os << "  " << scalar(x["witness"]);
          os << "\n";
        } else if (x.is_object()) {
          os << pad << "  -\n";
          render(x, depth + 2, os);
        } else {
          os << pad << "  " << x.dump() << "\n";
        }
      }
    }
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace sfs
