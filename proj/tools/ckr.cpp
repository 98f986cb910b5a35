#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckr/caps.hpp"
#include "ckr/ground.hpp"
#include "ckr/oracle.hpp"
#include "ckr/parse.hpp"
#include "ckr/query_text.hpp"
#include "ckr/reductions.hpp"
#include "ckr/solve.hpp"
#include "ckr/translate.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitCap = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ckr::SCKR load_sckr(const std::string& path) {
  auto res = ckr::parse({read_file(path), path});
  for (const auto& w : res.warnings) std::cerr << path << ": warning: " << w << "\n";
  if (!res.ok()) {
    for (const auto& e : res.errors)
      std::cerr << path << ":" << e.line << ":" << e.col << ": error: " << e.message << "\n";
    std::exit(kExitParse);
  }
  auto diags = ckr::validate(*res.sckr);
  if (!diags.empty()) {
    for (const auto& d : diags) std::cerr << path << ": error: " << d.message << "\n";
    std::exit(kExitParse);
  }
  return *res.sckr;
}

const char* verdict_str(ckr::Entailment e) {
  switch (e) {
    case ckr::Entailment::Entailed: return "entailed";
    case ckr::Entailment::NotEntailed: return "not-entailed";
    case ckr::Entailment::Inconsistent: return "inconsistent";
  }
  return "?";
}

const char* verdict_str(ckr::OracleVerdict v) {
  switch (v) {
    case ckr::OracleVerdict::Entailed: return "entailed";
    case ckr::OracleVerdict::NotEntailed: return "not-entailed";
    case ckr::OracleVerdict::Inconsistent: return "inconsistent";
  }
  return "?";
}

json cost_json(const ckr::CostVector& cost) {
  json j = json::object();
  for (const auto& [level, weight] : cost)
    if (weight != 0) j[std::to_string(level)] = weight;
  return j;
}

// facts_by_context from the main-environment atoms of an engine answer set
json engine_model_json(const ckr::GroundProgram& g, const ckr::AnswerSet& s) {
  json facts = json::object();
  json ovr = json::array();
  auto ctx_slot = [&](const std::string& c) -> json& {
    if (!facts.contains(c)) facts[c] = {{"concepts", json::array()}, {"roles", json::array()}};
    return facts[c];
  };
  for (int id : s.atoms) {
    const ckr::ProgAtom& a = g.atoms[static_cast<size_t>(id)];
    if (a.pred == "instd" && a.args.size() == 4 && a.args[3] == ckr::Term::token("main")) {
      ctx_slot(a.args[2].text)["concepts"].push_back({a.args[1].text, a.args[0].text});
    } else if (a.pred == "tripled" && a.args.size() == 5 &&
               a.args[4] == ckr::Term::token("main")) {
      ctx_slot(a.args[3].text)["roles"].push_back({a.args[1].text, a.args[0].text, a.args[2].text});
    } else if (a.pred == "ovr") {
      ovr.push_back(g.texts[static_cast<size_t>(id)]);
    }
  }
  return {{"facts_by_context", facts}, {"overridings", ovr}, {"cost", cost_json(s.cost)}};
}

json oracle_model_json(const ckr::SCKR& k, const ckr::JustifiedModel& m) {
  const auto& sy = k.symbols;
  json facts = json::object();
  for (const auto& [c, cf] : m.interp) {
    json slot = {{"concepts", json::array()}, {"roles", json::array()}};
    for (const auto& [x, cls] : cf.inst) slot["concepts"].push_back({sy.name(cls), sy.name(x)});
    for (const auto& [a, r, b] : cf.triple)
      slot["roles"].push_back({sy.name(r), sy.name(a), sy.name(b)});
    if (!slot["concepts"].empty() || !slot["roles"].empty()) facts[sy.name(c)] = slot;
  }
  json ovr = json::array();
  for (const auto& ca : m.chi) {
    json tuple = json::array();
    for (ckr::Id e : ca.tuple) tuple.push_back(sy.name(e));
    json args = json::array();
    for (int i = 0; i < ckr::axiom_arity(ca.kind); ++i)
      args.push_back(sy.name(ca.args[static_cast<size_t>(i)]));
    ovr.push_back({{"kind", ckr::shape_tag(ca.kind)},
                   {"args", args},
                   {"tuple", tuple},
                   {"home", sy.name(ca.home)},
                   {"at", sy.name(ca.at)}});
  }
  // weak-constraint level of a home context is its level plus one
  json cost = json::object();
  auto prof = ckr::profile(k, m.chi);
  for (size_t l = 0; l < prof.size(); ++l)
    if (prof[l] != 0) cost[std::to_string(l + 1)] = prof[l];
  return {{"facts_by_context", facts}, {"overridings", ovr}, {"cost", cost}};
}

std::string engine_model_text(const ckr::GroundProgram& g, const ckr::AnswerSet& s) {
  std::ostringstream out;
  for (int id : s.atoms) {
    const ckr::ProgAtom& a = g.atoms[static_cast<size_t>(id)];
    if ((a.pred == "instd" && a.args.size() == 4 && a.args[3] == ckr::Term::token("main")) ||
        (a.pred == "tripled" && a.args.size() == 5 && a.args[4] == ckr::Term::token("main")) ||
        a.pred == "ovr")
      out << "  " << g.texts[static_cast<size_t>(id)] << "\n";
  }
  out << "  cost:";
  for (const auto& [l, w] : s.cost)
    if (w != 0) out << " " << w << "@" << l;
  out << "\n";
  return out.str();
}

ckr::AxiomKind kind_from_tag(const std::string& tag) {
  for (int i = 0; i < ckr::kAxiomKindCount; ++i) {
    auto k = static_cast<ckr::AxiomKind>(i);
    const char* t = ckr::shape_tag(k);
    if (t && tag == t) return k;
  }
  throw std::runtime_error("unknown axiom kind tag: " + tag);
}

ckr::CasModel model_from_json(const ckr::SCKR& k, const json& j) {
  const auto& sy = k.symbols;
  auto find = [&](const std::string& n) {
    ckr::Id id = sy.find(n);
    if (id == ckr::kNoId) throw std::runtime_error("unknown name in model file: " + n);
    return id;
  };
  ckr::CasModel m;
  for (auto& [ctx, slot] : j.at("facts_by_context").items()) {
    auto& cf = m.interp[find(ctx)];
    for (const auto& ca : slot.value("concepts", json::array()))
      cf.inst.insert({find(ca.at(1)), find(ca.at(0))});
    for (const auto& ra : slot.value("roles", json::array()))
      cf.triple.insert({find(ra.at(1)), find(ra.at(0)), find(ra.at(2))});
  }
  for (const auto& o : j.at("overridings")) {
    ckr::ClashingAssumption ca;
    ca.kind = kind_from_tag(o.at("kind"));
    ca.args = {ckr::kNoId, ckr::kNoId, ckr::kNoId};
    const auto& args = o.at("args");
    for (size_t i = 0; i < args.size() && i < 3; ++i) ca.args[i] = find(args[i]);
    for (const auto& e : o.at("tuple")) ca.tuple.push_back(find(e));
    ca.home = find(o.at("home"));
    ca.at = find(o.at("at"));
    m.chi.insert(std::move(ca));
  }
  return m;
}

std::string expected_str(const std::optional<bool>& e) {
  if (!e) return "inconsistent";
  return *e ? "entailed" : "not-entailed";
}

void write_generated(const ckr::GeneratedInstance& gi, const std::string& prefix,
                     const std::string& mode) {
  {
    std::ofstream out(prefix + ".ckr");
    if (!out) throw std::runtime_error("cannot write " + prefix + ".ckr");
    out << ckr::serialize(gi.sckr);
  }
  std::ofstream out(prefix + ".query");
  if (!out) throw std::runtime_error("cannot write " + prefix + ".query");
  out << "# mode: " << mode << "\n";
  const auto& sy = gi.sckr.symbols;
  for (size_t i = 0; i < gi.queries.size(); ++i) {
    const auto& q = gi.queries[i];
    out << "# query: " << sy.name(q.pred) << "(" << sy.name(q.a);
    if (q.is_role) out << "," << sy.name(q.b);
    out << ")@" << sy.name(q.context) << "\n";
    out << "# expected: " << expected_str(gi.expected[i]) << "\n";
  }
  std::cout << "wrote " << prefix << ".ckr and " << prefix << ".query\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"context-hierarchy reasoner with overridable axioms"};
  app.require_subcommand(1);

  ckr::Caps caps = ckr::caps_from_env();
  long opt_max_models = -1, opt_max_ground = -1;
  std::string mode_flag = "global";
  bool json_flag = false;
  app.add_option("--max-models", opt_max_models, "cap on enumerated models");
  app.add_option("--max-ground-atoms", opt_max_ground, "cap on ground atoms");
  app.add_option("--mode", mode_flag, "preference mode: global | induced")
      ->check(CLI::IsMember({"global", "induced"}));
  app.add_flag("--json", json_flag, "emit JSON");

  std::string in_path, query_text, model_path, out_prefix, cnf_path;
  bool all_models = false, compare = false;
  unsigned seed = 0;
  int gn = 2, gm = 2, gl = 2, gnx = 1, gny = 1;

  auto* c_translate = app.add_subcommand("translate", "compile a .ckr file to a logic program");
  c_translate->add_option("input", in_path, "input .ckr file")->required();

  auto* c_models = app.add_subcommand("models", "enumerate answer sets");
  c_models->add_option("input", in_path, "input .ckr file")->required();
  c_models->add_flag("--all", all_models, "include non-optimal models");

  auto* c_query = app.add_subcommand("query", "decide entailment of A(a)@c or R(a,b)@c");
  c_query->add_option("input", in_path, "input .ckr file")->required();
  c_query->add_option("query", query_text, "query atom")->required();

  auto* c_oracle = app.add_subcommand("oracle", "model-theoretic reference side");
  c_oracle->require_subcommand(1);
  auto* o_models = c_oracle->add_subcommand("models", "enumerate justified models");
  o_models->add_option("input", in_path, "input .ckr file")->required();
  o_models->add_flag("--all", all_models, "include non-preferred models");
  o_models->add_flag("--compare", compare, "diff against the translation pipeline");
  auto* o_query = c_oracle->add_subcommand("query", "entailment over preferred models");
  o_query->add_option("input", in_path, "input .ckr file")->required();
  o_query->add_option("query", query_text, "query atom")->required();
  o_query->add_flag("--compare", compare, "diff against the translation pipeline");
  auto* o_check = c_oracle->add_subcommand("check", "verify a model file");
  o_check->add_option("input", in_path, "input .ckr file")->required();
  o_check->add_option("model", model_path, "model JSON file")->required();
  auto* o_bcq = c_oracle->add_subcommand("bcq", "boolean conjunctive query");
  o_bcq->add_option("input", in_path, "input .ckr file")->required();
  o_bcq->add_option("query", query_text, "conjunction of atoms, ?-variables allowed")->required();

  auto* c_gen = app.add_subcommand("gen", "emit a generated instance family");
  c_gen->require_subcommand(1);
  auto* g_lexmax = c_gen->add_subcommand("lexmax", "lexicographic-maximum SAT chain");
  g_lexmax->add_option("-n", gn, "variable count");
  g_lexmax->add_option("-m", gm, "clause count");
  g_lexmax->add_option("--seed", seed, "rng seed");
  g_lexmax->add_option("--cnf", cnf_path, "DIMACS file instead of a random instance");
  g_lexmax->add_option("-o,--out", out_prefix, "output prefix")->required();
  auto* g_oddsat = c_gen->add_subcommand("oddsat", "parity-of-satisfiable chain");
  g_oddsat->add_option("-l", gl, "instance count (even)");
  g_oddsat->add_option("-n", gn, "max variables per instance");
  g_oddsat->add_option("--seed", seed, "rng seed");
  g_oddsat->add_option("-o,--out", out_prefix, "output prefix")->required();
  auto* g_qbf = c_gen->add_subcommand("qbf", "forall-exists alternative-assignment instance");
  g_qbf->add_option("--nx", gnx, "universal variable count");
  g_qbf->add_option("--ny", gny, "existential variable count");
  g_qbf->add_option("--seed", seed, "rng seed");
  g_qbf->add_option("-o,--out", out_prefix, "output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  if (opt_max_models > 0) caps.max_models = opt_max_models;
  if (opt_max_ground > 0) caps.max_ground_atoms = opt_max_ground;
  auto mode = mode_flag == "induced" ? ckr::PreferenceMode::InducedLocal
                                     : ckr::PreferenceMode::GlobalProfile;

  try {
    if (*c_translate) {
      auto k = load_sckr(in_path);
      auto p = ckr::translate(k);
      if (json_flag) {
        json j;
        j["facts"] = json::array();
        for (const auto& f : p.facts) j["facts"].push_back(ckr::to_text(f));
        j["rules"] = p.rules.size();
        j["weak_constraints"] = p.weak.size();
        j["text"] = ckr::emit_text(p);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << ckr::emit_text(p);
      }
      return kExitOk;
    }

    if (*c_models) {
      auto k = load_sckr(in_path);
      auto g = ckr::ground(ckr::translate(k), caps);
      auto models = all_models ? ckr::answer_sets(g, caps) : ckr::optimal_answer_sets(g, caps);
      if (json_flag) {
        json j;
        j["count"] = models.size();
        j["models"] = json::array();
        for (const auto& s : models) j["models"].push_back(engine_model_json(g, s));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << models.size() << " model(s)\n";
        for (size_t i = 0; i < models.size(); ++i)
          std::cout << "model " << i + 1 << ":\n" << engine_model_text(g, models[i]);
      }
      return models.empty() ? kExitInconsistent : kExitOk;
    }

    if (*c_query) {
      auto k = load_sckr(in_path);
      std::string err;
      auto q = ckr::parse_query_text(k, query_text, err);
      if (!q) {
        std::cerr << "query error: " << err << "\n";
        return kExitUsage;
      }
      auto g = ckr::ground(ckr::translate(k), caps);
      auto verdict = ckr::cautious_entails(g, ckr::output_atom(k, *q), caps);
      if (json_flag)
        std::cout << json{{"query", query_text}, {"verdict", verdict_str(verdict)}}.dump(2)
                  << "\n";
      else
        std::cout << verdict_str(verdict) << "\n";
      return verdict == ckr::Entailment::Inconsistent ? kExitInconsistent : kExitOk;
    }

    if (*o_models) {
      auto k = load_sckr(in_path);
      auto models = all_models ? ckr::enumerate_justified(k, caps) : ckr::preferred(k, mode, caps);
      if (compare) {
        auto g = ckr::ground(ckr::translate(k), caps);
        auto engine = all_models ? ckr::answer_sets(g, caps) : ckr::optimal_answer_sets(g, caps);
        std::set<std::vector<std::string>> lhs, rhs;
        for (const auto& s : engine) {
          std::vector<std::string> texts;
          for (int id : s.atoms) texts.push_back(g.texts[static_cast<size_t>(id)]);
          std::sort(texts.begin(), texts.end());
          lhs.insert(std::move(texts));
        }
        auto all_just = ckr::enumerate_justified(k, caps);
        const auto& side = all_models ? all_just : models;
        for (const auto& m : side) {
          auto texts = ckr::herbrand(k, m);
          std::sort(texts.begin(), texts.end());
          rhs.insert(std::move(texts));
        }
        bool match = lhs == rhs;
        std::cout << "engine models: " << lhs.size() << ", oracle models: " << rhs.size()
                  << ", match: " << (match ? "yes" : "no") << "\n";
        return match ? kExitOk : kExitUsage;
      }
      if (json_flag) {
        json j;
        j["count"] = models.size();
        j["models"] = json::array();
        for (const auto& m : models) j["models"].push_back(oracle_model_json(k, m));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << models.size() << " model(s)\n";
        for (size_t i = 0; i < models.size(); ++i)
          std::cout << "model " << i + 1 << ":\n" << oracle_model_json(k, models[i]).dump(2)
                    << "\n";
      }
      return models.empty() ? kExitInconsistent : kExitOk;
    }

    if (*o_query) {
      auto k = load_sckr(in_path);
      std::string err;
      auto q = ckr::parse_query_text(k, query_text, err);
      if (!q) {
        std::cerr << "query error: " << err << "\n";
        return kExitUsage;
      }
      auto verdict = ckr::entails(k, *q, caps, mode);
      if (compare) {
        auto g = ckr::ground(ckr::translate(k), caps);
        auto ev = ckr::cautious_entails(g, ckr::output_atom(k, *q), caps);
        bool match = std::string(verdict_str(verdict)) == verdict_str(ev);
        std::cout << "engine: " << verdict_str(ev) << ", oracle: " << verdict_str(verdict)
                  << ", match: " << (match ? "yes" : "no") << "\n";
        return match ? kExitOk : kExitUsage;
      }
      if (json_flag)
        std::cout << json{{"query", query_text}, {"verdict", verdict_str(verdict)}}.dump(2)
                  << "\n";
      else
        std::cout << verdict_str(verdict) << "\n";
      return verdict == ckr::OracleVerdict::Inconsistent ? kExitInconsistent : kExitOk;
    }

    if (*o_check) {
      auto k = load_sckr(in_path);
      json j = json::parse(read_file(model_path));
      bool ok = ckr::check_model(k, model_from_json(k, j), caps);
      if (json_flag)
        std::cout << json{{"valid", ok}}.dump(2) << "\n";
      else
        std::cout << (ok ? "valid" : "invalid") << "\n";
      return kExitOk;
    }

    if (*o_bcq) {
      auto k = load_sckr(in_path);
      std::string err;
      auto atoms = ckr::parse_bcq_text(k, query_text, err);
      if (!atoms) {
        std::cerr << "query error: " << err << "\n";
        return kExitUsage;
      }
      auto verdict = ckr::entails_bcq(k, *atoms, caps);
      if (json_flag)
        std::cout << json{{"query", query_text}, {"verdict", verdict_str(verdict)}}.dump(2)
                  << "\n";
      else
        std::cout << verdict_str(verdict) << "\n";
      return verdict == ckr::OracleVerdict::Inconsistent ? kExitInconsistent : kExitOk;
    }

    if (*g_lexmax) {
      ckr::CnfInstance e;
      if (!cnf_path.empty()) {
        e = ckr::read_dimacs(read_file(cnf_path));
      } else {
        std::mt19937 rng(seed);
        e = ckr::random_monotone_cnf(rng, gn, gm);
      }
      write_generated(ckr::gen_lexmax_sat(e, caps), out_prefix, "global");
      return kExitOk;
    }

    if (*g_oddsat) {
      std::mt19937 rng(seed);
      auto es = ckr::random_odd_sat_input(rng, gl, gn, caps);
      write_generated(ckr::gen_odd_sat(es, caps), out_prefix, "global");
      return kExitOk;
    }

    if (*g_qbf) {
      std::mt19937 rng(seed);
      auto q = ckr::random_qbf_input(rng, gnx, gny, caps);
      write_generated(ckr::gen_qbf(q, caps), out_prefix, "induced-local");
      return kExitOk;
    }
  } catch (const ckr::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what << "\n";
    return kExitCap;
  } catch (const ckr::ReductionError& e) {
    std::cerr << "generator error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ckr::StructuralError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitUsage;
}
