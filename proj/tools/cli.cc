#include "cli.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "expertise/formula.h"
#include "expertise/model.h"
#include "expertise/model_io.h"
#include "expertise/proof_io.h"
#include "expertise/proofs.h"
#include "expertise/semantics.h"
#include "expertise/validity.h"

namespace expertise::cli {

namespace {

struct Options {
  bool json = false;
  bool no_timing = false;
  std::optional<std::size_t> max_states;
  std::vector<std::string> atoms;
  unsigned jobs = 1;

  std::string model_path;
  std::string proof_path;
  std::string formula;
  std::string formula2;
  std::string state;

  std::vector<std::string> schemas;
  bool plant_distribution = false;
  std::string corpus_path;
};

// Thrown for user-facing input errors; maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Formula ParseArg(const std::string& text) {
  try {
    return Parse(text);
  } catch (const ParseError& e) {
    throw InputError("cannot parse formula \"" + text + "\": " + e.what());
  }
}

Formula ParseL(const std::string& text) {
  Formula f = ParseArg(text);
  if (!InL(f)) throw InputError("formula \"" + text + "\" uses K, which is not part of L");
  return f;
}

std::string SetText(const StateSpace& states, const StateSet& set) {
  std::string out = "{";
  bool first = true;
  set.ForEach([&](std::size_t i) {
    if (!first) out += ", ";
    out += states.name(i);
    first = false;
  });
  return out + "}";
}

std::string BlocksText(const ExpertiseModel& m) {
  std::string out;
  for (const auto& b : m.partition().blocks()) {
    if (!out.empty()) out += ' ';
    out += SetText(m.states(), b);
  }
  return out;
}

nlohmann::json BlocksJson(const ExpertiseModel& m) {
  auto j = nlohmann::json::array();
  for (const auto& b : m.partition().blocks()) j.push_back(StateSetToJson(m.states(), b));
  return j;
}

void WarnUnvalued(const ExpertiseModel& m, const Formula& f, std::ostream& err) {
  for (const auto& a : UnvaluedAtoms(m, f))
    err << "warning: atom '" << a << "' is not in the model's valuation; it is false everywhere\n";
}

void PrintJson(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

EnumerationSpec BoundFor(const Formula& f, const Options& o) {
  EnumerationSpec spec = DefaultBound(f);
  if (!o.atoms.empty()) spec.atoms = o.atoms;
  if (o.max_states) spec.n_states = *o.max_states;
  for (const auto& a : Atoms(f))
    if (std::find(spec.atoms.begin(), spec.atoms.end(), a) == spec.atoms.end())
      throw InputError("atom '" + a + "' is missing from --atoms");
  try {
    spec.Validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid bound: ") + e.what());
  }
  return spec;
}

std::string BoundText(const EnumerationSpec& spec) {
  std::string atoms;
  for (const auto& a : spec.atoms) atoms += (atoms.empty() ? "" : ", ") + a;
  return "≤ " + std::to_string(spec.n_states) + " states, atoms {" + atoms + "}, " +
         std::to_string(spec.CumulativeModelCount()) + " models";
}

void PrintVerdict(const Verdict& v, const Options& o, std::ostream& out) {
  if (o.json) {
    PrintJson(out, VerdictToJson(v, !o.no_timing));
    return;
  }
  out << "bound: " << BoundText(v.bound()) << '\n';
  out << v.Summary() << '\n';
  if (const auto& w = v.witness()) {
    const auto& m = w->model;
    out << "  states: ";
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << m.states().name(i);
    out << "\n  partition: " << BlocksText(m) << "\n  valuation:";
    for (const auto& [atom, set] : m.valuation())
      out << ' ' << atom << " = " << SetText(m.states(), set) << ';';
    out << "\n  state: " << m.states().name(w->state) << '\n';
  }
  out << "models checked: " << v.models_checked() << '\n';
  if (!o.no_timing)
    out << "wall time: " << std::chrono::duration<double, std::milli>(v.elapsed()).count()
        << " ms\n";
}

// Subcommands ---------------------------------------------------------------

int CmdEval(const Options& o, std::ostream& out, std::ostream& err) {
  const ExpertiseModel m = LoadModelFile(o.model_path);
  const Formula f = ParseL(o.formula);
  WarnUnvalued(m, f, err);
  const Extension ext = ComputeExtension(m, f);
  if (!o.state.empty()) {
    const auto idx = m.states().Find(o.state);
    if (!idx) throw InputError("unknown state '" + o.state + "'");
    const bool value = ext.Holds(*idx);
    if (o.json)
      PrintJson(out, {{"formula", Render(f)}, {"state", o.state}, {"value", value}});
    else
      out << (value ? "true" : "false") << '\n';
    return value ? kExitTrue : kExitFalse;
  }
  const bool global = ext.states.full();
  if (o.json) {
    PrintJson(out, {{"formula", Render(f)},
                    {"extension", StateSetToJson(m.states(), ext.states)},
                    {"globally_true", global}});
  } else {
    out << "extension: " << SetText(m.states(), ext.states) << '\n'
        << "globally " << (global ? "true" : "false") << '\n';
  }
  return global ? kExitTrue : kExitFalse;
}

int CmdExtension(const Options& o, std::ostream& out, std::ostream& err) {
  const ExpertiseModel m = LoadModelFile(o.model_path);
  const Formula f = ParseL(o.formula);
  WarnUnvalued(m, f, err);
  const Extension ext = ComputeExtension(m, f);
  if (o.json)
    PrintJson(out, {{"formula", Render(f)},
                    {"extension", StateSetToJson(m.states(), ext.states)}});
  else
    out << SetText(m.states(), ext.states) << '\n';
  return kExitTrue;
}

int CmdTranslate(const Options& o, std::ostream& out, std::ostream&) {
  const Formula f = ParseL(o.formula);
  const std::string t = Render(TranslateT(f));
  const std::string g = Render(EmbedG(f));
  if (o.json)
    PrintJson(out, {{"formula", Render(f)}, {"t", t}, {"g", g}});
  else
    out << "t: " << t << "\ng: " << g << '\n';
  return kExitTrue;
}

int CmdToS5(const Options& o, std::ostream& out, std::ostream&) {
  const ExpertiseModel m = LoadModelFile(o.model_path);
  const RelationalModel r = ToS5Model(m);
  if (o.json) {
    nlohmann::json j = RelationalModelToJson(r);
    j["classes"] = BlocksJson(m);
    PrintJson(out, j);
    return kExitTrue;
  }
  out << "classes: " << BlocksText(m) << "\nrelation:";
  for (auto [x, y] : r.Pairs()) out << " (" << r.states().name(x) << "," << r.states().name(y) << ")";
  out << "\nS5: " << (r.IsS5() ? "yes" : "no") << '\n';
  return kExitTrue;
}

int CmdCorrespondence(const Options& o, std::ostream& out, std::ostream& err) {
  const ExpertiseModel m = LoadModelFile(o.model_path);
  const Formula f = ParseL(o.formula);
  WarnUnvalued(m, f, err);
  const CorrespondenceReport rep = CheckCorrespondence(m, f);
  if (o.json) {
    nlohmann::json j{{"formula", Render(f)},
                     {"translated", Render(rep.translated)},
                     {"classes", BlocksJson(m)},
                     {"ok", rep.ok()}};
    if (rep.mismatch)
      j["mismatch"] = {{"state", m.states().name(rep.mismatch->state)},
                       {"expertise_value", rep.mismatch->expertise_value},
                       {"relational_value", rep.mismatch->relational_value}};
    else
      j["mismatch"] = nullptr;
    PrintJson(out, j);
  } else {
    out << "classes: " << BlocksText(m) << "\nt: " << Render(rep.translated) << '\n';
    if (rep.ok()) {
      out << "ok\n";
    } else {
      out << "mismatch at " << m.states().name(rep.mismatch->state)
          << ": expertise model says " << rep.mismatch->expertise_value
          << ", induced S5 model says " << rep.mismatch->relational_value << '\n';
    }
  }
  return rep.ok() ? kExitTrue : kExitFalse;
}

int CmdCountermodel(const Options& o, std::ostream& out, std::ostream&) {
  const Formula f = ParseL(o.formula);
  const Verdict v = FindCountermodel(f, BoundFor(f, o), {o.jobs});
  PrintVerdict(v, o, out);
  return v.refuted() ? kExitFalse : kExitTrue;
}

int CmdEquiv(const Options& o, std::ostream& out, std::ostream&) {
  const Formula f = ParseL(o.formula);
  const Formula g = ParseL(o.formula2);
  const Verdict v = FindCountermodel(Formula::Iff(f, g), BoundFor(Formula::Iff(f, g), o), {o.jobs});
  PrintVerdict(v, o, out);
  return v.refuted() ? kExitFalse : kExitTrue;
}

int CmdCheckProof(const Options& o, std::ostream& out, std::ostream&) {
  const Derivation d = LoadProofFile(o.proof_path);
  const DerivationVerdict v = CheckDerivation(d);
  if (o.json) {
    nlohmann::json j{{"ok", v.ok()},
                     {"steps", d.steps.size()},
                     {"conclusion", Render(d.Conclusion())},
                     {"message", v.message}};
    j["bad_step"] = v.bad_step ? nlohmann::json(*v.bad_step) : nlohmann::json(nullptr);
    j["error"] = v.error ? nlohmann::json(StepErrorText(*v.error)) : nlohmann::json(nullptr);
    PrintJson(out, j);
  } else if (v.ok()) {
    out << "ok: " << d.steps.size() << " steps, proves " << Render(d.Conclusion()) << '\n';
  } else {
    out << v.message << '\n';
  }
  return v.ok() ? kExitTrue : kExitFalse;
}

std::vector<Formula> LoadCorpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file '" + path + "'");
  std::vector<Formula> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(ParseL(line));
  }
  if (out.empty()) throw InputError("corpus file '" + path + "' has no formulas");
  return out;
}

int CmdSoundnessSweep(const Options& o, std::ostream& out, std::ostream&) {
  std::vector<SchemaTemplate> schemas;
  if (o.schemas.empty()) {
    for (AxiomName a : kAllAxioms) schemas.push_back(AxiomSchema(a));
  } else {
    for (const auto& label : o.schemas) {
      auto a = AxiomFromLabel(label);
      if (!a) throw InputError("unknown axiom '" + label + "'");
      schemas.push_back(AxiomSchema(*a));
    }
  }
  if (o.plant_distribution) schemas.push_back(EDistributionSchema());

  const std::vector<Formula> corpus = o.corpus_path.empty() ? DefaultCorpus() : LoadCorpus(o.corpus_path);
  EnumerationSpec spec;
  spec.n_states = o.max_states.value_or(4);
  if (!o.atoms.empty()) {
    spec.atoms = o.atoms;
  } else {
    std::set<std::string> atoms;
    for (const auto& f : corpus)
      for (auto& a : Atoms(f)) atoms.insert(std::move(a));
    spec.atoms.assign(atoms.begin(), atoms.end());
  }
  try {
    spec.Validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid bound: ") + e.what());
  }

  const SoundnessReport rep = SoundnessSweep(schemas, corpus, spec, {o.jobs});
  if (o.json) {
    nlohmann::json j = SoundnessReportToJson(rep, !o.no_timing);
    j["bound"] = {{"max_states", spec.n_states}, {"atoms", spec.atoms}};
    PrintJson(out, j);
  } else {
    out << "bound: " << BoundText(spec) << '\n'
        << "instances: " << rep.instances << ", violations: " << rep.violations.size() << '\n';
    for (const auto& v : rep.violations)
      out << "  " << v.schema << ": " << Render(v.instance) << " -- " << v.verdict.Summary()
          << '\n';
  }
  return rep.ok() ? kExitTrue : kExitFalse;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Expertise and soundness: model checking, S5 translation, bounded validity "
               "and proof checking",
               "expertise"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");
  app.add_flag("--no-timing", o.no_timing, "Omit wall-clock times (byte-stable output)");
  app.add_option("--max-states", o.max_states, "State bound for model enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--atoms", o.atoms, "Atoms for model enumeration (comma separated)")
      ->delimiter(',');
  app.add_option("--jobs", o.jobs, "Worker threads for searches (0 = all cores)");

  auto* eval = app.add_subcommand("eval", "Truth value at a state, or extension and global truth");
  eval->add_option("model", o.model_path, "Model file (JSON)")->required();
  eval->add_option("formula", o.formula, "Formula")->required();
  eval->add_option("state", o.state, "State name");

  auto* extension = app.add_subcommand("extension", "Print the extension of a formula");
  extension->add_option("model", o.model_path, "Model file (JSON)")->required();
  extension->add_option("formula", o.formula, "Formula")->required();

  auto* translate = app.add_subcommand("translate", "Print t(f) and g(f)");
  translate->add_option("formula", o.formula, "Formula")->required();

  auto* to_s5 = app.add_subcommand("to-s5", "Print the induced S5 relational model");
  to_s5->add_option("model", o.model_path, "Model file (JSON)")->required();

  auto* corr = app.add_subcommand("correspondence",
                                  "Compare f on the model with t(f) on the induced S5 model");
  corr->add_option("model", o.model_path, "Model file (JSON)")->required();
  corr->add_option("formula", o.formula, "Formula")->required();

  auto* cm = app.add_subcommand("countermodel", "Search small models for a countermodel");
  cm->add_option("formula", o.formula, "Formula")->required();

  auto* equiv = app.add_subcommand("equiv", "Search small models for a difference between f and g");
  equiv->add_option("f", o.formula, "Formula")->required();
  equiv->add_option("g", o.formula2, "Formula")->required();

  auto* proof = app.add_subcommand("check-proof", "Check a derivation in the Hilbert system");
  proof->add_option("proof", o.proof_path, "Proof file")->required();

  auto* sweep = app.add_subcommand("soundness-sweep",
                                   "Search corpus instances of the axiom schemas for countermodels");
  sweep->add_option("--schemas", o.schemas, "Axioms to sweep (default: all)")->delimiter(',');
  sweep->add_flag("--plant-distribution", o.plant_distribution,
                  "Also sweep the invalid schema E(f -> g) -> (E f -> E g)");
  sweep->add_option("--corpus", o.corpus_path, "Corpus file, one formula per line");

  std::vector<const char*> argv{"expertise"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*eval) return CmdEval(o, out, err);
    if (*extension) return CmdExtension(o, out, err);
    if (*translate) return CmdTranslate(o, out, err);
    if (*to_s5) return CmdToS5(o, out, err);
    if (*corr) return CmdCorrespondence(o, out, err);
    if (*cm) return CmdCountermodel(o, out, err);
    if (*equiv) return CmdEquiv(o, out, err);
    if (*proof) return CmdCheckProof(o, out, err);
    if (*sweep) return CmdSoundnessSweep(o, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ProofFormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const LanguageError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace expertise::cli
