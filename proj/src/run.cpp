//  Copyright 2026 The pbwcheck Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "pbw/run.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pbw/finset.hpp"
#include "pbw/instance.hpp"

namespace pbw {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::optional<Backend> parse_backend(std::string_view s) {
  if (s == "fincat") return Backend::fincat;
  if (s == "finset") return Backend::finset;
  return std::nullopt;
}

std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "laws") return Suite::laws;
  if (s == "envelope") return Suite::envelope;
  if (s == "pbw") return Suite::pbw;
  if (s == "freeness") return Suite::freeness;
  if (s == "pb3w") return Suite::pb3w;
  if (s == "all") return Suite::all;
  return std::nullopt;
}

std::optional<PbwMode> parse_mode(std::string_view s) {
  if (s == "strict") return PbwMode::strict;
  if (s == "up_to_iso") return PbwMode::up_to_iso;
  return std::nullopt;
}

std::string_view to_string(Backend b) { return b == Backend::fincat ? "fincat" : "finset"; }

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::laws: return "laws";
    case Suite::envelope: return "envelope";
    case Suite::pbw: return "pbw";
    case Suite::freeness: return "freeness";
    case Suite::pb3w: return "pb3w";
    case Suite::all: return "all";
  }
  return "all";
}

std::string_view to_string(PbwMode m) { return m == PbwMode::strict ? "strict" : "up_to_iso"; }

namespace {

class Checks {
 public:
  json& add(std::string name, std::string subject, bool ok, std::string detail = {}) {
    checks_.push_back({{"check", std::move(name)},
                       {"subject", std::move(subject)},
                       {"status", ok ? "pass" : "fail"},
                       {"detail", std::move(detail)}});
    ok ? ++passed_ : ++failed_;
    return checks_.back();
  }
  json& add(std::string name, std::string subject, const ValidationReport& r) {
    return add(std::move(name), std::move(subject), r.ok(), r.summary());
  }

  json take() { return std::exchange(checks_, json::array()); }
  std::size_t passed() const { return passed_; }
  std::size_t failed() const { return failed_; }

 private:
  json checks_ = json::array();
  std::size_t passed_ = 0;
  std::size_t failed_ = 0;
};

bool wants(Suite configured, Suite s) { return configured == Suite::all || configured == s; }

json functor_json(const FunctorData& f) {
  json objs = json::object(), mors = json::object();
  for (ObjId a = 0; a < f.source->object_count(); ++a)
    objs[f.source->object_name(a)] = f.target->object_name(f.obj(a));
  for (MorId m = 0; m < f.source->morphism_count(); ++m)
    mors[f.source->morphism_name(m)] = f.target->morphism_name(f.mor(m));
  return {{"objects", objs}, {"morphisms", mors}};
}

json nat_json(const NatTransData& t) {
  json comps = json::object();
  for (ObjId x = 0; x < t.source.source->object_count(); ++x)
    comps[t.source.source->object_name(x)] = t.source.target->morphism_name(t.at(x));
  return {{"components", comps}};
}

const char* verdict(const PbwReport& r) { return r.pbw ? "pbw" : "not_pbw"; }

json pbw_witness(const Envelope& e, const PbwReport& r) {
  json w = json::object();
  if (r.q) w["q"] = functor_json(*r.q);
  if (r.iso) w["iso"] = nat_json(*r.iso);
  if (r.conflict) {
    const auto& em = *e.em_t().em();
    w["conflict"] = {em.object_name(r.conflict->first), em.object_name(r.conflict->second)};
  }
  w["search"] = {{"functors", r.stats.functors},
                 {"candidates", r.stats.candidates},
                 {"transformations", r.stats.transformations}};
  return w;
}

void envelope_suite(const Envelope& e, const std::string& subject, const RunConfig& cfg, Checks& out) {
  out.add("reflexive-pairs", subject, check_reflexive_pairs(e));
  out.add("hat-functors", subject, check_hat_functors(e));
  out.add("hat-adjunction", subject, hat_adjunction_check(e));
  out.add("envelope-squares", subject, check_envelope_squares(e));
  auto& c = out.add("free-envelopes", subject, check_free_envelopes(e));
  if (cfg.dump_witnesses) {
    json env = json::object();
    const auto& t_em = *e.em_t().em();
    const auto& s_em = *e.em_s().em();
    for (ObjId x = 0; x < t_em.object_count(); ++x)
      env[t_em.object_name(x)] = s_em.object_name(e.hat_phi_G().obj(x));
    c["witness"] = {{"envelope", env}};
  }
}

void pbw_suite(const Envelope& e, const std::string& subject, const RunConfig& cfg, Checks& out) {
  const PbwMode other = cfg.mode == PbwMode::strict ? PbwMode::up_to_iso : PbwMode::strict;
  const auto main = pbw_check(e, cfg.mode);
  const auto alt = pbw_check(e, other);
  auto& c = out.add("pbw", subject, true);
  c["mode"] = to_string(cfg.mode);
  c["verdict"] = verdict(main);
  if (cfg.dump_witnesses) c["witness"] = pbw_witness(e, main);
  const auto& strict = cfg.mode == PbwMode::strict ? main : alt;
  const auto& iso = cfg.mode == PbwMode::strict ? alt : main;
  auto& imp = out.add("pbw-mode-implication", subject, !strict.pbw || iso.pbw,
                      std::string("strict: ") + verdict(strict) + ", up_to_iso: " + verdict(iso));
  imp["verdicts"] = {{"strict", verdict(strict)}, {"up_to_iso", verdict(iso)}};
}

void freeness_suite(const PsiMorphismData& p, const std::string& subject, const RunConfig& cfg,
                    Checks& out) {
  const auto m = sg_module(p);
  const auto module_report = validate_tmodule(m, p.t);
  out.add("sg-module", subject, module_report);
  if (!module_report.ok()) return;
  ValidationReport bijection;
  for (const auto& q : all_functors(p.lower(), p.upper()))
    bijection.merge(check_module_hom_bijection(q, m, p.t));
  out.add("module-hom-bijection", subject, bijection);
  const auto fr = freeness_check(m, p.t);
  auto& c = out.add("freeness", subject, true);
  c["verdict"] = fr.free ? "free" : "not_free";
  c["equal_to_free"] = fr.equal_to_free;
  if (cfg.dump_witnesses) {
    json w = json::object();
    if (fr.q) w["q"] = functor_json(*fr.q);
    if (fr.iso) w["iso"] = nat_json(*fr.iso);
    c["witness"] = w;
  }
}

void pb3w_suite(const Envelope& e, const Instance& inst, const std::string& subject,
                const RunConfig& cfg, Checks& out) {
  const auto h = pb3w_harness(e);
  std::string detail;
  for (const auto& f : h.failures) detail += (detail.empty() ? "" : "; ") + f;
  if (!h.agree) detail = std::string("verdicts disagree") + (detail.empty() ? "" : "; " + detail);
  auto& c = out.add("pb3w", subject, h.ok(), detail);
  c["verdicts"] = {{"pbw", verdict(h.pbw)}, {"free", h.freeness.free ? "free" : "not_free"}};
  c["split_coequalizers"] = h.splits.size();
  if (!h.ok()) c["counterexample"] = json::parse(inst.canonical());
  if (cfg.dump_witnesses && h.freeness.q) c["witness"] = {{"q", functor_json(*h.freeness.q)}};
}

struct InstanceOutcome {
  json entry;
  bool error = false;
};

InstanceOutcome run_instance(const fs::path& file, const RunConfig& cfg, Checks& out) {
  InstanceOutcome o;
  o.entry = {{"instance", file.filename().string()}};
  const auto abort = [&](const std::string& msg) {
    o.error = true;
    o.entry["status"] = "error";
    o.entry["error"] = msg;
    o.entry["checks"] = out.take();
    return o;
  };

  std::optional<Instance> inst;
  try {
    inst.emplace(Instance::load(file.string()));
  } catch (const Error& e) {
    return abort(std::string(e.what()));
  }

  const auto items = inst->validate();
  bool all_valid = true;
  for (const auto& item : items) {
    if (item.report.has_structural())
      return abort(item.kind + " '" + item.name + "': " + item.report.summary());
    all_valid = all_valid && item.report.ok();
  }
  if (wants(cfg.suite, Suite::laws)) {
    for (const auto& item : items) out.add("validate", item.kind + ":" + item.name, item.report);
    for (const auto& [name, p] : inst->psi_morphisms())
      if (validate_psi_morphism(p).ok())
        out.add("mate-compatibility", "psi_morphism:" + name, check_mate_compatibility(p));
  }
  if (cfg.suite != Suite::laws && !all_valid) {
    std::string msg = "validation failed before the suite could run";
    for (const auto& item : items)
      if (!item.report.ok()) msg += "; " + item.kind + " '" + item.name + "': " + item.report.summary();
    return abort(msg);
  }

  const bool needs_envelope =
      wants(cfg.suite, Suite::envelope) || wants(cfg.suite, Suite::pbw) || wants(cfg.suite, Suite::pb3w);
  for (const auto& [name, p] : inst->psi_morphisms()) {
    const std::string subject = "psi_morphism:" + name;
    if (wants(cfg.suite, Suite::freeness)) freeness_suite(p, subject, cfg, out);
    if (!needs_envelope) continue;
    std::optional<Envelope> e;
    try {
      e.emplace(p);
    } catch (const Error& err) {
      out.add("envelope", subject, false, err.what());
      continue;
    }
    if (wants(cfg.suite, Suite::envelope)) envelope_suite(*e, subject, cfg, out);
    if (wants(cfg.suite, Suite::pbw)) pbw_suite(*e, subject, cfg, out);
    if (wants(cfg.suite, Suite::pb3w)) pb3w_suite(*e, *inst, subject, cfg, out);
  }

  json checks = out.take();
  bool ok = std::all_of(checks.begin(), checks.end(),
                        [](const json& c) { return c["status"] == "pass"; });
  o.entry["status"] = ok ? "pass" : "fail";
  o.entry["checks"] = std::move(checks);
  return o;
}

std::vector<fs::path> instance_files(const std::string& input) {
  const fs::path p(input);
  if (fs::is_regular_file(p)) return {p};
  if (!fs::is_directory(p)) throw IoError("no such file or directory: '" + input + "'");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(p))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  return files;
}

// finset

using finset::Elem;

std::vector<Elem> checked_sizes(const std::function<void(Elem)>& probe, Elem max_size) {
  std::vector<Elem> sizes;
  for (Elem n = 0; n <= max_size; ++n) {
    try {
      probe(n);
    } catch (const BoundError&) {
      break;
    }
    sizes.push_back(n);
  }
  return sizes;
}

std::string size_list(const std::vector<Elem>& sizes) {
  std::string s;
  for (Elem n : sizes) s += (s.empty() ? "" : ",") + std::to_string(n);
  return "sizes {" + s + "}";
}

json table_json(const std::vector<Elem>& t) { return json(t); }

void finset_laws(const finset::MonadMorphism& phi, const RunConfig& cfg, Checks& out) {
  const Elem top = std::min<Elem>(cfg.max_size, 3);
  std::set<std::string> seen;
  for (const auto& m : {phi.t, phi.s}) {
    if (!seen.insert(m->id()).second) continue;
    ValidationReport r;
    auto sizes = checked_sizes([&](Elem n) { r.merge(finset::monad_law_spotcheck(*m, {n})); }, top);
    out.add("monad-laws", "monad:" + m->id(), r.ok(), r.ok() ? size_list(sizes) : r.summary());
  }
  std::vector<Elem> sizes;
  for (Elem n = 0; n <= std::min<Elem>(top, 2); ++n) sizes.push_back(n);
  try {
    const auto r = finset::monad_morphism_spotcheck(phi, sizes);
    out.add("morphism-laws", "morphism:" + phi.name, r.ok(), r.ok() ? size_list(sizes) : r.summary());
  } catch (const BoundError& e) {
    out.add("morphism-laws", "morphism:" + phi.name, false, e.what());
  }
}

void finset_envelope(const finset::MonadMorphism& phi, const RunConfig& cfg, Checks& out) {
  const finset::Bounds bounds;
  for (Elem n = 0; n <= cfg.max_size; ++n) {
    const std::string subject = "carrier:" + std::to_string(n);
    try {
      const auto algebras = finset::enumerate_algebras(phi.t, n);
      std::set<Elem> sizes;
      json dump = json::array();
      for (const auto& a : algebras) {
        const auto env = finset::envelope_finset(phi, a, bounds);
        sizes.insert(env.size());
        if (cfg.dump_witnesses) dump.push_back({{"structure", table_json(a.table())}, {"envelope", env.size()}});
      }
      auto& c = out.add("envelope", subject, true,
                        std::to_string(algebras.size()) + " algebras");
      c["envelope_sizes"] = json(std::vector<Elem>(sizes.begin(), sizes.end()));
      if (cfg.dump_witnesses) c["witness"] = dump;
    } catch (const Error& e) {
      out.add("envelope", subject, false, e.what());
    }
  }
  for (Elem y = 0; y <= cfg.max_size; ++y) {
    const std::string subject = "free:" + std::to_string(y);
    try {
      const auto env = finset::envelope_finset(phi, finset::FinAlgebra::free(phi.t, y), bounds);
      const Elem expected = phi.s->size(y);
      out.add("free-envelope", subject, env.size() == expected,
              "size " + std::to_string(env.size()) + ", expected " + std::to_string(expected));
    } catch (const Error& e) {
      out.add("free-envelope", subject, false, e.what());
    }
  }
}

void finset_pbw(const finset::MonadMorphism& phi, const RunConfig& cfg, Checks& out) {
  try {
    const auto r = finset::pbw_probe(phi, cfg.max_size);
    auto& c = out.add("probe", "morphism:" + phi.name, true,
                      std::to_string(r.algebras) + " algebras up to carrier " + std::to_string(r.bound));
    c["verdict"] = r.refuted ? "refuted" : "not_refuted_at_bound";
    c["bound"] = r.bound;
    c["envelope_sizes"] = r.sizes;
    if (r.witness && (cfg.dump_witnesses || r.refuted)) {
      c["witness"] = {{"carrier", r.witness->carrier},
                      {"first", table_json(r.witness->first)},
                      {"second", table_json(r.witness->second)},
                      {"first_size", r.witness->first_size},
                      {"second_size", r.witness->second_size}};
    }
  } catch (const Error& e) {
    out.add("probe", "morphism:" + phi.name, false, e.what());
  }
}

json config_json(const RunConfig& cfg) {
  json c = {{"backend", to_string(cfg.backend)},
            {"suite", to_string(cfg.suite)},
            {"mode", to_string(cfg.mode)},
            {"max_size", cfg.max_size},
            {"dump_witnesses", cfg.dump_witnesses}};
  if (cfg.backend == Backend::finset) {
    c["t"] = cfg.t;
    c["s"] = cfg.s;
    c["morphism"] = cfg.morphism.empty() ? "id" : cfg.morphism;
  }
  return c;
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  json report = {{"tool", "pbwcheck"}, {"config", config_json(cfg)}, {"instances", json::array()}};
  Checks checks;
  std::size_t errors = 0;
  std::optional<std::string> usage;

  if (cfg.backend == Backend::fincat) {
    if (cfg.input.empty()) {
      usage = "the fincat backend needs an input file or directory";
    } else {
      try {
        for (const auto& file : instance_files(cfg.input)) {
          auto o = run_instance(file, cfg, checks);
          errors += o.error;
          report["instances"].push_back(std::move(o.entry));
        }
      } catch (const Error& e) {
        usage = e.what();
      }
    }
  } else {
    if (cfg.suite == Suite::freeness || cfg.suite == Suite::pb3w) {
      usage = "suite '" + std::string(to_string(cfg.suite)) + "' requires the fincat backend";
    } else if (cfg.t.empty() || cfg.s.empty()) {
      usage = "the finset backend needs --t and --s";
    } else if (!cfg.input.empty()) {
      usage = "the finset backend takes no input file";
    } else {
      try {
        const auto t = finset::instantiate(cfg.t);
        const auto s = finset::instantiate(cfg.s);
        const auto phi = finset::registry_morphism(cfg.morphism.empty() ? "id" : cfg.morphism, t, s);
        if (wants(cfg.suite, Suite::laws)) finset_laws(phi, cfg, checks);
        if (wants(cfg.suite, Suite::envelope)) finset_envelope(phi, cfg, checks);
        if (wants(cfg.suite, Suite::pbw)) finset_pbw(phi, cfg, checks);
        json list = checks.take();
        const bool ok = std::all_of(list.begin(), list.end(),
                                    [](const json& c) { return c["status"] == "pass"; });
        report["instances"].push_back({{"instance", "finset:" + t->id() + "=>" + s->id() + "@" + phi.name},
                                       {"status", ok ? "pass" : "fail"},
                                       {"checks", std::move(list)}});
      } catch (const Error& e) {
        usage = e.what();
      }
    }
  }

  RunResult result;
  if (usage || errors > 0) {
    result.exit_code = kExitStructural;
  } else {
    result.exit_code = checks.failed() > 0 ? kExitCheckFailed : kExitPass;
  }
  if (usage) report["error"] = *usage;
  report["summary"] = {{"instances", report["instances"].size()},
                       {"checks", checks.passed() + checks.failed()},
                       {"passed", checks.passed()},
                       {"failed", checks.failed()},
                       {"errors", errors + (usage ? 1 : 0)}};
  report["exit_code"] = result.exit_code;
  result.report = report.dump(2) + "\n";

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream s;
  if (usage) s << "error: " << *usage << "\n";
  for (const auto& inst : report["instances"]) {
    std::size_t failed = 0;
    for (const auto& c : inst["checks"]) failed += c["status"] != "pass";
    s << inst["instance"].get<std::string>() << ": " << inst["status"].get<std::string>() << " ("
      << inst["checks"].size() << " checks, " << failed << " failed)";
    if (inst.contains("error")) s << ": " << inst["error"].get<std::string>();
    s << "\n";
  }
  s << checks.passed() << " passed, " << checks.failed() << " failed, "
    << report["summary"]["errors"].get<std::size_t>() << " errors in " << std::fixed;
  s.precision(2);
  s << secs << "s; exit " << result.exit_code << "\n";
  result.summary = s.str();
  return result;
}

}  // namespace pbw
