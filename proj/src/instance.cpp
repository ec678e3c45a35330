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

#include "pbw/instance.hpp"

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pbw {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw StructuralError(path + ": " + msg);
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

void expect_keys(const json& v, const std::string& path, std::initializer_list<const char*> keys) {
  if (!v.is_object()) fail(path, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, _] : v.items())
    if (!allowed.count(k)) fail(path, "unknown key '" + k + "'");
  for (const char* k : keys)
    if (!v.contains(k)) fail(path, "missing key '" + std::string(k) + "'");
}

const std::string& str(const json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get_ref<const std::string&>();
}

const json& object_at(const json& v, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  return v;
}

const json& array_at(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array");
  return v;
}

std::vector<std::string> triple(const json& v, const std::string& path) {
  if (!v.is_array() || v.size() != 3) fail(path, "expected an array of three strings");
  return {str(v[0], path + "/0"), str(v[1], path + "/1"), str(v[2], path + "/2")};
}

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name,
                                        const std::string& path, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) fail(path, "unknown " + std::string(what) + " '" + name + "'");
  return it->second;
}

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

class InstanceLoader {
 public:
  explicit InstanceLoader(Instance& out) : out_(out) {}

  void categories(const json& section) {
    for (const auto& [name, v] : object_at(section, "/categories").items()) {
      const std::string path = child("/categories", name);
      expect_keys(v, path, {"objects", "morphisms", "identity", "compose"});
      CategoryTables t;
      for (const auto& o : array_at(v["objects"], path + "/objects"))
        t.objects.push_back(str(o, path + "/objects"));
      const auto& ms = array_at(v["morphisms"], path + "/morphisms");
      for (std::size_t i = 0; i < ms.size(); ++i) {
        auto a = triple(ms[i], path + "/morphisms/" + std::to_string(i));
        t.morphisms.push_back({a[0], a[1], a[2]});
      }
      for (const auto& [o, f] : object_at(v["identity"], path + "/identity").items())
        t.identity.emplace_back(o, str(f, child(path + "/identity", o)));
      const auto& cs = array_at(v["compose"], path + "/compose");
      for (std::size_t i = 0; i < cs.size(); ++i) {
        auto c = triple(cs[i], path + "/compose/" + std::to_string(i));
        t.compose.push_back({c[0], c[1], c[2]});
      }
      try {
        categories()[name] = std::make_shared<const FinCategory>(FinCategory::from_tables(name, t));
      } catch (const StructuralError& e) {
        fail(path, e.what());
      }
    }
  }

  void functors(const json& section) {
    for (const auto& [name, v] : object_at(section, "/functors").items()) {
      const std::string path = child("/functors", name);
      expect_keys(v, path, {"source", "target", "objects", "morphisms"});
      const CatPtr& s = lookup(categories(), str(v["source"], path + "/source"), path + "/source", "category");
      const CatPtr& t = lookup(categories(), str(v["target"], path + "/target"), path + "/target", "category");
      FunctorData f{s, t, std::vector<ObjId>(s->object_count(), kNone),
                    std::vector<MorId>(s->morphism_count(), kNone)};
      const std::string op = path + "/objects";
      const auto& objs = object_at(v["objects"], op);
      if (objs.size() != s->object_count()) fail(op, "object map is not total");
      for (const auto& [a, b] : objs.items()) {
        auto ai = s->find_object(a);
        if (!ai) fail(child(op, a), "unknown object of '" + s->name() + "'");
        auto bi = t->find_object(str(b, child(op, a)));
        if (!bi) fail(child(op, a), "unknown object '" + b.get<std::string>() + "' of '" + t->name() + "'");
        f.obj_map[*ai] = *bi;
      }
      const std::string mp = path + "/morphisms";
      const auto& mors = object_at(v["morphisms"], mp);
      if (mors.size() != s->morphism_count()) fail(mp, "morphism map is not total");
      for (const auto& [a, b] : mors.items()) {
        auto ai = s->find_morphism(a);
        if (!ai) fail(child(mp, a), "unknown morphism of '" + s->name() + "'");
        auto bi = t->find_morphism(str(b, child(mp, a)));
        if (!bi) fail(child(mp, a), "unknown morphism '" + b.get<std::string>() + "' of '" + t->name() + "'");
        f.mor_map[*ai] = *bi;
      }
      functors()[name] = std::move(f);
    }
  }

  FunctorData functor_ref(const json& v, const std::string& path) {
    if (v.is_string()) return single_ref(v.get<std::string>(), path);
    if (!v.is_array() || v.empty()) fail(path, "expected a functor name or a nonempty array");
    FunctorData acc = single_ref(str(v.back(), path), path);
    for (std::size_t i = v.size() - 1; i-- > 0;) {
      try {
        acc = compose(single_ref(str(v[i], path), path), acc);
      } catch (const StructuralError& e) {
        fail(path, e.what());
      }
    }
    return acc;
  }

  void nat_trans(const json& section) {
    for (const auto& [name, v] : object_at(section, "/nat_trans").items()) {
      const std::string path = child("/nat_trans", name);
      expect_keys(v, path, {"source", "target", "components"});
      NatTransData t{functor_ref(v["source"], path + "/source"), functor_ref(v["target"], path + "/target"), {}};
      if (!same_category(t.source.source, t.target.source) ||
          !same_category(t.source.target, t.target.target))
        fail(path, "source and target functors are not parallel");
      const auto& a = *t.source.source;
      const auto& b = *t.source.target;
      t.components.assign(a.object_count(), kNone);
      const std::string cp = path + "/components";
      const auto& comps = object_at(v["components"], cp);
      if (comps.size() != a.object_count()) fail(cp, "component table is not total");
      for (const auto& [x, f] : comps.items()) {
        auto xi = a.find_object(x);
        if (!xi) fail(child(cp, x), "unknown object of '" + a.name() + "'");
        auto fi = b.find_morphism(str(f, child(cp, x)));
        if (!fi) fail(child(cp, x), "unknown morphism '" + f.get<std::string>() + "' of '" + b.name() + "'");
        t.components[*xi] = *fi;
      }
      out_.nat_trans_[name] = std::move(t);
    }
  }

  void adjunctions(const json& section) {
    for (const auto& [name, v] : object_at(section, "/adjunctions").items()) {
      const std::string path = child("/adjunctions", name);
      expect_keys(v, path, {"left", "right", "unit", "counit"});
      AdjunctionData adj;
      adj.left = functor_ref(v["left"], path + "/left");
      adj.right = functor_ref(v["right"], path + "/right");
      adj.unit = nat(v["unit"], path + "/unit");
      adj.counit = nat(v["counit"], path + "/counit");
      out_.adjunctions_[name] = std::move(adj);
    }
  }

  void monads(const json& section) {
    for (const auto& [name, v] : object_at(section, "/monads").items()) {
      const std::string path = child("/monads", name);
      expect_keys(v, path, {"base", "endo", "mu", "eta"});
      MonadData m;
      m.base = lookup(categories(), str(v["base"], path + "/base"), path + "/base", "category");
      m.endo = functor_ref(v["endo"], path + "/endo");
      if (!same_category(m.endo.source, m.base) || !same_category(m.endo.target, m.base))
        fail(path + "/endo", "not an endofunctor of '" + m.base->name() + "'");
      m.mu = nat(v["mu"], path + "/mu");
      m.eta = nat(v["eta"], path + "/eta");
      out_.monads_[name] = std::move(m);
    }
  }

  void psi_morphisms(const json& section) {
    for (const auto& [name, v] : object_at(section, "/psi_morphisms").items()) {
      const std::string path = child("/psi_morphisms", name);
      expect_keys(v, path, {"adjunction", "s", "t", "phi_G", "phi_F"});
      PsiMorphismData p;
      p.adj = lookup(out_.adjunctions_, str(v["adjunction"], path + "/adjunction"), path + "/adjunction",
                     "adjunction");
      p.s = lookup(out_.monads_, str(v["s"], path + "/s"), path + "/s", "monad");
      p.t = lookup(out_.monads_, str(v["t"], path + "/t"), path + "/t", "monad");
      if (!same_category(p.s.base, p.adj.upper())) fail(path + "/s", "monad is not on the upper category");
      if (!same_category(p.t.base, p.adj.lower())) fail(path + "/t", "monad is not on the lower category");
      p.phi_G = nat(v["phi_G"], path + "/phi_G");
      p.phi_F = nat(v["phi_F"], path + "/phi_F");
      out_.psi_[name] = std::move(p);
    }
  }

 private:
  std::map<std::string, CatPtr>& categories() { return out_.categories_; }
  std::map<std::string, FunctorData>& functors() { return out_.functors_; }

  FunctorData single_ref(const std::string& ref, const std::string& path) {
    if (ref.rfind("id:", 0) == 0)
      return identity_functor(lookup(categories(), ref.substr(3), path, "category"));
    return lookup(functors(), ref, path, "functor");
  }

  const NatTransData& nat(const json& v, const std::string& path) {
    return lookup(out_.nat_trans_, str(v, path), path, "natural transformation");
  }

  Instance& out_;
};

Instance Instance::parse(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto at = msg.find(": ", msg.find("parse error")); at != std::string::npos) msg = msg.substr(at + 2);
    throw ParseError(position(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + msg);
  }
  expect_keys(doc, "", {"categories", "functors", "nat_trans", "adjunctions", "monads", "psi_morphisms"});
  Instance inst;
  InstanceLoader l(inst);
  l.categories(doc["categories"]);
  l.functors(doc["functors"]);
  l.nat_trans(doc["nat_trans"]);
  l.adjunctions(doc["adjunctions"]);
  l.monads(doc["monads"]);
  l.psi_morphisms(doc["psi_morphisms"]);
  inst.canonical_ = doc.dump(2) + "\n";
  return inst;
}

Instance Instance::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const StructuralError& e) {
    throw StructuralError(path + ": " + e.what());
  }
}

void Instance::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << canonical_;
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<Instance::Item> Instance::validate() const {
  std::vector<Item> items;
  for (const auto& [n, c] : categories_) items.push_back({"category", n, validate_category(*c)});
  for (const auto& [n, f] : functors_) items.push_back({"functor", n, validate_functor(f)});
  for (const auto& [n, t] : nat_trans_) items.push_back({"nat_trans", n, validate_nat_trans(t)});
  for (const auto& [n, a] : adjunctions_) {
    auto r = validate_adjunction(a);
    if (r.ok()) r.merge(check_hom_bijection(a), "hom bijection");
    items.push_back({"adjunction", n, std::move(r)});
  }
  for (const auto& [n, m] : monads_) items.push_back({"monad", n, validate_monad(m)});
  for (const auto& [n, p] : psi_) items.push_back({"psi_morphism", n, validate_psi_morphism(p)});
  return items;
}

// InstanceWriter

struct InstanceWriter::Doc {
  json doc = {{"categories", json::object()}, {"functors", json::object()},
              {"nat_trans", json::object()},  {"adjunctions", json::object()},
              {"monads", json::object()},     {"psi_morphisms", json::object()}};
};

namespace {

json ref_json(const FunctorRef& r) {
  if (r.size() == 1) return r.front();
  return json(r);
}

}  // namespace

InstanceWriter::InstanceWriter() : doc_(std::make_unique<Doc>()) {}
InstanceWriter::~InstanceWriter() = default;
InstanceWriter::InstanceWriter(InstanceWriter&&) noexcept = default;
InstanceWriter& InstanceWriter::operator=(InstanceWriter&&) noexcept = default;

void InstanceWriter::category(const std::string& name, const FinCategory& c) {
  const auto t = c.to_tables();
  json morphisms = json::array(), identity = json::object(), comp = json::array();
  for (const auto& a : t.morphisms) morphisms.push_back({a.name, a.dom, a.cod});
  for (const auto& [o, f] : t.identity) identity[o] = f;
  for (const auto& x : t.compose) comp.push_back({x.g, x.f, x.gf});
  doc_->doc["categories"][name] = {
      {"objects", t.objects}, {"morphisms", morphisms}, {"identity", identity}, {"compose", comp}};
}

void InstanceWriter::functor(const std::string& name, const std::string& source,
                             const std::string& target, const FunctorData& f) {
  json objs = json::object(), mors = json::object();
  for (ObjId a = 0; a < f.source->object_count(); ++a)
    objs[f.source->object_name(a)] = f.target->object_name(f.obj(a));
  for (MorId m = 0; m < f.source->morphism_count(); ++m)
    mors[f.source->morphism_name(m)] = f.target->morphism_name(f.mor(m));
  doc_->doc["functors"][name] = {
      {"source", source}, {"target", target}, {"objects", objs}, {"morphisms", mors}};
}

void InstanceWriter::nat_trans(const std::string& name, const FunctorRef& source,
                               const FunctorRef& target, const NatTransData& t) {
  json comps = json::object();
  const auto& a = *t.source.source;
  const auto& b = *t.source.target;
  for (ObjId x = 0; x < a.object_count(); ++x) comps[a.object_name(x)] = b.morphism_name(t.at(x));
  doc_->doc["nat_trans"][name] = {
      {"source", ref_json(source)}, {"target", ref_json(target)}, {"components", comps}};
}

void InstanceWriter::adjunction(const std::string& name, const FunctorRef& left,
                                const FunctorRef& right, const std::string& unit,
                                const std::string& counit) {
  doc_->doc["adjunctions"][name] = {
      {"left", ref_json(left)}, {"right", ref_json(right)}, {"unit", unit}, {"counit", counit}};
}

void InstanceWriter::monad(const std::string& name, const std::string& base, const FunctorRef& endo,
                           const std::string& mu, const std::string& eta) {
  doc_->doc["monads"][name] = {{"base", base}, {"endo", ref_json(endo)}, {"mu", mu}, {"eta", eta}};
}

void InstanceWriter::psi_morphism(const std::string& name, const std::string& adjunction,
                                  const std::string& s, const std::string& t,
                                  const std::string& phi_G, const std::string& phi_F) {
  doc_->doc["psi_morphisms"][name] = {{"adjunction", adjunction}, {"s", s}, {"t", t},
                                      {"phi_G", phi_G}, {"phi_F", phi_F}};
}

void InstanceWriter::monad_data(const std::string& name, const std::string& base, const MonadData& m) {
  functor(name, base, base, m.endo);
  nat_trans(name + ".mu", {name, name}, {name}, m.mu);
  nat_trans(name + ".eta", {"id:" + base}, {name}, m.eta);
  monad(name, base, {name}, name + ".mu", name + ".eta");
}

std::string InstanceWriter::text() const { return doc_->doc.dump(2) + "\n"; }

}  // namespace pbw
