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

#include "pbw/finset.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>

namespace pbw::finset {

namespace {

constexpr Elem kMaxBits = 62;

std::string elem(Elem e) { return std::to_string(e); }

Elem pow2(Elem n) {
  if (n > kMaxBits) throw BoundError("2^" + elem(n) + " elements do not fit the element encoding");
  return Elem{1} << n;
}

template <typename F>
void for_each_bit(Elem mask, F&& f) {
  while (mask) {
    f(static_cast<Elem>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
}

std::vector<Elem> iota(Elem n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

class Maybe final : public CatalogueMonad {
 public:
  std::string id() const override { return "maybe"; }
  Elem size(Elem n) const override { return n + 1; }
  Elem eta(Elem, Elem i) const override { return i; }
  Elem fmap(const FinSetMap& f, Elem t) const override { return t == f.dom_size ? f.cod_size : f(t); }
  Elem bind(Elem n, Elem t, const std::vector<Elem>& f, Elem m) const override {
    return t == n ? m : f[t];
  }
  std::vector<Operation> operations() const override { return {{"point", 0, 0}}; }
};

class Powerset final : public CatalogueMonad {
 public:
  std::string id() const override { return "powerset"; }
  Elem size(Elem n) const override { return pow2(n); }
  Elem eta(Elem, Elem i) const override { return Elem{1} << i; }
  Elem fmap(const FinSetMap& f, Elem t) const override {
    if (f.cod_size > kMaxBits) throw BoundError("powerset of " + elem(f.cod_size) + " elements");
    Elem out = 0;
    for_each_bit(t, [&](Elem i) { out |= Elem{1} << f(i); });
    return out;
  }
  Elem bind(Elem, Elem t, const std::vector<Elem>& f, Elem) const override {
    Elem out = 0;
    for_each_bit(t, [&](Elem i) { out |= f[i]; });
    return out;
  }
  std::vector<Operation> operations() const override { return {{"bottom", 0, 0}, {"join", 2, 3}}; }
};

class VecF2 final : public CatalogueMonad {
 public:
  std::string id() const override { return "vecF2"; }
  Elem size(Elem n) const override { return pow2(n); }
  Elem eta(Elem, Elem i) const override { return Elem{1} << i; }
  Elem fmap(const FinSetMap& f, Elem t) const override {
    if (f.cod_size > kMaxBits) throw BoundError("vecF2 on " + elem(f.cod_size) + " elements");
    Elem out = 0;
    for_each_bit(t, [&](Elem i) { out ^= Elem{1} << f(i); });
    return out;
  }
  Elem bind(Elem, Elem t, const std::vector<Elem>& f, Elem) const override {
    Elem out = 0;
    for_each_bit(t, [&](Elem i) { out ^= f[i]; });
    return out;
  }
  std::vector<Operation> operations() const override { return {{"zero", 0, 0}, {"plus", 2, 3}}; }
};

class GSet final : public CatalogueMonad {
 public:
  explicit GSet(FinGroup g) : g_(std::move(g)) {}
  const FinGroup& group() const { return g_; }
  std::string id() const override { return "gset:" + g_.name; }
  Elem size(Elem n) const override { return g_.order() * n; }
  Elem eta(Elem, Elem i) const override { return i; }
  Elem fmap(const FinSetMap& f, Elem t) const override {
    return (t / f.dom_size) * f.cod_size + f(t % f.dom_size);
  }
  Elem bind(Elem n, Elem t, const std::vector<Elem>& f, Elem m) const override {
    const Elem g = t / n;
    const Elem img = f[t % n];
    return g_.mult[g][img / m] * m + img % m;
  }
  std::vector<Operation> operations() const override {
    std::vector<Operation> ops;
    for (std::size_t g = 1; g < g_.order(); ++g) ops.push_back({"act" + std::to_string(g), 1, g});
    return ops;
  }

 private:
  FinGroup g_;
};

// Union-find with path compression.
class Partition {
 public:
  explicit Partition(Elem n) : parent_(iota(n)) {}
  Elem find(Elem x) {
    Elem root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) x = std::exchange(parent_[x], root);
    return root;
  }
  bool unite(Elem a, Elem b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Elem> parent_;
};

}  // namespace

void validate_map(const FinSetMap& f) {
  if (f.table.size() != f.dom_size)
    throw StructuralError("map table has " + elem(f.table.size()) + " entries, expected " + elem(f.dom_size));
  for (Elem i = 0; i < f.dom_size; ++i)
    if (f.table[i] >= f.cod_size)
      throw StructuralError("map sends " + elem(i) + " to " + elem(f.table[i]) + ", outside " + elem(f.cod_size));
}

FinSetMap identity_map(Elem n) { return {n, n, iota(n)}; }

FinSetMap compose(const FinSetMap& g, const FinSetMap& f) {
  if (f.cod_size != g.dom_size) throw DomainError("maps are not composable");
  FinSetMap out{f.dom_size, g.cod_size, {}};
  for (Elem x : f.table) out.table.push_back(g(x));
  return out;
}

FinGroup make_group(std::string name, std::vector<std::vector<std::size_t>> mult) {
  const std::size_t n = mult.size();
  if (n == 0) throw StructuralError("group " + name + " is empty");
  for (const auto& row : mult) {
    if (row.size() != n) throw StructuralError("group " + name + " table is not square");
    for (auto x : row)
      if (x >= n) throw StructuralError("group " + name + " table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[0][a] != a || mult[a][0] != a) throw StructuralError("element 0 of " + name + " is not a unit");
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      if (mult[a][b] == 0 && mult[b][a] == 0) has_inverse = true;
      for (std::size_t c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]])
          throw StructuralError("group " + name + " is not associative");
    }
    if (!has_inverse) throw StructuralError("element " + std::to_string(a) + " of " + name + " has no inverse");
  }
  return {std::move(name), std::move(mult)};
}

FinGroup named_group(std::string_view name) {
  auto cyclic = [](std::size_t n) {
    std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) m[a][b] = (a + b) % n;
    return m;
  };
  if (name == "Z1") return make_group("Z1", cyclic(1));
  if (name == "Z2") return make_group("Z2", cyclic(2));
  if (name == "Z3") return make_group("Z3", cyclic(3));
  if (name == "S3") {
    // Permutations of {0,1,2} in a fixed order; composition (a b)(x) = a(b(x)).
    const std::vector<std::array<int, 3>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::vector<std::size_t>> m(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
      for (std::size_t b = 0; b < 6; ++b) {
        std::array<int, 3> ab{};
        for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
        m[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
      }
    return make_group("S3", m);
  }
  throw DomainError("unknown group " + std::string(name));
}

Elem CatalogueMonad::mu(Elem n, Elem tt) const {
  const Elem tn = size(n);
  std::vector<Elem> id(tn);
  std::iota(id.begin(), id.end(), Elem{0});
  return bind(tn, tt, id, n);
}

MonadPtr maybe_monad() { return std::make_shared<Maybe>(); }
MonadPtr powerset_monad() { return std::make_shared<Powerset>(); }
MonadPtr gset_monad(FinGroup g) { return std::make_shared<GSet>(std::move(g)); }
MonadPtr vecf2_monad() { return std::make_shared<VecF2>(); }

MonadPtr instantiate(std::string_view id) {
  if (id == "maybe") return maybe_monad();
  if (id == "powerset") return powerset_monad();
  if (id == "vecF2") return vecf2_monad();
  if (id.substr(0, 5) == "gset:") return gset_monad(named_group(id.substr(5)));
  throw DomainError("unknown catalogue monad " + std::string(id));
}

ValidationReport monad_law_spotcheck(const CatalogueMonad& m, const std::vector<Elem>& sizes, Elem limit) {
  ValidationReport report;
  for (Elem n : sizes) {
    const Elem s1 = m.size(n);
    const Elem s2 = m.size(s1);
    const Elem s3 = m.size(s2);
    if (s3 > limit) throw BoundError(m.id() + " at size " + elem(n) + " needs " + elem(s3) + " elements");
    const std::string at = m.id() + " at size " + elem(n) + ", element ";
    FinSetMap eta_n{n, s1, {}};
    for (Elem i = 0; i < n; ++i) eta_n.table.push_back(m.eta(n, i));
    FinSetMap mu_n{s2, s1, {}};
    for (Elem tt = 0; tt < s2; ++tt) mu_n.table.push_back(m.mu(n, tt));
    for (Elem t = 0; t < s1; ++t) {
      if (mu_n(m.eta(s1, t)) != t) report.law("left-unit", at + elem(t));
      if (mu_n(m.fmap(eta_n, t)) != t) report.law("right-unit", at + elem(t));
    }
    for (Elem ttt = 0; ttt < s3; ++ttt) {
      if (mu_n(m.mu(s1, ttt)) != mu_n(m.fmap(mu_n, ttt))) report.law("associativity", at + elem(ttt));
    }
  }
  return report;
}

FinAlgebra FinAlgebra::from_table(MonadPtr m, Elem carrier, std::vector<Elem> structure) {
  const Elem tn = m->size(carrier);
  if (structure.size() != tn)
    throw StructuralError("structure has " + elem(structure.size()) + " entries, expected " + elem(tn));
  for (Elem x : structure)
    if (x >= carrier) throw StructuralError("structure value " + elem(x) + " outside the carrier");
  return FinAlgebra(std::move(m), carrier, std::move(structure), std::nullopt);
}

FinAlgebra FinAlgebra::free(MonadPtr m, Elem k) {
  const Elem carrier = m->size(k);
  return FinAlgebra(std::move(m), carrier, {}, k);
}

Elem FinAlgebra::act(Elem t) const { return free_on_ ? m_->mu(*free_on_, t) : table_[t]; }

Elem FinAlgebra::evaluate(Elem r, Elem term, const std::vector<Elem>& g) const {
  if (free_on_) return m_->bind(r, term, g, *free_on_);
  return table_[m_->fmap({r, carrier_, g}, term)];
}

std::vector<Elem> FinAlgebra::table(Elem limit) const {
  if (!free_on_) return table_;
  const Elem tn = m_->size(carrier_);
  if (tn > limit) throw BoundError("structure table of " + elem(tn) + " entries");
  std::vector<Elem> out(tn);
  for (Elem t = 0; t < tn; ++t) out[t] = act(t);
  return out;
}

ValidationReport validate_algebra(const FinAlgebra& a) {
  ValidationReport report;
  const auto& m = *a.monad();
  const Elem n = a.carrier();
  for (Elem i = 0; i < n; ++i)
    if (a.act(m.eta(n, i)) != i) report.law("unit", "structure o eta != id at " + elem(i));
  const Elem s1 = m.size(n);
  const bool small = s1 <= 16 || m.id() == "maybe" || m.id().rfind("gset:", 0) == 0;
  if (small && m.size(s1) <= (Elem{1} << 16)) {
    const FinSetMap lambda{s1, n, a.table()};
    for (Elem tt = 0; tt < m.size(s1); ++tt)
      if (a.act(m.mu(n, tt)) != a.act(m.fmap(lambda, tt)))
        report.law("associativity", "structure o mu != structure o T(structure) at " + elem(tt));
    return report;
  }
  if (m.id() != "powerset" && m.id() != "vecF2")
    throw BoundError("algebra on " + elem(n) + " elements is too large to check");
  const bool idempotent = m.id() == "powerset";
  const Elem unit = a.evaluate(0, 0, {});
  auto op = [&](Elem x, Elem y) { return a.evaluate(2, 3, {x, y}); };
  for (Elem x = 0; x < n; ++x) {
    if (op(unit, x) != x) report.law("unit", "bottom is not neutral at " + elem(x));
    if (idempotent ? op(x, x) != x : op(x, x) != unit) report.law("associativity", "x + x at " + elem(x));
    for (Elem y = 0; y < n; ++y) {
      if (op(x, y) != op(y, x)) report.law("associativity", "not commutative at " + elem(x) + ", " + elem(y));
      for (Elem z = 0; z < n; ++z)
        if (op(op(x, y), z) != op(x, op(y, z)))
          report.law("associativity", "binary operation at " + elem(x) + ", " + elem(y) + ", " + elem(z));
    }
  }
  for (Elem t = 0; t < s1; ++t) {
    Elem folded = unit;
    for_each_bit(t, [&](Elem i) { folded = op(folded, i); });
    if (a.act(t) != folded) report.law("associativity", "structure is not the fold at " + elem(t));
  }
  return report;
}

bool is_algebra_map(const FinAlgebra& a, const FinAlgebra& b, const FinSetMap& f, Elem limit) {
  if (f.dom_size != a.carrier() || f.cod_size != b.carrier()) return false;
  const Elem tn = a.monad()->size(a.carrier());
  if (tn > limit) throw BoundError("algebra map check over " + elem(tn) + " elements");
  for (Elem t = 0; t < tn; ++t)
    if (b.act(a.monad()->fmap(f, t)) != f(a.act(t))) return false;
  return true;
}

FinSetMap free_extension(const FinAlgebra& b, Elem k, const std::vector<Elem>& g) {
  if (g.size() != k) throw DomainError("generator image has the wrong size");
  const Elem tk = b.monad()->size(k);
  FinSetMap out{tk, b.carrier(), {}};
  for (Elem t = 0; t < tk; ++t) out.table.push_back(b.evaluate(k, t, g));
  return out;
}

namespace {

std::vector<std::vector<Elem>> maybe_algebras(Elem n) {
  std::vector<std::vector<Elem>> out;
  for (Elem p = 0; p < n; ++p) {
    auto t = iota(n);
    t.push_back(p);
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<std::vector<Elem>> gset_algebras(const FinGroup& g, Elem n) {
  const std::size_t order = g.order();
  std::vector<std::vector<Elem>> perms;
  auto p = iota(n);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::size_t> rho(order, 0);  // index into perms; perms[0] is the identity
  std::vector<std::vector<Elem>> out;
  auto consistent = [&](std::size_t upto) {
    for (std::size_t a = 0; a <= upto; ++a)
      for (std::size_t b = 0; b <= upto; ++b) {
        const std::size_t ab = g.mult[a][b];
        if (ab > upto) continue;
        for (Elem x = 0; x < n; ++x)
          if (perms[rho[a]][perms[rho[b]][x]] != perms[rho[ab]][x]) return false;
      }
    return true;
  };
  std::function<void(std::size_t)> assign = [&](std::size_t k) {
    if (k == order) {
      std::vector<Elem> t(order * n);
      for (std::size_t a = 0; a < order; ++a)
        for (Elem x = 0; x < n; ++x) t[a * n + x] = perms[rho[a]][x];
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t c = 0; c < perms.size(); ++c) {
      rho[k] = c;
      if (consistent(k)) assign(k + 1);
    }
  };
  if (n == 0) {
    out.push_back({});
    return out;
  }
  rho[0] = 0;
  assign(1);
  return out;
}

std::vector<Elem> fold_table(Elem n, Elem unit, const std::vector<std::vector<Elem>>& op) {
  std::vector<Elem> t(pow2(n));
  for (Elem s = 0; s < t.size(); ++s) {
    Elem acc = unit;
    for_each_bit(s, [&](Elem i) { acc = op[acc][i]; });
    t[s] = acc;
  }
  return t;
}

std::vector<std::vector<Elem>> semilattice_algebras(Elem n) {
  std::vector<std::vector<Elem>> out;
  for (Elem bottom = 0; bottom < n; ++bottom) {
    std::vector<std::vector<Elem>> join(n, std::vector<Elem>(n, 0));
    std::vector<std::pair<Elem, Elem>> free_pairs;
    for (Elem x = 0; x < n; ++x) {
      join[x][x] = x;
      join[bottom][x] = join[x][bottom] = x;
      for (Elem y = x + 1; y < n; ++y)
        if (x != bottom && y != bottom) free_pairs.push_back({x, y});
    }
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
      if (k == free_pairs.size()) {
        for (Elem a = 0; a < n; ++a)
          for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
              if (join[join[a][b]][c] != join[a][join[b][c]]) return;
        out.push_back(fold_table(n, bottom, join));
        return;
      }
      const auto [x, y] = free_pairs[k];
      for (Elem z = 0; z < n; ++z) {
        if (z == bottom) continue;
        join[x][y] = join[y][x] = z;
        assign(k + 1);
      }
    };
    assign(0);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Elem>> vector_space_algebras(Elem n) {
  std::vector<std::vector<Elem>> out;
  if (n == 0 || !std::has_single_bit(n)) return out;
  std::set<std::vector<Elem>> seen;
  auto label = iota(n);  // label[v] = element carrying the vector v
  do {
    std::vector<std::vector<Elem>> plus(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) plus[label[a]][label[b]] = label[a ^ b];
    auto t = fold_table(n, label[0], plus);
    if (seen.insert(t).second) out.push_back(std::move(t));
  } while (std::next_permutation(label.begin(), label.end()));
  return out;
}

}  // namespace

std::vector<FinAlgebra> enumerate_algebras(const MonadPtr& m, Elem n) {
  std::vector<std::vector<Elem>> tables;
  const std::string id = m->id();
  if (id == "maybe") {
    tables = maybe_algebras(n);
  } else if (id == "powerset") {
    tables = semilattice_algebras(n);
  } else if (id == "vecF2") {
    tables = vector_space_algebras(n);
  } else if (const auto* g = dynamic_cast<const GSet*>(m.get())) {
    tables = gset_algebras(g->group(), n);
  } else {
    throw DomainError("no algebra enumeration for " + id);
  }
  std::vector<FinAlgebra> out;
  for (auto& t : tables) out.push_back(FinAlgebra::from_table(m, n, std::move(t)));
  return out;
}

Quotient congruence_coequalizer(const FinAlgebra& b, const FinSetMap& f, const FinSetMap& g, Elem limit) {
  if (f.dom_size != g.dom_size || f.cod_size != g.cod_size || f.cod_size != b.carrier())
    throw DomainError("maps are not parallel into the algebra");
  validate_map(f);
  validate_map(g);
  const auto& m = *b.monad();
  const Elem n = b.carrier();
  const Elem tb = m.size(n);
  if (tb > limit) throw BoundError("quotient needs " + elem(tb) + " elements of T(" + elem(n) + ")");

  Partition part(n);
  std::vector<std::pair<Elem, Elem>> work;
  for (Elem a = 0; a < f.dom_size; ++a)
    if (part.unite(f(a), g(a))) work.push_back({f(a), g(a)});

  const auto ops = m.operations();
  std::vector<Elem> args;
  while (!work.empty()) {
    const auto [x, y] = work.back();
    work.pop_back();
    for (const auto& op : ops) {
      if (op.arity == 0) continue;
      args.assign(op.arity, 0);
      Elem others = 1;
      for (std::size_t i = 1; i < op.arity; ++i) others *= n;
      for (std::size_t pos = 0; pos < op.arity; ++pos) {
        for (Elem rest = 0; rest < others; ++rest) {
          Elem r = rest;
          for (std::size_t i = 0; i < op.arity; ++i) {
            if (i == pos) continue;
            args[i] = r % n;
            r /= n;
          }
          args[pos] = x;
          const Elem fx = b.evaluate(op.arity, op.term, args);
          args[pos] = y;
          const Elem fy = b.evaluate(op.arity, op.term, args);
          if (part.unite(fx, fy)) work.push_back({fx, fy});
        }
      }
    }
  }

  std::vector<Elem> class_of(n);
  std::vector<Elem> id_of_root(n, n);
  Elem q = 0;
  for (Elem x = 0; x < n; ++x) {
    const Elem root = part.find(x);
    if (id_of_root[root] == n) id_of_root[root] = q++;
    class_of[x] = id_of_root[root];
  }
  const FinSetMap proj{n, q, class_of};

  const Elem tq = m.size(q);
  std::vector<Elem> structure(tq, q);
  for (Elem t = 0; t < tb; ++t) {
    const Elem image = m.fmap(proj, t);
    const Elem value = class_of[b.act(t)];
    if (structure[image] == q) {
      structure[image] = value;
    } else if (structure[image] != value) {
      throw Error("quotient structure is not well defined at " + elem(image));
    }
  }
  for (Elem t = 0; t < tq; ++t)
    if (structure[t] == q) throw Error("quotient structure is undefined at " + elem(t));
  return {FinAlgebra::from_table(b.monad(), q, std::move(structure)), proj, class_of};
}

namespace {

Elem identity_component(const MonadMorphism&, Elem, Elem t) { return t; }

Elem embed_component(const MonadMorphism&, Elem n, Elem t) { return t == n ? 0 : Elem{1} << t; }

Elem forget_component(const MonadMorphism& phi, Elem n, Elem t) { return phi.s->eta(n, t % n); }

}  // namespace

MonadMorphism registry_morphism(std::string_view name, const MonadPtr& t, const MonadPtr& s) {
  if (name == "id") {
    if (t->id() != s->id()) throw DomainError("id needs equal monads, got " + t->id() + " and " + s->id());
    return {"id", t, s, &identity_component};
  }
  if (name == "embed") {
    if (t->id() != "maybe" || (s->id() != "powerset" && s->id() != "vecF2"))
      throw DomainError("embed goes from maybe to powerset or vecF2");
    return {"embed", t, s, &embed_component};
  }
  if (name == "forget") {
    if (t->id().rfind("gset:", 0) != 0) throw DomainError("forget starts at a gset monad");
    return {"forget", t, s, &forget_component};
  }
  throw DomainError("unknown monad morphism " + std::string(name));
}

ValidationReport monad_morphism_spotcheck(const MonadMorphism& phi, const std::vector<Elem>& sizes, Elem limit) {
  ValidationReport report;
  const auto& t = *phi.t;
  const auto& s = *phi.s;
  for (Elem n : sizes) {
    const std::string at = phi.name + " at size " + elem(n);
    for (Elem i = 0; i < n; ++i)
      if (phi(n, t.eta(n, i)) != s.eta(n, i)) report.law("eta-triangle", at + ", element " + elem(i));
    const Elem tn = t.size(n);
    const Elem ttn = t.size(tn);
    if (ttn > limit) throw BoundError(at + " needs " + elem(ttn) + " elements");
    std::vector<Elem> phi_n(tn);
    for (Elem x = 0; x < tn; ++x) phi_n[x] = phi(n, x);
    for (Elem tt = 0; tt < ttn; ++tt) {
      const Elem lhs = phi(n, t.mu(n, tt));
      const Elem rhs = s.bind(tn, phi(tn, tt), phi_n, n);
      if (lhs != rhs) report.law("mu-square", at + ", element " + elem(tt));
    }
    for (Elem m : sizes) {
      Elem count = 1;
      for (Elem i = 0; i < n && count <= limit; ++i) count *= m;
      if (count * tn > limit) continue;
      for (Elem code = 0; code < count; ++code) {
        FinSetMap f{n, m, {}};
        Elem c = code;
        for (Elem i = 0; i < n; ++i, c /= m) f.table.push_back(c % m);
        for (Elem x = 0; x < tn; ++x)
          if (phi(m, t.fmap(f, x)) != s.fmap(f, phi(n, x))) {
            report.law("naturality", at + " -> " + elem(m) + ", element " + elem(x));
            break;
          }
      }
    }
  }
  return report;
}

FinEnvelope envelope_finset(const MonadMorphism& phi, const FinAlgebra& x, const Bounds& bounds) {
  if (x.monad()->id() != phi.t->id())
    throw DomainError("algebra is over " + x.monad()->id() + ", not " + phi.t->id());
  const auto& t = *phi.t;
  const auto& s = *phi.s;
  const Elem n = x.carrier();
  if (n > bounds.max_carrier) throw BoundError("carrier " + elem(n) + " exceeds max_carrier " + elem(bounds.max_carrier));
  const Elem tn = t.size(n);
  if (tn > bounds.max_carrier) throw BoundError("T(x) has " + elem(tn) + " elements, above max_carrier");
  const Elem sn = s.size(n);
  const Elem stn = s.size(tn);
  if (stn > bounds.max_elements || sn > bounds.max_elements)
    throw BoundError("S(T(x)) has " + elem(stn) + " elements, above max_elements " + elem(bounds.max_elements));

  const auto lambda = x.table(bounds.max_elements);
  std::vector<Elem> phi_n(tn);
  for (Elem a = 0; a < tn; ++a) phi_n[a] = phi(n, a);
  const FinSetMap lambda_map{tn, n, lambda};
  FinSetMap eta_t{n, tn, {}};
  for (Elem i = 0; i < n; ++i) eta_t.table.push_back(t.eta(n, i));

  FinEnvelope env{n, stn, sn, {stn, sn, {}}, {stn, sn, {}}, {sn, stn, {}},
                  {FinAlgebra::free(phi.s, 0), {}, {}}};
  env.u.table.resize(stn);
  env.v.table.resize(stn);
  for (Elem w = 0; w < stn; ++w) {
    env.u.table[w] = s.bind(tn, w, phi_n, n);
    env.v.table[w] = s.fmap(lambda_map, w);
  }
  env.section.table.resize(sn);
  for (Elem z = 0; z < sn; ++z) env.section.table[z] = s.fmap(eta_t, z);
  for (Elem z = 0; z < sn; ++z) {
    if (env.u(env.section(z)) != z) throw RelationError("u o section != id at " + elem(z));
    if (env.v(env.section(z)) != z) throw RelationError("v o section != id at " + elem(z));
  }
  env.coequalizer = congruence_coequalizer(FinAlgebra::free(phi.s, n), env.u, env.v, bounds.max_elements);
  return env;
}

ProbeReport pbw_probe(const MonadMorphism& phi, Elem bound, const Bounds& bounds) {
  ProbeReport out;
  out.bound = bound;
  for (Elem n = 0; n <= bound; ++n) {
    std::vector<Elem> seen;
    std::optional<std::pair<std::vector<Elem>, Elem>> first;
    for (const auto& alg : enumerate_algebras(phi.t, n)) {
      ++out.algebras;
      const Elem size = envelope_finset(phi, alg, bounds).size();
      if (!first) first = std::pair{alg.table(), size};
      if (std::find(seen.begin(), seen.end(), size) == seen.end()) seen.push_back(size);
      if (!out.witness && size != first->second)
        out.witness = ProbeWitness{n, first->first, alg.table(), first->second, size};
    }
    std::sort(seen.begin(), seen.end());
    out.sizes.push_back(std::move(seen));
  }
  out.refuted = out.witness.has_value();
  return out;
}

}  // namespace pbw::finset
