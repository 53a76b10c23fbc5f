#include "lvdual/systems.hpp"

#include <algorithm>
#include <map>

#include "lvdual/error.hpp"
#include "odometer.hpp"

namespace lvd {

namespace {

Witness at(const System& s, std::size_t x, std::initializer_list<std::pair<const char*, Index>> elems) {
  Witness w{{"point", s.points[x]}};
  for (auto [k, a] : elems) w.emplace_back(k, s.algebra->element_name(a));
  return w;
}

void add_values(const Lattice& l, Witness& w, Value expected, Value actual) {
  w.emplace_back("expected", l.element_name(expected));
  w.emplace_back("actual", l.element_name(actual));
}

std::vector<Value> column(const System& s, Index a) {
  std::vector<Value> out(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) out[x] = s(x, a);
  return out;
}

}  // namespace

SystemPtr make_system(std::vector<std::string> points, AlgebraPtr algebra, std::vector<Value> sat,
                      std::optional<Relation> relation) {
  if (!algebra) throw Error(ErrorKind::SchemaError, "system without an algebra");
  if (sat.size() != points.size() * algebra->size()) {
    throw Error(ErrorKind::SchemaError, "satisfaction table has the wrong size");
  }
  for (auto v : sat) {
    if (v >= algebra->lattice().size()) throw Error(ErrorKind::SchemaError, "satisfaction value outside the lattice");
  }
  if (relation && relation->size() != points.size()) {
    throw Error(ErrorKind::SchemaError, "relation size differs from point count");
  }
  auto sorted = points;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::SchemaError, "duplicate point name");
  }
  return std::make_shared<const System>(
      System{std::move(points), std::move(algebra), std::move(sat), std::move(relation)});
}

SystemPtr function_system(const AlgebraPtr& algebra, std::optional<Relation> relation) {
  const auto* fp = algebra->functional();
  if (!fp) throw Error(ErrorKind::PreconditionViolation, "function_system needs a functional algebra");
  const auto k = fp->points.size();
  std::vector<Value> sat(k * algebra->size());
  for (std::size_t x = 0; x < k; ++x) {
    for (Index a = 0; a < algebra->size(); ++a) sat[x * algebra->size() + a] = fp->values[a][x];
  }
  return make_system(fp->points, algebra, std::move(sat), std::move(relation));
}

bool same_system(const System& a, const System& b) {
  if (&a == &b) return true;
  if (a.points != b.points || a.sat != b.sat || a.relation != b.relation) return false;
  if (a.algebra == b.algebra) return true;
  if (!same_lattice(a.lattice(), b.lattice())) return false;
  if (a.algebra->element_names() != b.algebra->element_names()) return false;
  auto ta = a.algebra->tables(), tb = b.algebra->tables();
  return ta.meet == tb.meet && ta.join == tb.join && ta.imp == tb.imp && ta.truth == tb.truth && ta.box == tb.box;
}

Verdict validate_system(const System& s) {
  const auto& A = *s.algebra;
  const auto& l = s.lattice();
  const auto n = A.size();
  std::vector<Verdict> parts;

  auto run = [&](const char* name, auto&& body) {
    std::optional<Witness> w = body();
    parts.push_back(w ? Verdict::fail(name, std::move(*w)) : Verdict::pass(name));
  };

  run("sat.bottom_top", [&]() -> std::optional<Witness> {
    for (std::size_t x = 0; x < s.size(); ++x) {
      if (s(x, A.bottom()) != l.bottom()) {
        auto w = at(s, x, {{"element", A.bottom()}});
        add_values(l, w, l.bottom(), s(x, A.bottom()));
        return w;
      }
      if (s(x, A.top()) != l.top()) {
        auto w = at(s, x, {{"element", A.top()}});
        add_values(l, w, l.top(), s(x, A.top()));
        return w;
      }
    }
    return std::nullopt;
  });

  run("sat.join_meet", [&]() -> std::optional<Witness> {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          if (s(x, A.join(a, b)) != l.join(s(x, a), s(x, b))) {
            auto w = at(s, x, {{"a", a}, {"b", b}});
            w.emplace_back("operation", "join");
            add_values(l, w, l.join(s(x, a), s(x, b)), s(x, A.join(a, b)));
            return w;
          }
          if (s(x, A.meet(a, b)) != l.meet(s(x, a), s(x, b))) {
            auto w = at(s, x, {{"a", a}, {"b", b}});
            w.emplace_back("operation", "meet");
            add_values(l, w, l.meet(s(x, a), s(x, b)), s(x, A.meet(a, b)));
            return w;
          }
        }
      }
    }
    return std::nullopt;
  });

  run("sat.imp", [&]() -> std::optional<Witness> {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          if (s(x, A.imp(a, b)) != l.imp(s(x, a), s(x, b))) {
            auto w = at(s, x, {{"a", a}, {"b", b}});
            add_values(l, w, l.imp(s(x, a), s(x, b)), s(x, A.imp(a, b)));
            return w;
          }
        }
      }
    }
    return std::nullopt;
  });

  run("sat.truth", [&]() -> std::optional<Witness> {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t r = 0; r < l.size(); ++r) {
        auto rv = static_cast<Value>(r);
        for (Index a = 0; a < n; ++a) {
          if (s(x, A.truth(rv, a)) != l.truth(rv, s(x, a))) {
            auto w = at(s, x, {{"element", a}});
            w.emplace_back("r", l.element_name(rv));
            add_values(l, w, l.truth(rv, s(x, a)), s(x, A.truth(rv, a)));
            return w;
          }
        }
      }
    }
    return std::nullopt;
  });

  run("separation.points", [&]() -> std::optional<Witness> {
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = x + 1; y < s.size(); ++y) {
        bool differ = false;
        for (Index a = 0; a < n && !differ; ++a) differ = s(x, a) != s(y, a);
        if (!differ) return Witness{{"x1", s.points[x]}, {"x2", s.points[y]}};
      }
    }
    return std::nullopt;
  });

  // Not among the usual system axioms; without it ext is not injective.
  run("separation.elements", [&]() -> std::optional<Witness> {
    std::map<std::vector<Value>, Index> seen;
    for (Index a = 0; a < n; ++a) {
      auto [it, fresh] = seen.emplace(column(s, a), a);
      if (!fresh) {
        return Witness{{"a1", A.element_name(it->second)}, {"a2", A.element_name(a)}};
      }
    }
    return std::nullopt;
  });

  if (s.relation) {
    run("sat.box", [&]() -> std::optional<Witness> {
      if (!A.is_modal()) return Witness{{"reason", "relational system over an algebra without box"}};
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (Index a = 0; a < n; ++a) {
          Value expected = l.top();
          for (auto y : s.relation->successors(x)) expected = l.meet(expected, s(y, a));
          if (s(x, A.box(a)) != expected) {
            auto w = at(s, x, {{"element", a}});
            add_values(l, w, expected, s(x, A.box(a)));
            return w;
          }
        }
      }
      return std::nullopt;
    });
  }
  return combine(s.relation ? "relational_system" : "boolean_system", parts);
}

Verdict is_continuous(const SystemMap& m) {
  const auto& s1 = *m.source;
  const auto& s2 = *m.target;
  const char* name = "continuous_map";
  if (m.point_map.size() != s1.size() || m.algebra_map.size() != s2.algebra->size()) {
    return Verdict::fail(name, {{"reason", "map tables have the wrong size"}});
  }
  for (auto y : m.point_map) {
    if (y >= s2.size()) return Verdict::fail(name, {{"reason", "point image out of range"}});
  }
  for (auto a : m.algebra_map) {
    if (a >= s1.algebra->size()) return Verdict::fail(name, {{"reason", "algebra image out of range"}});
  }
  bool modal = s1.is_relational() && s2.is_relational();
  auto hom = is_homomorphism(m.algebra_map, *s2.algebra, *s1.algebra, modal);
  if (!hom) return combine(name, {hom});
  const auto& l = s1.lattice();
  for (std::size_t x = 0; x < s1.size(); ++x) {
    for (Index b = 0; b < s2.algebra->size(); ++b) {
      Value lhs = s1(x, m.algebra_map[b]);
      Value rhs = s2(m.point_map[x], b);
      if (lhs != rhs) {
        return Verdict::fail(name, {{"failed_check", "continuity"},
                                    {"point", s1.points[x]},
                                    {"element", s2.algebra->element_name(b)},
                                    {"source_value", l.element_name(lhs)},
                                    {"target_value", l.element_name(rhs)}});
      }
    }
  }
  return Verdict::pass(name);
}

SystemMap compose(const SystemMap& m2, const SystemMap& m1) {
  if (!same_system(*m1.target, *m2.source)) {
    throw Error(ErrorKind::TypeMismatch, "composed system maps do not meet");
  }
  SystemMap out{m1.source, m2.target, {}, {}};
  out.point_map.reserve(m1.point_map.size());
  for (auto x : m1.point_map) out.point_map.push_back(m2.point_map.at(x));
  out.algebra_map.reserve(m2.algebra_map.size());
  for (auto c : m2.algebra_map) out.algebra_map.push_back(m1.algebra_map.at(c));
  return out;
}

SystemMap identity_map(const SystemPtr& system) {
  SystemMap out{system, system, {}, {}};
  for (std::size_t x = 0; x < system->size(); ++x) out.point_map.push_back(x);
  for (Index a = 0; a < system->algebra->size(); ++a) out.algebra_map.push_back(a);
  return out;
}

std::vector<SystemMap> enumerate_system_maps(const SystemPtr& s1, const SystemPtr& s2, std::size_t cap) {
  const auto n1 = s1->size(), n2 = s2->size();
  std::vector<SystemMap> out;
  if (n1 > 0 && n2 == 0) return out;
  double count = 1;
  for (std::size_t i = 0; i < n1; ++i) count *= static_cast<double>(n2);
  if (count > static_cast<double>(cap)) {
    throw Error(ErrorKind::ClosureTooLarge, "too many candidate point maps");
  }
  std::map<std::vector<Value>, std::vector<Index>> by_column;
  for (Index a = 0; a < s1->algebra->size(); ++a) by_column[column(*s1, a)].push_back(a);

  const auto m = s2->algebra->size();
  std::vector<std::size_t> psi1(n1, 0);
  while (true) {
    // ψ₂(b) must have column x ↦ ⊨₂(ψ₁(x), b).
    std::vector<const std::vector<Index>*> choices(m, nullptr);
    bool ok = true;
    for (Index b = 0; b < m && ok; ++b) {
      std::vector<Value> want(n1);
      for (std::size_t x = 0; x < n1; ++x) want[x] = (*s2)(psi1[x], b);
      auto it = by_column.find(want);
      if (it == by_column.end()) ok = false;
      else choices[b] = &it->second;
    }
    if (ok) {
      std::vector<std::size_t> pick(m, 0), radix(m);
      for (Index b = 0; b < m; ++b) radix[b] = choices[b]->size();
      do {
        SystemMap cand{s1, s2, psi1, std::vector<Index>(m)};
        for (Index b = 0; b < m; ++b) cand.algebra_map[b] = (*choices[b])[pick[b]];
        if (is_continuous(cand)) out.push_back(std::move(cand));
      } while (detail::advance(pick, radix));
    }
    std::vector<std::size_t> radix(n1, n2);
    if (!detail::advance(psi1, radix)) break;
  }
  return out;
}

Function extent(const System& system, Index a) { return column(system, a); }

AlgebraPtr extent_algebra(const System& system) {
  std::vector<Function> gens;
  for (Index a = 0; a < system.algebra->size(); ++a) gens.push_back(extent(system, a));
  return functional_algebra(system.algebra->lattice_ptr(), system.points, gens, system.relation);
}

}  // namespace lvd
