#include "lvdual/functors.hpp"

#include <algorithm>
#include <map>

#include "lvdual/error.hpp"
#include "lvdual/spectra.hpp"

namespace lvd {

namespace {

constexpr std::pair<FunctorName, std::string_view> kFunctorNames[] = {
    {FunctorName::Ext, "Ext"},      {FunctorName::P, "P"},          {FunctorName::Q, "Q"},
    {FunctorName::R, "R"},          {FunctorName::ExtStar, "Ext*"}, {FunctorName::PStar, "P*"},
    {FunctorName::QStar, "Q*"},     {FunctorName::RStar, "R*"},
};

constexpr std::pair<Adjunction, std::string_view> kAdjunctionNames[] = {
    {Adjunction::ExtP, "Ext-P"}, {Adjunction::QR, "Q-R"}, {Adjunction::ExtPStar, "Ext*-P*"},
    {Adjunction::QRStar, "Q*-R*"}};

constexpr std::pair<Transformation, std::string_view> kTransformationNames[] = {
    {Transformation::Xi, "xi"},           {Transformation::Eta, "eta"},
    {Transformation::XiStar, "xi*"},      {Transformation::EtaStar, "eta*"},
    {Transformation::UnitAlg, "unit_alg"}, {Transformation::CounitAlg, "counit_alg"}};

template <class E, std::size_t N>
std::string_view name_of(const std::pair<E, std::string_view> (&table)[N], E e) {
  for (const auto& [k, v] : table) {
    if (k == e) return v;
  }
  return "?";
}

template <class E, std::size_t N>
std::optional<E> parse_name(const std::pair<E, std::string_view> (&table)[N], std::string_view text) {
  for (const auto& [k, v] : table) {
    if (v == text) return k;
  }
  return std::nullopt;
}

template <class T>
bool injective(const std::vector<T>& map, std::size_t codomain) {
  if (map.size() != codomain) return false;
  std::vector<bool> hit(codomain, false);
  for (auto y : map) {
    if (y >= codomain || hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

std::vector<Value> row(const System& s, std::size_t x) {
  const auto n = s.algebra->size();
  return {s.sat.begin() + static_cast<std::ptrdiff_t>(x * n), s.sat.begin() + static_cast<std::ptrdiff_t>((x + 1) * n)};
}

std::vector<std::vector<bool>> extent_phi(const System& s, const SubalgebraFamily& family) {
  std::vector<std::vector<bool>> phi(family.size(), std::vector<bool>(s.size(), false));
  for (std::size_t m = 0; m < family.size(); ++m) {
    for (std::size_t x = 0; x < s.size(); ++x) {
      bool inside = true;
      for (Index a = 0; a < s.algebra->size() && inside; ++a) inside = family.contains(m, s(x, a));
      phi[m][x] = inside;
    }
  }
  return phi;
}

void require_valid_system(const System& s) {
  auto v = validate_system(s);
  if (!v) throw Error(ErrorKind::InvalidSystem, "invalid system: " + v.counterexample->front().second);
}

void require_valid_space(const Space& sp) {
  auto v = validate_space(sp);
  if (!v) throw Error(ErrorKind::InvalidSpace, "invalid space: " + v.counterexample->front().second);
}

SpacePtr ext_of(const SystemPtr& s, bool modal) { return modal ? ext_star(s, false) : ext_functor(s, false); }
SystemPtr p_of(const SpacePtr& sp, bool modal) { return modal ? p_star(sp, false) : p_functor(sp, false); }
SystemPtr r_of(const AlgebraPtr& a, bool modal) { return modal ? r_star(a, false) : r_functor(a, false); }

std::size_t world_index(const System& r, const std::vector<Value>& values) {
  for (std::size_t v = 0; v < r.size(); ++v) {
    if (row(r, v) == values) return v;
  }
  throw Error(ErrorKind::InvalidSystem, "valuation is not a homomorphism into the lattice");
}

}  // namespace

FunctorTag functor_tag(FunctorName name) {
  switch (name) {
    case FunctorName::Ext: return {name, Category::BSYM, Category::BS};
    case FunctorName::P: return {name, Category::BS, Category::BSYM};
    case FunctorName::Q: return {name, Category::BSYM, Category::VAop};
    case FunctorName::R: return {name, Category::VAop, Category::BSYM};
    case FunctorName::ExtStar: return {name, Category::RSYM, Category::RS};
    case FunctorName::PStar: return {name, Category::RS, Category::RSYM};
    case FunctorName::QStar: return {name, Category::RSYM, Category::MAop};
    case FunctorName::RStar: return {name, Category::MAop, Category::RSYM};
  }
  return {name, Category::BSYM, Category::BSYM};
}

std::string_view to_string(FunctorName name) { return name_of(kFunctorNames, name); }

std::string_view to_string(Category category) {
  switch (category) {
    case Category::BSYM: return "BSYM";
    case Category::BS: return "BS";
    case Category::VAop: return "VA-op";
    case Category::RSYM: return "RSYM";
    case Category::RS: return "RS";
    case Category::MAop: return "MA-op";
  }
  return "?";
}

std::optional<FunctorName> parse_functor_name(std::string_view text) { return parse_name(kFunctorNames, text); }

bool is_starred(FunctorName name) {
  return name == FunctorName::ExtStar || name == FunctorName::PStar || name == FunctorName::QStar ||
         name == FunctorName::RStar;
}

SpacePtr ext_functor(const SystemPtr& system, bool validate) {
  if (validate) require_valid_system(*system);
  SubalgebraFamily family(system->algebra->lattice_ptr());
  auto phi = extent_phi(*system, family);
  return make_space(system->algebra->lattice_ptr(), system->points, std::move(phi));
}

SpacePtr ext_star(const SystemPtr& system, bool validate) {
  if (!system->is_relational() || !system->algebra->is_modal()) {
    throw Error(ErrorKind::InvalidSystem, "Ext* needs a relational system");
  }
  if (validate) require_valid_system(*system);
  const auto& s = *system;
  const auto& l = s.lattice();
  const auto& A = *s.algebra;
  Relation rel(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      bool related = true;
      for (Index a = 0; a < A.size() && related; ++a) related = l.leq(s(x, A.box(a)), s(y, a));
      rel.set(x, y, related);
    }
  }
  SubalgebraFamily family(A.lattice_ptr());
  auto phi = extent_phi(s, family);
  return make_space(A.lattice_ptr(), s.points, std::move(phi), std::move(rel));
}

Relation ext_relation_quantified(const System& s) {
  const auto& l = s.lattice();
  const auto& A = *s.algebra;
  Relation rel(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      bool related = true;
      for (std::size_t r = 0; r < l.size() && related; ++r) {
        auto rv = static_cast<Value>(r);
        for (Index a = 0; a < A.size() && related; ++a) {
          if (l.leq(rv, s(x, A.box(a))) && !l.leq(rv, s(y, a))) related = false;
        }
      }
      rel.set(x, y, related);
    }
  }
  return rel;
}

SystemPtr p_functor(const SpacePtr& space, bool validate) {
  if (validate) require_valid_space(*space);
  auto c = cont(*space);
  return function_system(c);
}

SystemPtr p_star(const SpacePtr& space, bool validate) {
  if (!space->is_relational()) throw Error(ErrorKind::InvalidSpace, "P* needs a relational space");
  if (validate) require_valid_space(*space);
  auto c = cont(*space, true);
  return function_system(c, space->relation);
}

AlgebraPtr q_functor(const SystemPtr& system) { return system->algebra; }

SystemPtr r_functor(const AlgebraPtr& algebra, bool validate) {
  if (validate) {
    auto v = validate_vl(*algebra);
    if (!v) throw Error(ErrorKind::InvalidAlgebra, "not an ℓ-VL-algebra: " + v.counterexample->front().second);
  }
  std::vector<std::string> worlds;
  std::vector<Value> sat;
  for (const auto& h : spec(algebra)) {
    worlds.push_back("v" + std::to_string(worlds.size()));
    auto vals = lattice_values(h);
    sat.insert(sat.end(), vals.begin(), vals.end());
  }
  return make_system(std::move(worlds), algebra, std::move(sat));
}

SystemPtr r_star(const AlgebraPtr& algebra, bool validate) {
  if (!algebra->is_modal()) throw Error(ErrorKind::InvalidAlgebra, "R* needs an ℓ-ML-algebra");
  if (validate) {
    auto v = combine("ml_algebra", {validate_vl(*algebra), validate_ml(*algebra)});
    if (!v) throw Error(ErrorKind::InvalidAlgebra, "not an ℓ-ML-algebra: " + v.counterexample->front().second);
  }
  auto model = canonical_model(algebra);
  std::vector<std::string> worlds;
  std::vector<Value> sat;
  for (const auto& w : model.worlds) {
    worlds.push_back("v" + std::to_string(worlds.size()));
    sat.insert(sat.end(), w.begin(), w.end());
  }
  return make_system(std::move(worlds), algebra, std::move(sat), model.relation);
}

SpaceMap ext_arrow(const SystemMap& map, bool modal) {
  return SpaceMap{ext_of(map.source, modal), ext_of(map.target, modal), map.point_map};
}

SystemMap p_arrow(const SpaceMap& map, bool modal) {
  auto s1 = p_of(map.source, modal);
  auto s2 = p_of(map.target, modal);
  SystemMap out{s1, s2, map.map, {}};
  const auto& fp2 = *s2->algebra->functional();
  for (Index b = 0; b < s2->algebra->size(); ++b) {
    Function pulled(s1->size());
    for (std::size_t s = 0; s < s1->size(); ++s) pulled[s] = fp2.values[b][map.map.at(s)];
    auto a = s1->algebra->find_function(pulled);
    if (!a) throw Error(ErrorKind::PreconditionViolation, "v ∘ f leaves Cont: the map is not subspace-preserving");
    out.algebra_map.push_back(*a);
  }
  return out;
}

Homomorphism q_arrow(const SystemMap& map) {
  bool modal = map.source->is_relational() && map.target->is_relational();
  return Homomorphism{map.target->algebra, map.source->algebra, map.algebra_map, modal};
}

SystemMap r_arrow(const Homomorphism& hom, bool modal) {
  auto ra = r_of(hom.source, modal);
  auto rb = r_of(hom.target, modal);
  SystemMap out{rb, ra, {}, hom.map};
  for (std::size_t v = 0; v < rb->size(); ++v) {
    std::vector<Value> pulled(hom.source->size());
    for (Index a = 0; a < hom.source->size(); ++a) pulled[a] = (*rb)(v, hom.map[a]);
    out.point_map.push_back(world_index(*ra, pulled));
  }
  return out;
}

SystemMap counit_system(const SystemPtr& system, bool modal) {
  auto pe = p_of(ext_of(system, modal), modal);
  SystemMap out{pe, system, {}, {}};
  for (std::size_t x = 0; x < system->size(); ++x) out.point_map.push_back(x);
  for (Index a = 0; a < system->algebra->size(); ++a) {
    auto f = pe->algebra->find_function(extent(*system, a));
    if (!f) throw Error(ErrorKind::InvalidSystem, "extent outside Cont");
    out.algebra_map.push_back(*f);
  }
  return out;
}

SpaceMap unit_space(const SpacePtr& space, bool modal) {
  SpaceMap out{space, ext_of(p_of(space, modal), modal), {}};
  for (std::size_t s = 0; s < space->size(); ++s) out.map.push_back(s);
  return out;
}

SystemMap unit_system_alg(const SystemPtr& system, bool modal) {
  auto r = r_of(system->algebra, modal);
  SystemMap out{system, r, {}, {}};
  for (std::size_t x = 0; x < system->size(); ++x) out.point_map.push_back(world_index(*r, row(*system, x)));
  for (Index a = 0; a < system->algebra->size(); ++a) out.algebra_map.push_back(a);
  return out;
}

Homomorphism counit_alg(const AlgebraPtr& algebra) { return identity_hom(algebra); }

Homomorphism duality_map(const AlgebraPtr& algebra, bool modal) {
  auto r = r_of(algebra, modal);
  auto c = p_of(ext_of(r, modal), modal)->algebra;
  Homomorphism h{algebra, c, {}, modal};
  for (Index a = 0; a < algebra->size(); ++a) {
    auto f = c->find_function(extent(*r, a));
    if (!f) throw Error(ErrorKind::InvalidAlgebra, "evaluation outside Cont");
    h.map.push_back(*f);
  }
  return h;
}

Verdict verify_duality_roundtrip(const AlgebraPtr& algebra, bool modal) {
  std::vector<Verdict> parts;
  auto iso = is_algebra_iso(duality_map(algebra, modal));
  iso.check = "roundtrip.iso";
  parts.push_back(iso);
  if (modal) {
    auto model = canonical_model(algebra);
    auto dual = ext_star(r_star(algebra, false), false);
    if (*dual->relation == model.relation) {
      parts.push_back(Verdict::pass("roundtrip.relation"));
    } else {
      Witness w;
      for (std::size_t f = 0; f < model.worlds.size(); ++f) {
        for (std::size_t g = 0; g < model.worlds.size(); ++g) {
          if (dual->relation->holds(f, g) != model.relation.holds(f, g) && w.empty()) {
            w = {{"f", dual->carrier[f]}, {"g", dual->carrier[g]}};
          }
        }
      }
      parts.push_back(Verdict::fail("roundtrip.relation", w));
    }
  }
  return combine(modal ? "ml_duality" : "vl_duality", parts);
}

std::string_view to_string(Adjunction adjunction) { return name_of(kAdjunctionNames, adjunction); }
std::optional<Adjunction> parse_adjunction(std::string_view text) { return parse_name(kAdjunctionNames, text); }
bool is_starred(Adjunction a) { return a == Adjunction::ExtPStar || a == Adjunction::QRStar; }

Verdict verify_couniversal(Adjunction adjunction, const SpacePtr& domain, const SystemMap& arrow) {
  if (adjunction != Adjunction::ExtP && adjunction != Adjunction::ExtPStar) {
    throw Error(ErrorKind::PreconditionViolation, "this form checks the Ext ⊣ P triangle");
  }
  const bool modal = is_starred(adjunction);
  if (!same_system(*p_of(domain, modal), *arrow.source)) {
    throw Error(ErrorKind::TypeMismatch, "test arrow does not start at P(domain)");
  }
  const std::string name = std::string(to_string(adjunction)) + " couniversal";
  auto xi = counit_system(arrow.target, modal);
  auto ext_s = ext_of(arrow.target, modal);
  SpaceMap fhat{domain, ext_s, arrow.point_map};

  std::vector<Verdict> parts;
  auto morph = is_space_morphism(fhat);
  morph.check = "factor.morphism";
  parts.push_back(morph);
  if (morph) {
    auto tri = compose(xi, p_arrow(fhat, modal));
    if (tri == arrow) {
      parts.push_back(Verdict::pass("triangle"));
    } else {
      // f⁻¹ ∘ ext = φ fails somewhere
      Witness w{{"component", tri.point_map == arrow.point_map ? "algebra" : "points"}};
      for (Index a = 0; a < tri.algebra_map.size(); ++a) {
        if (tri.algebra_map[a] != arrow.algebra_map[a]) {
          w.emplace_back("element", arrow.target->algebra->element_name(a));
          break;
        }
      }
      parts.push_back(Verdict::fail("triangle", w));
    }
  }
  std::size_t factorizations = 0;
  auto candidates = enumerate_space_maps(domain, ext_s);
  for (const auto& g : candidates) {
    if (compose(xi, p_arrow(g, modal)) == arrow) ++factorizations;
  }
  auto note = std::to_string(factorizations) + " factorization(s) among " + std::to_string(candidates.size()) +
              " candidate morphisms";
  parts.push_back(factorizations == 1
                      ? Verdict::pass("uniqueness", note)
                      : Verdict::fail("uniqueness", {{"factorizations", std::to_string(factorizations)}}));
  auto out = combine(name, parts);
  if (out) out.note = note;
  return out;
}

Verdict verify_couniversal(Adjunction adjunction, const SystemMap& arrow) {
  if (adjunction != Adjunction::QR && adjunction != Adjunction::QRStar) {
    throw Error(ErrorKind::PreconditionViolation, "this form checks the Q ⊣ R triangle");
  }
  const bool modal = is_starred(adjunction);
  const auto& b = arrow.target->algebra;
  const auto& a = arrow.source->algebra;
  if (!same_system(*r_of(b, modal), *arrow.target)) {
    throw Error(ErrorKind::TypeMismatch, "test arrow does not end at R(B)");
  }
  const std::string name = std::string(to_string(adjunction)) + " couniversal";
  auto eta = unit_system_alg(arrow.source, modal);

  std::vector<Verdict> parts;
  auto hom = is_homomorphism(arrow.algebra_map, *b, *a, modal);
  hom.check = "factor.homomorphism";
  parts.push_back(hom);
  if (hom) {
    auto tri = compose(r_arrow(Homomorphism{b, a, arrow.algebra_map, modal}, modal), eta);
    if (tri == arrow) {
      parts.push_back(Verdict::pass("triangle"));
    } else {
      // f₂⁻¹ ∘ f = f₁ fails at some point
      Witness w;
      for (std::size_t x = 0; x < tri.point_map.size(); ++x) {
        if (tri.point_map[x] != arrow.point_map[x]) {
          w = {{"point", arrow.source->points[x]}, {"expected", arrow.target->points[arrow.point_map[x]]},
               {"actual", arrow.target->points[tri.point_map[x]]}};
          break;
        }
      }
      if (w.empty()) w = {{"component", "algebra"}};
      parts.push_back(Verdict::fail("triangle", w));
    }
  }
  std::size_t factorizations = 0;
  auto candidates = enumerate_homs(b, a, modal);
  for (const auto& h : candidates) {
    if (compose(r_arrow(h, modal), eta) == arrow) ++factorizations;
  }
  auto note = std::to_string(factorizations) + " factorization(s) among " + std::to_string(candidates.size()) +
              " candidate homomorphisms";
  parts.push_back(factorizations == 1
                      ? Verdict::pass("uniqueness", note)
                      : Verdict::fail("uniqueness", {{"factorizations", std::to_string(factorizations)}}));
  auto out = combine(name, parts);
  if (out) out.note = note;
  return out;
}

std::vector<SystemMap> ext_test_arrows(const SpacePtr& domain, const SystemPtr& target, bool modal) {
  return enumerate_system_maps(p_of(domain, modal), target);
}

std::vector<SystemMap> q_test_arrows(const SystemPtr& system, const AlgebraPtr& b, bool modal) {
  return enumerate_system_maps(system, r_of(b, modal));
}

std::string_view to_string(Transformation t) { return name_of(kTransformationNames, t); }
std::optional<Transformation> parse_transformation(std::string_view text) {
  return parse_name(kTransformationNames, text);
}

Verdict is_system_iso(const SystemMap& m) {
  const char* name = "system_iso";
  auto cont_v = is_continuous(m);
  if (!cont_v) return combine(name, {cont_v});
  if (!injective(m.point_map, m.target->size())) {
    return Verdict::fail(name, {{"failed_check", "points_bijective"}});
  }
  if (!injective(m.algebra_map, m.source->algebra->size())) {
    Witness w{{"failed_check", "algebra_bijective"}};
    for (Index b = 0; b < m.algebra_map.size(); ++b) {
      for (Index c = b + 1; c < m.algebra_map.size(); ++c) {
        if (m.algebra_map[b] == m.algebra_map[c] && w.size() == 1) {
          w.emplace_back("b1", m.target->algebra->element_name(b));
          w.emplace_back("b2", m.target->algebra->element_name(c));
        }
      }
    }
    return Verdict::fail(name, w);
  }
  if (m.source->is_relational() && m.target->is_relational()) {
    for (std::size_t x = 0; x < m.source->size(); ++x) {
      for (std::size_t y = 0; y < m.source->size(); ++y) {
        if (m.source->relation->holds(x, y) != m.target->relation->holds(m.point_map[x], m.point_map[y])) {
          return Verdict::fail(name, {{"failed_check", "relation"}, {"x", m.source->points[x]},
                                      {"y", m.source->points[y]}});
        }
      }
    }
  }
  return Verdict::pass(name);
}

Verdict is_space_iso(const SpaceMap& m) {
  const char* name = "space_iso";
  if (!injective(m.map, m.target->size())) return Verdict::fail(name, {{"failed_check", "bijective"}});
  auto fwd = is_space_morphism(m);
  if (!fwd) return combine(name, {fwd});
  SpaceMap inv{m.target, m.source, std::vector<std::size_t>(m.map.size())};
  for (std::size_t s = 0; s < m.map.size(); ++s) inv.map[m.map[s]] = s;
  auto back = is_space_morphism(inv);
  if (!back) {
    auto v = combine(name, {back});
    v.counterexample->insert(v.counterexample->begin() + 1, {"direction", "inverse"});
    return v;
  }
  return Verdict::pass(name);
}

Verdict is_algebra_iso(const Homomorphism& h) {
  const char* name = "algebra_iso";
  auto hom = is_homomorphism(h.map, *h.source, *h.target, h.modal);
  if (!hom) return combine(name, {hom});
  if (!injective(h.map, h.target->size())) {
    Witness w{{"failed_check", h.source->size() < h.target->size() ? "surjective" : "injective"}};
    return Verdict::fail(name, w);
  }
  return Verdict::pass(name);
}

namespace {

template <class Obj, class Comp, class MakeComp>
const Comp& cached(std::map<const Obj*, Comp>& cache, const std::shared_ptr<const Obj>& obj, MakeComp&& make) {
  auto it = cache.find(obj.get());
  if (it == cache.end()) it = cache.emplace(obj.get(), make(obj)).first;
  return it->second;
}

Verdict component_failure(std::size_t i, const std::string& what, Verdict v) {
  Witness w{{"object", std::to_string(i)}};
  if (v.counterexample) w.insert(w.end(), v.counterexample->begin(), v.counterexample->end());
  if (!what.empty()) w.emplace_back("error", what);
  return Verdict::fail("component", w);
}

Verdict square(std::size_t i, bool commutes) {
  return commutes ? Verdict::pass("naturality") : Verdict::fail("naturality", {{"morphism", std::to_string(i)}});
}

}  // namespace

Verdict verify_natural_iso(Transformation t, const std::vector<SystemPtr>& objects,
                           const std::vector<SystemMap>& morphisms) {
  if (t != Transformation::Xi && t != Transformation::XiStar && t != Transformation::UnitAlg) {
    throw Error(ErrorKind::PreconditionViolation, "transformation does not act on systems");
  }
  auto modal_for = [&](const SystemPtr& s) { return t == Transformation::XiStar || (t == Transformation::UnitAlg && s->is_relational()); };
  auto make = [&](const SystemPtr& s) {
    return t == Transformation::UnitAlg ? unit_system_alg(s, modal_for(s)) : counit_system(s, modal_for(s));
  };
  std::map<const System*, SystemMap> cache;
  std::vector<Verdict> parts;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    try {
      auto v = is_system_iso(cached(cache, objects[i], make));
      parts.push_back(v ? Verdict::pass("component") : component_failure(i, {}, v));
    } catch (const Error& e) {
      parts.push_back(component_failure(i, e.what(), Verdict::pass("component")));
    }
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const auto& m = morphisms[i];
    bool modal = modal_for(m.source);
    try {
      const auto& c1 = cached(cache, m.source, make);
      const auto& c2 = cached(cache, m.target, make);
      if (t == Transformation::UnitAlg) {
        parts.push_back(square(i, compose(r_arrow(q_arrow(m), modal), c1) == compose(c2, m)));
      } else {
        parts.push_back(square(i, compose(c2, p_arrow(ext_arrow(m, modal), modal)) == compose(m, c1)));
      }
    } catch (const Error& e) {
      parts.push_back(Verdict::fail("naturality", {{"morphism", std::to_string(i)}, {"error", e.what()}}));
    }
  }
  auto out = combine(std::string(to_string(t)) + " natural iso", parts);
  if (out) out.note = std::to_string(objects.size()) + " components, " + std::to_string(morphisms.size()) + " squares";
  return out;
}

Verdict verify_natural_iso(Transformation t, const std::vector<SpacePtr>& objects,
                           const std::vector<SpaceMap>& morphisms) {
  if (t != Transformation::Eta && t != Transformation::EtaStar) {
    throw Error(ErrorKind::PreconditionViolation, "transformation does not act on spaces");
  }
  const bool modal = t == Transformation::EtaStar;
  auto make = [&](const SpacePtr& sp) { return unit_space(sp, modal); };
  std::map<const Space*, SpaceMap> cache;
  std::vector<Verdict> parts;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    try {
      auto v = is_space_iso(cached(cache, objects[i], make));
      parts.push_back(v ? Verdict::pass("component") : component_failure(i, {}, v));
    } catch (const Error& e) {
      parts.push_back(component_failure(i, e.what(), Verdict::pass("component")));
    }
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const auto& f = morphisms[i];
    try {
      const auto& c1 = cached(cache, f.source, make);
      const auto& c2 = cached(cache, f.target, make);
      parts.push_back(square(i, compose(c2, f) == compose(ext_arrow(p_arrow(f, modal), modal), c1)));
    } catch (const Error& e) {
      parts.push_back(Verdict::fail("naturality", {{"morphism", std::to_string(i)}, {"error", e.what()}}));
    }
  }
  auto out = combine(std::string(to_string(t)) + " natural iso", parts);
  if (out) out.note = std::to_string(objects.size()) + " components, " + std::to_string(morphisms.size()) + " squares";
  return out;
}

Verdict verify_natural_iso(Transformation t, const std::vector<AlgebraPtr>& objects,
                           const std::vector<Homomorphism>& morphisms) {
  if (t != Transformation::CounitAlg) {
    throw Error(ErrorKind::PreconditionViolation, "transformation does not act on algebras");
  }
  std::vector<Verdict> parts;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    auto v = is_algebra_iso(counit_alg(objects[i]));
    parts.push_back(v ? Verdict::pass("component") : component_failure(i, {}, v));
  }
  for (std::size_t i = 0; i < morphisms.size(); ++i) {
    const auto& h = morphisms[i];
    try {
      auto qrh = q_arrow(r_arrow(h, h.modal));
      parts.push_back(square(i, compose(h, counit_alg(h.source)).map == compose(counit_alg(h.target), qrh).map));
    } catch (const Error& e) {
      parts.push_back(Verdict::fail("naturality", {{"morphism", std::to_string(i)}, {"error", e.what()}}));
    }
  }
  auto out = combine(std::string(to_string(t)) + " natural iso", parts);
  if (out) out.note = std::to_string(objects.size()) + " components, " + std::to_string(morphisms.size()) + " squares";
  return out;
}

}  // namespace lvd
