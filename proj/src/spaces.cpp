#include "lvdual/spaces.hpp"

#include <algorithm>

#include "lvdual/error.hpp"
#include "odometer.hpp"

namespace lvd {

namespace {

bool subset_of(const std::vector<Value>& a, const std::vector<Value>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Value> intersect(const std::vector<Value>& a, const std::vector<Value>& b) {
  std::vector<Value> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Value> Space::allowed(std::size_t s) const {
  std::vector<Value> out = family.member(family.full_index());
  for (std::size_t m = 0; m < family.size(); ++m) {
    if (phi[m][s]) out = intersect(out, family.member(m));
  }
  return out;
}

SpacePtr make_space(const LatticePtr& lattice, std::vector<std::string> carrier, std::vector<std::vector<bool>> phi,
                    std::optional<Relation> relation) {
  SubalgebraFamily family(lattice);
  if (phi.size() != family.size()) throw Error(ErrorKind::SchemaError, "phi needs one entry per subalgebra");
  for (const auto& row : phi) {
    if (row.size() != carrier.size()) throw Error(ErrorKind::SchemaError, "phi row has the wrong size");
  }
  if (relation && relation->size() != carrier.size()) {
    throw Error(ErrorKind::SchemaError, "relation size differs from carrier size");
  }
  auto sorted = carrier;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::SchemaError, "duplicate point name");
  }
  return std::make_shared<const Space>(
      Space{std::move(family), std::move(carrier), std::move(phi), std::move(relation)});
}

SpacePtr space_from_minimal(const LatticePtr& lattice, std::vector<std::string> carrier,
                            const std::vector<std::size_t>& minimal, std::optional<Relation> relation) {
  SubalgebraFamily family(lattice);
  std::vector<std::vector<bool>> phi(family.size(), std::vector<bool>(carrier.size(), false));
  for (std::size_t m = 0; m < family.size(); ++m) {
    for (std::size_t s = 0; s < carrier.size(); ++s) {
      phi[m][s] = subset_of(family.member(minimal.at(s)), family.member(m));
    }
  }
  return make_space(lattice, std::move(carrier), std::move(phi), std::move(relation));
}

bool same_space(const Space& a, const Space& b) {
  return &a == &b || (same_lattice(a.lattice(), b.lattice()) && a.carrier == b.carrier && a.phi == b.phi &&
                      a.relation == b.relation);
}

bool in_cont(const Space& space, const Function& f) {
  if (f.size() != space.size()) return false;
  for (std::size_t s = 0; s < space.size(); ++s) {
    auto ok = space.allowed(s);
    if (!std::binary_search(ok.begin(), ok.end(), f[s])) return false;
  }
  return true;
}

Function box_r(const Space& space, const Function& f) {
  if (!space.relation) throw Error(ErrorKind::PreconditionViolation, "box_r needs a relational space");
  if (!in_cont(space, f)) throw Error(ErrorKind::NotInCont, "argument of box_r is not in Cont");
  const auto& l = space.lattice();
  Function out(space.size(), l.top());
  for (std::size_t x = 0; x < space.size(); ++x) {
    for (auto y : space.relation->successors(x)) out[x] = l.meet(out[x], f[y]);
  }
  if (!in_cont(space, out)) throw Error(ErrorKind::NotInCont, "box_r leaves Cont");
  return out;
}

namespace {

std::vector<Function> cont_functions(const Space& space, std::size_t cap) {
  const auto k = space.size();
  std::vector<std::vector<Value>> allowed(k);
  double count = 1;
  for (std::size_t s = 0; s < k; ++s) {
    allowed[s] = space.allowed(s);
    count *= static_cast<double>(allowed[s].size());
  }
  if (count > static_cast<double>(cap)) {
    throw Error(ErrorKind::ClosureTooLarge, "Cont has more than " + std::to_string(cap) + " elements");
  }
  std::vector<std::size_t> digits(k, 0), radix(k);
  for (std::size_t s = 0; s < k; ++s) radix[s] = allowed[s].size();
  std::vector<Function> out;
  do {
    Function f(k);
    for (std::size_t s = 0; s < k; ++s) f[s] = allowed[s][digits[s]];
    out.push_back(std::move(f));
  } while (detail::advance(digits, radix));
  return out;
}

}  // namespace

AlgebraPtr cont(const Space& space, bool with_box, std::size_t cap) {
  auto functions = cont_functions(space, cap);
  std::optional<Relation> rel;
  if (with_box) {
    if (!space.relation) throw Error(ErrorKind::PreconditionViolation, "box needs a relational space");
    for (const auto& f : functions) box_r(space, f);
    rel = space.relation;
  }
  return make_algebra_from_functions(space.lattice_ptr(), space.carrier, std::move(functions), rel);
}

Verdict validate_space(const Space& sp, std::size_t cap) {
  const auto& fam = sp.family;
  std::vector<Verdict> parts;
  auto run = [&](const char* name, auto&& body, std::string note = {}) {
    std::optional<Witness> w = body();
    parts.push_back(w ? Verdict::fail(name, std::move(*w)) : Verdict::pass(name, std::move(note)));
  };

  run("phi.full", [&]() -> std::optional<Witness> {
    for (std::size_t s = 0; s < sp.size(); ++s) {
      if (!sp.in_phi(fam.full_index(), s)) return Witness{{"point", sp.carrier[s]}};
    }
    return std::nullopt;
  });

  run("phi.monotone", [&]() -> std::optional<Witness> {
    for (std::size_t m = 0; m < fam.size(); ++m) {
      for (std::size_t n = 0; n < fam.size(); ++n) {
        if (!subset_of(fam.member(m), fam.member(n))) continue;
        for (std::size_t s = 0; s < sp.size(); ++s) {
          if (sp.in_phi(m, s) && !sp.in_phi(n, s)) {
            return Witness{{"smaller", fam.key(m)}, {"larger", fam.key(n)}, {"point", sp.carrier[s]}};
          }
        }
      }
    }
    return std::nullopt;
  });

  run("phi.intersection", [&]() -> std::optional<Witness> {
    for (std::size_t m = 0; m < fam.size(); ++m) {
      for (std::size_t n = m + 1; n < fam.size(); ++n) {
        auto both = *fam.find(intersect(fam.member(m), fam.member(n)));
        for (std::size_t s = 0; s < sp.size(); ++s) {
          if ((sp.in_phi(m, s) && sp.in_phi(n, s)) != sp.in_phi(both, s)) {
            return Witness{{"m1", fam.key(m)}, {"m2", fam.key(n)}, {"point", sp.carrier[s]}};
          }
        }
      }
    }
    return std::nullopt;
  });

  if (sp.relation) {
    const auto& R = *sp.relation;
    run("relation.heredity", [&]() -> std::optional<Witness> {
      for (std::size_t m = 0; m < fam.size(); ++m) {
        for (std::size_t x = 0; x < sp.size(); ++x) {
          if (!sp.in_phi(m, x)) continue;
          for (auto y : R.successors(x)) {
            if (!sp.in_phi(m, y)) {
              return Witness{{"subalgebra", fam.key(m)}, {"x", sp.carrier[x]}, {"y", sp.carrier[y]}};
            }
          }
        }
      }
      return std::nullopt;
    });

    run("relation.box_reflection", [&]() -> std::optional<Witness> {
      const auto& l = sp.lattice();
      auto functions = cont_functions(sp, cap);
      for (std::size_t x = 0; x < sp.size(); ++x) {
        for (std::size_t y = 0; y < sp.size(); ++y) {
          if (R.holds(x, y)) continue;
          bool refuted = false;
          for (const auto& f : functions) {
            bool boxed_top = true;
            for (auto z : R.successors(x)) boxed_top = boxed_top && f[z] == l.top();
            if (boxed_top && f[y] != l.top()) {
              refuted = true;
              break;
            }
          }
          if (!refuted) return Witness{{"x", sp.carrier[x]}, {"y", sp.carrier[y]}};
        }
      }
      return std::nullopt;
    });

    // Every subset of a finite discrete space is clopen.
    run("relation.clopen_preimage", [] { return std::optional<Witness>{}; }, "vacuous on a finite discrete space");
  }
  return combine(sp.relation ? "relational_space" : "boolean_space", parts);
}

Verdict is_space_morphism(const SpaceMap& m) {
  const auto& s1 = *m.source;
  const auto& s2 = *m.target;
  const char* name = "space_morphism";
  if (!same_lattice(s1.lattice(), s2.lattice())) throw Error(ErrorKind::MismatchedLattice, "spaces over different lattices");
  if (m.map.size() != s1.size()) return Verdict::fail(name, {{"reason", "map has the wrong size"}});
  for (auto y : m.map) {
    if (y >= s2.size()) return Verdict::fail(name, {{"reason", "image out of range"}});
  }
  for (std::size_t k = 0; k < s1.family.size(); ++k) {
    for (std::size_t s = 0; s < s1.size(); ++s) {
      if (s1.in_phi(k, s) && !s2.in_phi(k, m.map[s])) {
        return Verdict::fail(name, {{"failed_check", "subspace"}, {"subalgebra", s1.family.key(k)},
                                    {"point", s1.carrier[s]}});
      }
    }
  }
  if (s1.relation && s2.relation) {
    for (auto [s, t] : s1.relation->pairs()) {
      if (!s2.relation->holds(m.map[s], m.map[t])) {
        return Verdict::fail(name, {{"failed_check", "forth"}, {"s", s1.carrier[s]}, {"t", s1.carrier[t]}});
      }
    }
    for (std::size_t s = 0; s < s1.size(); ++s) {
      for (auto u : s2.relation->successors(m.map[s])) {
        bool found = false;
        for (auto t : s1.relation->successors(s)) found = found || m.map[t] == u;
        if (!found) {
          return Verdict::fail(name, {{"failed_check", "back"}, {"s", s1.carrier[s]}, {"target", s2.carrier[u]}});
        }
      }
    }
  }
  return Verdict::pass(name);
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
  if (!same_space(*f.target, *g.source)) throw Error(ErrorKind::TypeMismatch, "composed space maps do not meet");
  SpaceMap out{f.source, g.target, {}};
  for (auto s : f.map) out.map.push_back(g.map.at(s));
  return out;
}

SpaceMap identity_map(const SpacePtr& space) {
  SpaceMap out{space, space, {}};
  for (std::size_t s = 0; s < space->size(); ++s) out.map.push_back(s);
  return out;
}

std::vector<SpaceMap> enumerate_space_maps(const SpacePtr& sp1, const SpacePtr& sp2, std::size_t cap) {
  std::vector<SpaceMap> out;
  const auto n1 = sp1->size(), n2 = sp2->size();
  if (n1 > 0 && n2 == 0) return out;
  double count = 1;
  for (std::size_t i = 0; i < n1; ++i) count *= static_cast<double>(n2);
  if (count > static_cast<double>(cap)) throw Error(ErrorKind::ClosureTooLarge, "too many candidate space maps");
  std::vector<std::size_t> digits(n1, 0), radix(n1, n2);
  do {
    SpaceMap cand{sp1, sp2, digits};
    if (is_space_morphism(cand)) out.push_back(std::move(cand));
  } while (detail::advance(digits, radix));
  return out;
}

}  // namespace lvd
