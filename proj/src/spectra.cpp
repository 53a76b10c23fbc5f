#include "lvdual/spectra.hpp"

#include <algorithm>

#include "lvdual/error.hpp"

namespace lvd {

bool LFilter::contains(Index a) const { return std::binary_search(members.begin(), members.end(), a); }

namespace {

std::vector<bool> mask_of(const std::vector<Index>& members, std::size_t n) {
  std::vector<bool> mask(n, false);
  for (auto a : members) mask.at(a) = true;
  return mask;
}

bool is_l_filter(const Algebra& alg, const std::vector<bool>& in) {
  const auto n = alg.size();
  const Value one = alg.lattice().top();
  bool nonempty = false;
  for (Index a = 0; a < n; ++a) {
    if (!in[a]) continue;
    nonempty = true;
    if (!in[alg.truth(one, a)]) return false;
    for (Index b = 0; b < n; ++b) {
      if (alg.leq(a, b) && !in[b]) return false;
      if (in[b] && !in[alg.meet(a, b)]) return false;
    }
  }
  return nonempty;
}

bool is_prime(const Algebra& alg, const std::vector<bool>& in) {
  const auto& l = alg.lattice();
  const auto n = alg.size();
  for (std::size_t r = 0; r < l.size(); ++r) {
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (!in[alg.truth(static_cast<Value>(r), alg.join(x, y))]) continue;
        bool split = false;
        for (std::size_t r1 = 0; r1 < l.size() && !split; ++r1) {
          if (!in[alg.truth(static_cast<Value>(r1), x)]) continue;
          for (std::size_t r2 = 0; r2 < l.size() && !split; ++r2) {
            split = l.join(static_cast<Value>(r1), static_cast<Value>(r2)) == r &&
                    in[alg.truth(static_cast<Value>(r2), y)];
          }
        }
        if (!split) return false;
      }
    }
  }
  return true;
}

bool is_ultra(const Algebra& alg, const std::vector<bool>& in) {
  const auto& l = alg.lattice();
  for (Index x = 0; x < alg.size(); ++x) {
    bool some = false;
    for (std::size_t r = 0; r < l.size() && !some; ++r) some = in[alg.truth(static_cast<Value>(r), x)];
    if (!some) return false;
  }
  return true;
}

std::vector<bool> principal(const Algebra& alg, Index a) {
  std::vector<bool> up(alg.size(), false);
  for (Index b = 0; b < alg.size(); ++b) up[b] = alg.leq(a, b);
  return up;
}

}  // namespace

FilterClassification classify_filter(const std::vector<Index>& subset, const Algebra& algebra) {
  FilterClassification c;
  auto in = mask_of(subset, algebra.size());
  c.l_filter = is_l_filter(algebra, in);
  if (!c.l_filter) return c;
  c.proper = !in[algebra.bottom()];
  if (!c.proper) return c;
  c.prime = is_prime(algebra, in);
  c.ultra = is_ultra(algebra, in);
  c.maximal = true;
  for (Index a = 0; a < algebra.size() && c.maximal; ++a) {
    auto candidate = principal(algebra, a);
    if (candidate[algebra.bottom()] || !is_l_filter(algebra, candidate) || candidate == in) continue;
    bool superset = true;
    for (Index b = 0; b < algebra.size(); ++b) superset = superset && (!in[b] || candidate[b]);
    if (superset) c.maximal = false;
  }
  return c;
}

std::vector<LFilter> prime_filters(const AlgebraPtr& algebra) {
  std::vector<LFilter> out;
  for (Index a = 0; a < algebra->size(); ++a) {
    auto in = principal(*algebra, a);
    if (in[algebra->bottom()] || !is_l_filter(*algebra, in) || !is_prime(*algebra, in)) continue;
    LFilter f{algebra, {}};
    for (Index b = 0; b < algebra->size(); ++b) {
      if (in[b]) f.members.push_back(b);
    }
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const LFilter& x, const LFilter& y) { return x.members < y.members; });
  return out;
}

Homomorphism filter_to_hom(const LFilter& filter) {
  const auto& alg = *filter.algebra;
  const auto& lattice = alg.lattice_ptr();
  auto target = lattice_algebra(lattice);
  Homomorphism h{filter.algebra, target, std::vector<Index>(alg.size()), false};
  for (Index x = 0; x < alg.size(); ++x) {
    std::vector<Value> hits;
    for (std::size_t q = 0; q < lattice->size(); ++q) {
      if (filter.contains(alg.truth(static_cast<Value>(q), x))) hits.push_back(static_cast<Value>(q));
    }
    if (hits.size() != 1) {
      throw Error(ErrorKind::NotPrime, "no unique q with T_q(" + alg.element_name(x) + ") in the filter");
    }
    h.map[x] = hits[0];  // carrier index of the full lattice algebra equals the lattice value
  }
  if (!is_homomorphism(h.map, alg, *target, false).passed) {
    throw Error(ErrorKind::NotPrime, "filter does not induce a homomorphism");
  }
  return h;
}

std::vector<Value> lattice_values(const Homomorphism& hom) {
  const auto* fp = hom.target->functional();
  if (fp == nullptr || fp->points.size() != 1) {
    throw Error(ErrorKind::TypeMismatch, "homomorphism does not map into a lattice algebra");
  }
  std::vector<Value> out(hom.map.size());
  for (std::size_t a = 0; a < hom.map.size(); ++a) out[a] = fp->values[hom.map[a]][0];
  return out;
}

LFilter hom_to_filter(const Homomorphism& hom) {
  auto values = lattice_values(hom);
  const Value one = hom.source->lattice().top();
  LFilter f{hom.source, {}};
  for (Index a = 0; a < values.size(); ++a) {
    if (values[a] == one) f.members.push_back(a);
  }
  return f;
}

std::vector<Homomorphism> spec(const AlgebraPtr& algebra, const SubalgebraFamily& family, std::size_t member) {
  return enumerate_homs(algebra, lattice_algebra(family, member), false);
}

std::vector<Homomorphism> spec(const AlgebraPtr& algebra) {
  return enumerate_homs(algebra, lattice_algebra(algebra->lattice_ptr()), false);
}

SeparatingWitness separating_witness(const AlgebraPtr& algebra, Index x, Index y) {
  if (x == y) throw Error(ErrorKind::PreconditionViolation, "separating_witness needs distinct elements");
  const auto& l = algebra->lattice();
  std::vector<Value> order{l.top()};
  for (std::size_t r = 0; r < l.size(); ++r) {
    if (r != l.top()) order.push_back(static_cast<Value>(r));
  }
  const auto primes = prime_filters(algebra);
  for (auto rv : order) {
    for (const auto& p : primes) {
      if (p.contains(algebra->truth(rv, x)) && !p.contains(algebra->truth(rv, y))) return {rv, p};
    }
  }
  throw Error(ErrorKind::NoWitness, "no prime filter separates " + algebra->element_name(x) + " from " +
                                        algebra->element_name(y));
}

CanonicalModel canonical_model(const AlgebraPtr& algebra) {
  if (!algebra->is_modal()) throw Error(ErrorKind::BoxNotAvailable, "canonical model needs an ML-algebra");
  CanonicalModel m{algebra, {}, {}};
  for (const auto& h : spec(algebra)) m.worlds.push_back(lattice_values(h));
  const auto& l = algebra->lattice();
  const auto k = m.worlds.size();
  m.relation = Relation(k);
  for (std::size_t f = 0; f < k; ++f) {
    for (std::size_t g = 0; g < k; ++g) {
      bool related = true;
      for (Index a = 0; a < algebra->size() && related; ++a) {
        related = l.leq(m.worlds[f][algebra->box(a)], m.worlds[g][a]);
      }
      m.relation.set(f, g, related);
    }
  }
  return m;
}

Relation canonical_relation_quantified(const Algebra& algebra, const std::vector<std::vector<Value>>& worlds) {
  const auto& l = algebra.lattice();
  Relation rel(worlds.size());
  for (std::size_t f = 0; f < worlds.size(); ++f) {
    for (std::size_t g = 0; g < worlds.size(); ++g) {
      bool related = true;
      for (std::size_t r = 0; r < l.size() && related; ++r) {
        auto rv = static_cast<Value>(r);
        for (Index a = 0; a < algebra.size() && related; ++a) {
          if (l.leq(rv, worlds[f][algebra.box(a)]) && !l.leq(rv, worlds[g][a])) related = false;
        }
      }
      rel.set(f, g, related);
    }
  }
  return rel;
}

Verdict check_kripke_property(const CanonicalModel& model) {
  const auto& alg = *model.algebra;
  const auto& l = alg.lattice();
  for (std::size_t f = 0; f < model.worlds.size(); ++f) {
    for (Index a = 0; a < alg.size(); ++a) {
      Value acc = l.top();
      for (auto g : model.relation.successors(f)) acc = l.meet(acc, model.worlds[g][a]);
      if (model.worlds[f][alg.box(a)] != acc) {
        return Verdict::fail("kripke-property", {{"equation", "f(box a) = meet{g(a) : f R g}"},
                                                 {"world", std::to_string(f)},
                                                 {"a", alg.element_name(a)},
                                                 {"f(box a)", l.element_name(model.worlds[f][alg.box(a)])},
                                                 {"meet", l.element_name(acc)}});
      }
    }
  }
  return Verdict::pass("kripke-property");
}

}  // namespace lvd
