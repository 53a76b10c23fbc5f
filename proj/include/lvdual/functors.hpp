#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lvdual/algebra.hpp"
#include "lvdual/spaces.hpp"
#include "lvdual/systems.hpp"
#include "lvdual/verdict.hpp"

namespace lvd {

enum class FunctorName { Ext, P, Q, R, ExtStar, PStar, QStar, RStar };
enum class Category { BSYM, BS, VAop, RSYM, RS, MAop };

struct FunctorTag {
  FunctorName name;
  Category source;
  Category target;
};

FunctorTag functor_tag(FunctorName name);
std::string_view to_string(FunctorName name);
std::string_view to_string(Category category);
/// "Ext", "P", "Q", "R", "Ext*", "P*", "Q*", "R*".
std::optional<FunctorName> parse_functor_name(std::string_view text);
bool is_starred(FunctorName name);

// Objects. With `validate`, inputs failing their validator throw
// InvalidSystem / InvalidSpace / InvalidAlgebra.

/// Carrier X, φ(K) = {x : ⊨(x, a) ∈ K for all a}.
SpacePtr ext_functor(const SystemPtr& system, bool validate = true);
/// As ext_functor, plus x R_□ y iff ext(a)(y) >= ext(□a)(x) for all a.
SpacePtr ext_star(const SystemPtr& system, bool validate = true);
/// x R y iff for all r and a, ext(□a)(x) >= r implies ext(a)(y) >= r.
Relation ext_relation_quantified(const System& system);

/// (S, Cont(S, φ), ⊨) with ⊨(s, v) = v(s); the starred form adds □_R and R.
SystemPtr p_functor(const SpacePtr& space, bool validate = true);
SystemPtr p_star(const SpacePtr& space, bool validate = true);

AlgebraPtr q_functor(const SystemPtr& system);

/// Worlds Spec(A) named v0, v1, ... in spec() order, ⊨(v, a) = v(a);
/// the starred form carries the canonical relation.
SystemPtr r_functor(const AlgebraPtr& algebra, bool validate = true);
SystemPtr r_star(const AlgebraPtr& algebra, bool validate = true);

// Arrows.

/// Ext(ψ₁, ψ₂) = ψ₁ between the extent spaces.
SpaceMap ext_arrow(const SystemMap& map, bool modal);
/// P(f) = (f, f⁻¹) with f⁻¹(v) = v ∘ f. Throws PreconditionViolation when some v ∘ f leaves Cont.
SystemMap p_arrow(const SpaceMap& map, bool modal);
/// Q(ψ₁, ψ₂) = ψ₂ : B → A.
Homomorphism q_arrow(const SystemMap& map);
/// R(h) for h : A → B is (v ↦ v ∘ h, h) : R(B) → R(A).
SystemMap r_arrow(const Homomorphism& hom, bool modal);

// Units and counits.

/// ξ_S = (id_X, ext) : P(Ext(S)) → S.
SystemMap counit_system(const SystemPtr& system, bool modal);
/// η_(S,φ) : (S, φ) → Ext(P(S, φ)), s ↦ evaluation at s.
SpaceMap unit_space(const SpacePtr& space, bool modal);
/// η_S = (x ↦ f_x, id) : S → R(Q(S)) with f_x(a) = ⊨(x, a). Throws InvalidSystem when some f_x is not a homomorphism.
SystemMap unit_system_alg(const SystemPtr& system, bool modal);
/// ξ_A = id : Q(R(A)) = A → A.
Homomorphism counit_alg(const AlgebraPtr& algebra);

/// a ↦ (v ↦ v(a)) from A into Cont(Ext(R(A))), with □_R when `modal`.
Homomorphism duality_map(const AlgebraPtr& algebra, bool modal);

/// The duality roundtrip: duality_map is a bijective homomorphism and, when
/// `modal`, Ext*(R*(A)) carries exactly the canonical relation.
Verdict verify_duality_roundtrip(const AlgebraPtr& algebra, bool modal);

enum class Adjunction { ExtP, QR, ExtPStar, QRStar };
std::string_view to_string(Adjunction adjunction);
/// "Ext-P", "Q-R", "Ext*-P*", "Q*-R*".
std::optional<Adjunction> parse_adjunction(std::string_view text);
bool is_starred(Adjunction adjunction);

/// Ext ⊣ P: `arrow` : P(domain) → S factors as ξ_S ∘ P(f̂) through the unique f̂ : domain → Ext(S).
/// Throws TypeMismatch when arrow does not start at P(domain).
Verdict verify_couniversal(Adjunction adjunction, const SpacePtr& domain, const SystemMap& arrow);
/// Q ⊣ R: `arrow` : S → R(B) factors as R(ψ̃) ∘ η_S through the unique ψ̃ : B → A.
Verdict verify_couniversal(Adjunction adjunction, const SystemMap& arrow);

/// All test arrows P(domain) → target for the Ext ⊣ P triangle.
std::vector<SystemMap> ext_test_arrows(const SpacePtr& domain, const SystemPtr& target, bool modal);
/// All test arrows S → R(B) for the Q ⊣ R triangle.
std::vector<SystemMap> q_test_arrows(const SystemPtr& system, const AlgebraPtr& b, bool modal);

enum class Transformation { Xi, Eta, XiStar, EtaStar, UnitAlg, CounitAlg };
std::string_view to_string(Transformation t);
std::optional<Transformation> parse_transformation(std::string_view text);

/// Components are isomorphisms and every naturality square commutes.
/// Xi / XiStar / UnitAlg take systems and system maps; UnitAlg is modal
/// when the objects are relational.
Verdict verify_natural_iso(Transformation t, const std::vector<SystemPtr>& objects,
                           const std::vector<SystemMap>& morphisms);
/// Eta / EtaStar.
Verdict verify_natural_iso(Transformation t, const std::vector<SpacePtr>& objects,
                           const std::vector<SpaceMap>& morphisms);
/// CounitAlg.
Verdict verify_natural_iso(Transformation t, const std::vector<AlgebraPtr>& objects,
                           const std::vector<Homomorphism>& morphisms);

/// Bijective on points and algebras, continuous, and R₀ preserved and reflected.
Verdict is_system_iso(const SystemMap& map);
/// Bijective morphism whose inverse is also a morphism.
Verdict is_space_iso(const SpaceMap& map);
Verdict is_algebra_iso(const Homomorphism& hom);

}  // namespace lvd
