#pragma once

// Fusion systems over a finite p-group P, for a universe consisting of every
// subgroup of P.  The morphisms are kept as a groupoid: subgroups are split
// into F-isomorphism classes, each with a representative X0, the automizer
// Aut_F(X0), and for every member X a chosen F-isomorphism psi_X : X -> X0.
// Then Iso_F(Q, R) = psi_R^-1 Aut_F(X0) psi_Q and Hom_F(Q, R) consists of the
// isomorphisms onto subgroups of R.

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mnc/autgroup.hpp"

namespace mnc {

struct AutomizerSpec {
  Subgroup subject;
  std::vector<GroupMap> generators;
};

class FusionSystem {
 public:
  using Perm = PermutationGroup::Perm;

  /// The inner system F_P(P) over `base`, with the universe of all its subgroups.
  explicit FusionSystem(const Subgroup& base, std::size_t universe_cap = 20000);

  const Subgroup& base() const { return base_; }
  std::uint32_t prime() const { return prime_; }
  const std::vector<Subgroup>& universe() const { return universe_; }
  std::size_t id_of(const Subgroup& q) const;  // throws std::out_of_range outside the universe
  const Subgroup& subgroup(std::size_t id) const { return universe_.at(id); }
  /// Subgroups of index p in universe()[id].
  const std::vector<std::size_t>& maximal_subgroups(std::size_t id) const { return maximal_.at(id); }

  std::size_t class_of(std::size_t id) const { return class_of_.at(id); }
  std::vector<std::size_t> class_ids() const;  // live classes, ordered by representative
  const std::vector<std::size_t>& class_members(std::size_t cls) const { return classes_.at(cls).members; }
  std::size_t representative(std::size_t cls) const { return classes_.at(cls).rep; }
  /// Members of the F-class of universe()[id].
  const std::vector<std::size_t>& conjugates(std::size_t id) const { return class_members(class_of(id)); }
  bool are_conjugate(std::size_t a, std::size_t b) const { return class_of(a) == class_of(b); }

  /// Adds an injective homomorphism between universe subgroups and closes
  /// under composition and restriction.  Returns whether the system grew.
  bool add(const GroupMap& f);
  bool add(const AutomizerSpec& spec);
  /// Adds every c_g, g in `g_elements`, on every universe subgroup Q with gQg^-1 <= base.
  void add_conjugations(const std::vector<std::uint32_t>& g_elements);

  bool contains(const GroupMap& f) const;
  /// Aut_F(Q) acting on indices into Q.members().
  std::shared_ptr<const PermutationGroup> automizer(std::size_t id) const;
  std::uint64_t automizer_order(std::size_t id) const;
  std::vector<GroupMap> automizer_generators(std::size_t id) const;
  GroupMap automorphism(std::size_t id, std::uint32_t index) const;
  /// Aut_P(Q) = N_P(Q)/C_P(Q) acting on indices into Q.members().
  std::shared_ptr<const PermutationGroup> base_automizer(std::size_t id) const;
  /// Iso_F(Q, R), as maps; empty when not F-conjugate.
  std::vector<GroupMap> isomorphisms(std::size_t q, std::size_t r) const;
  /// psi_R^-1 psi_Q, one element of Iso_F(Q, R).
  std::optional<GroupMap> some_isomorphism(std::size_t q, std::size_t r) const;
  /// Generators of the groupoid leaving Q: psi_R^-1 g psi_Q for each member R
  /// and g in {1} union automizer generators of the class representative.
  std::vector<GroupMap> isomorphism_generators(std::size_t q) const;

  /// Whether some F-morphism from universe()[n_id] into P restricts to phi on phi.domain().
  bool extends(std::size_t n_id, const GroupMap& phi) const;

  std::vector<std::uint32_t> element_class(std::uint32_t x) const;
  /// For every element of P, the least member of its F-class (indexed by element).
  std::vector<std::uint32_t> element_class_labels() const;
  std::size_t morphism_class_count() const { return class_ids().size(); }
  /// Sum over the universe of |Aut_F(Q)| times the class size: |Iso_F| overall.
  std::uint64_t isomorphism_count() const;

  /// Stable text fingerprint of the groupoid: classes and automizer orders.
  std::string summary() const;

  /// Replaces the representative automizer of the class of `id` by the group
  /// generated by the given automorphisms of universe()[id].  Breaks closure
  /// on purpose; only for negative controls.
  void testing_replace_automizer(std::size_t id, const std::vector<GroupMap>& gens);

 private:
  struct Class {
    std::size_t rep = 0;
    std::vector<std::size_t> members;
    std::shared_ptr<const PermutationGroup> aut;  // on rep member indices
    bool live = true;
  };

  bool add_one(const GroupMap& f);
  void close();
  void regenerate(Class& c, std::vector<Perm> gens);

  Subgroup base_;
  std::uint32_t prime_ = 0;
  std::vector<Subgroup> universe_;
  std::unordered_map<Subgroup, std::size_t, SubgroupHash> index_;
  std::vector<std::vector<std::size_t>> maximal_;
  std::vector<std::size_t> class_of_;
  std::vector<Class> classes_;
  std::vector<GroupMap> psi_;      // psi_[id] : X -> rep
  std::vector<GroupMap> psi_inv_;  // psi_inv_[id] : rep -> X
  std::deque<GroupMap> worklist_;
};

FusionSystem inner_fusion(const Subgroup& p);
/// F_P(G) for a Sylow p-subgroup P of G (given as a subgroup of G's table).
/// Throws std::invalid_argument if P is not Sylow, std::length_error when |G| > 10^4.
FusionSystem from_group(const Subgroup& g, const Subgroup& p);
FusionSystem generate_fusion(const Subgroup& p, const std::vector<AutomizerSpec>& specs);

bool is_strongly_closed(const FusionSystem& F, const Subgroup& q);
/// Universe ids of all strongly closed subgroups.
std::vector<std::size_t> strongly_closed_subgroups(const FusionSystem& F);

bool is_fully_normalized(const FusionSystem& F, std::size_t id);
bool is_fully_centralized(const FusionSystem& F, std::size_t id);
bool is_fully_automized(const FusionSystem& F, std::size_t id);

struct ReceptivityFailure {
  std::size_t source = 0;  // R, with phi : R -> Q
  GroupMap phi;
  Subgroup n_phi;
};
struct ReceptivityReport {
  bool receptive = true;
  std::size_t isomorphisms_checked = 0;
  std::vector<ReceptivityFailure> failures;  // at most a few
};
/// N_phi for phi : R -> Q.
Subgroup n_phi(const FusionSystem& F, const GroupMap& phi);
ReceptivityReport is_receptive(const FusionSystem& F, std::size_t id);

struct SaturationReport {
  struct ClassVerdict {
    std::size_t cls = 0;
    std::size_t representative = 0;
    std::optional<std::size_t> witness;  // fully automized and receptive member
  };
  bool saturated = true;
  std::vector<ClassVerdict> classes;
};
SaturationReport is_saturated(const FusionSystem& F);

/// Out_F(Q) = Aut_F(Q)/Inn(Q).
QuotientGroup out_f(const FusionSystem& F, std::size_t id);
bool is_centric(const FusionSystem& F, std::size_t id);
bool is_radical(const FusionSystem& F, std::size_t id);
/// Centric, radical and fully normalized subgroups (including P itself).
std::vector<std::size_t> alperin_subgroups(const FusionSystem& F);

/// Largest normal p-subgroup of a group.
Subgroup largest_normal_p_subgroup(const Subgroup& whole, std::uint32_t p);

/// Lower bound for a subsystem over T normal in Ftilde: Hom_T and the seeds,
/// closed under composition, restriction and twisting by Ftilde-isomorphisms
/// psi defined on <Q, R> (alpha : Q -> R becomes psi alpha psi^-1).  The seed
/// subjects must lie in T.  Throws std::invalid_argument unless T is strongly
/// closed in Ftilde.
FusionSystem invariant_closure(const FusionSystem& Ftilde, const Subgroup& t, const std::vector<AutomizerSpec>& seeds);

struct InvarianceWitness {
  GroupMap gamma;          // element of Aut_Ftilde(T)
  GroupMap moved;          // a in A with gamma a gamma^-1 outside A
  Mat2F3 gamma_matrix;     // Frattini matrix of gamma in the given basis
};
/// Some gamma in Aut_Ftilde(T) with gamma A gamma^-1 != A, or none.  A acts on
/// indices into T.members().  (b1, b2) is the Frattini basis for the matrix.
std::optional<InvarianceWitness> automizer_invariance_violation(const FusionSystem& Ftilde, const Subgroup& t,
                                                                const PermutationGroup& a, std::uint32_t b1,
                                                                std::uint32_t b2);

/// Perm of Q indices induced by an automorphism of Q.
PermutationGroup::Perm perm_of_automorphism(const GroupMap& f);
GroupMap automorphism_of_perm(const Subgroup& q, const PermutationGroup::Perm& p);

}  // namespace mnc
