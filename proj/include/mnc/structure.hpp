#pragma once

// Subgroups, series and lattice enumeration over finite groups addressed by
// dense indices 0..n-1 (0 is the identity).  The same algorithms run on a
// B(3,r;...) group (indices are element codes) and on explicit multiplication
// tables such as GL_2(3) or an automorphism group.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mnc/pcgroup.hpp"

namespace mnc {

class GroupOps {
 public:
  virtual ~GroupOps() = default;
  virtual std::uint32_t size() const = 0;
  virtual std::uint32_t mul(std::uint32_t x, std::uint32_t y) const = 0;
  virtual std::uint32_t inv(std::uint32_t x) const = 0;
  virtual std::string label(std::uint32_t x) const = 0;

  std::uint32_t conj(std::uint32_t x, std::uint32_t g) const { return mul(mul(g, x), inv(g)); }
  std::uint32_t comm(std::uint32_t x, std::uint32_t y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }
  std::uint32_t pow(std::uint32_t x, long long n) const;
  std::uint32_t element_order(std::uint32_t x) const;
};

/// A B(3,r;...) group seen through GroupOps.  Products come from a Cayley table
/// when 3^r <= kTableLimit, otherwise from the collector.
class PcGroupOps final : public GroupOps {
 public:
  static constexpr std::uint32_t kTableLimit = 2187;

  explicit PcGroupOps(std::shared_ptr<const Group> group);

  const Group& group() const { return *group_; }
  std::shared_ptr<const Group> group_ptr() const { return group_; }

  std::uint32_t size() const override { return static_cast<std::uint32_t>(group_->order()); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override;
  std::uint32_t inv(std::uint32_t x) const override { return inverse_[x]; }
  std::string label(std::uint32_t x) const override { return group_->format(Element{x}); }

 private:
  std::shared_ptr<const Group> group_;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint32_t> inverse_;
};

std::shared_ptr<const PcGroupOps> make_pc_ops(const GroupParams& params);

class Subgroup {
 public:
  Subgroup() = default;
  /// `members` must be closed and sorted; `generators` must generate it.
  Subgroup(std::shared_ptr<const GroupOps> parent, std::vector<std::uint32_t> members,
           std::vector<std::uint32_t> generators);

  const GroupOps& parent() const { return *parent_; }
  const std::shared_ptr<const GroupOps>& parent_ptr() const { return parent_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(members_.size()); }
  bool contains(std::uint32_t x) const { return (bits_[x >> 6] >> (x & 63)) & 1u; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  const std::vector<std::uint32_t>& generators() const { return generators_; }
  /// Position of x in members(), or -1.
  std::int64_t index_of(std::uint32_t x) const;
  bool is_subgroup_of(const Subgroup& other) const;
  std::size_t hash() const { return hash_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }

  /// Generator words, sorted, in the parent's label format.
  std::vector<std::string> generator_labels() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.bits_ == b.bits_; }
  /// Canonical order: by order, then by membership bitset.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::shared_ptr<const GroupOps> parent_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> generators_;
  std::size_t hash_ = 0;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& s) const { return s.hash(); }
};

Subgroup whole_group(std::shared_ptr<const GroupOps> parent);
Subgroup subgroup_generated(std::shared_ptr<const GroupOps> parent,
                            const std::vector<std::uint32_t>& gens);
/// Convenience for pc groups.
Subgroup subgroup_generated(const std::shared_ptr<const PcGroupOps>& G,
                            const std::vector<Element>& gens);
/// `members` must form a subgroup; generators are chosen greedily.
Subgroup subgroup_from_members(std::shared_ptr<const GroupOps> parent, std::vector<std::uint32_t> members);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
Subgroup conjugate(const Subgroup& q, std::uint32_t g);

Subgroup center(const Subgroup& q);
/// C_H(Q) and N_H(Q).
Subgroup centralizer(const Subgroup& h, const Subgroup& q);
Subgroup normalizer(const Subgroup& h, const Subgroup& q);
bool is_normal(const Subgroup& q, const Subgroup& in);
bool is_abelian(const Subgroup& q);
/// [A, B] inside <A, B>.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
Subgroup normal_closure(const Subgroup& q, const Subgroup& in);
/// Q = L_1 >= L_2 = [Q,Q] >= ... down to the first repeated term.
std::vector<Subgroup> literal_lower_central_series(const Subgroup& q);

/// The indexed family gamma_i = <s_i, s_{i+1}> for i = 1..r-1 (gamma_1 is the
/// index-3 subgroup <s1, s2>, not the literal first term of the lower central
/// series).  Element [0] is gamma_1.
std::vector<Subgroup> lower_central_series(const std::shared_ptr<const PcGroupOps>& G);

/// Every subgroup of a finite solvable group, canonically sorted.  Throws
/// std::length_error when more than `cap` subgroups are found.
std::vector<Subgroup> all_subgroups(const Subgroup& q, std::size_t cap = 200000);
std::vector<Subgroup> subgroups_of_order(const Subgroup& q, std::uint32_t order);
/// Normal subgroups via joins of normal closures of conjugacy classes.
std::vector<Subgroup> normal_subgroups(const Subgroup& q);
/// Conjugacy classes of elements of q, each sorted, classes ordered by least member.
std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Subgroup& q);
/// Partition of `subgroups` into H-conjugacy classes (indices into the input).
std::vector<std::vector<std::size_t>> conjugacy_classes_of_subgroups(
    const std::vector<Subgroup>& subgroups, const Subgroup& h);

struct IsoFingerprint {
  std::uint64_t order = 1;
  std::uint64_t exponent = 1;
  std::vector<std::uint64_t> abelianization;  // cyclic factor orders, descending
  std::uint64_t center_order = 1;
  int nilpotency_class = 0;                   // -1 when not nilpotent
  std::map<std::uint64_t, std::uint64_t> order_census;

  friend bool operator==(const IsoFingerprint&, const IsoFingerprint&) = default;
};

std::string to_string(const IsoFingerprint& f);

/// Requires q to be a p-group of order at most kFingerprintBound.
IsoFingerprint fingerprint(const Subgroup& q);
inline constexpr std::uint32_t kFingerprintBound = 6561;

/// Phi(Q) = Q^p [Q,Q] for a p-group.
Subgroup frattini_subgroup(const Subgroup& q);
/// Elements whose images form a basis of Q/Phi(Q), greedy in member order.
std::vector<std::uint32_t> frattini_basis(const Subgroup& q);
/// Two-element basis; throws std::invalid_argument unless |Q/Phi(Q)| = 9.
std::pair<std::uint32_t, std::uint32_t> frattini_quotient_basis(const Subgroup& q);

struct NamedSubgroups {
  int k = 0;  // r = 2k or r = 2k + 1
  std::vector<Subgroup> gamma_series;  // gamma_1 .. gamma_{r-1}
  Subgroup center;
  Element zeta;
  Element zeta_prime;
  std::map<int, Subgroup> E;  // E_i = <zeta, zeta', s s1^i>,  i in {-1, 0, 1}
  std::map<int, Subgroup> V;  // V_i = <zeta, s s1^i>
};

/// Requires beta = 0.  Throws std::invalid_argument otherwise.
NamedSubgroups named_subgroups(const std::shared_ptr<const PcGroupOps>& G);

}  // namespace mnc
