#pragma once

// Homomorphisms between subgroups, automorphism groups by generator-image
// search, explicit multiplication tables, and 2x2 matrices over F_3.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mnc/structure.hpp"

namespace mnc {

/// A homomorphism Q -> R between subgroups of one parent, stored as a full
/// table aligned with domain().members().
class GroupMap {
 public:
  GroupMap() = default;
  GroupMap(Subgroup domain, Subgroup codomain, std::vector<std::uint32_t> table);

  /// Extends generator images to a homomorphism; empty when no extension exists.
  static std::optional<GroupMap> extend(const Subgroup& domain, const Subgroup& codomain,
                                        const std::vector<std::uint32_t>& gens,
                                        const std::vector<std::uint32_t>& images);
  static GroupMap identity(const Subgroup& q);
  /// x -> g x g^-1 from q onto g q g^-1.
  static GroupMap conjugation(const Subgroup& q, std::uint32_t g);

  const Subgroup& domain() const { return domain_; }
  const Subgroup& codomain() const { return codomain_; }
  const std::vector<std::uint32_t>& table() const { return table_; }
  std::uint32_t operator()(std::uint32_t x) const;
  bool injective() const { return injective_; }
  /// The image f(domain), as a subgroup.
  Subgroup image() const;

  /// Images of domain().generators(), in that order.
  std::vector<std::uint32_t> generator_images() const;

  /// this o other (other applied first); requires other.image() <= domain().
  GroupMap after(const GroupMap& other) const;
  /// Requires injective(); the result maps image() back onto domain().
  GroupMap inverse() const;
  /// Restriction to a subgroup of the domain, with codomain the image.
  GroupMap restrict(const Subgroup& sub) const;
  /// Same map with codomain replaced (must contain the image).
  GroupMap with_codomain(const Subgroup& codomain) const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.domain_ == b.domain_ && a.table_ == b.table_;
  }

 private:
  Subgroup domain_;
  Subgroup codomain_;
  std::vector<std::uint32_t> table_;
  bool injective_ = false;
};

/// An explicit finite group: index 0 is the identity.
class FiniteGroupTable final : public GroupOps {
 public:
  static constexpr std::uint32_t kMaxOrder = 2000;

  /// Row-major n x n table.  Throws std::invalid_argument on axiom failure
  /// (associativity is checked when `check_associativity`).
  FiniteGroupTable(std::uint32_t n, std::vector<std::uint32_t> mul, std::vector<std::string> labels,
                   bool check_associativity = false);

  std::uint32_t size() const override { return n_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override { return mul_[std::size_t{x} * n_ + y]; }
  std::uint32_t inv(std::uint32_t x) const override { return inv_[x]; }
  std::string label(std::uint32_t x) const override { return labels_[x]; }

  bool is_associative() const;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::string> labels_;
};

/// A permutation group on {0..m-1} closed from generators.  Element 0 is the
/// identity permutation; composition is (a*b)(i) = a(b(i)).  Groups up to
/// FiniteGroupTable::kMaxOrder get a dense table, larger ones multiply on demand.
class PermutationGroup final : public GroupOps {
 public:
  using Perm = std::vector<std::uint32_t>;
  static constexpr std::uint32_t kMaxOrder = 100000;

  /// Throws std::length_error beyond kMaxOrder.
  /// `dense_table` false skips the n x n table even for small groups.
  static std::shared_ptr<const PermutationGroup> generate(
      std::uint32_t degree, const std::vector<Perm>& gens,
      const std::function<std::string(const Perm&)>& labeler = {}, bool dense_table = true);

  std::uint32_t size() const override { return static_cast<std::uint32_t>(perms_.size()); }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override;
  std::uint32_t inv(std::uint32_t x) const override { return inv_[x]; }
  std::string label(std::uint32_t x) const override;

  std::uint32_t degree() const { return degree_; }
  const Perm& perm(std::uint32_t x) const { return perms_.at(x); }
  const std::vector<Perm>& perms() const { return perms_; }
  const std::vector<Perm>& generators() const { return gens_; }
  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  std::optional<std::uint32_t> index_of(const Perm& p) const;

 private:
  struct PermHash {
    std::size_t operator()(const Perm& p) const;
  };
  std::uint32_t degree_ = 0;
  std::vector<Perm> perms_;
  std::vector<Perm> gens_;
  std::unordered_map<Perm, std::uint32_t, PermHash> index_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> inv_;
  std::function<std::string(const Perm&)> labeler_;
};

struct AutomorphismGroup {
  Subgroup q;
  std::vector<std::uint32_t> basis;  // minimal generators; automorphisms are determined by their images
  std::shared_ptr<const PermutationGroup> group;  // acting on indices into q.members()
  Subgroup inner;                                  // Inn(q) inside group

  std::uint32_t order() const { return group->size(); }
  GroupMap map(std::uint32_t index) const;
  std::optional<std::uint32_t> index_of(const GroupMap& f) const;
  /// Permutation of q.members() indices induced by f in Aut(q).
  PermutationGroup::Perm perm_of(const GroupMap& f) const;
  std::shared_ptr<const GroupOps> ops() const { return group; }
};

inline constexpr std::uint32_t kAutomorphismSearchBound = 729;

/// Full Aut(q) by search over images of a minimal generating set, pruned by
/// element order and the orders of pairwise commutators.  Throws
/// std::length_error when |q| exceeds kAutomorphismSearchBound.
AutomorphismGroup automorphism_group(const Subgroup& q);

struct QuotientGroup {
  std::shared_ptr<const FiniteGroupTable> table;
  std::vector<std::uint32_t> projection;    // element of the big group -> coset index
  std::vector<std::uint32_t> representative;  // coset index -> least element
};

/// G/N for a normal subgroup N of a table group.
QuotientGroup quotient(const Subgroup& whole, const Subgroup& normal);
/// Aut(Q)/Inn(Q).
QuotientGroup out_quotient(const AutomorphismGroup& aut);

/// Row-major [[a, b], [c, d]] with entries in {0, 1, 2}.
struct Mat2F3 {
  std::array<int, 4> e{1, 0, 0, 1};

  Mat2F3() = default;
  Mat2F3(int a, int b, int c, int d);
  int det() const;
  friend bool operator==(const Mat2F3&, const Mat2F3&) = default;
  friend auto operator<=>(const Mat2F3&, const Mat2F3&) = default;
};

std::string to_string(const Mat2F3& m);
Mat2F3 mat_mul(const Mat2F3& a, const Mat2F3& b);
/// Throws std::domain_error when det = 0.
Mat2F3 mat_inv(const Mat2F3& a);
/// ^a x = a x a^-1.
Mat2F3 mat_conj(const Mat2F3& a, const Mat2F3& x);

struct MatrixGroup {
  std::shared_ptr<const FiniteGroupTable> table;
  std::vector<Mat2F3> mats;  // index -> matrix; identity first, then lexicographic
  std::uint32_t index_of(const Mat2F3& m) const;
};

MatrixGroup gl2_3();
MatrixGroup sl2_3();

/// Matrix of the automorphism induced on Q/Phi(Q) in the basis (b1, b2), with
/// column convention: entry (i, j) is the coefficient of b_i in f(b_j).  Hence
/// frattini_matrix(f o g) = frattini_matrix(f) * frattini_matrix(g).  Throws
/// std::invalid_argument when (b1, b2) is not a Frattini basis of the domain.
Mat2F3 frattini_matrix(const GroupMap& f, std::uint32_t b1, std::uint32_t b2);

/// The same computation with Phi(Q) and the basis prepared once.
class FrattiniFrame {
 public:
  FrattiniFrame(const Subgroup& q, std::uint32_t b1, std::uint32_t b2);
  /// (c1, c2) with y = b1^c1 b2^c2 mod Phi(Q).
  std::pair<int, int> coordinates(std::uint32_t y) const;
  Mat2F3 matrix_of_images(std::uint32_t y1, std::uint32_t y2) const;
  Mat2F3 matrix(const GroupMap& f) const;

 private:
  Subgroup q_;
  Subgroup phi_;
  std::uint32_t b_[2] = {0, 0};
  std::uint32_t comb_inv_[3][3] = {};
};

/// Frattini matrices of every element of aut.group, by index.
std::vector<Mat2F3> frattini_matrices(const AutomorphismGroup& aut, std::uint32_t b1, std::uint32_t b2);

/// rho: Aut(Q) -> GL_2(3) as an index map, for 2-generated Q, in the basis
/// frattini_quotient_basis(Q).
std::vector<std::uint32_t> frattini_representation(const AutomorphismGroup& aut, const MatrixGroup& gl);

std::vector<Subgroup> normal_subgroups_of_table(const std::shared_ptr<const GroupOps>& table);
std::vector<Subgroup> subgroups_of_order(const std::shared_ptr<const GroupOps>& table, std::uint32_t order);
bool recognize_sd16(const Subgroup& s);
bool recognize_sl2_3(const Subgroup& s);

}  // namespace mnc
