#pragma once

// Exact arithmetic in the rank-two maximal-class 3-groups B(3,r;beta,gamma,delta).
//
// Elements are stored in power-commutator normal form
//     s^a * s1^d1 * s2^d2 * ... * s_{r-1}^d_{r-1},   0 <= a, d_i < 3,
// packed into a single integer code.  The subgroup gamma_1 = <s1, s2, ...> has
// index 3; s acts on it by the automorphism phi(x) = s x s^-1 which is tabulated
// once per group.  Where gamma_1 = <s1> x <s2> (every admissible group except
// B(3,4;0,1,0), whose gamma_1 is elementary abelian of rank 3) the element also
// has coordinates (a, e1, e2) meaning s^a * s1^e1 * s2^e2, which is what the
// canonical text format prints.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mnc {

struct GroupParams {
  int p = 3;
  int r = 4;
  int beta = 0;
  int gamma = 0;
  int delta = 0;

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

/// "B(3,4;0,2,0)".
std::string to_string(const GroupParams& params);

/// Admissible (beta, gamma, delta) triples for the given r, in a fixed order.
std::vector<GroupParams> admissible_params(int r);

/// Empty when admissible, otherwise the reason for rejection.
std::optional<std::string> params_rejection(const GroupParams& params);

class Element {
 public:
  constexpr Element() = default;
  constexpr explicit Element(std::uint32_t code) : code_(code) {}

  constexpr std::uint32_t code() const { return code_; }

  friend constexpr bool operator==(Element, Element) = default;
  friend constexpr auto operator<=>(Element, Element) = default;

 private:
  std::uint32_t code_ = 0;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class Group;
namespace testing {
/// A copy whose conjugation by s no longer respects relation 1.
Group corrupt_conjugation(const Group& group);
/// A copy in which s_i^3 is collected as 1 (1 <= i < r).
Group corrupt_power(const Group& group, int i);
}

class Group {
 public:
  // Largest supported r; the conjugation tables have 3^(r-1) entries.
  static constexpr int kMaxRank = 12;
  static constexpr std::uint64_t kDefaultEnumerationBound = 59049;  // 3^10

  /// Throws std::invalid_argument when the parameters are inadmissible.
  explicit Group(GroupParams params);

  const GroupParams& params() const { return params_; }
  int rank() const { return params_.r; }
  std::uint64_t order() const { return order_; }

  Element identity() const { return Element{0}; }
  Element s() const { return Element{gamma_order_}; }
  /// i = 0 is s, 1 <= i <= r-1 is s_i.  Throws std::out_of_range otherwise.
  Element generator(int i) const;

  Element mul(Element x, Element y) const;
  Element inv(Element x) const;
  Element pow(Element x, long long n) const;
  /// g x g^-1
  Element conj(Element x, Element g) const;
  /// [x, y] = x y x^-1 y^-1
  Element comm(Element x, Element y) const;
  std::uint64_t element_order(Element x) const;

  bool contains(Element x) const { return x.code() < order_; }
  Element from_code(std::uint32_t code) const;
  int s_exponent(Element x) const { return static_cast<int>(x.code() / gamma_order_); }
  bool in_gamma1(Element x) const { return x.code() < gamma_order_; }
  /// Exponents (d_1, ..., d_{r-1}) of the pc normal form of the gamma_1 part.
  std::vector<int> pc_exponents(Element x) const;

  /// True when gamma_1 = <s1> x <s2> with |s1| = 3^floor(r/2), |s2| = 3^floor((r-1)/2).
  bool has_coordinates() const { return !coord_of_.empty(); }
  std::uint32_t s1_modulus() const { return m1_; }
  std::uint32_t s2_modulus() const { return m2_; }
  /// (e1, e2) with x = s^a s1^e1 s2^e2; empty when has_coordinates() is false.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> coordinates(Element x) const;
  Element from_coordinates(int a, long long e1, long long e2) const;

  Element parse_word(std::string_view text) const;
  std::string format(Element x) const;

  /// All 3^r elements in code order.  Throws std::length_error above `bound`.
  std::vector<Element> elements(std::uint64_t bound = kDefaultEnumerationBound) const;

 private:
  friend Group testing::corrupt_conjugation(const Group& group);
  friend Group testing::corrupt_power(const Group& group, int i);

  using Digits = std::array<int, kMaxRank + 2>;

  std::uint32_t gamma_mul(std::uint32_t x, std::uint32_t y) const;
  std::uint32_t gamma_inv(std::uint32_t x) const;
  std::uint32_t gamma_pow(std::uint32_t x, std::uint64_t n) const;
  std::uint32_t normalize(Digits v) const;
  Digits digits(std::uint32_t gamma_code) const;
  std::uint32_t unit(int i) const;
  void build_coordinates();

  GroupParams params_;
  std::uint64_t order_ = 0;
  std::uint32_t gamma_order_ = 0;  // 3^(r-1)
  std::vector<Digits> cube_;       // cube_[i] = digits of s_i^3, entries only beyond i
  std::uint32_t s_cubed_ = 0;      // s^3 = s_{r-1}^delta as a gamma code
  std::vector<std::uint32_t> phi_;      // s x s^-1
  std::vector<std::uint32_t> phi_inv_;  // s^-1 x s
  std::uint32_t m1_ = 0;
  std::uint32_t m2_ = 0;
  std::vector<std::uint32_t> coord_of_;  // gamma code -> e1 * m2 + e2
  std::vector<std::uint32_t> code_of_;   // e1 * m2 + e2 -> gamma code
};

struct RelationCheck {
  std::string relation;  // "1" .. "6"
  std::string instance;  // human readable, e.g. "s3 = [s,s2]"
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

struct PresentationReport {
  GroupParams params;
  std::vector<RelationCheck> checks;
  bool all_pass() const;
};

/// Evaluates every instance of the six defining relations under the implemented
/// multiplication; also records whether s and s1 generate the whole group.
PresentationReport verify_presentation(const Group& group);

}  // namespace mnc
