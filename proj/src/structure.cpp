#include "mnc/structure.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mnc {

namespace {

std::vector<std::uint64_t> empty_bits(std::uint32_t n) { return std::vector<std::uint64_t>((n + 63) / 64, 0); }

void set_bit(std::vector<std::uint64_t>& bits, std::uint32_t x) { bits[x >> 6] |= std::uint64_t{1} << (x & 63); }

bool test_bit(const std::vector<std::uint64_t>& bits, std::uint32_t x) { return (bits[x >> 6] >> (x & 63)) & 1u; }

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

// Closure of `start` (already a subgroup, possibly trivial) under right
// multiplication by the extra generators.
std::vector<std::uint32_t> close_members(const GroupOps& G, const std::vector<std::uint32_t>& start,
                                         const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint64_t> seen = empty_bits(G.size());
  std::vector<std::uint32_t> out;
  std::deque<std::uint32_t> queue;
  for (auto x : start) {
    set_bit(seen, x);
    out.push_back(x);
    queue.push_back(x);
  }
  if (out.empty()) {
    set_bit(seen, 0);
    out.push_back(0);
    queue.push_back(0);
  }
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto g : gens) {
      auto y = G.mul(x, g);
      if (!test_bit(seen, y)) {
        set_bit(seen, y);
        out.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup subgroup_from_members(std::shared_ptr<const GroupOps> parent, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> current{0};
  std::vector<std::uint64_t> have = empty_bits(parent->size());
  set_bit(have, 0);
  for (auto x : members) {
    if (test_bit(have, x)) continue;
    gens.push_back(x);
    current = close_members(*parent, current, gens);
    for (auto y : current) set_bit(have, y);
    if (current.size() == members.size()) break;
  }
  return Subgroup(parent, std::move(members), std::move(gens));
}

std::uint32_t GroupOps::pow(std::uint32_t x, long long n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  std::uint32_t result = 0;
  while (n > 0) {
    if (n & 1) result = mul(result, x);
    x = mul(x, x);
    n >>= 1;
  }
  return result;
}

std::uint32_t GroupOps::element_order(std::uint32_t x) const {
  std::uint32_t n = 1;
  for (auto y = x; y != 0; y = mul(y, x)) ++n;
  return n;
}

PcGroupOps::PcGroupOps(std::shared_ptr<const Group> group) : group_(std::move(group)) {
  const auto n = size();
  inverse_.resize(n);
  for (std::uint32_t x = 0; x < n; ++x) inverse_[x] = group_->inv(Element{x}).code();
  if (n <= kTableLimit) {
    table_.resize(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        table_[std::size_t{x} * n + y] = static_cast<std::uint16_t>(group_->mul(Element{x}, Element{y}).code());
  }
}

std::uint32_t PcGroupOps::mul(std::uint32_t x, std::uint32_t y) const {
  if (!table_.empty()) return table_[std::size_t{x} * size() + y];
  return group_->mul(Element{x}, Element{y}).code();
}

std::shared_ptr<const PcGroupOps> make_pc_ops(const GroupParams& params) {
  return std::make_shared<const PcGroupOps>(std::make_shared<const Group>(params));
}

Subgroup::Subgroup(std::shared_ptr<const GroupOps> parent, std::vector<std::uint32_t> members,
                   std::vector<std::uint32_t> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  bits_ = empty_bits(parent_->size());
  for (auto x : members_) set_bit(bits_, x);
  std::size_t h = 1469598103934665603ull;
  for (auto w : bits_) h = (h ^ w) * 1099511628211ull;
  hash_ = h;
}

std::int64_t Subgroup::index_of(std::uint32_t x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return -1;
  return it - members_.begin();
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if ((bits_[i] & ~other.bits_[i]) != 0) return false;
  return true;
}

std::vector<std::string> Subgroup::generator_labels() const {
  std::vector<std::string> out;
  for (auto g : generators_) out.push_back(parent_->label(g));
  std::sort(out.begin(), out.end());
  return out;
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.members_ < b.members_;
}

Subgroup whole_group(std::shared_ptr<const GroupOps> parent) {
  std::vector<std::uint32_t> all(parent->size());
  std::iota(all.begin(), all.end(), 0u);
  return subgroup_from_members(parent, std::move(all));
}

Subgroup subgroup_generated(std::shared_ptr<const GroupOps> parent, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint32_t> members{0};
  std::vector<std::uint32_t> used;
  for (auto g : gens) {
    if (std::binary_search(members.begin(), members.end(), g)) continue;
    used.push_back(g);
    members = close_members(*parent, members, used);
  }
  return Subgroup(std::move(parent), std::move(members), std::move(used));
}

Subgroup subgroup_generated(const std::shared_ptr<const PcGroupOps>& G, const std::vector<Element>& gens) {
  std::vector<std::uint32_t> codes;
  for (auto g : gens) codes.push_back(g.code());
  return subgroup_generated(std::static_pointer_cast<const GroupOps>(G), codes);
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_generated(a.parent_ptr(), gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<std::uint32_t> m;
  for (auto x : a.members())
    if (b.contains(x)) m.push_back(x);
  return subgroup_from_members(a.parent_ptr(), std::move(m));
}

Subgroup conjugate(const Subgroup& q, std::uint32_t g) {
  const auto& G = q.parent();
  std::vector<std::uint32_t> m;
  m.reserve(q.order());
  for (auto x : q.members()) m.push_back(G.conj(x, g));
  std::sort(m.begin(), m.end());
  std::vector<std::uint32_t> gens;
  for (auto x : q.generators()) gens.push_back(G.conj(x, g));
  return Subgroup(q.parent_ptr(), std::move(m), std::move(gens));
}

Subgroup center(const Subgroup& q) { return centralizer(q, q); }

Subgroup centralizer(const Subgroup& h, const Subgroup& q) {
  const auto& G = h.parent();
  std::vector<std::uint32_t> m;
  for (auto x : h.members()) {
    bool ok = true;
    for (auto g : q.generators())
      if (G.mul(x, g) != G.mul(g, x)) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  return subgroup_from_members(h.parent_ptr(), std::move(m));
}

Subgroup normalizer(const Subgroup& h, const Subgroup& q) {
  const auto& G = h.parent();
  std::vector<std::uint32_t> m;
  for (auto x : h.members()) {
    bool ok = true;
    for (auto g : q.generators())
      if (!q.contains(G.conj(g, x))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(x);
  }
  return subgroup_from_members(h.parent_ptr(), std::move(m));
}

bool is_normal(const Subgroup& q, const Subgroup& in) {
  const auto& G = q.parent();
  for (auto g : in.generators())
    for (auto x : q.generators())
      if (!q.contains(G.conj(x, g))) return false;
  return true;
}

bool is_abelian(const Subgroup& q) {
  const auto& G = q.parent();
  const auto& gens = q.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (G.mul(gens[i], gens[j]) != G.mul(gens[j], gens[i])) return false;
  return true;
}

Subgroup normal_closure(const Subgroup& q, const Subgroup& in) {
  const auto& G = q.parent();
  auto gens = q.generators();
  auto current = q;
  for (;;) {
    bool grew = false;
    for (auto g : in.generators()) {
      for (std::size_t i = 0; i < current.generators().size(); ++i) {
        auto y = G.conj(current.generators()[i], g);
        if (!current.contains(y)) {
          gens.push_back(y);
          current = subgroup_generated(q.parent_ptr(), gens);
          gens = current.generators();
          grew = true;
        }
      }
    }
    if (!grew) return current;
  }
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const auto& G = a.parent();
  std::vector<std::uint32_t> gens;
  for (auto x : a.generators())
    for (auto y : b.generators()) gens.push_back(G.comm(x, y));
  return normal_closure(subgroup_generated(a.parent_ptr(), gens), join(a, b));
}

std::vector<Subgroup> literal_lower_central_series(const Subgroup& q) {
  std::vector<Subgroup> out{q};
  for (;;) {
    auto next = commutator_subgroup(out.back(), q);
    if (next == out.back()) return out;
    out.push_back(std::move(next));
  }
}

std::vector<Subgroup> lower_central_series(const std::shared_ptr<const PcGroupOps>& G) {
  const auto& grp = G->group();
  const int r = grp.rank();
  std::vector<Subgroup> out;
  for (int i = 1; i <= r - 1; ++i) {
    std::vector<Element> gens{grp.generator(i)};
    if (i + 1 <= r - 1) gens.push_back(grp.generator(i + 1));
    out.push_back(subgroup_generated(G, gens));
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const Subgroup& q, std::size_t cap) {
  const auto& G = q.parent();
  const auto primes = prime_factors(q.order());
  std::unordered_set<Subgroup, SubgroupHash> found;
  std::deque<Subgroup> queue;
  auto trivial = subgroup_generated(q.parent_ptr(), {});
  found.insert(trivial);
  queue.push_back(trivial);
  std::vector<std::uint64_t> visited = empty_bits(G.size());
  while (!queue.empty()) {
    Subgroup h = std::move(queue.front());
    queue.pop_front();
    const auto n = normalizer(q, h);
    std::fill(visited.begin(), visited.end(), 0);
    for (auto x : n.members()) {
      if (h.contains(x) || test_bit(visited, x)) continue;
      for (auto y : h.members()) set_bit(visited, G.mul(x, y));
      std::uint32_t ell = 0;
      for (auto p : primes)
        if (h.contains(G.pow(x, p))) {
          ell = p;
          break;
        }
      if (ell == 0) continue;
      // K = H + xH + ... + x^(ell-1)H, with H normalized by x.
      std::vector<std::uint32_t> m;
      m.reserve(std::size_t{ell} * h.order());
      std::uint32_t xi = 0;
      for (std::uint32_t i = 0; i < ell; ++i) {
        for (auto y : h.members()) m.push_back(G.mul(xi, y));
        xi = G.mul(xi, x);
      }
      std::sort(m.begin(), m.end());
      auto gens = h.generators();
      gens.push_back(x);
      Subgroup k(q.parent_ptr(), std::move(m), std::move(gens));
      if (found.insert(k).second) {
        if (found.size() > cap) throw std::length_error("subgroup enumeration exceeded cap");
        queue.push_back(std::move(k));
      }
    }
  }
  std::vector<Subgroup> out(found.begin(), found.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> subgroups_of_order(const Subgroup& q, std::uint32_t order) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(q))
    if (h.order() == order) out.push_back(h);
  return out;
}

std::vector<std::vector<std::uint32_t>> conjugacy_classes(const Subgroup& q) {
  const auto& G = q.parent();
  std::vector<std::uint64_t> seen = empty_bits(G.size());
  std::vector<std::vector<std::uint32_t>> out;
  for (auto x : q.members()) {
    if (test_bit(seen, x)) continue;
    std::vector<std::uint32_t> cls{x};
    set_bit(seen, x);
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto g : q.generators()) {
        auto y = G.conj(cls[i], g);
        if (!test_bit(seen, y)) {
          set_bit(seen, y);
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& q) {
  std::vector<Subgroup> closures;
  for (auto& cls : conjugacy_classes(q)) {
    auto c = subgroup_generated(q.parent_ptr(), cls);
    if (std::find(closures.begin(), closures.end(), c) == closures.end()) closures.push_back(std::move(c));
  }
  std::unordered_set<Subgroup, SubgroupHash> found;
  std::vector<Subgroup> list;
  auto trivial = subgroup_generated(q.parent_ptr(), {});
  found.insert(trivial);
  list.push_back(trivial);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (const auto& c : closures) {
      if (c.is_subgroup_of(list[i])) continue;
      auto j = join(list[i], c);
      if (found.insert(j).second) list.push_back(std::move(j));
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<std::vector<std::size_t>> conjugacy_classes_of_subgroups(const std::vector<Subgroup>& subgroups,
                                                                     const Subgroup& h) {
  std::unordered_map<Subgroup, std::size_t, SubgroupHash> index;
  for (std::size_t i = 0; i < subgroups.size(); ++i) index.emplace(subgroups[i], i);
  std::vector<bool> assigned(subgroups.size(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls{i};
    assigned[i] = true;
    for (std::size_t j = 0; j < cls.size(); ++j)
      for (auto g : h.generators()) {
        auto it = index.find(conjugate(subgroups[cls[j]], g));
        if (it == index.end()) throw std::invalid_argument("subgroup list is not closed under conjugation");
        if (!assigned[it->second]) {
          assigned[it->second] = true;
          cls.push_back(it->second);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::string to_string(const IsoFingerprint& f) {
  std::ostringstream os;
  os << "order " << f.order << ", exponent " << f.exponent << ", abelianization [";
  for (std::size_t i = 0; i < f.abelianization.size(); ++i) os << (i ? "," : "") << f.abelianization[i];
  os << "], center " << f.center_order << ", class " << f.nilpotency_class << ", orders {";
  bool first = true;
  for (auto [o, c] : f.order_census) {
    os << (first ? "" : ", ") << o << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

IsoFingerprint fingerprint(const Subgroup& q) {
  if (q.order() > kFingerprintBound) throw std::length_error("fingerprint: subgroup too large");
  const auto primes = prime_factors(q.order());
  if (primes.size() > 1) throw std::invalid_argument("fingerprint: not a p-group");
  const auto& G = q.parent();
  IsoFingerprint f;
  f.order = q.order();
  for (auto x : q.members()) {
    auto o = G.element_order(x);
    f.order_census[o]++;
    f.exponent = std::max<std::uint64_t>(f.exponent, o);
  }
  f.center_order = center(q).order();
  if (q.order() == 1) return f;
  const std::uint32_t p = primes.front();

  const auto lcs = literal_lower_central_series(q);
  f.nilpotency_class = lcs.back().order() == 1 ? static_cast<int>(lcs.size()) - 1 : -1;

  // Q/D is abelian; |Omega_k(Q/D)| = p^(sum_i min(a_i, k)) recovers the a_i.
  const Subgroup& d = lcs.size() > 1 ? lcs[1] : lcs[0];
  const std::uint64_t quotient = q.order() / d.order();
  std::vector<std::uint32_t> pw(q.members().begin(), q.members().end());
  std::vector<int> log_omega{0};
  for (;;) {
    for (auto& x : pw) x = G.pow(x, p);
    std::uint64_t count = 0;
    for (auto x : pw)
      if (d.contains(x)) ++count;
    std::uint64_t omega = count / d.order();
    int lg = 0;
    while (omega > 1) {
      omega /= p;
      ++lg;
    }
    log_omega.push_back(lg);
    std::uint64_t full = 1;
    for (int i = 0; i < lg; ++i) full *= p;
    if (full == quotient) break;
  }
  // n_k = number of cyclic factors of order >= p^k.
  std::vector<int> n(log_omega.size() + 1, 0);
  for (std::size_t k = 1; k < log_omega.size(); ++k) n[k] = log_omega[k] - log_omega[k - 1];
  for (std::size_t k = log_omega.size() - 1; k >= 1; --k) {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < k; ++i) ord *= p;
    for (int c = 0; c < n[k] - n[k + 1]; ++c) f.abelianization.push_back(ord);
  }
  return f;
}

Subgroup frattini_subgroup(const Subgroup& q) {
  const auto& G = q.parent();
  const auto primes = prime_factors(q.order());
  if (primes.size() > 1) throw std::invalid_argument("frattini_subgroup: not a p-group");
  if (q.order() == 1) return q;
  const std::uint32_t p = primes.front();
  auto d = commutator_subgroup(q, q);
  auto gens = d.generators();
  auto current = d;
  for (auto x : q.members()) {
    auto y = G.pow(x, p);
    if (!current.contains(y)) {
      gens.push_back(y);
      current = subgroup_generated(q.parent_ptr(), gens);
      gens = current.generators();
    }
  }
  return current;
}

std::vector<std::uint32_t> frattini_basis(const Subgroup& q) {
  auto phi = frattini_subgroup(q);
  auto gens = phi.generators();
  auto current = phi;
  std::vector<std::uint32_t> basis;
  auto consider = [&](std::uint32_t x) {
    if (current.contains(x)) return;
    basis.push_back(x);
    gens.push_back(x);
    current = subgroup_generated(q.parent_ptr(), gens);
  };
  for (auto x : q.generators()) consider(x);
  for (auto x : q.members())
    if (current.order() < q.order()) consider(x);
  return basis;
}

std::pair<std::uint32_t, std::uint32_t> frattini_quotient_basis(const Subgroup& q) {
  auto basis = frattini_basis(q);
  if (basis.size() != 2) throw std::invalid_argument("frattini_quotient_basis: subgroup is not 2-generated");
  return {basis[0], basis[1]};
}

NamedSubgroups named_subgroups(const std::shared_ptr<const PcGroupOps>& G) {
  const auto& grp = G->group();
  if (grp.params().beta != 0) throw std::invalid_argument("named_subgroups: requires beta = 0");
  const int r = grp.rank();
  NamedSubgroups out;
  out.k = r / 2;
  const int k = out.k;
  auto p3 = [](int e) {
    long long v = 1;
    for (int i = 0; i < e; ++i) v *= 3;
    return v;
  };
  const Element s1 = grp.generator(1);
  const Element s2 = grp.generator(2);
  if (r % 2 == 0) {
    out.zeta = grp.pow(s1, p3(k - 1));
    out.zeta_prime = grp.pow(s2, -p3(k - 2));
  } else {
    out.zeta = grp.pow(s2, p3(k - 1));
    out.zeta_prime = grp.pow(s1, p3(k - 1));
  }
  out.gamma_series = lower_central_series(G);
  out.center = center(whole_group(G));
  for (int i = -1; i <= 1; ++i) {
    Element x = grp.mul(grp.s(), grp.pow(s1, i));
    out.E.emplace(i, subgroup_generated(G, {out.zeta, out.zeta_prime, x}));
    out.V.emplace(i, subgroup_generated(G, {out.zeta, x}));
  }
  return out;
}

}  // namespace mnc
