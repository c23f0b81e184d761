#include "mnc/fusion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mnc {

namespace {

std::uint32_t smallest_prime(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return static_cast<std::uint32_t>(d);
  return n > 1 ? static_cast<std::uint32_t>(n) : 0;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) {
  if (p < 2) return n == 1;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t out = 1;
  while (p > 1 && n % p == 0) {
    n /= p;
    out *= p;
  }
  return out;
}

// The map y -> psi(alpha(psi^-1(y))) from psi(Q) to psi(alpha(Q)).
GroupMap twist(const GroupMap& psi, const GroupMap& alpha) {
  const auto& q = alpha.domain();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(q.order());
  for (std::size_t i = 0; i < q.members().size(); ++i)
    pairs.emplace_back(psi(q.members()[i]), psi(alpha.table()[i]));
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::uint32_t> members, table, gens, gimg;
  for (auto& [a, b] : pairs) {
    members.push_back(a);
    table.push_back(b);
  }
  for (auto g : q.generators()) gens.push_back(psi(g));
  for (auto g : alpha.generator_images()) gimg.push_back(psi(g));
  Subgroup dom(q.parent_ptr(), std::move(members), std::move(gens));
  Subgroup cod = subgroup_generated(q.parent_ptr(), gimg);
  return GroupMap(std::move(dom), std::move(cod), std::move(table));
}

struct PermHashFn {
  std::size_t operator()(const PermutationGroup::Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

PermutationGroup::Perm perm_of_automorphism(const GroupMap& f) {
  PermutationGroup::Perm p;
  p.reserve(f.table().size());
  for (auto y : f.table()) {
    const auto j = f.domain().index_of(y);
    if (j < 0) throw std::invalid_argument("perm_of_automorphism: not an endomorphism");
    p.push_back(static_cast<std::uint32_t>(j));
  }
  return p;
}

GroupMap automorphism_of_perm(const Subgroup& q, const PermutationGroup::Perm& p) {
  std::vector<std::uint32_t> table;
  table.reserve(p.size());
  for (auto j : p) table.push_back(q.members()[j]);
  return GroupMap(q, q, std::move(table));
}

FusionSystem::FusionSystem(const Subgroup& base, std::size_t universe_cap) : base_(base) {
  prime_ = smallest_prime(base.order());
  if (!is_power_of(base.order(), prime_)) throw std::invalid_argument("FusionSystem: base is not a p-group");
  universe_ = all_subgroups(base, universe_cap);
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], i);
  maximal_.resize(universe_.size());
  for (std::size_t i = 0; i < universe_.size(); ++i)
    for (std::size_t j = 0; j < universe_.size(); ++j)
      if (universe_[j].order() * prime_ == universe_[i].order() && universe_[j].is_subgroup_of(universe_[i]))
        maximal_[i].push_back(j);
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    class_of_.push_back(i);
    Class c;
    c.rep = i;
    c.members = {i};
    c.aut = PermutationGroup::generate(universe_[i].order(), {}, {}, false);
    classes_.push_back(std::move(c));
    psi_.push_back(GroupMap::identity(universe_[i]));
    psi_inv_.push_back(GroupMap::identity(universe_[i]));
  }
  add_conjugations(base.generators());
}

std::size_t FusionSystem::id_of(const Subgroup& q) const {
  auto it = index_.find(q);
  if (it == index_.end()) throw std::out_of_range("FusionSystem: subgroup outside the universe");
  return it->second;
}

std::vector<std::size_t> FusionSystem::class_ids() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].live) out.push_back(c);
  return out;
}

void FusionSystem::regenerate(Class& c, std::vector<Perm> gens) {
  auto all = c.aut->generators();
  auto group = c.aut;
  for (auto& g : gens) {
    if (group->contains(g)) continue;
    all.push_back(std::move(g));
    group = PermutationGroup::generate(universe_[c.rep].order(), all, {}, false);
  }
  c.aut = std::move(group);
}

bool FusionSystem::add_one(const GroupMap& f) {
  if (!f.injective()) throw std::invalid_argument("FusionSystem: morphism is not injective");
  const std::size_t q = id_of(f.domain());
  const std::size_t r = id_of(f.image());
  const std::size_t cq = class_of_[q];
  const std::size_t cr = class_of_[r];
  const Subgroup& rep_q = universe_[classes_[cq].rep];
  const Subgroup& rep_r = universe_[classes_[cr].rep];

  // a = psi_R f psi_Q^-1 : rep_q -> rep_r
  std::vector<std::uint32_t> a;
  a.reserve(rep_q.order());
  for (auto x : psi_inv_[q].table()) a.push_back(psi_[r](f(x)));

  if (cq == cr) {
    Perm p;
    p.reserve(a.size());
    for (auto y : a) p.push_back(static_cast<std::uint32_t>(rep_q.index_of(y)));
    if (classes_[cq].aut->contains(p)) return false;
    regenerate(classes_[cq], {std::move(p)});
    worklist_.push_back(f);
    return true;
  }

  GroupMap m(rep_q, rep_r, a);
  std::size_t keep = cr, drop = cq;
  if (classes_[cq].rep < classes_[cr].rep) {
    m = m.inverse();
    keep = cq;
    drop = cr;
  }
  // m : rep(drop) -> rep(keep)
  const GroupMap m_inv = m.inverse();
  const Subgroup& rep_keep = universe_[classes_[keep].rep];
  const Subgroup& rep_drop = universe_[classes_[drop].rep];
  for (auto x : classes_[drop].members) {
    psi_[x] = m.after(psi_[x]).with_codomain(rep_keep);
    psi_inv_[x] = psi_inv_[x].after(m_inv);
    class_of_[x] = keep;
  }
  std::vector<Perm> moved;
  for (const auto& g : classes_[drop].aut->generators()) {
    Perm p(rep_keep.order());
    for (std::size_t i = 0; i < rep_keep.order(); ++i) {
      const auto j = rep_drop.index_of(m_inv.table()[i]);
      p[i] = static_cast<std::uint32_t>(rep_keep.index_of(m(rep_drop.members()[g[j]])));
    }
    moved.push_back(std::move(p));
  }
  auto& members = classes_[keep].members;
  members.insert(members.end(), classes_[drop].members.begin(), classes_[drop].members.end());
  std::sort(members.begin(), members.end());
  classes_[drop].live = false;
  classes_[drop].members.clear();
  classes_[drop].aut.reset();
  regenerate(classes_[keep], std::move(moved));
  worklist_.push_back(f);
  return true;
}

void FusionSystem::close() {
  while (!worklist_.empty()) {
    GroupMap f = std::move(worklist_.front());
    worklist_.pop_front();
    for (auto m : maximal_[id_of(f.domain())]) add_one(f.restrict(universe_[m]));
  }
}

bool FusionSystem::add(const GroupMap& f) {
  bool changed = add_one(f);
  close();
  return changed;
}

bool FusionSystem::add(const AutomizerSpec& spec) {
  bool changed = false;
  for (const auto& g : spec.generators) {
    if (!(g.domain() == spec.subject)) throw std::invalid_argument("AutomizerSpec: generator has wrong domain");
    if (!(g.image() == spec.subject)) throw std::invalid_argument("AutomizerSpec: generator is not an automorphism");
    changed = add_one(g) || changed;
  }
  close();
  return changed;
}

void FusionSystem::add_conjugations(const std::vector<std::uint32_t>& g_elements) {
  const auto& G = base_.parent();
  for (auto g : g_elements) {
    for (const auto& x : universe_) {
      bool inside = true;
      for (auto y : x.generators())
        if (!base_.contains(G.conj(y, g))) {
          inside = false;
          break;
        }
      if (inside) add_one(GroupMap::conjugation(x, g));
    }
  }
  close();
}

bool FusionSystem::contains(const GroupMap& f) const {
  if (!f.injective()) return false;
  const std::size_t q = id_of(f.domain());
  const std::size_t r = id_of(f.image());
  if (class_of_[q] != class_of_[r]) return false;
  const auto& rep = universe_[classes_[class_of_[q]].rep];
  Perm p;
  p.reserve(rep.order());
  for (auto x : psi_inv_[q].table()) p.push_back(static_cast<std::uint32_t>(rep.index_of(psi_[r](f(x)))));
  return classes_[class_of_[q]].aut->contains(p);
}

std::vector<GroupMap> FusionSystem::automizer_generators(std::size_t id) const {
  const auto& c = classes_[class_of_[id]];
  std::vector<GroupMap> out;
  const auto& rep = universe_[c.rep];
  for (const auto& g : c.aut->generators()) {
    auto a = automorphism_of_perm(rep, g);
    out.push_back(psi_inv_[id].after(a).after(psi_[id]).with_codomain(universe_[id]));
  }
  return out;
}

std::shared_ptr<const PermutationGroup> FusionSystem::automizer(std::size_t id) const {
  const auto& c = classes_[class_of_[id]];
  if (c.rep == id) return c.aut;
  std::vector<Perm> gens;
  for (const auto& g : automizer_generators(id)) gens.push_back(perm_of_automorphism(g));
  return PermutationGroup::generate(universe_[id].order(), gens, {}, false);
}

std::uint64_t FusionSystem::automizer_order(std::size_t id) const { return classes_[class_of_[id]].aut->size(); }

GroupMap FusionSystem::automorphism(std::size_t id, std::uint32_t index) const {
  return automorphism_of_perm(universe_[id], automizer(id)->perm(index));
}

std::shared_ptr<const PermutationGroup> FusionSystem::base_automizer(std::size_t id) const {
  const auto& q = universe_[id];
  const auto n = normalizer(base_, q);
  std::vector<Perm> gens;
  for (auto g : n.generators()) gens.push_back(perm_of_automorphism(GroupMap::conjugation(q, g).with_codomain(q)));
  return PermutationGroup::generate(q.order(), gens, {}, false);
}

std::vector<GroupMap> FusionSystem::isomorphisms(std::size_t q, std::size_t r) const {
  std::vector<GroupMap> out;
  if (class_of_[q] != class_of_[r]) return out;
  const auto& c = classes_[class_of_[q]];
  const auto& rep = universe_[c.rep];
  std::vector<std::uint32_t> idx;
  for (auto y : psi_[q].table()) idx.push_back(static_cast<std::uint32_t>(rep.index_of(y)));
  for (const auto& a : c.aut->perms()) {
    std::vector<std::uint32_t> table;
    table.reserve(idx.size());
    for (auto j : idx) table.push_back(psi_inv_[r].table()[a[j]]);
    out.emplace_back(universe_[q], universe_[r], std::move(table));
  }
  return out;
}

std::optional<GroupMap> FusionSystem::some_isomorphism(std::size_t q, std::size_t r) const {
  if (class_of_[q] != class_of_[r]) return std::nullopt;
  return psi_inv_[r].after(psi_[q]);
}

std::vector<GroupMap> FusionSystem::isomorphism_generators(std::size_t q) const {
  const auto& c = classes_[class_of_[q]];
  const auto& rep = universe_[c.rep];
  std::vector<GroupMap> auts{GroupMap::identity(rep)};
  for (const auto& g : c.aut->generators()) auts.push_back(automorphism_of_perm(rep, g));
  std::vector<GroupMap> out;
  for (auto r : c.members)
    for (const auto& a : auts) out.push_back(psi_inv_[r].after(a).after(psi_[q]));
  return out;
}

bool FusionSystem::extends(std::size_t n_id, const GroupMap& phi) const {
  const auto& c = classes_[class_of_[n_id]];
  const auto& rep = universe_[c.rep];
  const auto& gens = phi.domain().generators();
  std::vector<std::uint32_t> idx, want;
  for (auto g : gens) {
    idx.push_back(static_cast<std::uint32_t>(rep.index_of(psi_[n_id](g))));
    want.push_back(phi(g));
  }
  for (const auto& a : c.aut->perms())
    for (auto y : c.members) {
      bool ok = true;
      for (std::size_t k = 0; k < gens.size() && ok; ++k) ok = psi_inv_[y].table()[a[idx[k]]] == want[k];
      if (ok) return true;
    }
  return false;
}

std::vector<std::uint32_t> FusionSystem::element_class(std::uint32_t x) const {
  const auto& G = base_.parent();
  const auto cyc = subgroup_generated(base_.parent_ptr(), {x});
  const auto id = id_of(cyc);
  const auto& c = classes_[class_of_[id]];
  const auto& rep = universe_[c.rep];
  const auto j = rep.index_of(psi_[id](x));
  std::set<std::uint32_t> orbit;
  for (const auto& a : c.aut->perms()) orbit.insert(a[j]);
  std::vector<std::uint32_t> out;
  for (auto y : c.members)
    for (auto k : orbit) out.push_back(psi_inv_[y].table()[k]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  (void)G;
  return out;
}

std::vector<std::uint32_t> FusionSystem::element_class_labels() const {
  const auto& G = base_.parent();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(G.size(), kUnset);
  for (auto x : base_.members()) {
    if (label[x] != kUnset) continue;
    auto cls = element_class(x);
    for (auto y : cls) label[y] = cls.front();
  }
  return label;
}

std::uint64_t FusionSystem::isomorphism_count() const {
  std::uint64_t total = 0;
  for (const auto& c : classes_)
    if (c.live) total += c.aut->size() * c.members.size() * c.members.size();
  return total;
}

std::string FusionSystem::summary() const {
  std::ostringstream os;
  for (auto c : class_ids()) {
    const auto& cl = classes_[c];
    os << "order " << universe_[cl.rep].order() << " x" << cl.members.size() << " aut " << cl.aut->size() << "\n";
  }
  return os.str();
}

void FusionSystem::testing_replace_automizer(std::size_t id, const std::vector<GroupMap>& gens) {
  auto& c = classes_[class_of_[id]];
  const auto& rep = universe_[c.rep];
  std::vector<Perm> perms;
  for (const auto& g : gens) perms.push_back(perm_of_automorphism(psi_[id].after(g).after(psi_inv_[id]).with_codomain(rep)));
  c.aut = PermutationGroup::generate(rep.order(), perms, {}, false);
}

FusionSystem inner_fusion(const Subgroup& p) { return FusionSystem(p); }

FusionSystem from_group(const Subgroup& g, const Subgroup& p) {
  if (g.order() > 10000) throw std::length_error("from_group: group too large");
  if (!p.is_subgroup_of(g)) throw std::invalid_argument("from_group: P is not a subgroup of G");
  const auto prime = smallest_prime(p.order());
  if (p.order() == 1 || !is_power_of(p.order(), prime) || (g.order() / p.order()) % prime == 0)
    throw std::invalid_argument("from_group: P is not a Sylow subgroup");
  FusionSystem f(p);
  f.add_conjugations(g.members());
  return f;
}

FusionSystem generate_fusion(const Subgroup& p, const std::vector<AutomizerSpec>& specs) {
  FusionSystem f(p);
  for (const auto& s : specs) f.add(s);
  return f;
}

bool is_strongly_closed(const FusionSystem& F, const Subgroup& q) {
  for (auto x : q.members())
    for (auto y : F.element_class(x))
      if (!q.contains(y)) return false;
  return true;
}

std::vector<std::size_t> strongly_closed_subgroups(const FusionSystem& F) {
  const auto label = F.element_class_labels();
  std::map<std::uint32_t, std::vector<std::uint32_t>> classes;
  for (auto x : F.base().members()) classes[label[x]].push_back(x);
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < F.universe().size(); ++id) {
    const auto& q = F.subgroup(id);
    bool ok = true;
    for (auto x : q.members()) {
      if (label[x] != x) continue;
      for (auto y : classes[x])
        if (!q.contains(y)) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    // A class meets q only through its label when q contains that label; check the rest.
    if (ok)
      for (auto x : q.members())
        if (!q.contains(label[x])) {
          ok = false;
          break;
        }
    if (ok) out.push_back(id);
  }
  return out;
}

bool is_fully_normalized(const FusionSystem& F, std::size_t id) {
  const auto n = normalizer(F.base(), F.subgroup(id)).order();
  for (auto r : F.conjugates(id))
    if (normalizer(F.base(), F.subgroup(r)).order() > n) return false;
  return true;
}

bool is_fully_centralized(const FusionSystem& F, std::size_t id) {
  const auto c = centralizer(F.base(), F.subgroup(id)).order();
  for (auto r : F.conjugates(id))
    if (centralizer(F.base(), F.subgroup(r)).order() > c) return false;
  return true;
}

bool is_fully_automized(const FusionSystem& F, std::size_t id) {
  return F.base_automizer(id)->size() == p_part(F.automizer_order(id), F.prime());
}

Subgroup n_phi(const FusionSystem& F, const GroupMap& phi) {
  const auto& R = phi.domain();
  const auto Q = phi.image();
  const auto& G = R.parent();
  const auto ap = F.base_automizer(F.id_of(Q));
  const auto inv = phi.inverse();
  const auto n = normalizer(F.base(), R);
  std::vector<std::uint32_t> members;
  PermutationGroup::Perm p(Q.order());
  for (auto g : n.members()) {
    for (std::size_t i = 0; i < Q.order(); ++i)
      p[i] = static_cast<std::uint32_t>(Q.index_of(phi(G.conj(inv.table()[i], g))));
    if (ap->contains(p)) members.push_back(g);
  }
  return subgroup_from_members(R.parent_ptr(), std::move(members));
}

ReceptivityReport is_receptive(const FusionSystem& F, std::size_t id) {
  // Receptivity is constant on Aut_P(Q) phi Aut_P(R) double cosets, so one
  // phi per double coset is checked.
  ReceptivityReport rep;
  const auto& Q = F.subgroup(id);
  const auto ap_q = F.base_automizer(id);
  for (auto r : F.conjugates(id)) {
    const auto& R = F.subgroup(r);
    const auto ap_r = F.base_automizer(r);
    const auto isos = F.isomorphisms(r, id);
    std::unordered_map<PermutationGroup::Perm, std::size_t, PermHashFn> pos;
    std::vector<PermutationGroup::Perm> as_perm;
    for (std::size_t k = 0; k < isos.size(); ++k) {
      PermutationGroup::Perm p;
      p.reserve(R.order());
      for (auto y : isos[k].table()) p.push_back(static_cast<std::uint32_t>(Q.index_of(y)));
      pos.emplace(p, k);
      as_perm.push_back(std::move(p));
    }
    std::vector<char> seen(isos.size(), 0);
    for (std::size_t k = 0; k < isos.size(); ++k) {
      if (seen[k]) continue;
      ++rep.isomorphisms_checked;
      const auto& phi = isos[k];
      const auto n = n_phi(F, phi);
      if (!(n == phi.domain()) && !F.extends(F.id_of(n), phi)) {
        rep.receptive = false;
        if (rep.failures.size() < 3) rep.failures.push_back({r, phi, n});
      }
      std::vector<std::size_t> stack{k};
      seen[k] = 1;
      while (!stack.empty()) {
        const auto cur = as_perm[stack.back()];
        stack.pop_back();
        auto visit = [&](PermutationGroup::Perm next) {
          auto it = pos.find(next);
          if (it == pos.end()) throw std::logic_error("is_receptive: Iso_F not closed under Aut_P");
          if (!seen[it->second]) {
            seen[it->second] = 1;
            stack.push_back(it->second);
          }
        };
        for (const auto& c : ap_q->generators()) {
          PermutationGroup::Perm next(cur.size());
          for (std::size_t i = 0; i < cur.size(); ++i) next[i] = c[cur[i]];
          visit(std::move(next));
        }
        for (const auto& c : ap_r->generators()) {
          PermutationGroup::Perm next(cur.size());
          for (std::size_t i = 0; i < cur.size(); ++i) next[i] = cur[c[i]];
          visit(std::move(next));
        }
      }
    }
  }
  return rep;
}

SaturationReport is_saturated(const FusionSystem& F) {
  SaturationReport out;
  for (auto c : F.class_ids()) {
    SaturationReport::ClassVerdict v;
    v.cls = c;
    v.representative = F.representative(c);
    auto members = F.class_members(c);
    std::vector<std::pair<std::uint32_t, std::size_t>> ranked;
    for (auto m : members) ranked.emplace_back(normalizer(F.base(), F.subgroup(m)).order(), m);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (auto& [order, m] : ranked) {
      (void)order;
      if (is_fully_automized(F, m) && is_receptive(F, m).receptive) {
        v.witness = m;
        break;
      }
    }
    if (!v.witness) out.saturated = false;
    out.classes.push_back(v);
  }
  return out;
}

QuotientGroup out_f(const FusionSystem& F, std::size_t id) {
  const auto aut = F.automizer(id);
  const auto& q = F.subgroup(id);
  std::vector<std::uint32_t> inner;
  for (auto g : q.generators()) {
    auto idx = aut->index_of(perm_of_automorphism(GroupMap::conjugation(q, g).with_codomain(q)));
    if (!idx) throw std::logic_error("out_f: inner automorphism missing from the automizer");
    inner.push_back(*idx);
  }
  return quotient(whole_group(aut), subgroup_generated(aut, inner));
}

bool is_centric(const FusionSystem& F, std::size_t id) {
  for (auto r : F.conjugates(id))
    if (!centralizer(F.base(), F.subgroup(r)).is_subgroup_of(F.subgroup(r))) return false;
  return true;
}

Subgroup largest_normal_p_subgroup(const Subgroup& whole, std::uint32_t p) {
  std::vector<std::uint32_t> members;
  for (auto& cls : conjugacy_classes(whole)) {
    auto closure = subgroup_generated(whole.parent_ptr(), cls);
    if (is_power_of(closure.order(), p)) members.insert(members.end(), cls.begin(), cls.end());
  }
  return subgroup_from_members(whole.parent_ptr(), std::move(members));
}

bool is_radical(const FusionSystem& F, std::size_t id) {
  const auto out = out_f(F, id);
  return largest_normal_p_subgroup(whole_group(out.table), F.prime()).order() == 1;
}

std::vector<std::size_t> alperin_subgroups(const FusionSystem& F) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < F.universe().size(); ++id)
    if (is_centric(F, id) && is_fully_normalized(F, id) && is_radical(F, id)) out.push_back(id);
  return out;
}

FusionSystem invariant_closure(const FusionSystem& Ftilde, const Subgroup& t, const std::vector<AutomizerSpec>& seeds) {
  if (!is_strongly_closed(Ftilde, t)) throw std::invalid_argument("invariant_closure: T is not strongly closed");
  FusionSystem f(t);
  for (const auto& s : seeds) f.add(s);
  for (bool changed = true; changed;) {
    changed = false;
    for (auto c : f.class_ids()) {
      if (!f.class_ids().empty() && f.class_members(c).empty()) continue;
      const auto members = f.class_members(c);
      for (auto q : members)
        for (auto r : members) {
          std::vector<GroupMap> alphas;
          if (q == r) {
            alphas = f.automizer_generators(q);
          } else if (auto a = f.some_isomorphism(q, r)) {
            alphas.push_back(*a);
          }
          if (alphas.empty()) continue;
          const auto s = join(f.subgroup(q), f.subgroup(r));
          for (const auto& psi : Ftilde.isomorphism_generators(Ftilde.id_of(s))) {
            for (const auto& alpha : alphas) {
              auto tw = twist(psi, alpha);
              if (f.add(tw)) changed = true;
            }
          }
        }
    }
  }
  return f;
}

std::optional<InvarianceWitness> automizer_invariance_violation(const FusionSystem& Ftilde, const Subgroup& t,
                                                                const PermutationGroup& a, std::uint32_t b1,
                                                                std::uint32_t b2) {
  const auto tid = Ftilde.id_of(t);
  for (const auto& gamma : Ftilde.automizer_generators(tid)) {
    const auto p = perm_of_automorphism(gamma);
    PermutationGroup::Perm pinv(p.size());
    for (std::uint32_t i = 0; i < p.size(); ++i) pinv[p[i]] = i;
    for (const auto& g : a.generators()) {
      PermutationGroup::Perm c(p.size());
      for (std::uint32_t i = 0; i < p.size(); ++i) c[i] = p[g[pinv[i]]];
      if (!a.contains(c)) return InvarianceWitness{gamma, automorphism_of_perm(t, g), frattini_matrix(gamma, b1, b2)};
    }
  }
  return std::nullopt;
}

}  // namespace mnc
