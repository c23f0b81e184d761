#include "mnc/autgroup.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace mnc {

namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

}  // namespace

GroupMap::GroupMap(Subgroup domain, Subgroup codomain, std::vector<std::uint32_t> table)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), table_(std::move(table)) {
  if (table_.size() != domain_.order()) throw std::invalid_argument("GroupMap: table size mismatch");
  auto sorted = table_;
  std::sort(sorted.begin(), sorted.end());
  injective_ = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::optional<GroupMap> GroupMap::extend(const Subgroup& domain, const Subgroup& codomain,
                                         const std::vector<std::uint32_t>& gens,
                                         const std::vector<std::uint32_t>& images) {
  if (gens.size() != images.size()) throw std::invalid_argument("GroupMap::extend: arity mismatch");
  for (auto y : images)
    if (!codomain.contains(y)) return std::nullopt;
  const auto& G = domain.parent();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> table(domain.order(), kUnset);
  table[0] = 0;
  std::deque<std::uint32_t> queue{0};
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    const auto x = domain.members()[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto y = G.mul(x, gens[k]);
      const auto fy = G.mul(table[i], images[k]);
      const auto j = domain.index_of(y);
      if (j < 0) throw std::invalid_argument("GroupMap::extend: generator outside domain");
      if (table[j] == kUnset) {
        table[j] = fy;
        queue.push_back(static_cast<std::uint32_t>(j));
        ++reached;
      } else if (table[j] != fy) {
        return std::nullopt;
      }
    }
  }
  if (reached != domain.order()) throw std::invalid_argument("GroupMap::extend: generators do not generate the domain");
  return GroupMap(domain, codomain, std::move(table));
}

GroupMap GroupMap::identity(const Subgroup& q) { return GroupMap(q, q, q.members()); }

GroupMap GroupMap::conjugation(const Subgroup& q, std::uint32_t g) {
  const auto& G = q.parent();
  std::vector<std::uint32_t> table;
  table.reserve(q.order());
  for (auto x : q.members()) table.push_back(G.conj(x, g));
  return GroupMap(q, conjugate(q, g), std::move(table));
}

std::uint32_t GroupMap::operator()(std::uint32_t x) const {
  const auto i = domain_.index_of(x);
  if (i < 0) throw std::out_of_range("GroupMap: element outside domain");
  return table_[i];
}

Subgroup GroupMap::image() const { return subgroup_generated(domain_.parent_ptr(), generator_images()); }

std::vector<std::uint32_t> GroupMap::generator_images() const {
  std::vector<std::uint32_t> out;
  for (auto g : domain_.generators()) out.push_back((*this)(g));
  return out;
}

GroupMap GroupMap::after(const GroupMap& other) const {
  std::vector<std::uint32_t> table;
  table.reserve(other.table_.size());
  for (auto y : other.table_) table.push_back((*this)(y));
  return GroupMap(other.domain_, codomain_, std::move(table));
}

GroupMap GroupMap::inverse() const {
  if (!injective_) throw std::logic_error("GroupMap::inverse: not injective");
  auto img = image();
  std::vector<std::uint32_t> table(img.order());
  for (std::size_t i = 0; i < table_.size(); ++i) table[img.index_of(table_[i])] = domain_.members()[i];
  return GroupMap(img, domain_, std::move(table));
}

GroupMap GroupMap::restrict(const Subgroup& sub) const {
  std::vector<std::uint32_t> table;
  table.reserve(sub.order());
  std::vector<std::uint32_t> gimg;
  for (auto x : sub.members()) table.push_back((*this)(x));
  for (auto g : sub.generators()) gimg.push_back((*this)(g));
  return GroupMap(sub, subgroup_generated(sub.parent_ptr(), gimg), std::move(table));
}

GroupMap GroupMap::with_codomain(const Subgroup& codomain) const {
  for (auto y : table_)
    if (!codomain.contains(y)) throw std::invalid_argument("GroupMap::with_codomain: image not contained");
  return GroupMap(domain_, codomain, table_);
}

FiniteGroupTable::FiniteGroupTable(std::uint32_t n, std::vector<std::uint32_t> table, std::vector<std::string> labels,
                                   bool check_associativity)
    : n_(n), mul_(std::move(table)), labels_(std::move(labels)) {
  if (n_ == 0 || n_ > kMaxOrder) throw std::invalid_argument("FiniteGroupTable: unsupported order");
  if (mul_.size() != std::size_t{n_} * n_ || labels_.size() != n_)
    throw std::invalid_argument("FiniteGroupTable: bad table dimensions");
  inv_.assign(n_, n_);
  for (std::uint32_t x = 0; x < n_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) throw std::invalid_argument("FiniteGroupTable: 0 is not the identity");
    for (std::uint32_t y = 0; y < n_; ++y) {
      if (mul(x, y) >= n_) throw std::invalid_argument("FiniteGroupTable: entry out of range");
      if (mul(x, y) == 0) inv_[x] = y;
    }
    if (inv_[x] == n_ || mul(inv_[x], x) != 0) throw std::invalid_argument("FiniteGroupTable: missing inverse");
  }
  if (check_associativity && !is_associative()) throw std::invalid_argument("FiniteGroupTable: not associative");
}

bool FiniteGroupTable::is_associative() const {
  for (std::uint32_t x = 0; x < n_; ++x)
    for (std::uint32_t y = 0; y < n_; ++y) {
      const auto xy = mul(x, y);
      for (std::uint32_t z = 0; z < n_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
    }
  return true;
}

std::size_t PermutationGroup::PermHash::operator()(const Perm& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p) h = (h ^ v) * 1099511628211ull;
  return h;
}

std::shared_ptr<const PermutationGroup> PermutationGroup::generate(
    std::uint32_t degree, const std::vector<Perm>& gens, const std::function<std::string(const Perm&)>& labeler,
    bool dense_table) {
  auto out = std::make_shared<PermutationGroup>();
  out->degree_ = degree;
  out->labeler_ = labeler;
  Perm id(degree);
  for (std::uint32_t i = 0; i < degree; ++i) id[i] = i;
  out->perms_.push_back(id);
  out->index_.emplace(id, 0);
  auto compose = [degree](const Perm& a, const Perm& b) {
    Perm c(degree);
    for (std::uint32_t i = 0; i < degree; ++i) c[i] = a[b[i]];
    return c;
  };
  auto& perms = out->perms_;
  auto insert = [&](Perm c) {
    if (out->index_.emplace(c, static_cast<std::uint32_t>(perms.size())).second) {
      perms.push_back(std::move(c));
      if (perms.size() > kMaxOrder) throw std::length_error("PermutationGroup: order exceeds bound");
    }
  };
  // Generators already in the group are dropped; each new one is applied to
  // the old elements, and every new element gets all kept generators.
  for (const auto& g : gens) {
    if (g.size() != degree) throw std::invalid_argument("PermutationGroup: generator of wrong degree");
    if (out->index_.count(g)) continue;
    out->gens_.push_back(g);
    const std::size_t old = perms.size();
    for (std::size_t i = 0; i < old; ++i) insert(compose(g, perms[i]));
    for (std::size_t i = old; i < perms.size(); ++i)
      for (const auto& h : out->gens_) insert(compose(h, perms[i]));
  }
  const auto n = static_cast<std::uint32_t>(perms.size());
  out->inv_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    Perm inv(degree);
    for (std::uint32_t i = 0; i < degree; ++i) inv[perms[a][i]] = i;
    out->inv_[a] = out->index_.at(inv);
  }
  if (dense_table && n <= FiniteGroupTable::kMaxOrder) {
    std::vector<std::uint32_t> table(std::size_t{n} * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) table[std::size_t{a} * n + b] = out->index_.at(compose(perms[a], perms[b]));
    out->table_ = std::move(table);
  }
  return out;
}

std::uint32_t PermutationGroup::mul(std::uint32_t x, std::uint32_t y) const {
  if (!table_.empty()) return table_[std::size_t{x} * perms_.size() + y];
  const auto& a = perms_[x];
  const auto& b = perms_[y];
  Perm c(degree_);
  for (std::uint32_t i = 0; i < degree_; ++i) c[i] = a[b[i]];
  return index_.at(c);
}

std::string PermutationGroup::label(std::uint32_t x) const {
  return labeler_ ? labeler_(perms_.at(x)) : "a" + std::to_string(x);
}

std::optional<std::uint32_t> PermutationGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupMap AutomorphismGroup::map(std::uint32_t index) const {
  const auto& perm = group->perm(index);
  std::vector<std::uint32_t> table;
  table.reserve(perm.size());
  for (auto j : perm) table.push_back(q.members()[j]);
  return GroupMap(q, q, std::move(table));
}

PermutationGroup::Perm AutomorphismGroup::perm_of(const GroupMap& f) const {
  PermutationGroup::Perm perm;
  perm.reserve(q.order());
  for (auto y : f.table()) {
    const auto j = q.index_of(y);
    if (j < 0) throw std::invalid_argument("AutomorphismGroup: map leaves the subgroup");
    perm.push_back(static_cast<std::uint32_t>(j));
  }
  return perm;
}

std::optional<std::uint32_t> AutomorphismGroup::index_of(const GroupMap& f) const {
  if (!(f.domain() == q)) return std::nullopt;
  return group->index_of(perm_of(f));
}

AutomorphismGroup automorphism_group(const Subgroup& q) {
  if (q.order() > kAutomorphismSearchBound) throw std::length_error("automorphism_group: subgroup too large");
  const auto& G = q.parent();
  AutomorphismGroup out;
  out.q = q;
  out.basis = frattini_basis(q);
  const auto phi = frattini_subgroup(q);
  const auto& basis = out.basis;
  const std::size_t d = basis.size();

  std::vector<std::vector<std::uint32_t>> candidates(d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto o = G.element_order(basis[i]);
    for (auto x : q.members())
      if (!phi.contains(x) && G.element_order(x) == o) candidates[i].push_back(x);
  }
  std::vector<std::vector<std::uint32_t>> comm_order(d, std::vector<std::uint32_t>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) comm_order[i][j] = G.element_order(G.comm(basis[i], basis[j]));

  auto labeler = [q, basis](const PermutationGroup::Perm& p) {
    std::string s = "{";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i) s += ", ";
      s += q.parent().label(basis[i]) + " -> " + q.parent().label(q.members()[p[q.index_of(basis[i])]]);
    }
    return s + "}";
  };

  std::vector<PermutationGroup::Perm> gens;
  std::shared_ptr<const PermutationGroup> current;
  std::vector<std::uint32_t> images(d);
  auto consider = [&](const GroupMap& f) {
    PermutationGroup::Perm perm;
    perm.reserve(q.order());
    for (auto y : f.table()) perm.push_back(static_cast<std::uint32_t>(q.index_of(y)));
    if (current && current->index_of(perm)) return;
    gens.push_back(std::move(perm));
    current = PermutationGroup::generate(q.order(), gens, labeler);
  };
  // Depth-first over image tuples in lexicographic order.
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == d) {
      auto f = GroupMap::extend(q, q, basis, images);
      if (f && f->injective()) consider(*f);
      return;
    }
    for (auto x : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = G.element_order(G.comm(images[j], x)) == comm_order[j][i];
      if (!ok) continue;
      images[i] = x;
      search(i + 1);
    }
  };
  search(0);
  if (!current) current = PermutationGroup::generate(q.order(), {}, labeler);
  out.group = std::move(current);

  std::vector<std::uint32_t> inner_gens;
  for (auto g : q.generators()) inner_gens.push_back(*out.index_of(GroupMap::conjugation(q, g).with_codomain(q)));
  out.inner = subgroup_generated(out.group, inner_gens);
  return out;
}

QuotientGroup quotient(const Subgroup& whole, const Subgroup& normal) {
  if (!normal.is_subgroup_of(whole) || !is_normal(normal, whole))
    throw std::invalid_argument("quotient: subgroup is not normal");
  const auto& G = whole.parent();
  QuotientGroup out;
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  out.projection.assign(G.size(), kUnset);
  for (auto x : whole.members()) {
    if (out.projection[x] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(out.representative.size());
    out.representative.push_back(x);
    for (auto n : normal.members()) out.projection[G.mul(x, n)] = c;
  }
  const auto m = static_cast<std::uint32_t>(out.representative.size());
  std::vector<std::uint32_t> mul(std::size_t{m} * m);
  std::vector<std::string> labels;
  for (std::uint32_t a = 0; a < m; ++a) {
    labels.push_back(G.label(out.representative[a]));
    for (std::uint32_t b = 0; b < m; ++b)
      mul[std::size_t{a} * m + b] = out.projection[G.mul(out.representative[a], out.representative[b])];
  }
  out.table = std::make_shared<const FiniteGroupTable>(m, std::move(mul), std::move(labels));
  return out;
}

QuotientGroup out_quotient(const AutomorphismGroup& aut) {
  return quotient(whole_group(aut.group), aut.inner);
}

Mat2F3::Mat2F3(int a, int b, int c, int d) : e{mod3(a), mod3(b), mod3(c), mod3(d)} {}

int Mat2F3::det() const { return mod3(e[0] * e[3] - e[1] * e[2]); }

std::string to_string(const Mat2F3& m) {
  std::ostringstream os;
  os << "[[" << m.e[0] << "," << m.e[1] << "],[" << m.e[2] << "," << m.e[3] << "]]";
  return os.str();
}

Mat2F3 mat_mul(const Mat2F3& a, const Mat2F3& b) {
  return Mat2F3(a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
                a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]);
}

Mat2F3 mat_inv(const Mat2F3& a) {
  const int d = a.det();
  if (d == 0) throw std::domain_error("mat_inv: singular matrix");
  const int di = d;  // d^-1 = d in F_3
  return Mat2F3(di * a.e[3], -di * a.e[1], -di * a.e[2], di * a.e[0]);
}

Mat2F3 mat_conj(const Mat2F3& a, const Mat2F3& x) { return mat_mul(mat_mul(a, x), mat_inv(a)); }

std::uint32_t MatrixGroup::index_of(const Mat2F3& m) const {
  auto it = std::find(mats.begin(), mats.end(), m);
  if (it == mats.end()) throw std::invalid_argument("MatrixGroup: matrix not in group");
  return static_cast<std::uint32_t>(it - mats.begin());
}

namespace {

MatrixGroup matrix_group(bool special) {
  MatrixGroup out;
  out.mats.push_back(Mat2F3{});
  for (int code = 0; code < 81; ++code) {
    Mat2F3 m(code / 27, code / 9 % 3, code / 3 % 3, code % 3);
    if (m.det() == 0 || (special && m.det() != 1) || m == Mat2F3{}) continue;
    out.mats.push_back(m);
  }
  const auto n = static_cast<std::uint32_t>(out.mats.size());
  std::vector<std::uint32_t> mul(std::size_t{n} * n);
  std::vector<std::string> labels;
  for (std::uint32_t a = 0; a < n; ++a) {
    labels.push_back(to_string(out.mats[a]));
    for (std::uint32_t b = 0; b < n; ++b) mul[std::size_t{a} * n + b] = out.index_of(mat_mul(out.mats[a], out.mats[b]));
  }
  out.table = std::make_shared<const FiniteGroupTable>(n, std::move(mul), std::move(labels));
  return out;
}

}  // namespace

MatrixGroup gl2_3() { return matrix_group(false); }
MatrixGroup sl2_3() { return matrix_group(true); }

FrattiniFrame::FrattiniFrame(const Subgroup& q, std::uint32_t b1, std::uint32_t b2)
    : q_(q), phi_(frattini_subgroup(q)) {
  const auto& G = q.parent();
  if (phi_.order() * 9 != q.order()) throw std::invalid_argument("frattini_matrix: domain is not 2-generated");
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2) {
      comb_inv_[c1][c2] = G.inv(G.mul(G.pow(b1, c1), G.pow(b2, c2)));
      if ((c1 || c2) && phi_.contains(comb_inv_[c1][c2]))
        throw std::invalid_argument("frattini_matrix: degenerate basis");
    }
  b_[0] = b1;
  b_[1] = b2;
}

std::pair<int, int> FrattiniFrame::coordinates(std::uint32_t y) const {
  const auto& G = q_.parent();
  for (int c1 = 0; c1 < 3; ++c1)
    for (int c2 = 0; c2 < 3; ++c2)
      if (phi_.contains(G.mul(y, comb_inv_[c1][c2]))) return {c1, c2};
  throw std::invalid_argument("frattini_matrix: element outside the domain");
}

Mat2F3 FrattiniFrame::matrix_of_images(std::uint32_t y1, std::uint32_t y2) const {
  const auto [a, c] = coordinates(y1);
  const auto [b, d] = coordinates(y2);
  return Mat2F3(a, b, c, d);
}

Mat2F3 FrattiniFrame::matrix(const GroupMap& f) const { return matrix_of_images(f(b_[0]), f(b_[1])); }

Mat2F3 frattini_matrix(const GroupMap& f, std::uint32_t b1, std::uint32_t b2) {
  return FrattiniFrame(f.domain(), b1, b2).matrix(f);
}

std::vector<Mat2F3> frattini_matrices(const AutomorphismGroup& aut, std::uint32_t b1, std::uint32_t b2) {
  const FrattiniFrame frame(aut.q, b1, b2);
  const auto i1 = static_cast<std::uint32_t>(aut.q.index_of(b1));
  const auto i2 = static_cast<std::uint32_t>(aut.q.index_of(b2));
  std::vector<Mat2F3> out;
  out.reserve(aut.order());
  for (const auto& p : aut.group->perms())
    out.push_back(frame.matrix_of_images(aut.q.members()[p[i1]], aut.q.members()[p[i2]]));
  return out;
}

std::vector<std::uint32_t> frattini_representation(const AutomorphismGroup& aut, const MatrixGroup& gl) {
  const auto [b1, b2] = frattini_quotient_basis(aut.q);
  std::vector<std::uint32_t> out;
  out.reserve(aut.order());
  for (const auto& m : frattini_matrices(aut, b1, b2)) out.push_back(gl.index_of(m));
  return out;
}

std::vector<Subgroup> normal_subgroups_of_table(const std::shared_ptr<const GroupOps>& table) {
  if (table->size() > FiniteGroupTable::kMaxOrder) throw std::length_error("normal_subgroups_of_table: too large");
  return normal_subgroups(whole_group(table));
}

std::vector<Subgroup> subgroups_of_order(const std::shared_ptr<const GroupOps>& table, std::uint32_t order) {
  if (table->size() > FiniteGroupTable::kMaxOrder) throw std::length_error("subgroups_of_order: too large");
  return subgroups_of_order(whole_group(table), order);
}

bool recognize_sd16(const Subgroup& s) {
  if (s.order() != 16) return false;
  const auto& G = s.parent();
  for (auto x : s.members()) {
    if (G.element_order(x) != 8) continue;
    const auto x3 = G.pow(x, 3);
    for (auto y : s.members())
      if (G.element_order(y) == 2 && G.conj(x, y) == x3) return true;
  }
  return false;
}

bool recognize_sl2_3(const Subgroup& s) {
  if (s.order() != 24) return false;
  const auto& G = s.parent();
  std::map<std::uint32_t, int> census;
  for (auto x : s.members()) census[G.element_order(x)]++;
  return census == std::map<std::uint32_t, int>{{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}};
}

}  // namespace mnc
