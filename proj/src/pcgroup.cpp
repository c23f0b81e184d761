#include "mnc/pcgroup.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace mnc {

namespace {

std::uint64_t ipow3(int k) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) v *= 3;
  return v;
}

int mod3(int v) { return ((v % 3) + 3) % 3; }

}  // namespace

std::string to_string(const GroupParams& params) {
  std::ostringstream os;
  os << "B(" << params.p << "," << params.r << ";" << params.beta << "," << params.gamma
     << "," << params.delta << ")";
  return os.str();
}

std::vector<GroupParams> admissible_params(int r) {
  std::vector<GroupParams> out;
  if (r < 4) return out;
  if (r > 4)
    for (int d = 0; d < 3; ++d) out.push_back({3, r, 1, 0, d});
  if (r % 2 == 0) {
    out.push_back({3, r, 0, 1, 0});
    out.push_back({3, r, 0, 2, 0});
  } else {
    out.push_back({3, r, 0, 1, 0});
  }
  out.push_back({3, r, 0, 0, 0});
  out.push_back({3, r, 0, 0, 1});
  return out;
}

std::optional<std::string> params_rejection(const GroupParams& params) {
  if (params.p != 3) return "only p = 3 is supported";
  if (params.r < 4) return "r must be at least 4";
  if (params.r > Group::kMaxRank)
    return "r = " + std::to_string(params.r) + " exceeds the supported maximum " +
           std::to_string(Group::kMaxRank);
  for (const auto& ok : admissible_params(params.r))
    if (ok == params) return std::nullopt;
  std::ostringstream os;
  os << "(beta,gamma,delta) = (" << params.beta << "," << params.gamma << ","
     << params.delta << ") is not admissible for " << (params.r % 2 ? "odd" : "even")
     << " r = " << params.r << "; admissible:";
  for (const auto& ok : admissible_params(params.r))
    os << " (" << ok.beta << "," << ok.gamma << "," << ok.delta << ")";
  return os.str();
}

Group::Group(GroupParams params) : params_(params) {
  if (auto why = params_rejection(params)) throw std::invalid_argument(*why);
  const int r = params_.r;
  order_ = ipow3(r);
  gamma_order_ = static_cast<std::uint32_t>(ipow3(r - 1));

  // Power relations of gamma_1, bottom-up.  Relation 6 gives
  //   s_i^3 = s_{i+2}^-1 s_{i+1}^-3   (i >= 2, with s_r = s_{r+1} = 1),
  // and relation 5 gives s1^3 = s_{r-1}^gamma s2^-3 s3^-1.  Everything on the
  // right lives in <s2, ..., s_{r-1}>, which is abelian.
  cube_.assign(r + 1, Digits{});
  for (int i = r - 1; i >= 2; --i) {
    Digits v{};
    if (i + 2 <= r - 1) v[i + 2] -= 1;
    if (i + 1 <= r - 1)
      for (int j = 0; j < r; ++j) v[j] -= cube_[i + 1][j];
    cube_[i] = digits(normalize(v));
  }
  {
    Digits v{};
    for (int j = 0; j < r; ++j) v[j] -= cube_[2][j];
    v[3] -= 1;
    v[r - 1] += params_.gamma;
    cube_[1] = digits(normalize(v));
  }
  {
    Digits v{};
    v[r - 1] = params_.delta;
    s_cubed_ = normalize(v);
  }

  // phi(s_i) = s s_i s^-1 = [s, s_i] s_i = s_{i+1} s_i, and s_{r-1} is central.
  std::vector<std::uint32_t> phi_gen(r, 0);
  for (int i = 1; i < r; ++i)
    phi_gen[i] = (i + 1 <= r - 1) ? gamma_mul(unit(i + 1), unit(i)) : unit(i);

  // The normal-form word s_k^{d_k} * (rest) needs no collection when k is the
  // lowest nonzero position, so phi can be filled in increasing code order.
  phi_.assign(gamma_order_, 0);
  for (std::uint32_t u = 1; u < gamma_order_; ++u) {
    std::uint32_t rest = u;
    std::uint32_t place = 1;
    int k = 1;
    while (rest % 3 == 0) {
      rest /= 3;
      place *= 3;
      ++k;
    }
    const int d = static_cast<int>(rest % 3);
    const std::uint32_t lower = u - static_cast<std::uint32_t>(d) * place;
    phi_[u] = gamma_mul(gamma_pow(phi_gen[k], d), phi_[lower]);
  }
  phi_inv_.assign(gamma_order_, gamma_order_);
  for (std::uint32_t u = 0; u < gamma_order_; ++u) {
    if (phi_inv_[phi_[u]] != gamma_order_)
      throw std::logic_error("conjugation by s is not a bijection of gamma_1 for " +
                             to_string(params_));
    phi_inv_[phi_[u]] = u;
  }
  build_coordinates();
}

void Group::build_coordinates() {
  const int r = params_.r;
  m1_ = static_cast<std::uint32_t>(ipow3(r / 2));
  m2_ = static_cast<std::uint32_t>(ipow3((r - 1) / 2));
  std::vector<std::uint32_t> coord(gamma_order_, gamma_order_);
  std::vector<std::uint32_t> code(gamma_order_, 0);
  std::uint32_t p1 = 0;
  const std::uint32_t s1 = unit(1);
  const std::uint32_t s2 = unit(2);
  for (std::uint32_t e1 = 0; e1 < m1_; ++e1) {
    std::uint32_t x = p1;
    for (std::uint32_t e2 = 0; e2 < m2_; ++e2) {
      if (coord[x] != gamma_order_) {
        coord_of_.clear();
        code_of_.clear();
        return;
      }
      coord[x] = e1 * m2_ + e2;
      code[e1 * m2_ + e2] = x;
      x = gamma_mul(x, s2);
    }
    p1 = gamma_mul(p1, s1);
  }
  coord_of_ = std::move(coord);
  code_of_ = std::move(code);
}

std::uint32_t Group::unit(int i) const { return static_cast<std::uint32_t>(ipow3(i - 1)); }

Group::Digits Group::digits(std::uint32_t g) const {
  Digits d{};
  for (int i = 1; i < params_.r; ++i) {
    d[i] = static_cast<int>(g % 3);
    g /= 3;
  }
  return d;
}

std::uint32_t Group::normalize(Digits v) const {
  const int r = params_.r;
  for (int i = 1; i < r; ++i) {
    const int rem = mod3(v[i]);
    const int q = (v[i] - rem) / 3;
    v[i] = rem;
    if (q != 0)
      for (int j = i + 1; j < r; ++j) v[j] += q * cube_[i][j];
  }
  std::uint32_t code = 0;
  for (int i = r - 1; i >= 1; --i) code = code * 3 + static_cast<std::uint32_t>(v[i]);
  return code;
}

std::uint32_t Group::gamma_mul(std::uint32_t x, std::uint32_t y) const {
  const Digits dx = digits(x);
  const Digits dy = digits(y);
  Digits v{};
  for (int i = 1; i < params_.r; ++i) v[i] = dx[i] + dy[i];
  // s2^a s1^b = [s2,s1]^{ab} s1^b s2^a with [s2,s1] = s_{r-1}^-beta central.
  v[params_.r - 1] -= params_.beta * dx[2] * dy[1];
  return normalize(v);
}

std::uint32_t Group::gamma_inv(std::uint32_t x) const {
  const Digits dx = digits(x);
  Digits rest{};
  for (int i = 2; i < params_.r; ++i) rest[i] = -dx[i];
  Digits head{};
  head[1] = -dx[1];
  // (s1^d R)^-1 = R^-1 s1^-d
  return gamma_mul(normalize(rest), normalize(head));
}

std::uint32_t Group::gamma_pow(std::uint32_t x, std::uint64_t n) const {
  std::uint32_t acc = 0;
  std::uint32_t base = x;
  while (n > 0) {
    if (n & 1u) acc = gamma_mul(acc, base);
    base = gamma_mul(base, base);
    n >>= 1u;
  }
  return acc;
}

Element Group::generator(int i) const {
  if (i < 0 || i >= params_.r)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside 0.." +
                            std::to_string(params_.r - 1));
  if (i == 0) return s();
  return Element{unit(i)};
}

Element Group::mul(Element x, Element y) const {
  const std::uint32_t a = x.code() / gamma_order_;
  std::uint32_t u = x.code() % gamma_order_;
  const std::uint32_t b = y.code() / gamma_order_;
  const std::uint32_t v = y.code() % gamma_order_;
  // (s^a u)(s^b v) = s^{a+b} (s^-b u s^b) v
  for (std::uint32_t k = 0; k < b; ++k) u = phi_inv_[u];
  std::uint32_t w = gamma_mul(u, v);
  std::uint32_t t = a + b;
  if (t >= 3) {
    t -= 3;
    w = gamma_mul(w, s_cubed_);
  }
  return Element{t * gamma_order_ + w};
}

Element Group::inv(Element x) const {
  const std::uint32_t a = x.code() / gamma_order_;
  const std::uint32_t u = x.code() % gamma_order_;
  // (s^a u)^-1 = u^-1 s^-a, and s^-a = s^{3-a} s_{r-1}^-delta for a > 0.
  const Element head{gamma_inv(u)};
  if (a == 0) return head;
  const Element tail{(3 - a) * gamma_order_ + gamma_inv(s_cubed_)};
  return mul(head, tail);
}

Element Group::pow(Element x, long long n) const {
  if (n < 0) {
    x = inv(x);
    n = -n;
  }
  Element acc = identity();
  while (n > 0) {
    if (n & 1) acc = mul(acc, x);
    x = mul(x, x);
    n >>= 1;
  }
  return acc;
}

Element Group::conj(Element x, Element g) const { return mul(mul(g, x), inv(g)); }

Element Group::comm(Element x, Element y) const {
  return mul(mul(x, y), mul(inv(x), inv(y)));
}

std::uint64_t Group::element_order(Element x) const {
  std::uint64_t n = 1;
  while (x != identity()) {
    x = mul(mul(x, x), x);
    n *= 3;
  }
  return n;
}

Element Group::from_code(std::uint32_t code) const {
  if (code >= order_) throw std::out_of_range("element code out of range");
  return Element{code};
}

std::vector<int> Group::pc_exponents(Element x) const {
  const Digits d = digits(x.code() % gamma_order_);
  return std::vector<int>(d.begin() + 1, d.begin() + params_.r);
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> Group::coordinates(Element x) const {
  if (!has_coordinates()) return std::nullopt;
  const std::uint32_t c = coord_of_[x.code() % gamma_order_];
  return std::make_pair(c / m2_, c % m2_);
}

Element Group::from_coordinates(int a, long long e1, long long e2) const {
  return mul(mul(pow(s(), a), pow(generator(1), e1)), pow(generator(2), e2));
}

std::string Group::format(Element x) const {
  if (x == identity()) return "1";
  std::vector<std::pair<int, std::uint32_t>> terms;  // (generator index, exponent)
  const int a = s_exponent(x);
  if (a != 0) terms.emplace_back(0, a);
  if (auto c = coordinates(x)) {
    if (c->first != 0) terms.emplace_back(1, c->first);
    if (c->second != 0) terms.emplace_back(2, c->second);
  } else {
    const auto d = pc_exponents(x);
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] != 0) terms.emplace_back(static_cast<int>(i) + 1, d[i]);
  }
  std::string out;
  for (const auto& [index, exponent] : terms) {
    if (!out.empty()) out += '*';
    out += 's';
    if (index > 0) out += std::to_string(index);
    if (exponent != 1) out += '^' + std::to_string(exponent);
  }
  return out;
}

Element Group::parse_word(std::string_view text) const {
  if (text == "1") return identity();
  if (text.empty()) throw ParseError("empty word", 0);
  std::size_t pos = 0;
  auto read_digits = [&](long long& value) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) return false;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{}) throw ParseError("integer out of range", start);
    return true;
  };
  Element acc = identity();
  while (true) {
    if (pos >= text.size() || text[pos] != 's') throw ParseError("expected 's'", pos);
    const std::size_t gen_pos = pos;
    ++pos;
    long long index = 0;
    if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      read_digits(index);
      if (index < 1 || index >= params_.r)
        throw ParseError("generator index " + std::to_string(index) + " out of range 1.." +
                             std::to_string(params_.r - 1),
                         gen_pos);
    }
    long long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool negative = false;
      if (pos < text.size() && text[pos] == '-') {
        negative = true;
        ++pos;
      }
      if (!read_digits(exponent)) throw ParseError("expected exponent digits", pos);
      if (negative) exponent = -exponent;
    }
    acc = mul(acc, pow(generator(static_cast<int>(index)), exponent));
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*' or end of word", pos);
    ++pos;
  }
  return acc;
}

std::vector<Element> Group::elements(std::uint64_t bound) const {
  if (order_ > bound)
    throw std::length_error("group order " + std::to_string(order_) +
                            " exceeds enumeration bound " + std::to_string(bound));
  std::vector<Element> out;
  out.reserve(order_);
  for (std::uint32_t c = 0; c < order_; ++c) out.emplace_back(c);
  return out;
}

bool PresentationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

PresentationReport verify_presentation(const Group& G) {
  PresentationReport report{G.params(), {}};
  const int r = G.rank();
  const Element e = G.identity();
  auto gen = [&](int i) { return i <= r - 1 ? G.generator(i) : e; };
  auto name = [](int i) { return i == 0 ? std::string("s") : "s" + std::to_string(i); };
  auto add = [&](std::string rel, std::string inst, Element lhs, Element rhs) {
    report.checks.push_back({std::move(rel), std::move(inst), lhs == rhs, G.format(lhs),
                             G.format(rhs)});
  };
  const Element s = G.s();
  const Element top = gen(r - 1);
  for (int i = 2; i <= r; ++i)
    add("1", (i <= r - 1 ? name(i) : std::string("1")) + " = [s," + name(i - 1) + "]",
        G.comm(s, gen(i - 1)), gen(i));
  add("2", "[s2,s1] = " + name(r - 1) + "^-" + std::to_string(G.params().beta),
      G.comm(gen(2), gen(1)), G.pow(top, -G.params().beta));
  for (int i = 3; i <= r - 1; ++i)
    add("3", "[" + name(i) + ",s1] = 1", G.comm(gen(i), gen(1)), e);
  add("4", "s^3 = " + name(r - 1) + "^" + std::to_string(G.params().delta), G.pow(s, 3),
      G.pow(top, G.params().delta));
  add("5", "s3*s2^3*s1^3 = " + name(r - 1) + "^" + std::to_string(G.params().gamma),
      G.mul(G.mul(gen(3), G.pow(gen(2), 3)), G.pow(gen(1), 3)),
      G.pow(top, G.params().gamma));
  for (int i = 2; i <= r - 1; ++i) {
    const std::string a = i + 2 <= r - 1 ? name(i + 2) : "1";
    const std::string b = i + 1 <= r - 1 ? name(i + 1) : "1";
    add("6", a + "*" + b + "^3*" + name(i) + "^3 = 1",
        G.mul(G.mul(gen(i + 2), G.pow(gen(i + 1), 3)), G.pow(gen(i), 3)), e);
  }
  // s and s1 must generate all 3^r normal forms, otherwise the construction is a
  // proper subgroup rather than the presented group.
  if (G.order() <= Group::kDefaultEnumerationBound) {
    std::vector<char> seen(G.order(), 0);
    std::vector<Element> frontier{e};
    seen[0] = 1;
    std::uint64_t count = 1;
    const Element gens[2] = {s, gen(1)};
    while (!frontier.empty()) {
      const Element x = frontier.back();
      frontier.pop_back();
      for (const Element g : gens) {
        const Element y = G.mul(x, g);
        if (!seen[y.code()]) {
          seen[y.code()] = 1;
          ++count;
          frontier.push_back(y);
        }
      }
    }
    report.checks.push_back({"gen", "<s,s1> has order 3^" + std::to_string(r),
                             count == G.order(), std::to_string(count),
                             std::to_string(G.order())});
  }
  return report;
}

namespace testing {

Group corrupt_conjugation(const Group& group) {
  Group g = group;
  // Swap the images of s1 and s1^2 under x -> s^-1 x s (the table mul reads):
  // still a bijection, no longer an automorphism compatible with relation 1.
  const std::uint32_t a = g.unit(1);
  const std::uint32_t b = 2 * g.unit(1);
  std::swap(g.phi_inv_[a], g.phi_inv_[b]);
  for (std::uint32_t u = 0; u < g.gamma_order_; ++u) g.phi_[g.phi_inv_[u]] = u;
  return g;
}

Group corrupt_power(const Group& group, int i) {
  if (i < 1 || i >= group.rank()) throw std::invalid_argument("corrupt_power: index out of range");
  Group g = group;
  g.cube_[i] = Group::Digits{};
  return g;
}

}  // namespace testing

}  // namespace mnc
