#include "tat/seifert.hpp"

#include <numeric>

namespace tat {

SeifertPair pair_from_rotation(std::int64_t k, std::int64_t p) {
  if (k < 1 || std::gcd(mod(p, k), k) != 1) throw NotCoprime();
  if (k == 1) return {1, 0};
  return {k, mod(-inverse_mod(p, k), k)};
}

bool is_normalized(const SeifertPair& s) {
  if (s.alpha < 1) return false;
  if (s.alpha == 1) return s.beta == 0;
  return s.beta > 0 && s.beta < s.alpha && std::gcd(s.alpha, s.beta) == 1;
}

std::pair<std::int64_t, std::int64_t> torus_type(const SeifertPair& s) {
  if (s.alpha < 2 || !is_normalized(s)) throw NotNormalized();
  std::int64_t c = inverse_mod(s.beta, s.alpha);
  return {mod(-c, s.alpha), s.alpha};
}

std::int64_t euler_b(const std::vector<SeifertPair>& pairs) {
  Rational sum = 0;
  for (const auto& s : pairs) {
    if (s.alpha < 1) throw NotNormalized();
    sum += Rational(s.beta, s.alpha);
  }
  sum.canonicalize();
  if (sum.get_den() != 1) throw NonIntegralEuler(to_string(sum));
  return -to_int64(sum.get_num());
}

std::vector<std::int64_t> cont_frac(std::int64_t alpha, std::int64_t beta) {
  if (beta <= 0 || beta >= alpha || std::gcd(alpha, beta) != 1) throw BadPair();
  std::vector<std::int64_t> out;
  std::int64_t a = alpha, b = beta;
  for (;;) {
    std::int64_t c = (a + b - 1) / b;
    out.push_back(c);
    std::int64_t r = c * b - a;
    if (r == 0) break;
    a = b;
    b = r;
  }
  return out;
}

Rational eval_cont_frac(const std::vector<std::int64_t>& chain) {
  if (chain.empty()) throw EmptyChain();
  Rational x(static_cast<long>(chain.back()));
  for (int i = static_cast<int>(chain.size()) - 2; i >= 0; --i) {
    if (x == 0) throw DivisionByZero(i + 2);
    x = Rational(static_cast<long>(chain[i])) - 1 / x;
  }
  x.canonicalize();
  return x;
}

GluingMatrix gluing_matrix(const std::vector<std::int64_t>& chain, GluingCase c) {
  if (chain.empty()) throw EmptyChain();
  const std::size_t k = chain.size();
  GluingMatrix g = GluingMatrix::Identity();
  for (std::size_t i = 0; i < k; ++i) {
    GluingMatrix m;
    m << 0, -1, 1, -chain[i];
    g = m * g;
  }
  if (c == GluingCase::NodeToNode) {
    GluingMatrix j;
    j << 0, 1, 1, 0;
    return j * g;
  }
  GluingMatrix fix;
  fix << -1, 0, 0, 1;
  return fix * g;
}

SeifertFibering normalize(const SeifertFibering& f) {
  SeifertFibering out = f;
  std::int64_t shift = 0;
  for (auto& s : out.pairs) {
    if (s.alpha < 1) throw NotNormalized();
    std::int64_t nb = mod(s.beta, s.alpha);
    shift += (s.beta - nb) / s.alpha;
    s.beta = nb;
    if (s.alpha > 1 && std::gcd(s.alpha, s.beta) != 1) throw NotNormalized();
  }
  if (out.b) *out.b += shift;
  return out;
}

PlumbingGraph plumbing_from_fibering(const SeifertFibering& f) {
  SeifertFibering n = normalize(f);
  PlumbingGraph p;
  p.central_g = n.g;
  p.arrows = n.r;
  if (n.b) {
    p.central_e = *n.b;
  } else {
    std::vector<SeifertPair> all = n.pairs;
    if (n.boundary_pairs) all.insert(all.end(), n.boundary_pairs->begin(), n.boundary_pairs->end());
    p.central_e = euler_b(all);
  }
  for (const auto& s : n.pairs)
    if (s.alpha > 1) p.bamboos.push_back(cont_frac(s.alpha, s.beta));
  if (n.boundary_pairs) {
    std::vector<std::vector<std::int64_t>> arrows;
    for (const auto& s : *n.boundary_pairs)
      arrows.push_back(s.alpha > 1 ? cont_frac(s.alpha, mod(s.beta, s.alpha)) : std::vector<std::int64_t>{});
    p.arrow_bamboos = arrows;
  }
  return p;
}

namespace {

SeifertPair pair_of_chain(const std::vector<std::int64_t>& chain) {
  Rational v = eval_cont_frac(chain);
  SeifertPair s{to_int64(v.get_num()), to_int64(v.get_den())};
  if (!is_normalized(s) || s.alpha < 2) throw BadPair();
  return s;
}

}  // namespace

SeifertFibering fibering_from_plumbing(const PlumbingGraph& p) {
  if (p.central_g < 0) throw NotStarShaped("negative genus");
  if (p.arrows < 0) throw NotStarShaped("negative arrow count");
  SeifertFibering f;
  f.g = p.central_g;
  f.r = p.arrows;
  f.b = p.central_e;
  for (const auto& chain : p.bamboos) {
    if (chain.empty()) throw NotStarShaped("empty bamboo");
    f.pairs.push_back(pair_of_chain(chain));
  }
  if (p.arrow_bamboos) {
    if (static_cast<int>(p.arrow_bamboos->size()) != p.arrows)
      throw NotStarShaped("arrow bamboo count differs from arrow count");
    std::vector<SeifertPair> caps;
    for (const auto& chain : *p.arrow_bamboos)
      caps.push_back(chain.empty() ? SeifertPair{1, 0} : pair_of_chain(chain));
    f.boundary_pairs = caps;
  }
  return f;
}

}  // namespace tat
