#include "prepcode/isometry.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "prepcode/errors.hpp"
#include "prepcode/kernels.hpp"

namespace prepcode {

SpaceAutomorphism::SpaceAutomorphism(std::vector<int> perm, BinaryWord translation)
    : perm_(std::move(perm)), t_(translation) {
  const int n = static_cast<int>(perm_.size());
  if (t_.length() != n) throw InputError("automorphism: translation length differs from permutation");
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int p : perm_) {
    if (p < 1 || p > n || hit[static_cast<std::size_t>(p)]) {
      throw InputError("automorphism: perm is not a permutation of 1..n");
    }
    hit[static_cast<std::size_t>(p)] = true;
  }
}

SpaceAutomorphism SpaceAutomorphism::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  return SpaceAutomorphism(std::move(perm), BinaryWord::zeros(n));
}

SpaceAutomorphism SpaceAutomorphism::random(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return SpaceAutomorphism(std::move(perm), BinaryWord(n, rng() & BinaryWord::mask(n)));
}

BinaryWord SpaceAutomorphism::permute(const BinaryWord& x) const {
  const int n = length();
  if (x.length() != n) throw InputError("automorphism: word length mismatch");
  std::uint64_t out = 0;
  for (int i = 1; i <= n; ++i) {
    if ((x.bits() >> BinaryWord::bit_of(n, i)) & 1) {
      out |= std::uint64_t{1} << BinaryWord::bit_of(n, perm_[static_cast<std::size_t>(i - 1)]);
    }
  }
  return BinaryWord(n, out);
}

SpaceAutomorphism SpaceAutomorphism::inverse() const {
  std::vector<int> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[static_cast<std::size_t>(perm_[i] - 1)] = static_cast<int>(i) + 1;
  SpaceAutomorphism pure(std::move(inv), BinaryWord::zeros(length()));
  return SpaceAutomorphism(pure.perm(), pure.permute(t_));
}

nlohmann::json SpaceAutomorphism::to_json() const {
  return nlohmann::json{{"perm", perm_}, {"t", t_.to_hex()}};
}

SpaceAutomorphism SpaceAutomorphism::from_json(const nlohmann::json& j) {
  try {
    auto perm = j.at("perm").get<std::vector<int>>();
    const int n = static_cast<int>(perm.size());
    return SpaceAutomorphism(std::move(perm), BinaryWord::from_hex(j.at("t").get<std::string>(), n));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("automorphism JSON: ") + e.what());
  }
}

Code apply_automorphism(const SpaceAutomorphism& f, const Code& c) {
  if (f.length() != c.length()) throw InputError("apply_automorphism: length mismatch");
  std::vector<BinaryWord> out;
  out.reserve(c.size());
  for (const auto& x : c) out.push_back(f(x));
  return Code(c.length(), std::move(out));
}

CodewordBijection::CodewordBijection(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::vector<BinaryWord> dom, img;
  dom.reserve(pairs_.size());
  img.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) {
    if (x.length() != pairs_.front().first.length() || y.length() != pairs_.front().second.length()) {
      throw InputError("bijection: mixed word lengths");
    }
    dom.push_back(x);
    img.push_back(y);
  }
  std::sort(dom.begin(), dom.end());
  std::sort(img.begin(), img.end());
  if (std::adjacent_find(dom.begin(), dom.end()) != dom.end()) throw InputError("bijection: repeated domain word");
  if (std::adjacent_find(img.begin(), img.end()) != img.end()) throw InputError("bijection: not injective");
}

std::optional<BinaryWord> CodewordBijection::image_of(const BinaryWord& x) const {
  for (const auto& [a, b] : pairs_) {
    if (a == x) return b;
  }
  return std::nullopt;
}

bool CodewordBijection::maps(const Code& a, const Code& b) const {
  if (pairs_.size() != a.size() || pairs_.size() != b.size()) return false;
  for (const auto& [x, y] : pairs_) {
    if (!a.contains(x) || !b.contains(y)) return false;
  }
  return true;  // sizes match and both sides are duplicate-free
}

nlohmann::json CodewordBijection::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [x, y] : pairs_) arr.push_back({x.to_hex(), y.to_hex()});
  return arr;
}

CodewordBijection CodewordBijection::from_json(const nlohmann::json& j, int n_domain, int n_image) {
  if (!j.is_array()) throw InputError("bijection JSON must be an array of pairs");
  std::vector<Pair> pairs;
  try {
    for (const auto& p : j) {
      if (!p.is_array() || p.size() != 2) throw InputError("bijection JSON: entries must be [hex, hex]");
      pairs.emplace_back(BinaryWord::from_hex(p[0].get<std::string>(), n_domain),
                         BinaryWord::from_hex(p[1].get<std::string>(), n_image));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bijection JSON: ") + e.what());
  }
  return CodewordBijection(std::move(pairs));
}

WeakIsometryResult weak_isometry(const Code& c1, const Code& c2, std::optional<std::uint64_t> shuffle_seed,
                                 const CanonOptions& opts) {
  if (c1.size() != c2.size()) {
    return {std::nullopt, "code sizes differ (" + std::to_string(c1.size()) + " vs " +
                              std::to_string(c2.size()) + ")"};
  }
  if (!c1.distance() || !c2.distance()) return {std::nullopt, "code distance undefined"};
  if (*c1.distance() != *c2.distance()) {
    return {std::nullopt, "code distances differ (" + std::to_string(*c1.distance()) + " vs " +
                              std::to_string(*c2.distance()) + ")"};
  }
  const MinDistGraph g1 = build_mdg(c1);
  MinDistGraph g2 = build_mdg(c2);
  std::vector<std::uint32_t> relabel(g2.graph.size());
  std::iota(relabel.begin(), relabel.end(), 0u);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    g2.graph = g2.graph.relabeled(relabel);
  }
  const auto iso = find_isomorphism(g1.graph, g2.graph, {}, {}, opts);
  if (!iso) return {std::nullopt, "minimal distance graphs are not isomorphic"};

  std::vector<std::uint32_t> original(relabel.size());
  for (std::uint32_t v = 0; v < relabel.size(); ++v) original[relabel[v]] = v;
  std::vector<CodewordBijection::Pair> pairs;
  pairs.reserve(c1.size());
  for (std::uint32_t v = 0; v < iso->size(); ++v) {
    pairs.emplace_back(g1.words[v], g2.words[original[(*iso)[v]]]);
  }
  CodewordBijection j(std::move(pairs));

  const int d = *c1.distance();
  const auto& p = j.pairs();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      const bool before = hamming_distance(p[a].first, p[b].first) == d;
      const bool after = hamming_distance(p[a].second, p[b].second) == d;
      if (before != after) {
        throw ConstructionError("weak_isometry: assembled map does not preserve d-adjacency");
      }
    }
  }
  return {std::move(j), {}};
}

IsometryCheck verify_isometry(const CodewordBijection& j) {
  std::vector<std::uint64_t> a, b;
  a.reserve(j.size());
  b.reserve(j.size());
  for (const auto& [x, y] : j.pairs()) {
    a.push_back(x.bits());
    b.push_back(y.bits());
  }
  IsometryCheck out;
  const auto bad = kernels::omp::first_distance_mismatch(a, b);
  out.isometry = !bad.has_value();
  if (bad) {
    const auto& p = j.pairs();
    out.violation = std::pair{p[bad->first].first, p[bad->second].first};
    out.distance_before = hamming_distance(p[bad->first].first, p[bad->second].first);
    out.distance_after = hamming_distance(p[bad->first].second, p[bad->second].second);
  }
  return out;
}

IncidenceGraph incidence_graph(const Code& c) {
  const auto m = static_cast<std::uint32_t>(c.size());
  const int n = c.length();
  kernels::Adjacency adj(m + static_cast<std::size_t>(n));
  IncidenceGraph out;
  out.labels.reserve(adj.size());
  for (std::uint32_t v = 0; v < m; ++v) {
    for (int coord : c[v].support()) {
      const auto u = m + static_cast<std::uint32_t>(coord - 1);
      adj[v].push_back(u);
      adj[u].push_back(v);
    }
    out.labels.push_back(c[v].weight());
  }
  for (int i = 0; i < n; ++i) out.labels.push_back(n + 1);
  out.graph = Graph(std::move(adj));
  return out;
}

EquivalenceResult find_equivalence(const Code& c1, const Code& c2, const CanonOptions& opts) {
  EquivalenceResult result;
  if (c1.length() != c2.length()) {
    result.reason = "lengths differ";
    return result;
  }
  if (c1.size() != c2.size()) {
    result.reason = "code sizes differ";
    return result;
  }
  if (c1.size() == 0) {
    result.reason = "empty codes";
    return result;
  }
  if (c1.distance() != c2.distance()) {
    result.reason = "code distances differ";
    return result;
  }
  const int n = c1.length();
  const std::size_t vertices = c1.size() + static_cast<std::size_t>(n);
  if (vertices > opts.vertex_cap) {
    throw CapabilityError("find_equivalence: incidence graph of " + std::to_string(vertices) +
                          " vertices exceeds cap");
  }

  const BinaryWord shift2 = c2.words().front();  // lexicographically smallest
  const Code target = reduce(c2);
  const IncidenceGraph target_graph = incidence_graph(target);
  const CanonicalForm target_form = canonical_form(target_graph.graph, target_graph.labels, opts);
  std::vector<std::uint32_t> target_inverse(vertices);
  for (std::uint32_t v = 0; v < vertices; ++v) target_inverse[target_form.labeling[v]] = v;

  const auto m = static_cast<std::uint32_t>(c1.size());
  const std::size_t batch = static_cast<std::size_t>(std::max(1, kernels::max_threads()));
  for (std::size_t start = 0; start < c1.size(); start += batch) {
    const std::size_t stop = std::min(c1.size(), start + batch);
    std::vector<std::optional<std::vector<std::uint32_t>>> labelings(stop - start);
    std::vector<Code> translates;
    translates.reserve(stop - start);
    for (std::size_t k = start; k < stop; ++k) translates.push_back(translate(c1, c1[k]));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(stop - start); ++k) {
      const IncidenceGraph g = incidence_graph(translates[static_cast<std::size_t>(k)]);
      CanonicalForm form = canonical_form(g.graph, g.labels, opts);
      if (form.certificate == target_form.certificate) {
        labelings[static_cast<std::size_t>(k)] = std::move(form.labeling);
      }
    }
    result.translations_tried = stop;
    for (std::size_t k = start; k < stop; ++k) {
      const auto& lab = labelings[k - start];
      if (!lab) continue;
      // Coordinate vertex m+i of the translate maps to coordinate vertex m+j of the target.
      std::vector<int> perm(static_cast<std::size_t>(n));
      bool coordinates_ok = true;
      for (int i = 0; i < n; ++i) {
        const std::uint32_t image = target_inverse[(*lab)[m + static_cast<std::uint32_t>(i)]];
        if (image < m) {
          coordinates_ok = false;
          break;
        }
        perm[static_cast<std::size_t>(i)] = static_cast<int>(image - m) + 1;
      }
      if (!coordinates_ok) continue;
      // pi(c1 + w) = c2 + s  =>  c2 = pi(c1) + pi(w) + s.
      const SpaceAutomorphism pure(perm, BinaryWord::zeros(n));
      SpaceAutomorphism f(std::move(perm), pure.permute(c1[k]) ^ shift2);
      if (apply_automorphism(f, c1) == c2) {
        result.automorphism = std::move(f);
        result.translating_word = c1[k];
        result.translations_tried = k + 1;
        return result;
      }
    }
  }
  result.reason = "no translate of the first code has an incidence structure isomorphic to the second";
  return result;
}

}  // namespace prepcode
