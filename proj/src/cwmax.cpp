// Maximum constant-weight codes by branch and bound on the compatibility graph
// (greedy colouring bound over bitset candidate sets).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "prepcode/errors.hpp"
#include "prepcode/verify.hpp"

namespace prepcode::verify {

namespace {

using Bits = std::vector<std::uint64_t>;

class MaxClique {
 public:
  explicit MaxClique(std::vector<Bits> adj, std::size_t vertices)
      : adj_(std::move(adj)), v_(vertices), blocks_((vertices + 63) / 64) {}

  std::vector<std::size_t> solve() {
    Bits all(blocks_, 0);
    for (std::size_t v = 0; v < v_; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    std::vector<std::size_t> clique;
    expand(all, clique);
    return best_;
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  static bool empty(const Bits& b) {
    for (auto w : b) {
      if (w) return false;
    }
    return true;
  }

  // Greedy colouring of P in index order; vertices returned with their colour class number.
  void color_sort(const Bits& p, std::vector<std::size_t>& order, std::vector<int>& colors) const {
    Bits uncolored = p;
    int color = 0;
    while (!empty(uncolored)) {
      ++color;
      Bits q = uncolored;
      for (std::size_t blk = 0; blk < blocks_; ++blk) {
        while (q[blk]) {
          const std::size_t v = blk * 64 + static_cast<std::size_t>(std::countr_zero(q[blk]));
          q[blk] &= q[blk] - 1;
          uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
          for (std::size_t b = blk; b < blocks_; ++b) q[b] &= ~adj_[v][b];
          order.push_back(v);
          colors.push_back(color);
        }
      }
    }
  }

  void expand(Bits p, std::vector<std::size_t>& clique) {
    ++nodes_;
    std::vector<std::size_t> order;
    std::vector<int> colors;
    color_sort(p, order, colors);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (clique.size() + static_cast<std::size_t>(colors[k]) <= best_.size()) return;
      const std::size_t v = order[k];
      clique.push_back(v);
      Bits next(blocks_);
      for (std::size_t b = 0; b < blocks_; ++b) next[b] = p[b] & adj_[v][b];
      if (empty(next)) {
        if (clique.size() > best_.size()) best_ = clique;
      } else {
        expand(std::move(next), clique);
      }
      clique.pop_back();
      p[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  std::vector<Bits> adj_;
  std::size_t v_;
  std::size_t blocks_;
  std::vector<std::size_t> best_;
  std::size_t nodes_ = 0;
};

}  // namespace

ConstantWeightResult max_constant_weight(int n, int w, int dmin) {
  if (n < 1 || n > BinaryWord::kMaxLength || w < 0 || w > n || dmin < 0) {
    throw InputError("max_constant_weight: need 1 <= n <= 64, 0 <= w <= n, dmin >= 0");
  }
  const long long count = binomial(n, w);
  if (count > static_cast<long long>(kConstantWeightCap)) {
    throw CapabilityError("max_constant_weight: C(" + std::to_string(n) + "," + std::to_string(w) +
                          ") = " + std::to_string(count) + " exceeds cap");
  }
  std::vector<std::uint64_t> words;
  words.reserve(static_cast<std::size_t>(count));
  if (w == 0) {
    words.push_back(0);
  } else {
    // Gosper's hack over n-bit masks, ascending.
    std::uint64_t v = BinaryWord::mask(w);
    const std::uint64_t limit = BinaryWord::mask(n);
    for (;;) {
      words.push_back(v);
      if (v == (limit ^ (limit >> w))) break;  // top w bits set
      const std::uint64_t c = v & -v;
      const std::uint64_t r = v + c;
      v = (((r ^ v) >> 2) / c) | r;
    }
  }
  const std::size_t vertices = words.size();
  const std::size_t blocks = (vertices + 63) / 64;
  std::vector<Bits> adj(vertices, Bits(blocks, 0));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t a = 0; a < static_cast<std::ptrdiff_t>(vertices); ++a) {
    for (std::size_t b = 0; b < vertices; ++b) {
      if (static_cast<std::size_t>(a) != b && std::popcount(words[static_cast<std::size_t>(a)] ^ words[b]) >= dmin) {
        adj[static_cast<std::size_t>(a)][b >> 6] |= std::uint64_t{1} << (b & 63);
      }
    }
  }
  MaxClique search(std::move(adj), vertices);
  const auto best = search.solve();
  ConstantWeightResult out;
  out.size = static_cast<int>(best.size());
  out.nodes = search.nodes();
  for (std::size_t v : best) out.witness.emplace_back(n, words[v]);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

bool audit_constant_weight(std::span<const BinaryWord> words, int n, int w, int dmin) {
  for (std::size_t a = 0; a < words.size(); ++a) {
    if (words[a].length() != n || words[a].weight() != w) return false;
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (hamming_distance(words[a], words[b]) < dmin) return false;
    }
  }
  return true;
}

}  // namespace prepcode::verify
