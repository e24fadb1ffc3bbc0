#include "prepcode/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "prepcode/errors.hpp"

namespace prepcode {

Graph::Graph(std::size_t vertices) : adj_(vertices) { resize_rows(); }

Graph::Graph(kernels::Adjacency adjacency) : adj_(std::move(adjacency)) {
  resize_rows();
  const auto n = adj_.size();
  std::size_t half_edges = 0;
  for (std::uint32_t u = 0; u < n; ++u) {
    auto& row = adj_[u];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) {
      throw InputError("graph: repeated edge at vertex " + std::to_string(u));
    }
    for (std::uint32_t v : row) {
      if (v >= n || v == u) throw InputError("graph: bad neighbour of vertex " + std::to_string(u));
      rows_[u * words_per_row_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }
    half_edges += row.size();
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v : adj_[u]) {
      if (!adjacent(v, u)) throw InputError("graph: adjacency is not symmetric");
    }
  }
  edges_ = half_edges / 2;
}

void Graph::resize_rows() {
  words_per_row_ = (adj_.size() + 63) / 64;
  rows_.assign(adj_.size() * words_per_row_, 0);
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
  if (u >= size() || v >= size() || u == v) throw InputError("graph: bad edge");
  if (adjacent(u, v)) return;
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  rows_[u * words_per_row_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  rows_[v * words_per_row_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++edges_;
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (adj_.empty()) return 0;
  const std::size_t d = adj_.front().size();
  for (const auto& row : adj_) {
    if (row.size() != d) return std::nullopt;
  }
  return d;
}

Graph Graph::relabeled(std::span<const std::uint32_t> perm) const {
  if (perm.size() != size()) throw InputError("relabeled: permutation size mismatch");
  kernels::Adjacency adj(size());
  for (std::uint32_t u = 0; u < size(); ++u) {
    for (std::uint32_t v : adj_[u]) adj[perm[u]].push_back(perm[v]);
  }
  return Graph(std::move(adj));
}

MinDistGraph build_mdg(std::span<const BinaryWord> words, int distance) {
  std::vector<std::uint64_t> bits;
  bits.reserve(words.size());
  for (const auto& w : words) {
    if (w.length() != words.front().length()) throw InputError("build_mdg: unequal lengths");
    bits.push_back(w.bits());
  }
  MinDistGraph mdg;
  mdg.words.assign(words.begin(), words.end());
  mdg.distance = distance;
  mdg.graph = Graph(kernels::omp::distance_adjacency(bits, distance));
  return mdg;
}

MinDistGraph build_mdg(const Code& c) { return build_mdg(c.words(), c.require_distance()); }

Coloring Coloring::from_labels(std::span<const long> labels) {
  std::vector<long> values(labels.begin(), labels.end());
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Coloring c;
  c.color.reserve(labels.size());
  for (long l : labels) {
    c.color.push_back(
        static_cast<int>(std::lower_bound(values.begin(), values.end(), l) - values.begin()));
  }
  return c;
}

int Coloring::classes() const {
  if (color.empty()) return 0;
  std::vector<int> seen(color);
  std::sort(seen.begin(), seen.end());
  return static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
}

namespace {

int count_classes(const std::vector<int>& color) {
  int k = 0;
  for (int c : color) k = std::max(k, c + 1);
  return k;
}

// One refinement pass; returns the new class count.
int refine_pass(const Graph& g, std::vector<int>& color, std::vector<std::vector<int>>& sig,
                std::vector<std::uint32_t>& order) {
  const auto n = static_cast<std::uint32_t>(g.size());
  for (std::uint32_t v = 0; v < n; ++v) {
    auto& s = sig[v];
    s.clear();
    s.push_back(color[v]);
    for (std::uint32_t u : g.neighbors(v)) s.push_back(color[u]);
    std::sort(s.begin() + 1, s.end());
  }
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
  int next = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (k == 0 || sig[order[k]] != sig[order[k - 1]]) ++next;
    color[order[k]] = next;
  }
  return next + 1;
}

}  // namespace

Coloring color_refinement(const Graph& g, Coloring initial) {
  if (initial.color.size() != g.size()) throw InputError("color_refinement: colouring size mismatch");
  // Normalise to dense, order-preserving class ids.
  std::vector<long> labels(initial.color.begin(), initial.color.end());
  Coloring c = Coloring::from_labels(labels);
  std::vector<std::vector<int>> sig(g.size());
  std::vector<std::uint32_t> order(g.size());
  int k = count_classes(c.color);
  for (;;) {
    const int next = refine_pass(g, c.color, sig, order);
    if (next == k) break;
    k = next;
  }
  return c;
}

namespace {

class Canonicalizer {
 public:
  Canonicalizer(const Graph& g, std::span<const long> labels) : g_(g), n_(g.size()) {
    labels_.assign(n_, 0);
    if (!labels.empty()) {
      if (labels.size() != n_) throw InputError("canonical_form: label count mismatch");
      labels_.assign(labels.begin(), labels.end());
    }
    sig_.resize(n_);
    order_.resize(n_);
    parent_.resize(n_);
  }

  CanonicalForm run() {
    CanonicalForm out;
    if (n_ == 0) {
      out.certificate = header();
      return out;
    }
    std::vector<int> color = Coloring::from_labels(labels_).color;
    refine(color);
    search(color, 0, 0);
    out.labeling = best_.labeling;
    out.certificate = header();
    // Trace first, then the graph: the order the search compares them in.
    for (const auto& level : best_.trace) {
      append_int(out.certificate, static_cast<long>(level.size()));
      for (int s : level) append_int(out.certificate, s);
    }
    out.certificate.insert(out.certificate.end(), best_.cert.begin(), best_.cert.end());
    out.nodes = nodes_;
    out.leaves = leaves_;
    out.generators = gens_.size();
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  struct Leaf {
    std::vector<std::uint32_t> labeling;  // vertex -> position
    std::vector<std::uint32_t> inverse;   // position -> vertex
    std::vector<std::uint8_t> cert;
    std::vector<std::vector<int>> trace;
    std::vector<std::uint32_t> path;
  };

  static void append_int(std::vector<std::uint8_t>& out, long v) {
    const auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) out.push_back(static_cast<std::uint8_t>(u >> (8 * b)));
  }

  std::vector<std::uint8_t> header() const {
    std::vector<std::uint8_t> h;
    append_int(h, static_cast<long>(n_));
    append_int(h, static_cast<long>(g_.edge_count()));
    return h;
  }

  void refine(std::vector<int>& color) {
    int k = count_classes(color);
    for (;;) {
      const int next = refine_pass(g_, color, sig_, order_);
      if (next == k) break;
      k = next;
    }
  }

  std::vector<int> cell_sizes(const std::vector<int>& color) const {
    std::vector<int> sizes(static_cast<std::size_t>(count_classes(color)), 0);
    for (int c : color) ++sizes[static_cast<std::size_t>(c)];
    return sizes;
  }

  // Individualised vertex goes first within its cell.
  static std::vector<int> individualize(const std::vector<int>& color, std::uint32_t v) {
    std::vector<int> out(color.size());
    for (std::size_t u = 0; u < color.size(); ++u) {
      out[u] = color[u] + ((color[u] > color[v]) || (color[u] == color[v] && u != v) ? 1 : 0);
    }
    return out;
  }

  std::vector<std::uint8_t> leaf_certificate(const std::vector<std::uint32_t>& inverse) const {
    std::vector<std::uint8_t> cert;
    cert.reserve(n_ * 8 + n_ * n_ / 16 + 8);
    for (std::size_t p = 0; p < n_; ++p) append_int(cert, labels_[inverse[p]]);
    std::uint8_t acc = 0;
    int filled = 0;
    for (std::size_t p = 0; p < n_; ++p) {
      for (std::size_t q = p + 1; q < n_; ++q) {
        acc = static_cast<std::uint8_t>((acc << 1) | (g_.adjacent(inverse[p], inverse[q]) ? 1 : 0));
        if (++filled == 8) {
          cert.push_back(acc);
          acc = 0;
          filled = 0;
        }
      }
    }
    if (filled) cert.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
    return cert;
  }

  static int compare_levels(const std::vector<int>& a, const std::vector<int>& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
  }

  // -1: current trace prefix is below best's, 0: equal, 1: above.
  int trace_state(std::size_t level) const {
    for (std::size_t l = 0; l <= level; ++l) {
      if (l >= best_.trace.size()) return -1;
      const int c = compare_levels(trace_[l], best_.trace[l]);
      if (c != 0) return c;
    }
    return 0;
  }

  bool trace_matches(const Leaf& leaf, std::size_t level) const {
    if (leaf.trace.size() != level + 1) return false;
    for (std::size_t l = 0; l <= level; ++l) {
      if (trace_[l] != leaf.trace[l]) return false;
    }
    return true;
  }

  static int common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return static_cast<int>(k);
  }

  void record_automorphism(const std::vector<std::uint32_t>& labeling, const Leaf& target) {
    std::vector<std::uint32_t> gamma(n_);
    bool identity = true;
    for (std::uint32_t v = 0; v < n_; ++v) {
      gamma[v] = target.inverse[labeling[v]];
      identity = identity && gamma[v] == v;
    }
    if (!identity) gens_.push_back(std::move(gamma));
  }

  int leaf(const std::vector<int>& color, std::size_t level, int state) {
    ++leaves_;
    Leaf cur;
    cur.labeling.resize(n_);
    cur.inverse.resize(n_);
    for (std::uint32_t v = 0; v < n_; ++v) {
      cur.labeling[v] = static_cast<std::uint32_t>(color[v]);
      cur.inverse[static_cast<std::size_t>(color[v])] = v;
    }
    cur.cert = leaf_certificate(cur.inverse);
    if (!have_best_) {
      cur.trace.assign(trace_.begin(), trace_.begin() + static_cast<std::ptrdiff_t>(level) + 1);
      cur.path = path_;
      best_ = cur;
      first_ = cur;
      have_best_ = true;
      return kNoJump;
    }
    if (trace_matches(first_, level) && cur.cert == first_.cert) {
      record_automorphism(cur.labeling, first_);
      return common_prefix(path_, first_.path);
    }
    if (state == 0 && cur.cert == best_.cert) {
      record_automorphism(cur.labeling, best_);
      return common_prefix(path_, best_.path);
    }
    if (state < 0 || (state == 0 && cur.cert < best_.cert)) {
      cur.trace.assign(trace_.begin(), trace_.begin() + static_cast<std::ptrdiff_t>(level) + 1);
      cur.path = path_;
      best_ = std::move(cur);
    }
    return kNoJump;
  }

  std::uint32_t find(std::uint32_t v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Orbits of the subgroup generated by known automorphisms fixing the current path pointwise.
  void compute_orbits() {
    std::iota(parent_.begin(), parent_.end(), 0u);
    for (const auto& gamma : gens_) {
      bool fixes = true;
      for (std::uint32_t p : path_) fixes = fixes && gamma[p] == p;
      if (!fixes) continue;
      for (std::uint32_t v = 0; v < n_; ++v) {
        const std::uint32_t a = find(v), b = find(gamma[v]);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  int search(const std::vector<int>& color, std::size_t level, int state) {
    ++nodes_;
    if (trace_.size() <= level) trace_.resize(level + 1);
    trace_[level] = cell_sizes(color);
    if (have_best_ && state == 0) {
      const int c = level < best_.trace.size() ? compare_levels(trace_[level], best_.trace[level]) : -1;
      if (c > 0) return kNoJump;
      if (c < 0) state = -1;
    }
    const auto& sizes = trace_[level];
    if (sizes.size() == n_) return leaf(color, level, state);

    // Target: smallest non-singleton cell, lowest class id.
    int target = -1;
    for (std::size_t c = 0; c < sizes.size(); ++c) {
      if (sizes[c] > 1 && (target < 0 || sizes[c] < sizes[static_cast<std::size_t>(target)])) {
        target = static_cast<int>(c);
      }
    }
    std::vector<std::uint32_t> cell;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (color[v] == target) cell.push_back(v);
    }

    std::vector<std::uint32_t> explored;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    for (std::uint32_t w : cell) {
      if (gens_seen != gens_.size()) {
        compute_orbits();
        gens_seen = gens_.size();
      }
      const std::uint32_t root = find(w);
      bool equivalent = false;
      for (std::uint32_t e : explored) equivalent = equivalent || find(e) == root;
      if (equivalent) continue;
      explored.push_back(w);

      std::vector<int> child = individualize(color, w);
      refine(child);
      path_.push_back(w);
      const int jump = search(child, level + 1, state);
      path_.pop_back();
      if (jump != kNoJump && jump < static_cast<int>(level)) return jump;
      state = trace_state(level);
      if (state > 0) return kNoJump;
    }
    return kNoJump;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<long> labels_;
  std::vector<std::vector<int>> sig_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> parent_;

  std::vector<std::vector<int>> trace_;
  std::vector<std::uint32_t> path_;
  std::vector<std::vector<std::uint32_t>> gens_;
  Leaf best_;
  Leaf first_;
  bool have_best_ = false;
  std::size_t nodes_ = 0;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::span<const long> labels, const CanonOptions& opts) {
  if (g.size() > opts.vertex_cap) {
    throw CapabilityError("canonical_form: " + std::to_string(g.size()) + " vertices exceeds cap " +
                          std::to_string(opts.vertex_cap));
  }
  return Canonicalizer(g, labels).run();
}

bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const std::uint32_t> map) {
  const auto n = g1.size();
  if (g2.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::uint32_t v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> find_isomorphism(const Graph& g1, const Graph& g2,
                                                           std::span<const long> labels1,
                                                           std::span<const long> labels2,
                                                           const CanonOptions& opts) {
  if (g1.size() != g2.size() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  const CanonicalForm a = canonical_form(g1, labels1, opts);
  const CanonicalForm b = canonical_form(g2, labels2, opts);
  if (a.certificate != b.certificate) return std::nullopt;
  const auto n = g1.size();
  std::vector<std::uint32_t> inverse_b(n);
  for (std::uint32_t v = 0; v < n; ++v) inverse_b[b.labeling[v]] = v;
  std::vector<std::uint32_t> map(n);
  for (std::uint32_t v = 0; v < n; ++v) map[v] = inverse_b[a.labeling[v]];
  if (!is_isomorphism(g1, g2, map)) {
    throw ConstructionError("find_isomorphism: equal certificates but assembled map is not an isomorphism");
  }
  if (!labels1.empty() || !labels2.empty()) {
    for (std::uint32_t v = 0; v < n; ++v) {
      const long l1 = labels1.empty() ? 0 : labels1[v];
      const long l2 = labels2.empty() ? 0 : labels2[map[v]];
      if (l1 != l2) throw ConstructionError("find_isomorphism: assembled map breaks vertex colours");
    }
  }
  return map;
}

void write_dimacs(std::ostream& out, const MinDistGraph& mdg) {
  const Graph& g = mdg.graph;
  out << "p edge " << g.size() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < mdg.words.size(); ++i) {
    out << "c v " << (i + 1) << ' ' << mdg.words[i].to_hex() << '\n';
  }
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    for (std::uint32_t v : g.neighbors(u)) {
      if (u < v) out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
  }
}

}  // namespace prepcode
