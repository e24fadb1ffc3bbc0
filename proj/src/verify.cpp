#include "prepcode/verify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>

#include "prepcode/errors.hpp"

namespace prepcode::verify {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct LemmaShape {
  int offset;         // i - j
  int inside_zeros;   // zeros of y inside supp(x)
  int outside_ones;   // ones of y outside supp(x)
};

std::span<const LemmaShape> lemma_shapes(Mode m) {
  static constexpr LemmaShape kPunctured[] = {{1, 3, 2}, {3, 4, 1}, {5, 5, 0}};
  static constexpr LemmaShape kExtended[] = {{2, 4, 2}, {4, 5, 1}, {6, 6, 0}};
  return m == Mode::punctured ? std::span<const LemmaShape>(kPunctured)
                              : std::span<const LemmaShape>(kExtended);
}

// Coefficients of the three downward D-set sizes in the counting inequality.
std::array<long long, 3> counting_weights(Mode m) {
  return m == Mode::punctured ? std::array<long long, 3>{3, 12, 30} : std::array<long long, 3>{4, 20, 60};
}

// Subsets of `positions` of size k, as bit masks.
template <typename Fn>
void for_each_subset(std::span<const int> positions, int k, Fn&& fn) {
  const int n = static_cast<int>(positions.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(idx);
    int p = k - 1;
    while (p >= 0 && idx[static_cast<std::size_t>(p)] == n - k + p) --p;
    if (p < 0) return;
    ++idx[static_cast<std::size_t>(p)];
    for (int q = p + 1; q < k; ++q) idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
  }
}

std::uint64_t coord_bit(int n, int coord) { return std::uint64_t{1} << BinaryWord::bit_of(n, coord); }

nlohmann::json coords_json(std::span<const int> coords) { return std::vector<int>(coords.begin(), coords.end()); }

}  // namespace

const char* to_string(Mode m) { return m == Mode::punctured ? "punctured" : "extended"; }

Mode mode_from_string(const std::string& s) {
  if (s == "punctured") return Mode::punctured;
  if (s == "extended") return Mode::extended;
  throw InputError("unknown suite '" + s + "' (expected punctured|extended)");
}

int mode_distance(Mode m) noexcept { return m == Mode::punctured ? 5 : 6; }
int mode_tuple_size(Mode m) noexcept { return m == Mode::punctured ? 2 : 3; }

long long binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void CheckReport::fail(nlohmann::json witness) {
  pass = false;
  ++violations;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(witness));
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = params;
  j["pass"] = pass;
  if (lambda) j["lambda"] = *lambda;
  if (!bounds.is_null()) j["bounds"] = bounds;
  j["counterexamples"] = counterexamples;
  j["violations"] = violations;
  j["payload"] = payload;
  j["timing_ms"] = timing_ms;
  return j;
}

std::size_t NeighborProfile::degree() const {
  std::size_t total = 0;
  for (const auto& [j, set] : d_sets) total += set.size();
  return total;
}

const std::vector<BinaryWord>& NeighborProfile::d_set(int j) const {
  static const std::vector<BinaryWord> kEmpty;
  auto it = d_sets.find(j);
  return it == d_sets.end() ? kEmpty : it->second;
}

std::vector<BinaryWord> NeighborProfile::zero_at(std::span<const int> coords, int j) const {
  std::uint64_t mask = 0;
  for (int c : coords) mask |= coord_bit(x.length(), c);
  std::vector<BinaryWord> out;
  for (const auto& y : d_set(j)) {
    if ((y.bits() & mask) == 0) out.push_back(y);
  }
  return out;
}

ABCSets abc_sets(const NeighborProfile& p, Mode mode, std::span<const int> coords) {
  for (int c : coords) {
    if (!p.x.test(c)) throw InputError("abc_sets: coordinate " + std::to_string(c) + " not in supp(x)");
  }
  const auto shapes = lemma_shapes(mode);
  const int i = p.weight();
  return {p.zero_at(coords, i - shapes[0].offset), p.zero_at(coords, i - shapes[1].offset),
          p.zero_at(coords, i - shapes[2].offset)};
}

NeighborProfile neighbor_profile(const Code& c, const BinaryWord& x) {
  if (!c.contains(x)) throw InputError("neighbor_profile: " + x.to_hex() + " is not a codeword");
  if (!c.reduced()) throw InputError("neighbor_profile: code is not reduced");
  NeighborProfile p;
  p.x = x;
  p.distance = c.require_distance();
  for (const auto& y : c) {
    if (hamming_distance(x, y) == p.distance) p.d_sets[y.weight()].push_back(y);
  }
  return p;
}

NeighborProfile neighbor_profile(const MembershipOracle& member, const BinaryWord& x, int distance) {
  if (!member(x)) throw InputError("neighbor_profile: " + x.to_hex() + " is not a codeword");
  NeighborProfile p;
  p.x = x;
  p.distance = distance;
  p.downward_only = true;
  const int n = x.length();
  const std::vector<int> inside = x.support();
  std::vector<int> outside;
  for (int c = 1; c <= n; ++c) {
    if (!x.test(c)) outside.push_back(c);
  }
  for (int zeros = distance; zeros >= 0; --zeros) {
    const int ones = distance - zeros;
    if (zeros <= ones) break;
    for_each_subset(inside, zeros, [&](const std::vector<int>& zi) {
      std::uint64_t flip_in = 0;
      for (int k : zi) flip_in |= coord_bit(n, inside[static_cast<std::size_t>(k)]);
      for_each_subset(outside, ones, [&](const std::vector<int>& oi) {
        std::uint64_t flip = flip_in;
        for (int k : oi) flip |= coord_bit(n, outside[static_cast<std::size_t>(k)]);
        const BinaryWord y(n, x.bits() ^ flip);
        if (member(y)) p.d_sets[y.weight()].push_back(y);
      });
    });
  }
  for (auto& [j, set] : p.d_sets) std::sort(set.begin(), set.end());
  return p;
}

NeighborProfile neighbor_profile_auto(const Code& c, const BinaryWord& x) {
  if (c.size() <= Code::kDefaultDistanceCap) return neighbor_profile(c, x);
  return neighbor_profile([&c](const BinaryWord& w) { return c.contains(w); }, x, c.require_distance());
}

namespace {

struct WordAudit {
  std::vector<nlohmann::json> witnesses;
  std::size_t violations = 0;
  std::size_t neighbors = 0;
  std::size_t tuples = 0;
  std::size_t shape_violations = 0;
  std::size_t disjoint_violations = 0;
  std::size_t bound_violations = 0;

  void add(nlohmann::json w) {
    ++violations;
    if (witnesses.size() < CheckReport::kMaxCounterexamples) witnesses.push_back(std::move(w));
  }
};

WordAudit audit_word(std::span<const BinaryWord> words, std::size_t xi, int distance, Mode mode) {
  WordAudit out;
  const BinaryWord& x = words[xi];
  const int n = x.length();
  const int i = x.weight();
  const std::uint64_t xb = x.bits();
  const auto shapes = lemma_shapes(mode);

  std::vector<std::uint64_t> down;
  for (const auto& y : words) {
    if (y.weight() < i && hamming_distance(x, y) == distance) down.push_back(y.bits());
  }
  out.neighbors = down.size();

  for (std::uint64_t y : down) {
    const int offset = i - std::popcount(y);
    const int inside_zeros = std::popcount(xb & ~y);
    const int outside_ones = std::popcount(y & ~xb);
    auto it = std::find_if(shapes.begin(), shapes.end(), [&](const LemmaShape& s) { return s.offset == offset; });
    if (it == shapes.end() || it->inside_zeros != inside_zeros || it->outside_ones != outside_ones) {
      ++out.shape_violations;
      out.add({{"property", "inside-zeros/outside-ones"},
               {"x", x.to_hex()},
               {"y", BinaryWord(n, y).to_hex()},
               {"weight_drop", offset},
               {"inside_zeros", inside_zeros},
               {"outside_ones", outside_ones}});
    }
  }

  const int s = mode_tuple_size(mode);
  const long lo = i - (mode == Mode::punctured ? 3 : 4);
  const long hi = i - (mode == Mode::punctured ? 2 : 3);
  const std::vector<int> supp = x.support();
  std::vector<std::uint64_t> members;
  for_each_subset(supp, s, [&](const std::vector<int>& idx) {
    ++out.tuples;
    std::vector<int> coords;
    std::uint64_t tmask = 0;
    for (int k : idx) {
      coords.push_back(supp[static_cast<std::size_t>(k)]);
      tmask |= coord_bit(n, supp[static_cast<std::size_t>(k)]);
    }
    members.clear();
    long weighted = 0;
    for (std::uint64_t y : down) {
      if ((y & tmask) == 0) {
        members.push_back(y);
        weighted += std::popcount(xb & ~y) - s;
      }
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        const std::uint64_t shared_zero = xb & ~tmask & ~members[a] & ~members[b];
        const std::uint64_t shared_one = members[a] & members[b] & ~xb;
        if (shared_zero != 0 || shared_one != 0) {
          ++out.disjoint_violations;
          out.add({{"property", "disjoint zeros/ones"},
                   {"x", x.to_hex()},
                   {"coords", coords_json(coords)},
                   {"u", BinaryWord(n, members[a]).to_hex()},
                   {"v", BinaryWord(n, members[b]).to_hex()},
                   {"shared_inside_zeros", std::popcount(shared_zero)},
                   {"shared_outside_ones", std::popcount(shared_one)}});
        }
      }
    }
    if (weighted < lo || weighted > hi) {
      ++out.bound_violations;
      out.add({{"property", "per-tuple bound"},
               {"x", x.to_hex()},
               {"coords", coords_json(coords)},
               {"value", weighted},
               {"lower", lo},
               {"upper", hi}});
    }
  });
  return out;
}

}  // namespace

CheckReport audit_structure(std::span<const BinaryWord> words, int distance, Mode mode) {
  const auto start = Clock::now();
  CheckReport r;
  r.check = std::string("structure_") + to_string(mode);
  r.params = {{"mode", to_string(mode)}, {"distance", distance}, {"words", words.size()}};
  std::vector<WordAudit> audits(words.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(words.size()); ++k) {
    audits[static_cast<std::size_t>(k)] = audit_word(words, static_cast<std::size_t>(k), distance, mode);
  }
  std::size_t neighbors = 0, tuples = 0, shape = 0, disjoint = 0, bnd = 0;
  for (auto& a : audits) {
    neighbors += a.neighbors;
    tuples += a.tuples;
    shape += a.shape_violations;
    disjoint += a.disjoint_violations;
    bnd += a.bound_violations;
    for (auto& w : a.witnesses) r.fail(std::move(w));
    // witnesses beyond the per-word cap still count
    for (std::size_t extra = a.witnesses.size(); extra < a.violations; ++extra) {
      r.pass = false;
      ++r.violations;
    }
  }
  r.payload = {{"words_checked", words.size()},
               {"downward_neighbors_checked", neighbors},
               {"tuples_checked", tuples},
               {"inside_outside_violations", shape},
               {"disjointness_violations", disjoint},
               {"tuple_bound_violations", bnd}};
  r.timing_ms = ms_since(start);
  return r;
}

CheckReport check_structure(const Code& c, Mode mode) {
  const int d = c.require_distance();
  if (d != mode_distance(mode)) {
    throw InputError(std::string("check_structure: ") + to_string(mode) + " mode needs d=" +
                     std::to_string(mode_distance(mode)) + ", code has d=" + std::to_string(d));
  }
  if (!c.reduced()) throw InputError("check_structure: code is not reduced");
  CheckReport r = audit_structure(c.words(), d, mode);
  r.params["n"] = c.length();
  return r;
}

CheckReport check_design(std::span<const BinaryWord> blocks, int n, int t, int k) {
  const auto start = Clock::now();
  if (t < 1 || t > k || k > n) throw InputError("check_design: need 1 <= t <= k <= n");
  for (const auto& b : blocks) {
    if (b.length() != n) throw InputError("check_design: block of length " + std::to_string(b.length()));
    if (b.weight() != k) {
      throw InputError("check_design: block " + b.to_hex() + " has size " + std::to_string(b.weight()) +
                       ", expected " + std::to_string(k));
    }
  }
  const long long subsets = binomial(n, t);
  if (subsets > 50'000'000) throw CapabilityError("check_design: too many t-subsets");
  std::vector<long> counts(static_cast<std::size_t>(subsets), 0);
  // colex rank of a sorted t-subset {c_0 < ... < c_{t-1}} of {0..n-1}: sum C(c_m, m+1)
  for (const auto& b : blocks) {
    std::vector<int> supp = b.support();
    for (auto& c : supp) --c;
    for_each_subset(supp, t, [&](const std::vector<int>& idx) {
      long long rank = 0;
      for (int m = 0; m < t; ++m) rank += binomial(supp[static_cast<std::size_t>(idx[static_cast<std::size_t>(m)])], m + 1);
      ++counts[static_cast<std::size_t>(rank)];
    });
  }
  CheckReport r;
  r.check = "design";
  r.params = {{"n", n}, {"t", t}, {"k", k}, {"blocks", blocks.size()}};
  const auto [mn, mx] = std::minmax_element(counts.begin(), counts.end());
  r.payload["t_subsets"] = subsets;
  r.payload["min_count"] = *mn;
  r.payload["max_count"] = *mx;
  if (*mn == *mx) {
    r.lambda = *mn;
  } else {
    // Witness: the first t-subset with a count different from the first one.
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 1);
    long long rank = 0;
    std::vector<int> first_coords;
    long first_count = -1;
    std::vector<std::vector<int>> by_rank(static_cast<std::size_t>(subsets));
    for_each_subset(all, t, [&](const std::vector<int>& idx) {
      long long rk = 0;
      std::vector<int> coords;
      for (int m = 0; m < t; ++m) {
        coords.push_back(idx[static_cast<std::size_t>(m)] + 1);
        rk += binomial(idx[static_cast<std::size_t>(m)], m + 1);
      }
      by_rank[static_cast<std::size_t>(rk)] = coords;
    });
    first_coords = by_rank[0];
    first_count = counts[0];
    for (rank = 1; rank < subsets; ++rank) {
      if (counts[static_cast<std::size_t>(rank)] != first_count) {
        r.fail({{"subset", by_rank[static_cast<std::size_t>(rank)]},
                {"count", counts[static_cast<std::size_t>(rank)]},
                {"reference_subset", first_coords},
                {"reference_count", first_count}});
      }
    }
  }
  nlohmann::json formulas = nlohmann::json::object();
  if (t == 2 && k == 5) {
    formulas["(n-3)/3"] = static_cast<double>(n - 3) / 3.0;
    formulas["(n-3)/4"] = static_cast<double>(n - 3) / 4.0;
  } else if (t == 3 && k == 6) {
    formulas["(n-4)/3"] = static_cast<double>(n - 4) / 3.0;
  }
  if (!formulas.empty()) {
    nlohmann::json matches = nlohmann::json::object();
    for (auto& [name, value] : formulas.items()) {
      matches[name] = r.lambda.has_value() && static_cast<double>(*r.lambda) == value.get<double>();
    }
    r.payload["lambda_formulas"] = formulas;
    r.payload["lambda_matches"] = matches;
  }
  r.timing_ms = ms_since(start);
  return r;
}

CheckReport check_common_zero(std::span<const BinaryWord> blocks, int n) {
  const auto start = Clock::now();
  CheckReport r;
  r.check = "corollary1_common_zero";
  r.params = {{"n", n}, {"blocks", blocks.size()}};
  std::map<std::size_t, std::size_t> blocks_per_pair;
  long pairs = 0;
  for (int rr = 1; rr <= n; ++rr) {
    for (int s = rr + 1; s <= n; ++s) {
      ++pairs;
      const std::uint64_t both = coord_bit(n, rr) | coord_bit(n, s);
      std::uint64_t covered = both;
      std::size_t through = 0;
      for (const auto& b : blocks) {
        if ((b.bits() & both) == both) {
          covered |= b.bits();
          ++through;
        }
      }
      ++blocks_per_pair[through];
      const std::uint64_t zeros = BinaryWord::mask(n) & ~covered;
      if (std::popcount(zeros) != 1) {
        r.fail({{"pair", {rr, s}}, {"blocks_through_pair", through}, {"common_zero_coords", BinaryWord(n, zeros).support()}});
      }
    }
  }
  nlohmann::json hist = nlohmann::json::object();
  for (auto [k, v] : blocks_per_pair) hist[std::to_string(k)] = v;
  r.payload = {{"pairs_checked", pairs}, {"blocks_through_pair_histogram", hist}};
  r.timing_ms = ms_since(start);
  return r;
}

CheckReport check_corollary1(const Code& c) {
  const auto blocks = c.words_of_weight(5);
  if (blocks.empty()) throw InputError("check_corollary1: code has no weight-5 codewords");
  CheckReport r = check_common_zero(blocks, c.length());
  r.check = "corollary1";
  return r;
}

namespace {

CheckReport check_counting(const Code& c, Mode mode) {
  const auto start = Clock::now();
  const int d = c.require_distance();
  if (d != mode_distance(mode)) {
    throw InputError(std::string("counting check: ") + to_string(mode) + " mode needs d=" +
                     std::to_string(mode_distance(mode)));
  }
  if (!c.reduced()) throw InputError("counting check: code is not reduced");
  const auto shapes = lemma_shapes(mode);
  const auto coef = counting_weights(mode);
  const int min_weight = d;

  CheckReport r;
  r.check = std::string("counting_") + to_string(mode);
  r.params = {{"n", c.length()}, {"mode", to_string(mode)}, {"min_weight", min_weight}};

  struct Row {
    long long middle = 0, lower = 0, upper = 0;
    int weight = 0;
    bool checked = false;
  };
  const auto& words = c.words();
  std::vector<Row> rows(words.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(words.size()); ++k) {
    const BinaryWord& x = words[static_cast<std::size_t>(k)];
    Row& row = rows[static_cast<std::size_t>(k)];
    const int i = x.weight();
    row.weight = i;
    if (i < min_weight) continue;
    std::array<long long, 3> sizes{0, 0, 0};
    for (const auto& y : words) {
      if (hamming_distance(x, y) != d) continue;
      for (std::size_t s = 0; s < 3; ++s) {
        if (y.weight() == i - shapes[s].offset) ++sizes[s];
      }
    }
    row.middle = coef[0] * sizes[0] + coef[1] * sizes[1] + coef[2] * sizes[2];
    if (mode == Mode::punctured) {
      row.lower = (i - 3) * binomial(i, 2);
      row.upper = (i - 2) * binomial(i, 2);
    } else {
      row.lower = binomial(i, 3) * (i - 4);
      row.upper = binomial(i, 3) * (i - 3);
    }
    row.checked = true;
  }

  struct WeightSummary {
    std::size_t words = 0;
    long long min_middle = 0, max_middle = 0, lower = 0, upper = 0;
  };
  std::map<int, WeightSummary> by_weight;
  long long min_lower_slack = -1, min_upper_slack = -1;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Row& row = rows[k];
    if (!row.checked) continue;
    ++checked;
    auto [it, fresh] = by_weight.try_emplace(row.weight);
    WeightSummary& s = it->second;
    if (fresh) {
      s.min_middle = s.max_middle = row.middle;
      s.lower = row.lower;
      s.upper = row.upper;
    }
    ++s.words;
    s.min_middle = std::min(s.min_middle, row.middle);
    s.max_middle = std::max(s.max_middle, row.middle);
    const long long ls = row.middle - row.lower, us = row.upper - row.middle;
    if (min_lower_slack < 0 || ls < min_lower_slack) min_lower_slack = ls;
    if (min_upper_slack < 0 || us < min_upper_slack) min_upper_slack = us;
    if (ls < 0 || us < 0) {
      r.fail({{"x", words[k].to_hex()}, {"weight", row.weight}, {"value", row.middle}, {"lower", row.lower}, {"upper", row.upper}});
    }
  }
  nlohmann::json per_weight = nlohmann::json::array();
  for (const auto& [w, s] : by_weight) {
    per_weight.push_back({{"weight", w},
                          {"words", s.words},
                          {"lower", s.lower},
                          {"upper", s.upper},
                          {"min_value", s.min_middle},
                          {"max_value", s.max_middle},
                          {"upper_tight", s.min_middle == s.upper && s.max_middle == s.upper},
                          {"lower_tight", s.min_middle == s.lower}});
  }
  r.bounds = {{"min_lower_slack", min_lower_slack}, {"min_upper_slack", min_upper_slack}};
  r.payload = {{"words_checked", checked}, {"per_weight", per_weight}};
  r.timing_ms = ms_since(start);
  return r;
}

}  // namespace

CheckReport check_counting_punctured(const Code& c) { return check_counting(c, Mode::punctured); }
CheckReport check_counting_extended(const Code& c) { return check_counting(c, Mode::extended); }

CriticalRow critical_row(long i) {
  CriticalRow row;
  row.i = i;
  const long long ci2 = binomial(i, 2);
  row.numerator = 4LL * (i - 3) * ci2 - static_cast<long long>(i) * binomial(i + 2, 2);
  // ceil for either sign
  row.lower_bound = row.numerator >= 0 ? (row.numerator + 17) / 18 : -((-row.numerator) / 18);
  row.upper_contradiction = 3LL * (i - 2) * ci2 < 2 * row.numerator;
  const long long lhs = 10LL * i * (i - 1) * (i - 3);
  row.plus4_holds = lhs <= 2LL * i * (i + 3) * (i + 2);
  row.plus4_exact_holds = lhs <= static_cast<long long>(i + 4) * (i + 3) * (i + 2);
  return row;
}

namespace {

nlohmann::json runs(long lo, const std::vector<bool>& flags, bool value) {
  nlohmann::json out = nlohmann::json::array();
  long start = -1;
  for (std::size_t k = 0; k <= flags.size(); ++k) {
    const bool hit = k < flags.size() && flags[k] == value;
    if (hit && start < 0) start = lo + static_cast<long>(k);
    if (!hit && start >= 0) {
      out.push_back({start, lo + static_cast<long>(k) - 1});
      start = -1;
    }
  }
  return out;
}

}  // namespace

CheckReport critical_scan(long i_min, long i_max) {
  const auto start = Clock::now();
  if (i_min < 6 || i_min > i_max || i_max > 10'000) {
    throw InputError("critical_scan: need 6 <= imin <= imax <= 10000");
  }
  CheckReport r;
  r.check = "critical_scan";
  r.params = {{"imin", i_min}, {"imax", i_max}};
  std::vector<bool> contradiction, plus4, plus4_exact, positive;
  nlohmann::json table = nlohmann::json::array();
  for (long i = i_min; i <= i_max; ++i) {
    const CriticalRow row = critical_row(i);
    contradiction.push_back(row.upper_contradiction);
    plus4.push_back(row.plus4_holds);
    plus4_exact.push_back(row.plus4_exact_holds);
    positive.push_back(row.lower_bound >= 1);
    if (i - i_min < 64) {
      table.push_back({{"i", i},
                       {"numerator", row.numerator},
                       {"bound_rational", std::to_string(row.numerator) + "/18"},
                       {"L", row.lower_bound},
                       {"contradiction_holds", row.upper_contradiction},
                       {"plus4_holds", row.plus4_holds},
                       {"plus4_lhs", 10LL * i * (i - 1) * (i - 3)},
                       {"plus4_rhs", 2LL * i * (i + 3) * (i + 2)}});
    }
    if ((i == 6 || i == 7) && row.lower_bound < 1) {
      r.fail({{"claim", "L(i) >= 1"}, {"i", i}, {"L", row.lower_bound}});
    }
    if (i >= 10 && !row.upper_contradiction) {
      r.fail({{"claim", "3(i-2)C(i,2) < 2(4(i-3)C(i,2) - iC(i+2,2))"}, {"i", i}});
    }
    if (row.plus4_holds) {
      r.fail({{"claim", "10i(i-1)(i-3) > 2i(i+3)(i+2)"}, {"i", i}});
    }
  }
  r.payload = {{"rows", table},
               {"rows_truncated", i_max - i_min + 1 > 64},
               {"contradiction_holds_ranges", runs(i_min, contradiction, true)},
               {"plus4_holds_ranges", runs(i_min, plus4, true)},
               {"plus4_exact_holds_ranges", runs(i_min, plus4_exact, true)},
               {"L_positive_ranges", runs(i_min, positive, true)}};
  r.timing_ms = ms_since(start);
  return r;
}

}  // namespace prepcode::verify
