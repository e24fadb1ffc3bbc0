#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "prepcode/code.hpp"

namespace prepcode::verify {

/// Punctured: d = 5, audit pairs of support coordinates.
/// Extended: d = 6, audit triples.
enum class Mode { punctured, extended };

const char* to_string(Mode m);
Mode mode_from_string(const std::string& s);
int mode_distance(Mode m) noexcept;
/// Number of support coordinates fixed to zero in the A/B/C audit (2 or 3).
int mode_tuple_size(Mode m) noexcept;

/// Outcome of one mechanical check. A failing report always carries either a
/// counterexample or a violated numeric relation in `payload`.
struct CheckReport {
  static constexpr std::size_t kMaxCounterexamples = 10;

  std::string check;
  nlohmann::json params = nlohmann::json::object();
  bool pass = true;
  std::optional<long> lambda;
  nlohmann::json bounds;  // null when not applicable
  std::vector<nlohmann::json> counterexamples;
  std::size_t violations = 0;
  nlohmann::json payload = nlohmann::json::object();
  double timing_ms = 0.0;

  /// Marks the report failed; keeps at most kMaxCounterexamples witnesses.
  void fail(nlohmann::json witness);
  nlohmann::json to_json() const;
};

/// D-sets of a codeword x of weight i: codewords of weight j at distance d from x.
struct NeighborProfile {
  BinaryWord x;
  int distance = 0;
  /// j -> D(i, j), words in ascending order.
  std::map<int, std::vector<BinaryWord>> d_sets;
  /// Oracle mode enumerates only the downward sets (j < i).
  bool downward_only = false;

  int weight() const noexcept { return x.weight(); }
  std::size_t degree() const;
  const std::vector<BinaryWord>& d_set(int j) const;
  /// Members of the downward set D(i, j) that are zero at every coordinate in `coords`.
  std::vector<BinaryWord> zero_at(std::span<const int> coords, int j) const;
};

/// The A, B, C subsets for support coordinates `coords` (pair or triple):
/// members of the three downward D-sets (offsets 1,3,5 punctured; 2,4,6 extended)
/// with zeros at all of `coords`.
struct ABCSets {
  std::vector<BinaryWord> a, b, c;
};
ABCSets abc_sets(const NeighborProfile& p, Mode mode, std::span<const int> coords);

/// Full scan of the code. Throws InputError if x is not a codeword, c is not
/// reduced, or d is undefined.
NeighborProfile neighbor_profile(const Code& c, const BinaryWord& x);

using MembershipOracle = std::function<bool(const BinaryWord&)>;

/// Generate-and-test: all words at distance `distance` from x with more zeros
/// inside supp(x) than ones outside, filtered by the oracle.
NeighborProfile neighbor_profile(const MembershipOracle& member, const BinaryWord& x, int distance);

/// Picks the full scan for M <= 10^4, generate-and-test otherwise.
NeighborProfile neighbor_profile_auto(const Code& c, const BinaryWord& x);

/// Inside-zero / outside-one counts of every downward neighbour, disjointness of
/// the A/B/C members for every support pair (triple), and the per-tuple bounds
/// i-3 <= |A|+2|B|+3|C| <= i-2 (extended: i-4 .. i-3).
/// Throws InputError if the code's d does not match the mode or c is not reduced.
CheckReport check_structure(const Code& c, Mode mode);

/// Same audit over an arbitrary word list with adjacency distance `distance`
/// (no premise checks).
CheckReport audit_structure(std::span<const BinaryWord> words, int distance, Mode mode);

/// Counts blocks through every t-subset of {1..n}; passes iff the count is constant.
/// Throws InputError if a block has size != k or t > k or k > n.
CheckReport check_design(std::span<const BinaryWord> blocks, int n, int t, int k);

/// For every coordinate pair (r, s), the coordinates (other than r, s) that are
/// zero in all minimum-weight codewords through r and s: exactly one expected.
/// Throws InputError if c has no weight-5 codewords.
CheckReport check_corollary1(const Code& c);
/// Block-level form of the same check.
CheckReport check_common_zero(std::span<const BinaryWord> blocks, int n);

/// (i-3)C(i,2) <= 3|D(i,i-1)| + 12|D(i,i-3)| + 30|D(i,i-5)| <= (i-2)C(i,2) for every codeword of weight >= 5.
CheckReport check_counting_punctured(const Code& c);
/// C(i,3)(i-4) <= 4|D(i,i-2)| + 20|D(i,i-4)| + 60|D(i,i-6)| <= C(i,3)(i-3) for every codeword of weight >= 6.
CheckReport check_counting_extended(const Code& c);

struct ConstantWeightResult {
  int size = 0;
  std::vector<BinaryWord> witness;
  std::size_t nodes = 0;
};

inline constexpr std::size_t kConstantWeightCap = 10'000;

/// Largest set of weight-w words of length n with pairwise distance >= dmin,
/// by branch and bound on the compatibility graph. Throws CapabilityError when
/// C(n, w) exceeds kConstantWeightCap, InputError on bad parameters.
ConstantWeightResult max_constant_weight(int n, int w, int dmin);

/// True iff every witness word has length n, weight w, and pairwise distance >= dmin.
bool audit_constant_weight(std::span<const BinaryWord> words, int n, int w, int dmin);

/// Exact integer values behind the weight-change case analysis.
struct CriticalRow {
  long i = 0;
  /// 4(i-3)C(i,2) - i*C(i+2,2); the bound is numerator / 18.
  long long numerator = 0;
  long long lower_bound = 0;  // ceil(numerator / 18)
  /// 3(i-2)C(i,2) < 2 * numerator
  bool upper_contradiction = false;
  /// 10 i (i-1)(i-3) <= 2 i (i+3)(i+2)
  bool plus4_holds = false;
  /// 10 i (i-1)(i-3) <= (i+4)(i+3)(i+2), the form before the coarsening
  bool plus4_exact_holds = false;
};
CriticalRow critical_row(long i);

/// Scans i in [i_min, i_max]; passes iff L(6), L(7) >= 1 (when in range), the
/// contradiction inequality holds for every i >= 10, and the wt+4 inequality
/// fails for every i >= 6. Throws InputError unless 6 <= i_min <= i_max <= 10^4.
CheckReport critical_scan(long i_min, long i_max);

long long binomial(long n, long k);

}  // namespace prepcode::verify
