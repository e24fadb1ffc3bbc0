#include "prepcode/code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "prepcode/errors.hpp"
#include "prepcode/kernels.hpp"

namespace prepcode {

Code::Code(int n, std::vector<BinaryWord> words, std::size_t distance_cap)
    : n_(n), words_(std::move(words)) {
  if (n < 1 || n > BinaryWord::kMaxLength) throw InputError("code length out of range");
  for (const auto& w : words_) {
    if (w.length() != n) {
      throw InputError("word of length " + std::to_string(w.length()) + " in code of length " +
                       std::to_string(n));
    }
  }
  std::sort(words_.begin(), words_.end());
  if (auto dup = std::adjacent_find(words_.begin(), words_.end()); dup != words_.end()) {
    throw InputError("duplicate codeword " + dup->to_hex());
  }
  index_.reserve(words_.size() * 2);
  for (const auto& w : words_) index_.insert(w.bits());
  if (words_.size() >= 2 && words_.size() <= distance_cap) {
    d_ = kernels::omp::min_pairwise_distance(bit_patterns());
  }
}

int Code::require_distance() const {
  if (!d_) throw InputError("code distance undefined (M=" + std::to_string(size()) + ")");
  return *d_;
}

bool Code::contains(const BinaryWord& w) const {
  return w.length() == n_ && index_.contains(w.bits());
}

std::optional<std::size_t> Code::index_of(const BinaryWord& w) const {
  if (!contains(w)) return std::nullopt;
  auto it = std::lower_bound(words_.begin(), words_.end(), w);
  return static_cast<std::size_t>(it - words_.begin());
}

std::vector<std::uint64_t> Code::bit_patterns() const {
  std::vector<std::uint64_t> out;
  out.reserve(words_.size());
  for (const auto& w : words_) out.push_back(w.bits());
  return out;
}

std::vector<BinaryWord> Code::words_of_weight(int w) const {
  std::vector<BinaryWord> out;
  for (const auto& x : words_) {
    if (x.weight() == w) out.push_back(x);
  }
  return out;
}

int min_distance(std::span<const BinaryWord> words, std::size_t cap) {
  if (words.size() < 2) throw InputError("min_distance needs at least two words");
  if (words.size() > cap) {
    throw InputError("min_distance: " + std::to_string(words.size()) + " words exceeds cap " +
                     std::to_string(cap));
  }
  std::vector<std::uint64_t> bits;
  bits.reserve(words.size());
  for (const auto& w : words) {
    if (w.length() != words.front().length()) throw InputError("min_distance: unequal lengths");
    bits.push_back(w.bits());
  }
  return kernels::omp::min_pairwise_distance(bits);
}

WeightDistribution weight_distribution(const Code& c) {
  WeightDistribution dist;
  for (const auto& w : c) ++dist[w.weight()];
  return dist;
}

Code translate(const Code& c, const BinaryWord& t) {
  if (t.length() != c.length()) throw InputError("translate: length mismatch");
  std::vector<BinaryWord> out;
  out.reserve(c.size());
  for (const auto& w : c) out.push_back(w ^ t);
  return Code(c.length(), std::move(out));
}

Code puncture(const Code& c, int pos) {
  const int n = c.length();
  if (pos < 1 || pos > n) throw InputError("puncture: coordinate out of range");
  if (n == 1) throw StructuralError("cannot puncture a length-1 code");
  const int bit = BinaryWord::bit_of(n, pos);
  const std::uint64_t low = (std::uint64_t{1} << bit) - 1;
  std::vector<BinaryWord> out;
  out.reserve(c.size());
  for (const auto& w : c) {
    const std::uint64_t b = w.bits();
    out.emplace_back(n - 1, ((b >> (bit + 1)) << bit) | (b & low));
  }
  std::vector<BinaryWord> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    throw StructuralError("puncturing coordinate " + std::to_string(pos) + " merges codewords into " +
                          dup->to_hex());
  }
  return Code(n - 1, std::move(out));
}

Code reduce(const Code& c) {
  if (c.size() == 0) throw InputError("reduce: empty code");
  if (c.reduced()) return c;
  return translate(c, c.words().front());
}

void write_code(std::ostream& out, const Code& c) {
  out << "# prepcode v1\n";
  out << "n=" << c.length() << " m=" << c.size() << " d=";
  if (c.distance()) {
    out << *c.distance();
  } else {
    out << '?';
  }
  out << '\n';
  for (const auto& w : c) out << w.to_hex() << '\n';
}

void write_code_file(const std::string& path, const Code& c) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_code(out, c);
  if (!out) throw IoError("write to '" + path + "' failed");
}

namespace {

long parse_field(const std::string& token, const std::string& key, int line) {
  if (token.rfind(key + "=", 0) != 0) throw ParseError(line, "expected '" + key + "=' field");
  const std::string value = token.substr(key.size() + 1);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "bad integer for " + key + ": '" + value + "'");
  }
  if (used != value.size()) throw ParseError(line, "bad integer for " + key + ": '" + value + "'");
  return v;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

}  // namespace

Code read_code(std::istream& in) {
  std::string line;
  int line_no = 1;
  if (!std::getline(in, line) || strip(line) != "# prepcode v1") {
    throw ParseError(line_no, "missing '# prepcode v1' header");
  }
  ++line_no;
  if (!std::getline(in, line)) throw ParseError(line_no, "missing parameter line");
  std::istringstream params(strip(line));
  std::string tn, tm, td, extra;
  if (!(params >> tn >> tm >> td) || (params >> extra)) {
    throw ParseError(line_no, "expected 'n=<int> m=<int> d=<int|?>'");
  }
  const long n = parse_field(tn, "n", line_no);
  const long m = parse_field(tm, "m", line_no);
  std::optional<long> d;
  if (td != "d=?") d = parse_field(td, "d", line_no);
  if (n < 1 || n > BinaryWord::kMaxLength) throw ParseError(line_no, "n out of range [1, 64]");
  if (m < 0) throw ParseError(line_no, "negative m");

  std::vector<BinaryWord> words;
  std::unordered_set<std::uint64_t> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string hex = strip(line);
    if (hex.empty()) continue;
    BinaryWord w;
    try {
      w = BinaryWord::from_hex(hex, static_cast<int>(n));
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
    if (!seen.insert(w.bits()).second) throw ParseError(line_no, "duplicate word " + hex);
    words.push_back(w);
  }
  if (static_cast<long>(words.size()) != m) {
    throw ParseError(line_no, "header declares m=" + std::to_string(m) + " but file has " +
                                  std::to_string(words.size()) + " words");
  }
  Code code(static_cast<int>(n), std::move(words));
  if (d && (!code.distance() || *code.distance() != *d)) {
    throw ParseError(2, "header declares d=" + std::to_string(*d) + " but content has d=" +
                            (code.distance() ? std::to_string(*code.distance()) : "?"));
  }
  return code;
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read_code(in);
}

}  // namespace prepcode
