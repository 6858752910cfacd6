#include "ddg/groups.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>

#include "ddg/error.hpp"

namespace ddg {

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1)
      result = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(result) * base % mod);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % mod);
    exp >>= 1;
  }
  return result;
}

// Splits "x,y[,z]" after stripping brackets, parentheses and blanks.
std::vector<std::uint32_t> parse_tuple(std::string_view text, std::size_t arity) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '[' && ch != ']' && ch != '(' && ch != ')' && ch != ' ' && ch != '\t')
      cleaned += ch;
  std::vector<std::uint32_t> out;
  const char *p = cleaned.data();
  const char *end = p + cleaned.size();
  while (p <= end) {
    std::uint32_t v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc() || (next != end && *next != ','))
      throw ParseError("malformed element '" + std::string(text) + "'", 0);
    out.push_back(v);
    p = next + 1;
  }
  if (out.size() != arity)
    throw ParseError("element '" + std::string(text) + "' must have " +
                         std::to_string(arity) + " coordinates",
                     0);
  return out;
}

} // namespace

SemidirectGroup SemidirectGroup::validate(SemidirectSpec spec, ProductRule rule) {
  if (spec.M < 1 || spec.N < 1)
    throw ArgumentError("semidirect moduli must be positive");
  if (spec.A < 1 || (spec.N > 1 && spec.A >= spec.N))
    throw ArgumentError("action multiplier must satisfy 1 <= A < N");
  if (spec.M * spec.N > (std::uint64_t{1} << 31) || spec.M > spec.M * spec.N)
    throw ArgumentError("group order exceeds 2^31");
  if (std::gcd(spec.A, spec.N) != 1)
    throw GroupError("action not invertible: gcd(" + std::to_string(spec.A) +
                     ", " + std::to_string(spec.N) + ") != 1");
  if (mod_pow(spec.A, spec.M, spec.N) != 1 % spec.N)
    throw GroupError("action order does not divide M: " + std::to_string(spec.A) +
                     "^" + std::to_string(spec.M) + " mod " +
                     std::to_string(spec.N) + " = " +
                     std::to_string(mod_pow(spec.A, spec.M, spec.N)));
  SemidirectGroup g;
  g.spec_ = spec;
  g.rule_ = rule;
  g.powers_.resize(spec.M);
  std::uint64_t p = 1 % spec.N;
  for (std::uint64_t i = 0; i < spec.M; ++i) {
    g.powers_[i] = p;
    p = p * spec.A % spec.N;
  }
  return g;
}

SdElement parse_sd_element(std::string_view text) {
  auto v = parse_tuple(text, 2);
  return {v[0], v[1]};
}

TwoCoordGroup::TwoCoordGroup(std::uint32_t m) : m_(m) {
  if (m < 1)
    throw ArgumentError("two-coordinate modulus must be positive");
  if (2ull * m * m > (std::uint64_t{1} << 31))
    throw ArgumentError("group order exceeds 2^31");
}

TwoCoordElement parse_two_coord_element(std::string_view text) {
  auto v = parse_tuple(text, 3);
  return {v[0], v[1], v[2]};
}

TableGroup TableGroup::from_table(std::size_t n, std::vector<Element> table,
                                  std::size_t size_cap) {
  if (n == 0)
    throw GroupError("group order must be positive");
  if (n > size_cap)
    throw SizeError("table group of order " + std::to_string(n) +
                    " exceeds the verification cap " + std::to_string(size_cap));
  if (table.size() != n * n)
    throw GroupError("table must hold n*n entries");
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n)
      throw GroupError("closure fails: " + std::to_string(i / n) + "*" +
                       std::to_string(i % n) + " = " + std::to_string(table[i]));

  TableGroup g;
  g.n_ = n;
  g.table_ = std::move(table);

  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      ok = g.multiply(e, a) == a && g.multiply(a, e) == a;
    if (ok) {
      g.identity_ = e;
      found = true;
    }
  }
  if (!found)
    throw GroupError("no two-sided identity element");

  g.inverse_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool ok = false;
    for (Element b = 0; b < n && !ok; ++b)
      if (g.multiply(a, b) == g.identity_ && g.multiply(b, a) == g.identity_) {
        g.inverse_[a] = b;
        ok = true;
      }
    if (!ok)
      throw GroupError("element " + std::to_string(a) + " has no two-sided inverse");
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = g.multiply(a, b);
      for (Element c = 0; c < n; ++c)
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c)))
          throw GroupError("associativity fails for (" + std::to_string(a) +
                           ", " + std::to_string(b) + ", " +
                           std::to_string(c) + ")");
    }
  return g;
}

TableGroup TableGroup::load(std::istream &in, std::size_t size_cap) {
  std::uint64_t n = 0;
  if (!(in >> n))
    throw ParseError("expected group order", 1);
  if (n > size_cap)
    throw SizeError("table group of order " + std::to_string(n) +
                    " exceeds the verification cap " + std::to_string(size_cap));
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < table.size(); ++i) {
    long long v = 0;
    if (!(in >> v) || v < 0)
      throw ParseError("bad or missing table entry at row " +
                           std::to_string(i / n) + ", column " +
                           std::to_string(i % n),
                       i / n + 2);
    table[i] = static_cast<Element>(v);
  }
  return from_table(n, std::move(table), size_cap);
}

TableGroup TableGroup::load_file(const std::string &path, std::size_t size_cap) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  return load(in, size_cap);
}

std::vector<Element> read_index_list(std::istream &in) {
  std::vector<Element> out;
  std::string tok;
  while (in >> tok) {
    Element v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw ParseError("bad element index '" + tok + "'", 0);
    out.push_back(v);
  }
  return out;
}

} // namespace ddg
