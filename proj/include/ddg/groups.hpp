#pragma once

#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ddg {

using Element = std::uint32_t;

/// Finite group with elements encoded as indices 0..order()-1.
template <class G>
concept FiniteGroup = requires(const G &g, Element a, Element b) {
  { g.order() } -> std::convertible_to<std::uint64_t>;
  { g.identity() } -> std::convertible_to<Element>;
  { g.multiply(a, b) } -> std::convertible_to<Element>;
  { g.inverse(a) } -> std::convertible_to<Element>;
};

// ---------------------------------------------------------------------------
// Cyclic semidirect product Z_M x|_A Z_N.

struct SemidirectSpec {
  std::uint64_t M = 1; // acting factor
  std::uint64_t A = 1; // action multiplier
  std::uint64_t N = 1; // normal factor
  friend bool operator==(const SemidirectSpec &, const SemidirectSpec &) = default;
};

struct SdElement {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend auto operator<=>(const SdElement &, const SdElement &) = default;
};

/// Which side the Z_M coordinate acts from.
///   right_action: (x1,y1)(x2,y2) = (x1+x2, y1*A^x2 + y2)
///   left_action:  (x1,y1)(x2,y2) = (x1+x2, y2*A^x1 + y1)
/// The two rules give isomorphic undirected Cayley graphs for
/// inverse-closed connection sets (via g -> g^-1).
enum class ProductRule { right_action, left_action };

class SemidirectGroup {
public:
  /// Checks gcd(A, N) = 1 and A^M = 1 (mod N); throws GroupError otherwise.
  static SemidirectGroup validate(SemidirectSpec spec,
                                  ProductRule rule = ProductRule::right_action);

  const SemidirectSpec &spec() const { return spec_; }
  ProductRule rule() const { return rule_; }
  std::uint64_t order() const { return spec_.M * spec_.N; }

  bool contains(SdElement g) const { return g.x < spec_.M && g.y < spec_.N; }

  SdElement mul(SdElement g, SdElement h) const {
    const std::uint32_t x = static_cast<std::uint32_t>((g.x + std::uint64_t{h.x}) % spec_.M);
    const std::uint64_t y = rule_ == ProductRule::right_action
                                ? g.y * powers_[h.x] + h.y
                                : h.y * powers_[g.x] + g.y;
    return {x, static_cast<std::uint32_t>(y % spec_.N)};
  }

  SdElement inv(SdElement g) const {
    const auto x = static_cast<std::uint32_t>((spec_.M - g.x) % spec_.M);
    const std::uint64_t t = (g.y * powers_[x]) % spec_.N;
    return {x, static_cast<std::uint32_t>((spec_.N - t) % spec_.N)};
  }

  Element encode(SdElement g) const {
    return static_cast<Element>(g.x * spec_.N + g.y);
  }
  SdElement decode(Element i) const {
    return {static_cast<std::uint32_t>(i / spec_.N),
            static_cast<std::uint32_t>(i % spec_.N)};
  }

  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return encode(mul(decode(a), decode(b))); }
  Element inverse(Element a) const { return encode(inv(decode(a))); }

  /// A^0 .. A^(M-1) mod N.
  std::span<const std::uint64_t> powers() const { return powers_; }

private:
  SemidirectSpec spec_;
  ProductRule rule_ = ProductRule::right_action;
  std::vector<std::uint64_t> powers_;
};

/// Parses "x,y" (surrounding brackets and blanks tolerated).
SdElement parse_sd_element(std::string_view text);

// ---------------------------------------------------------------------------
// (Z_m x Z_m) x| Z_2 with the Z_2 factor swapping the two coordinates.

struct TwoCoordElement {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  friend auto operator<=>(const TwoCoordElement &, const TwoCoordElement &) = default;
};

class TwoCoordGroup {
public:
  explicit TwoCoordGroup(std::uint32_t m);

  std::uint32_t modulus() const { return m_; }
  std::uint64_t order() const { return 2ull * m_ * m_; }
  bool contains(TwoCoordElement g) const { return g.a < m_ && g.b < m_ && g.c < 2; }

  TwoCoordElement mul(TwoCoordElement g, TwoCoordElement h) const {
    const std::uint32_t ha = g.c ? h.b : h.a;
    const std::uint32_t hb = g.c ? h.a : h.b;
    return {(g.a + ha) % m_, (g.b + hb) % m_, (g.c + h.c) & 1u};
  }
  TwoCoordElement inv(TwoCoordElement g) const {
    if (g.c == 0)
      return {(m_ - g.a) % m_, (m_ - g.b) % m_, 0};
    return {(m_ - g.b) % m_, (m_ - g.a) % m_, 1};
  }

  Element encode(TwoCoordElement g) const { return (g.c * m_ + g.a) * m_ + g.b; }
  TwoCoordElement decode(Element i) const {
    return {(i / m_) % m_, i % m_, i / (m_ * m_)};
  }

  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return encode(mul(decode(a), decode(b))); }
  Element inverse(Element a) const { return encode(inv(decode(a))); }

private:
  std::uint32_t m_;
};

/// Parses "a,b,c" (parentheses and blanks tolerated).
TwoCoordElement parse_two_coord_element(std::string_view text);

// ---------------------------------------------------------------------------
// Group given by its full multiplication table.

class TableGroup {
public:
  static constexpr std::size_t kDefaultSizeCap = 2000;

  /// Validates closure, identity, inverses and associativity (O(n^3)).
  /// Orders above `size_cap` are refused unless the cap is raised.
  static TableGroup from_table(std::size_t n, std::vector<Element> table,
                               std::size_t size_cap = kDefaultSizeCap);

  /// Text format: n, then n rows of n indices (row g, column h holds g*h).
  static TableGroup load(std::istream &in, std::size_t size_cap = kDefaultSizeCap);
  static TableGroup load_file(const std::string &path,
                              std::size_t size_cap = kDefaultSizeCap);

  std::uint64_t order() const { return n_; }
  Element identity() const { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }

private:
  std::size_t n_ = 0;
  std::vector<Element> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
};

/// Whitespace-separated element indices (generator lists for TableGroup).
std::vector<Element> read_index_list(std::istream &in);

} // namespace ddg
