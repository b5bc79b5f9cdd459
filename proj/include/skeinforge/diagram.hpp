#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace skeinforge {

/// Pos is the positive crossing L+, Neg the negative crossing L-, Sing a double point.
enum class LetterKind : std::uint8_t { pos, neg, sing };

/// A generator acting on strands index and index + 1 (1-based).
struct Letter {
  LetterKind kind = LetterKind::pos;
  std::uint32_t index = 1;

  static constexpr Letter pos(std::uint32_t i) noexcept { return {LetterKind::pos, i}; }
  static constexpr Letter neg(std::uint32_t i) noexcept { return {LetterKind::neg, i}; }
  static constexpr Letter sing(std::uint32_t i) noexcept { return {LetterKind::sing, i}; }

  bool is_singular() const noexcept { return kind == LetterKind::sing; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A singular braid word on a fixed number of strands; represents its closure.
class BraidWord {
public:
  BraidWord() = default;
  /// Throws PreconditionError when strands == 0 or a generator is out of range.
  BraidWord(std::uint32_t strands, std::vector<Letter> letters);

  /// Grammar: `nat ":" letter*`, letter := ("s"|"t") nat ("^-1")?. Throws ParseError.
  static BraidWord parse(std::string_view text);

  std::uint32_t strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  std::size_t singular_count() const noexcept;
  bool is_singular() const noexcept { return singular_count() != 0; }

  /// `3: s1 s2^-1 t1`, `2:` when empty.
  std::string to_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
  std::uint32_t strands_ = 1;
  std::vector<Letter> letters_;
};

/// Permutation of {1..d} as the list of images of 1, 2, ..., d.
using Permutation = std::vector<std::uint32_t>;

bool is_permutation(const Permutation& w) noexcept;
Permutation inverse(const Permutation& w);
Permutation identity_permutation(std::size_t d);

/// A closed singular braid whose k-th Sing letter (in word order) carries label ordering[k].
class OrderedSingularLink {
public:
  OrderedSingularLink() = default;
  /// Occurrence order labels.
  explicit OrderedSingularLink(BraidWord word);
  /// Throws PreconditionError unless ordering is a permutation of size d.
  OrderedSingularLink(BraidWord word, Permutation ordering);

  /// A word with an optional `| o = k1 k2 ... kd` suffix.
  static OrderedSingularLink parse(std::string_view text);

  const BraidWord& word() const noexcept { return word_; }
  const Permutation& ordering() const noexcept { return ordering_; }
  std::size_t singular_count() const noexcept { return ordering_.size(); }

  /// Word text, plus the ordering suffix when it is not the identity.
  std::string to_string() const;

  friend bool operator==(const OrderedSingularLink&, const OrderedSingularLink&) = default;

private:
  BraidWord word_;
  Permutation ordering_;
};

/// Resolution choice per singular point; bits[k] refers to the point labeled k + 1.
/// 0 is the oriented smoothing, 1 the negative crossing.
class ResolutionVector {
public:
  ResolutionVector() = default;
  explicit ResolutionVector(std::vector<std::uint8_t> bits);

  /// Bit for label 1 is the most significant, so index order is lexicographic order.
  static ResolutionVector from_index(std::uint64_t index, std::size_t d);
  std::uint64_t index() const noexcept;

  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t k) const noexcept { return bits_[k]; }
  std::size_t ones() const noexcept;

  /// (w . e)_{w(k)} = e_k
  ResolutionVector permuted(const Permutation& w) const;

  /// `01` style; `()` for the empty vector.
  std::string to_string() const;

  friend auto operator<=>(const ResolutionVector&, const ResolutionVector&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// Number of cycles of the strand permutation of the closure.
std::uint32_t closure_components(const BraidWord& w);

/// Resolves every singular point; throws PreconditionError on length mismatch.
BraidWord resolve_all(const OrderedSingularLink& link, const ResolutionVector& rho);

/// Resolves the point labeled 1 (bit 0 smoothing, 1 negative crossing) and shifts
/// the remaining labels down by one. Throws PreconditionError when d == 0.
OrderedSingularLink resolve_first(const OrderedSingularLink& link, int bit);

/// Band sum along the last strand of l1 and the first strand of l2.
OrderedSingularLink connected_sum(const OrderedSingularLink& l1, const OrderedSingularLink& l2);

/// l1 placed above l2, as a disjoint union of closed braids.
OrderedSingularLink split_union(const OrderedSingularLink& l1, const OrderedSingularLink& l2);

/// Relabels point p from o(p) to w(o(p)).
OrderedSingularLink reorder(const OrderedSingularLink& link, const Permutation& w);

std::ostream& operator<<(std::ostream& os, const BraidWord& w);
std::ostream& operator<<(std::ostream& os, const OrderedSingularLink& l);

} // namespace skeinforge
