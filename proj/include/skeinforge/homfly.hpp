#pragma once

#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "skeinforge/diagram.hpp"
#include "skeinforge/laurent.hpp"
#include "skeinforge/ring.hpp"

namespace skeinforge {

/// Value of a nonsingular link in the ring; the unknot is 1.
using SkeinValue = LaurentPoly;

/// delta^(k-1), the value of the k-component unlink. Throws PreconditionError for k == 0.
SkeinValue unlink_value(const Ring& ring, unsigned k);

/// HOMFLY-PT polynomial of closed braids under x P(L0) = t^-1 P(L+) - t P(L-), P(O) = 1.
///
/// Skein-tree recursion toward descending diagrams. Every node walks its closure
/// once from fixed base points, switches the crossings met first from below in
/// traversal order, and recurses only on the smoothings, which have one crossing
/// fewer. Results are memoized on the cyclically reduced word rotated to its
/// lexicographic minimum.
///
/// evaluate() is safe to call from several threads; the cache is shared.
class HomflyEngine {
public:
  struct Options {
    std::size_t max_crossings = 24;
  };

  explicit HomflyEngine(Ring ring = Ring::generic()) : HomflyEngine(ring, Options{}) {}
  HomflyEngine(Ring ring, Options options);

  HomflyEngine(const HomflyEngine&) = delete;
  HomflyEngine& operator=(const HomflyEngine&) = delete;

  /// Throws PreconditionError for singular words, BoundError above max_crossings.
  SkeinValue evaluate(const BraidWord& word) const;

  const Ring& ring() const noexcept { return ring_; }
  const Options& options() const noexcept { return options_; }
  std::size_t cache_size() const;

private:
  // Letters encoded as +i for Pos(i), -i for Neg(i).
  using Code = std::vector<std::int32_t>;

  SkeinValue evaluate_code(std::uint32_t strands, Code code) const;
  SkeinValue expand(std::uint32_t strands, Code code) const;

  Ring ring_;
  Options options_;
  SkeinValue unlink_step_;         // delta
  SkeinValue pos_switch_, pos_smooth_; // P(L+) = t^2 P(L-) + t x P(L0)
  SkeinValue neg_switch_, neg_smooth_; // P(L-) = t^-2 P(L+) - t^-1 x P(L0)

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, SkeinValue> cache_;
};

/// One-shot evaluation with a fresh engine.
SkeinValue homfly(const BraidWord& word, const Ring& ring = Ring::generic());

} // namespace skeinforge
