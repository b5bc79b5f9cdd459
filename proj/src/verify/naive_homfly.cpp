#include "skeinforge/verify/naive_homfly.hpp"

#include <numeric>
#include <optional>

#include "skeinforge/errors.hpp"

namespace skeinforge::verify {

namespace {

struct Crossing {
  std::uint32_t left; // 0-based position of the left strand
  bool positive;
};

std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t a) {
  while (parent[a] != a)
    a = parent[a] = parent[parent[a]];
  return a;
}

std::uint32_t count_components(std::uint32_t strands, const std::vector<Crossing>& word) {
  std::vector<std::uint32_t> parent(strands);
  std::iota(parent.begin(), parent.end(), 0u);
  std::uint32_t classes = strands;
  for (std::uint32_t start = 0; start < strands; ++start) {
    std::uint32_t p = start;
    for (const Crossing& c : word) {
      if (p == c.left)
        p = c.left + 1;
      else if (p == c.left + 1)
        p = c.left;
    }
    const std::uint32_t a = find(parent, start), b = find(parent, p);
    if (a != b) {
      parent[a] = b;
      --classes;
    }
  }
  return classes;
}

// First crossing reached on the over-strand, walking components from the top
// of the highest unvisited position.
std::optional<std::size_t> first_non_ascending(std::uint32_t strands, const std::vector<Crossing>& word) {
  std::vector<bool> met(word.size(), false);
  std::vector<bool> started(strands, false);
  for (std::uint32_t s = strands; s-- > 0;) {
    if (started[s])
      continue;
    std::uint32_t p = s;
    do {
      started[p] = true;
      for (std::size_t k = 0; k < word.size(); ++k) {
        const Crossing& c = word[k];
        const bool on_left = p == c.left;
        if (!on_left && p != c.left + 1)
          continue;
        if (!met[k]) {
          met[k] = true;
          const bool over = c.positive ? on_left : !on_left;
          if (over)
            return k;
        }
        p = on_left ? c.left + 1 : c.left;
      }
    } while (p != s);
  }
  return std::nullopt;
}

LaurentPoly expand(const Ring& ring, std::uint32_t strands, std::vector<Crossing> word) {
  const std::optional<std::size_t> k = first_non_ascending(strands, word);
  if (!k)
    return ring.delta().pow(count_components(strands, word) - 1);

  std::vector<Crossing> smoothed = word;
  smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(*k));
  std::vector<Crossing> switched = word;
  switched[*k].positive = !switched[*k].positive;

  const LaurentPoly p0 = expand(ring, strands, std::move(smoothed));
  const LaurentPoly ps = expand(ring, strands, std::move(switched));
  // x P0 = t^-1 P+ - t P-
  if (word[*k].positive)
    return ring.t() * (ring.x() * p0 + ring.t() * ps);
  return ring.t_inv() * (ring.t_inv() * ps - ring.x() * p0);
}

} // namespace

LaurentPoly naive_homfly(const BraidWord& word, const Ring& ring) {
  if (word.is_singular())
    throw PreconditionError("naive_homfly needs a nonsingular word");
  std::vector<Crossing> crossings;
  for (Letter l : word.letters())
    crossings.push_back({l.index - 1, l.kind == LetterKind::pos});
  return expand(ring, word.strands(), std::move(crossings));
}

} // namespace skeinforge::verify
