#include "skeinforge/homfly.hpp"

#include <algorithm>
#include <mutex>

#include "skeinforge/errors.hpp"

namespace skeinforge {

namespace {

void free_reduce(std::vector<std::int32_t>& code) {
  std::vector<std::int32_t> stack;
  stack.reserve(code.size());
  for (std::int32_t c : code) {
    if (!stack.empty() && stack.back() == -c)
      stack.pop_back();
    else
      stack.push_back(c);
  }
  std::size_t lo = 0, hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }
  code.assign(stack.begin() + static_cast<std::ptrdiff_t>(lo), stack.begin() + static_cast<std::ptrdiff_t>(hi));
}

void rotate_to_minimum(std::vector<std::int32_t>& code) {
  const std::size_t m = code.size();
  std::size_t best = 0;
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      const std::int32_t a = code[(r + k) % m];
      const std::int32_t b = code[(best + k) % m];
      if (a != b) {
        if (a < b)
          best = r;
        break;
      }
    }
  }
  std::rotate(code.begin(), code.begin() + static_cast<std::ptrdiff_t>(best), code.end());
}

std::string cache_key(std::uint32_t strands, const std::vector<std::int32_t>& code) {
  std::string key;
  key.reserve(4 + 4 * code.size());
  auto put = [&key](std::uint32_t v) {
    for (int s = 0; s < 32; s += 8)
      key.push_back(static_cast<char>((v >> s) & 0xffu));
  };
  put(strands);
  for (std::int32_t c : code)
    put(static_cast<std::uint32_t>(c));
  return key;
}

struct Traversal {
  std::uint32_t components = 0;
  // Crossings first reached on the under-strand, in the order they are met.
  std::vector<std::size_t> bad;
};

// Walks each component from the top of its smallest unvisited strand position.
// The strand entering a Pos letter from the left passes over; for Neg the one
// entering from the right does.
Traversal traverse(std::uint32_t strands, const std::vector<std::int32_t>& code) {
  Traversal tr;
  std::vector<bool> visited(code.size(), false);
  std::vector<bool> top_seen(strands, false);
  for (std::uint32_t start = 0; start < strands; ++start) {
    if (top_seen[start])
      continue;
    ++tr.components;
    std::uint32_t p = start;
    do {
      top_seen[p] = true;
      for (std::size_t k = 0; k < code.size(); ++k) {
        const std::int32_t c = code[k];
        const auto left = static_cast<std::uint32_t>(c > 0 ? c : -c) - 1;
        if (p != left && p != left + 1)
          continue;
        if (!visited[k]) {
          visited[k] = true;
          const bool over = c > 0 ? p == left : p == left + 1;
          if (!over)
            tr.bad.push_back(k);
        }
        p = p == left ? left + 1 : left;
      }
    } while (p != start);
  }
  return tr;
}

} // namespace

SkeinValue unlink_value(const Ring& ring, unsigned k) {
  if (k == 0)
    throw PreconditionError("the empty link has no value");
  return ring.delta().pow(k - 1);
}

HomflyEngine::HomflyEngine(Ring ring, Options options)
    : ring_(ring), options_(options), unlink_step_(ring.delta()),
      pos_switch_(ring.monomial(1, 2, 0)), pos_smooth_(ring.monomial(1, 1, 1)),
      neg_switch_(ring.monomial(1, -2, 0)), neg_smooth_(ring.monomial(-1, -1, 1)) {}

std::size_t HomflyEngine::cache_size() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

SkeinValue HomflyEngine::evaluate(const BraidWord& word) const {
  if (word.is_singular())
    throw PreconditionError("HOMFLY-PT needs a nonsingular word, got " + word.to_string());
  if (word.length() > options_.max_crossings)
    throw BoundError("word has " + std::to_string(word.length()) + " crossings, limit is " +
                     std::to_string(options_.max_crossings));
  Code code;
  code.reserve(word.length());
  for (Letter l : word.letters()) {
    const auto i = static_cast<std::int32_t>(l.index);
    code.push_back(l.kind == LetterKind::pos ? i : -i);
  }
  return evaluate_code(word.strands(), std::move(code));
}

SkeinValue HomflyEngine::evaluate_code(std::uint32_t strands, Code code) const {
  free_reduce(code);
  rotate_to_minimum(code);
  const std::string key = cache_key(strands, code);
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end())
      return it->second;
  }
  SkeinValue value = expand(strands, std::move(code));
  std::unique_lock lock(mutex_);
  return cache_.try_emplace(key, std::move(value)).first->second;
}

SkeinValue HomflyEngine::expand(std::uint32_t strands, Code code) const {
  const Traversal tr = traverse(strands, code);
  // Switching crossings keeps the traversal fixed, so after all bad crossings
  // are switched the diagram is descending: an unlink.
  SkeinValue result = ring_.zero();
  SkeinValue weight = ring_.one();
  for (std::size_t k : tr.bad) {
    const bool positive = code[k] > 0;
    Code smoothed = code;
    smoothed.erase(smoothed.begin() + static_cast<std::ptrdiff_t>(k));
    result += weight * (positive ? pos_smooth_ : neg_smooth_) * evaluate_code(strands, std::move(smoothed));
    weight *= positive ? pos_switch_ : neg_switch_;
    code[k] = -code[k];
  }
  result += weight * unlink_step_.pow(tr.components - 1);
  return result;
}

SkeinValue homfly(const BraidWord& word, const Ring& ring) {
  HomflyEngine engine(ring);
  return engine.evaluate(word);
}

} // namespace skeinforge
