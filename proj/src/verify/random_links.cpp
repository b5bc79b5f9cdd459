#include "skeinforge/verify/random_links.hpp"

#include <algorithm>
#include <numeric>

namespace skeinforge::verify {

namespace {

template <class T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

} // namespace

LabeledWord labeled(const OrderedSingularLink& link) {
  LabeledWord out{link.word().strands(), {}};
  std::size_t occurrence = 0;
  for (Letter l : link.word().letters())
    out.letters.push_back({l, l.is_singular() ? link.ordering()[occurrence++] : 0u});
  return out;
}

OrderedSingularLink unlabeled(const LabeledWord& word) {
  std::vector<Letter> letters;
  Permutation ordering;
  for (const LabeledLetter& l : word.letters) {
    letters.push_back(l.letter);
    if (l.letter.is_singular())
      ordering.push_back(l.label);
  }
  return OrderedSingularLink(BraidWord(word.strands, std::move(letters)), std::move(ordering));
}

void assign_random_labels(std::mt19937_64& rng, LabeledWord& word) {
  std::size_t d = 0;
  for (const LabeledLetter& l : word.letters)
    d += l.letter.is_singular() ? 1 : 0;
  const Permutation w = random_permutation(rng, d);
  std::size_t k = 0;
  for (LabeledLetter& l : word.letters)
    l.label = l.letter.is_singular() ? w[k++] : 0u;
}

Letter random_crossing(std::mt19937_64& rng, std::uint32_t strands) {
  const std::uint32_t i = uniform<std::uint32_t>(rng, 1, strands - 1);
  return uniform<int>(rng, 0, 1) ? Letter::pos(i) : Letter::neg(i);
}

std::vector<Letter> random_crossings(std::mt19937_64& rng, std::uint32_t strands, std::size_t length) {
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k)
    out.push_back(random_crossing(rng, strands));
  return out;
}

LabeledWord random_labeled_word(std::mt19937_64& rng, const RandomLinkShape& shape) {
  LabeledWord word;
  word.strands = uniform<std::uint32_t>(rng, shape.min_strands, shape.max_strands);
  if (word.strands == 1)
    return word;
  const std::size_t length = uniform<std::size_t>(rng, 0, shape.max_length);
  const std::size_t sing = uniform<std::size_t>(rng, 0, std::min(shape.max_singular, length));
  std::vector<std::size_t> slots(length);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  std::shuffle(slots.begin(), slots.end(), rng);
  std::vector<bool> singular(length, false);
  for (std::size_t k = 0; k < sing; ++k)
    singular[slots[k]] = true;
  for (std::size_t k = 0; k < length; ++k) {
    Letter l = random_crossing(rng, word.strands);
    if (singular[k])
      l.kind = LetterKind::sing;
    word.letters.push_back({l, 0});
  }
  assign_random_labels(rng, word);
  return word;
}

OrderedSingularLink random_link(std::mt19937_64& rng, const RandomLinkShape& shape) {
  return unlabeled(random_labeled_word(rng, shape));
}

Permutation random_permutation(std::mt19937_64& rng, std::size_t d) {
  Permutation w = identity_permutation(d);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

LabeledWord rotated(const LabeledWord& word, std::size_t r) {
  LabeledWord out = word;
  if (!out.letters.empty())
    std::rotate(out.letters.begin(),
                out.letters.begin() + static_cast<std::ptrdiff_t>(r % out.letters.size()), out.letters.end());
  return out;
}

} // namespace skeinforge::verify
