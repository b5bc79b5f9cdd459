#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "skeinforge/diagram.hpp"

namespace skeinforge::verify {

/// A letter that remembers its singular label (0 for crossings), so that word
/// rewrites carry the ordering along with the letters.
struct LabeledLetter {
  Letter letter;
  std::uint32_t label = 0;
};

struct LabeledWord {
  std::uint32_t strands = 1;
  std::vector<LabeledLetter> letters;
};

LabeledWord labeled(const OrderedSingularLink& link);
OrderedSingularLink unlabeled(const LabeledWord& word);

/// Gives the Sing letters of `word` the labels of a uniformly random permutation.
void assign_random_labels(std::mt19937_64& rng, LabeledWord& word);

struct RandomLinkShape {
  std::uint32_t min_strands = 1;
  std::uint32_t max_strands = 3;
  std::size_t max_length = 7;
  std::size_t max_singular = 2;
};

Letter random_crossing(std::mt19937_64& rng, std::uint32_t strands);
LabeledWord random_labeled_word(std::mt19937_64& rng, const RandomLinkShape& shape);
OrderedSingularLink random_link(std::mt19937_64& rng, const RandomLinkShape& shape);
/// Crossings only, exactly `length` letters (strands must be >= 2 when length > 0).
std::vector<Letter> random_crossings(std::mt19937_64& rng, std::uint32_t strands, std::size_t length);
Permutation random_permutation(std::mt19937_64& rng, std::size_t d);

/// Rotates the closed word by r letters; labels follow their letters.
LabeledWord rotated(const LabeledWord& word, std::size_t r);

} // namespace skeinforge::verify
