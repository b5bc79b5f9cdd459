#pragma once

#include "skeinforge/diagram.hpp"
#include "skeinforge/laurent.hpp"
#include "skeinforge/ring.hpp"

namespace skeinforge::verify {

/// Reference HOMFLY-PT evaluation: full skein tree, no memo, no word reduction.
///
/// Resolves toward ascending diagrams (every crossing first met from below),
/// walking components from the highest strand position down, so its tree has
/// nothing in common with HomflyEngine's beyond the skein relation itself.
/// Exponential; meant for words of a handful of letters.
LaurentPoly naive_homfly(const BraidWord& word, const Ring& ring);

} // namespace skeinforge::verify
