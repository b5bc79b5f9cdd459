#include "skeinforge/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

#include "skeinforge/errors.hpp"

namespace skeinforge {

namespace {

class Scanner {
public:
  Scanner(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t where() const { return offset_ + pos_; }

  bool accept(std::string_view s) {
    if (text_.substr(pos_).starts_with(s)) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  std::uint32_t natural(const char* what) {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > std::numeric_limits<std::uint32_t>::max())
        throw ParseError(std::string(what) + " too large", offset_ + start);
      ++pos_;
    }
    if (pos_ == start)
      throw ParseError(std::string("expected ") + what, where());
    return static_cast<std::uint32_t>(v);
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, where()); }

private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

BraidWord parse_word_at(std::string_view text, std::size_t offset) {
  Scanner in(text, offset);
  in.skip_space();
  const std::uint32_t strands = in.natural("strand count");
  if (strands == 0)
    throw ParseError("strand count must be at least 1", offset);
  in.skip_space();
  if (!in.accept(":"))
    in.fail("expected ':'");

  std::vector<Letter> letters;
  for (;;) {
    const bool had_space = [&] {
      std::size_t before = in.where();
      in.skip_space();
      return in.where() != before;
    }();
    if (in.done())
      break;
    if (!letters.empty() && !had_space)
      in.fail("letters must be separated by whitespace");
    const std::size_t at = in.where();
    const char c = in.peek();
    if (c != 's' && c != 't')
      in.fail(std::string("unexpected character '") + c + "'");
    in.accept(std::string_view(&c, 1));
    const std::uint32_t index = in.natural("generator index");
    const bool inverted = in.accept("^-1");
    if (c == 't' && inverted)
      throw ParseError("singular crossings have no inverse", at);
    if (index < 1 || index >= strands)
      throw ParseError("generator index " + std::to_string(index) + " out of range for " +
                           std::to_string(strands) + " strands",
                       at);
    if (c == 't')
      letters.push_back(Letter::sing(index));
    else
      letters.push_back(inverted ? Letter::neg(index) : Letter::pos(index));
  }
  return BraidWord(strands, std::move(letters));
}

void append_shifted(std::vector<Letter>& out, const BraidWord& w, std::uint32_t shift) {
  for (Letter l : w.letters())
    out.push_back(Letter{l.kind, l.index + shift});
}

Permutation joined_ordering(const OrderedSingularLink& l1, const OrderedSingularLink& l2) {
  Permutation o = l1.ordering();
  const auto d1 = static_cast<std::uint32_t>(l1.singular_count());
  for (std::uint32_t label : l2.ordering())
    o.push_back(d1 + label);
  return o;
}

} // namespace

BraidWord::BraidWord(std::uint32_t strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ == 0)
    throw PreconditionError("a braid needs at least one strand");
  for (Letter l : letters_) {
    if (l.index < 1 || l.index >= strands_)
      throw PreconditionError("generator index " + std::to_string(l.index) + " out of range for " +
                              std::to_string(strands_) + " strands");
  }
}

BraidWord BraidWord::parse(std::string_view text) { return parse_word_at(text, 0); }

std::size_t BraidWord::singular_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [](Letter l) { return l.is_singular(); }));
}

std::string BraidWord::to_string() const {
  std::string s = std::to_string(strands_) + ":";
  for (Letter l : letters_) {
    s += ' ';
    s += l.is_singular() ? 't' : 's';
    s += std::to_string(l.index);
    if (l.kind == LetterKind::neg)
      s += "^-1";
  }
  return s;
}

bool is_permutation(const Permutation& w) noexcept {
  std::vector<bool> seen(w.size(), false);
  for (std::uint32_t v : w) {
    if (v < 1 || v > w.size() || seen[v - 1])
      return false;
    seen[v - 1] = true;
  }
  return true;
}

Permutation inverse(const Permutation& w) {
  Permutation inv(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    inv[w[k] - 1] = static_cast<std::uint32_t>(k + 1);
  return inv;
}

Permutation identity_permutation(std::size_t d) {
  Permutation w(d);
  std::iota(w.begin(), w.end(), 1u);
  return w;
}

OrderedSingularLink::OrderedSingularLink(BraidWord word)
    : word_(std::move(word)), ordering_(identity_permutation(word_.singular_count())) {}

OrderedSingularLink::OrderedSingularLink(BraidWord word, Permutation ordering)
    : word_(std::move(word)), ordering_(std::move(ordering)) {
  if (ordering_.size() != word_.singular_count())
    throw PreconditionError("ordering has " + std::to_string(ordering_.size()) + " labels but the word has " +
                            std::to_string(word_.singular_count()) + " singular points");
  if (!is_permutation(ordering_))
    throw PreconditionError("ordering is not a permutation");
}

OrderedSingularLink OrderedSingularLink::parse(std::string_view text) {
  const std::size_t bar = text.find('|');
  BraidWord word = parse_word_at(text.substr(0, bar), 0);
  if (bar == std::string_view::npos)
    return OrderedSingularLink(std::move(word));

  Scanner in(text.substr(bar + 1), bar + 1);
  in.skip_space();
  if (!in.accept("o"))
    in.fail("expected 'o' after '|'");
  in.skip_space();
  if (!in.accept("="))
    in.fail("expected '='");
  Permutation ordering;
  for (;;) {
    in.skip_space();
    if (in.done())
      break;
    ordering.push_back(in.natural("label"));
  }
  if (ordering.size() != word.singular_count() || !is_permutation(ordering))
    throw ParseError("ordering must be a permutation of 1.." + std::to_string(word.singular_count()), bar + 1);
  return OrderedSingularLink(std::move(word), std::move(ordering));
}

std::string OrderedSingularLink::to_string() const {
  std::string s = word_.to_string();
  if (ordering_ != identity_permutation(ordering_.size())) {
    s += " | o =";
    for (std::uint32_t k : ordering_)
      s += " " + std::to_string(k);
  }
  return s;
}

ResolutionVector::ResolutionVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (std::uint8_t b : bits_) {
    if (b > 1)
      throw PreconditionError("resolution bits must be 0 or 1");
  }
}

ResolutionVector ResolutionVector::from_index(std::uint64_t index, std::size_t d) {
  std::vector<std::uint8_t> bits(d);
  for (std::size_t k = 0; k < d; ++k)
    bits[k] = static_cast<std::uint8_t>((index >> (d - 1 - k)) & 1u);
  return ResolutionVector(std::move(bits));
}

std::uint64_t ResolutionVector::index() const noexcept {
  std::uint64_t v = 0;
  for (std::uint8_t b : bits_)
    v = (v << 1) | b;
  return v;
}

std::size_t ResolutionVector::ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

ResolutionVector ResolutionVector::permuted(const Permutation& w) const {
  if (w.size() != bits_.size() || !is_permutation(w))
    throw PreconditionError("permutation size does not match resolution vector");
  std::vector<std::uint8_t> out(bits_.size());
  for (std::size_t k = 0; k < bits_.size(); ++k)
    out[w[k] - 1] = bits_[k];
  return ResolutionVector(std::move(out));
}

std::string ResolutionVector::to_string() const {
  if (bits_.empty())
    return "()";
  std::string s;
  for (std::uint8_t b : bits_)
    s += static_cast<char>('0' + b);
  return s;
}

std::uint32_t closure_components(const BraidWord& w) {
  // Strand permutation: where each top position ends up at the bottom.
  std::vector<std::uint32_t> at(w.strands());
  std::iota(at.begin(), at.end(), 0u);
  for (Letter l : w.letters())
    std::swap(at[l.index - 1], at[l.index]);
  std::vector<bool> seen(w.strands(), false);
  std::uint32_t cycles = 0;
  for (std::uint32_t s = 0; s < w.strands(); ++s) {
    if (seen[s])
      continue;
    ++cycles;
    for (std::uint32_t p = s; !seen[p]; p = at[p])
      seen[p] = true;
  }
  return cycles;
}

BraidWord resolve_all(const OrderedSingularLink& link, const ResolutionVector& rho) {
  if (rho.size() != link.singular_count())
    throw PreconditionError("resolution vector has length " + std::to_string(rho.size()) + ", link has " +
                            std::to_string(link.singular_count()) + " singular points");
  std::vector<Letter> out;
  out.reserve(link.word().length());
  std::size_t occurrence = 0;
  for (Letter l : link.word().letters()) {
    if (!l.is_singular()) {
      out.push_back(l);
      continue;
    }
    if (rho[link.ordering()[occurrence++] - 1] == 1)
      out.push_back(Letter::neg(l.index));
  }
  return BraidWord(link.word().strands(), std::move(out));
}

OrderedSingularLink resolve_first(const OrderedSingularLink& link, int bit) {
  if (link.singular_count() == 0)
    throw PreconditionError("no singular point to resolve");
  if (bit != 0 && bit != 1)
    throw PreconditionError("resolution bit must be 0 or 1");
  std::vector<Letter> out;
  Permutation ordering;
  std::size_t occurrence = 0;
  for (Letter l : link.word().letters()) {
    if (!l.is_singular()) {
      out.push_back(l);
      continue;
    }
    const std::uint32_t label = link.ordering()[occurrence++];
    if (label != 1) {
      out.push_back(l);
      ordering.push_back(label - 1);
    } else if (bit == 1) {
      out.push_back(Letter::neg(l.index));
    }
  }
  return OrderedSingularLink(BraidWord(link.word().strands(), std::move(out)), std::move(ordering));
}

OrderedSingularLink connected_sum(const OrderedSingularLink& l1, const OrderedSingularLink& l2) {
  const std::uint32_t n1 = l1.word().strands();
  std::vector<Letter> letters = l1.word().letters();
  append_shifted(letters, l2.word(), n1 - 1);
  return OrderedSingularLink(BraidWord(n1 + l2.word().strands() - 1, std::move(letters)), joined_ordering(l1, l2));
}

OrderedSingularLink split_union(const OrderedSingularLink& l1, const OrderedSingularLink& l2) {
  const std::uint32_t n1 = l1.word().strands();
  std::vector<Letter> letters = l1.word().letters();
  append_shifted(letters, l2.word(), n1);
  return OrderedSingularLink(BraidWord(n1 + l2.word().strands(), std::move(letters)), joined_ordering(l1, l2));
}

OrderedSingularLink reorder(const OrderedSingularLink& link, const Permutation& w) {
  if (w.size() != link.singular_count() || !is_permutation(w))
    throw PreconditionError("reordering permutation must have size " + std::to_string(link.singular_count()));
  Permutation ordering;
  ordering.reserve(w.size());
  for (std::uint32_t label : link.ordering())
    ordering.push_back(w[label - 1]);
  return OrderedSingularLink(link.word(), std::move(ordering));
}

std::ostream& operator<<(std::ostream& os, const BraidWord& w) { return os << w.to_string(); }
std::ostream& operator<<(std::ostream& os, const OrderedSingularLink& l) { return os << l.to_string(); }

} // namespace skeinforge
