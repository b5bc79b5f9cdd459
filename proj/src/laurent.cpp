#include "skeinforge/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "skeinforge/errors.hpp"

namespace skeinforge {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error("Laurent exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error("Laurent exponent overflow");
  return r;
}

Monomial mul(Monomial a, Monomial b) { return {checked_add(a.t, b.t), checked_add(a.x, b.x)}; }

// Sorts, merges equal exponents and removes zeros.
void normalize(const BaseRing& base, std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const LaurentPoly::Term& a, const LaurentPoly::Term& b) { return a.exp < b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Monomial e = terms[i].exp;
    mpz_class c = std::move(terms[i].coeff);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exp == e; ++j)
      c += terms[j].coeff;
    c = base.reduce(std::move(c));
    if (c != 0)
      terms[out++] = LaurentPoly::Term{e, std::move(c)};
    i = j;
  }
  terms.resize(out);
}

void write_power(std::ostream& os, char var, std::int64_t e) {
  os << ' ' << var;
  if (e == 1)
    return;
  if (e < 0)
    os << "^(" << e << ')';
  else
    os << '^' << e;
}

} // namespace

LaurentPoly LaurentPoly::constant(BaseRing base, const mpz_class& c) { return monomial(base, c, 0, 0); }

LaurentPoly LaurentPoly::monomial(BaseRing base, const mpz_class& c, std::int64_t et, std::int64_t ex) {
  LaurentPoly p(base);
  mpz_class r = base.reduce(c);
  if (r != 0)
    p.terms_.push_back(Term{{et, ex}, std::move(r)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(BaseRing base, std::vector<Term> terms) {
  LaurentPoly p(base);
  normalize(base, terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Monomial{} && terms_[0].coeff == 1;
}

mpz_class LaurentPoly::coefficient(Monomial m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& term, Monomial key) { return term.exp < key; });
  if (it != terms_.end() && it->exp == m)
    return it->coeff;
  return 0;
}

std::int64_t LaurentPoly::min_t() const {
  if (terms_.empty())
    throw PreconditionError("degree of zero polynomial");
  return terms_.front().exp.t;
}

std::int64_t LaurentPoly::max_t() const {
  if (terms_.empty())
    throw PreconditionError("degree of zero polynomial");
  return terms_.back().exp.t;
}

std::int64_t LaurentPoly::min_x() const {
  if (terms_.empty())
    throw PreconditionError("degree of zero polynomial");
  return std::min_element(terms_.begin(), terms_.end(),
                          [](const Term& a, const Term& b) { return a.exp.x < b.exp.x; })
      ->exp.x;
}

std::int64_t LaurentPoly::max_x() const {
  if (terms_.empty())
    throw PreconditionError("degree of zero polynomial");
  return std::max_element(terms_.begin(), terms_.end(),
                          [](const Term& a, const Term& b) { return a.exp.x < b.exp.x; })
      ->exp.x;
}

void LaurentPoly::require_same_base(const LaurentPoly& other) const {
  if (!(base_ == other.base_))
    throw ConfigError("mismatched coefficient rings: " + base_.name() + " vs " + other.base_.name());
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(base_);
  r.terms_.reserve(terms_.size());
  for (const Term& term : terms_)
    r.terms_.push_back(Term{term.exp, base_.reduce(-term.coeff)});
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  require_same_base(rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->exp < b->exp)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->exp < a->exp) {
      merged.push_back(*b++);
    } else {
      mpz_class c = base_.reduce(a->coeff + b->coeff);
      if (c != 0)
        merged.push_back(Term{a->exp, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.require_same_base(b);
  std::vector<LaurentPoly::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& u : a.terms_)
    for (const auto& v : b.terms_)
      products.push_back(LaurentPoly::Term{mul(u.exp, v.exp), u.coeff * v.coeff});
  return LaurentPoly::from_terms(a.base_, std::move(products));
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = constant(base_, 1);
  LaurentPoly square = *this;
  while (n != 0) {
    if (n & 1u)
      result *= square;
    n >>= 1;
    if (n != 0)
      square *= square;
  }
  return result;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  // Print order: t descending, then x ascending.
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const Term& term : terms_)
    order.push_back(&term);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    if (a->exp.t != b->exp.t)
      return a->exp.t > b->exp.t;
    return a->exp.x < b->exp.x;
  });

  std::ostringstream os;
  bool first = true;
  for (const Term* term : order) {
    if (first)
      os << term->coeff.get_str();
    else if (term->coeff < 0)
      os << " - " << mpz_class(-term->coeff).get_str();
    else
      os << " + " << term->coeff.get_str();
    first = false;
    if (term->exp.t != 0)
      write_power(os, 't', term->exp.t);
    if (term->exp.x != 0)
      write_power(os, 'x', term->exp.x);
  }
  return os.str();
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  if (!(a.base() == b.base()))
    throw ConfigError("mismatched coefficient rings: " + a.base().name() + " vs " + b.base().name());
  if (b.is_zero())
    throw DivisionByZero("Laurent division by zero");
  if (a.is_zero())
    return LaurentPoly(a.base());

  // Over a domain the quotient's degrees in each variable are differences of the
  // operands' degrees, which bounds the search box.
  const std::int64_t t_lo = checked_sub(a.min_t(), b.min_t());
  const std::int64_t t_hi = checked_sub(a.max_t(), b.max_t());
  const std::int64_t x_lo = checked_sub(a.min_x(), b.min_x());
  const std::int64_t x_hi = checked_sub(a.max_x(), b.max_x());
  if (t_lo > t_hi || x_lo > x_hi)
    return std::nullopt;

  const LaurentPoly::Term& lead_b = b.terms().back();
  std::vector<LaurentPoly::Term> quotient;
  LaurentPoly rest = a;
  while (!rest.is_zero()) {
    const LaurentPoly::Term& lead_r = rest.terms().back();
    Monomial m{checked_sub(lead_r.exp.t, lead_b.exp.t), checked_sub(lead_r.exp.x, lead_b.exp.x)};
    if (m.t < t_lo || m.t > t_hi || m.x < x_lo || m.x > x_hi)
      return std::nullopt;
    std::optional<mpz_class> c = a.base().divide(lead_r.coeff, lead_b.coeff);
    if (!c)
      return std::nullopt;
    LaurentPoly step = LaurentPoly::monomial(a.base(), *c, m.t, m.x);
    quotient.push_back(LaurentPoly::Term{m, std::move(*c)});
    rest -= step * b;
  }
  return LaurentPoly::from_terms(a.base(), std::move(quotient));
}

LaurentPoly parse_laurent(BaseRing base, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;)
    tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "0")
    return LaurentPoly(base);

  auto parse_int = [](const std::string& s) -> std::int64_t {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used != s.size())
      throw ParseError("bad exponent '" + s + "'", 0);
    return v;
  };

  std::vector<LaurentPoly::Term> terms;
  std::size_t i = 0;
  int sign = 1;
  while (i < tokens.size()) {
    const std::string& coeff_tok = tokens[i];
    if (coeff_tok.empty() || !(std::isdigit(static_cast<unsigned char>(coeff_tok.back()))))
      throw ParseError("expected coefficient, got '" + coeff_tok + "'", i);
    mpz_class c;
    if (c.set_str(coeff_tok, 10) != 0)
      throw ParseError("bad coefficient '" + coeff_tok + "'", i);
    c *= sign;
    ++i;
    Monomial m;
    while (i < tokens.size() && (tokens[i][0] == 't' || tokens[i][0] == 'x')) {
      const std::string& tok = tokens[i];
      std::int64_t e = 1;
      if (tok.size() > 1) {
        if (tok[1] != '^')
          throw ParseError("bad power '" + tok + "'", i);
        std::string exp = tok.substr(2);
        if (exp.size() > 2 && exp.front() == '(' && exp.back() == ')')
          exp = exp.substr(1, exp.size() - 2);
        e = parse_int(exp);
      }
      (tok[0] == 't' ? m.t : m.x) = e;
      ++i;
    }
    terms.push_back(LaurentPoly::Term{m, std::move(c)});
    if (i < tokens.size()) {
      if (tokens[i] == "+")
        sign = 1;
      else if (tokens[i] == "-")
        sign = -1;
      else
        throw ParseError("expected '+' or '-', got '" + tokens[i] + "'", i);
      ++i;
      if (i == tokens.size())
        throw ParseError("dangling operator", i);
    }
  }
  return LaurentPoly::from_terms(base, std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

} // namespace skeinforge
