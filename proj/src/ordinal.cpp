#include "rankfn/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <limits>
#include <sstream>

#include "rankfn/errors.hpp"

namespace rankfn {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw ResourceError("ordinal coefficient overflow");
  }
  return a * b;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (b > std::numeric_limits<std::uint64_t>::max() - a) {
    throw ResourceError("ordinal coefficient overflow");
  }
  return a + b;
}

}  // namespace

CNFOrdinal CNFOrdinal::from_nat(std::uint64_t n) {
  CNFOrdinal r;
  if (n > 0) r.terms_.push_back(Term{CNFOrdinal(), n});
  return r;
}

CNFOrdinal CNFOrdinal::omega() { return omega_pow(from_nat(1)); }

CNFOrdinal CNFOrdinal::omega_pow(const CNFOrdinal& exponent) {
  CNFOrdinal r;
  r.terms_.push_back(Term{exponent, 1});
  return r;
}

CNFOrdinal CNFOrdinal::make(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw InputError("CNF coefficient must be >= 1");
    if (i + 1 < terms.size() && cmp(terms[i].exponent, terms[i + 1].exponent) <= 0) {
      throw InputError("CNF exponents must be strictly decreasing");
    }
  }
  CNFOrdinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool CNFOrdinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool CNFOrdinal::is_limit() const {
  return !terms_.empty() && !terms_.back().exponent.is_zero();
}

std::uint64_t CNFOrdinal::as_nat() const {
  if (!is_finite()) throw InputError("ordinal is not finite: " + str());
  return terms_.empty() ? 0 : terms_[0].coeff;
}

const CNFOrdinal::Term& CNFOrdinal::leading() const {
  if (terms_.empty()) throw InputError("zero ordinal has no leading term");
  return terms_[0];
}

std::uint64_t CNFOrdinal::finite_part() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) return terms_.back().coeff;
  return 0;
}

int CNFOrdinal::cmp(const CNFOrdinal& a, const CNFOrdinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int e = cmp(a.terms_[i].exponent, b.terms_[i].exponent);
    if (e != 0) return e;
    if (a.terms_[i].coeff != b.terms_[i].coeff) {
      return a.terms_[i].coeff < b.terms_[i].coeff ? -1 : 1;
    }
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

CNFOrdinal CNFOrdinal::add(const CNFOrdinal& b) const {
  if (b.is_zero()) return *this;
  const CNFOrdinal& lead_exp = b.terms_[0].exponent;
  CNFOrdinal r;
  // Keep terms of `a` with exponent strictly above lead(b); a term with equal
  // exponent merges coefficients; everything below is absorbed.
  for (const Term& t : terms_) {
    if (cmp(t.exponent, lead_exp) > 0) {
      r.terms_.push_back(t);
    } else {
      break;
    }
  }
  r.terms_.insert(r.terms_.end(), b.terms_.begin(), b.terms_.end());
  if (!terms_.empty()) {
    // Merge the boundary term if it matched lead(b) exactly.
    for (const Term& t : terms_) {
      if (cmp(t.exponent, lead_exp) == 0) {
        r.terms_[r.terms_.size() - b.terms_.size()].coeff =
            checked_add(r.terms_[r.terms_.size() - b.terms_.size()].coeff, t.coeff);
        break;
      }
      if (cmp(t.exponent, lead_exp) < 0) break;
    }
  }
  return r;
}

CNFOrdinal CNFOrdinal::mul_nat(std::uint64_t m) const {
  if (m == 0 || is_zero()) return CNFOrdinal();
  // (w^e1*c1 + rest) * m = w^e1*(c1*m) + rest for m >= 1.
  CNFOrdinal r = *this;
  r.terms_[0].coeff = checked_mul(r.terms_[0].coeff, m);
  return r;
}

std::string CNFOrdinal::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) out << "+";
    first = false;
    if (t.exponent.is_zero()) {
      out << t.coeff;
      continue;
    }
    out << "w";
    if (!(t.exponent == from_nat(1))) {
      std::string e = t.exponent.str();
      if (e.find('+') != std::string::npos || e.find('*') != std::string::npos) {
        out << "^(" << e << ")";
      } else {
        out << "^" << e;
      }
    }
    if (t.coeff != 1) out << "*" << t.coeff;
  }
  return out.str();
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  CNFOrdinal parse() {
    CNFOrdinal r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  CNFOrdinal expr() {
    CNFOrdinal r = term();
    skip_ws();
    while (peek() == '+') {
      ++pos_;
      r = r.add(term());
      skip_ws();
    }
    return r;
  }

  CNFOrdinal term() {
    skip_ws();
    char c = peek();
    if (c == 'w') {
      ++pos_;
      CNFOrdinal exponent = CNFOrdinal::from_nat(1);
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        exponent = atom();
      }
      std::uint64_t coeff = 1;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        coeff = nat();
        if (coeff == 0) fail("coefficient must be >= 1");
      }
      return CNFOrdinal::omega_pow(exponent).mul_nat(coeff);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return CNFOrdinal::from_nat(nat());
    }
    fail("expected 'w' or an integer");
  }

  CNFOrdinal atom() {
    skip_ws();
    char c = peek();
    if (c == 'w') {
      ++pos_;
      return CNFOrdinal::omega();
    }
    if (c == '(') {
      ++pos_;
      CNFOrdinal r = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return CNFOrdinal::from_nat(nat());
    }
    fail("expected 'w', an integer, or '('");
  }

  std::uint64_t nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail("integer too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("ordinal parse error at position " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

CNFOrdinal CNFOrdinal::parse(std::string_view text) { return OrdinalParser(text).parse(); }

CNFOrdinal omega_times(const CNFOrdinal& a) {
  // Left distributivity: w*(x+y) = w*x + w*y, and w*(w^e*c) = w^(1+e)*c.
  std::vector<CNFOrdinal::Term> terms;
  const CNFOrdinal one = CNFOrdinal::from_nat(1);
  for (const CNFOrdinal::Term& t : a.terms()) {
    terms.push_back(CNFOrdinal::Term{one.add(t.exponent), t.coeff});
  }
  return CNFOrdinal::make(std::move(terms));
}

OmegaSplit split_omega_multiple(const CNFOrdinal& a) {
  OmegaSplit s;
  s.finite = a.finite_part();
  std::vector<CNFOrdinal::Term> delta_terms;
  for (const CNFOrdinal::Term& t : a.terms()) {
    if (t.exponent.is_zero()) continue;
    // Solve 1 + e' = e for e': subtract one when e is finite, identity otherwise.
    CNFOrdinal e = t.exponent;
    if (e.is_finite()) {
      e = CNFOrdinal::from_nat(e.as_nat() - 1);
    }
    delta_terms.push_back(CNFOrdinal::Term{e, t.coeff});
  }
  s.delta = CNFOrdinal::make(std::move(delta_terms));
  // Sanity: w*delta + finite reconstructs a.
  assert(omega_times(s.delta).add(CNFOrdinal::from_nat(s.finite)) == a);
  return s;
}

RankValue RankValue::infinity() {
  RankValue v;
  v.infinite_ = true;
  return v;
}

RankValue RankValue::of(CNFOrdinal o) {
  RankValue v;
  v.ord_ = std::move(o);
  return v;
}

const CNFOrdinal& RankValue::ordinal() const {
  if (infinite_) throw InputError("rank value is infinite");
  return ord_;
}

int RankValue::cmp(const RankValue& a, const RankValue& b) {
  if (a.infinite_ && b.infinite_) return 0;
  if (a.infinite_) return 1;
  if (b.infinite_) return -1;
  return CNFOrdinal::cmp(a.ord_, b.ord_);
}

std::string RankValue::str() const { return infinite_ ? "inf" : ord_.str(); }

int log2_floor(std::uint64_t n) {
  if (n == 0) throw InputError("log2_floor(0) is undefined");
  int k = 0;
  while (n >>= 1) ++k;
  return k;
}

}  // namespace rankfn
