#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rankfn {

// Ordinal below epsilon_0 in hereditary Cantor normal form:
//   a = w^e1*c1 + w^e2*c2 + ... + w^el*cl
// with e1 > e2 > ... > el (each itself a CNFOrdinal) and all ci >= 1.
// The empty term list represents 0.
class CNFOrdinal {
 public:
  struct Term;

  CNFOrdinal() = default;

  static CNFOrdinal from_nat(std::uint64_t n);
  static CNFOrdinal omega();
  static CNFOrdinal omega_pow(const CNFOrdinal& exponent);
  // Builds w^exponent * coeff + rest; validates CNF shape.
  static CNFOrdinal make(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // Nonzero with no exponent-0 term.
  bool is_limit() const;
  std::uint64_t as_nat() const;  // requires is_finite()

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;  // requires nonzero
  // The natural summand of the CNF (coefficient of w^0), 0 if absent.
  std::uint64_t finite_part() const;

  static int cmp(const CNFOrdinal& a, const CNFOrdinal& b);
  bool operator==(const CNFOrdinal& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const CNFOrdinal& o) const { return cmp(*this, o) != 0; }
  bool operator<(const CNFOrdinal& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const CNFOrdinal& o) const { return cmp(*this, o) <= 0; }
  bool operator>(const CNFOrdinal& o) const { return cmp(*this, o) > 0; }
  bool operator>=(const CNFOrdinal& o) const { return cmp(*this, o) >= 0; }

  // Ordinal sum this + b (left summands below lead(b) are absorbed).
  CNFOrdinal add(const CNFOrdinal& b) const;
  // Ordinal product this * m for a natural m.
  CNFOrdinal mul_nat(std::uint64_t m) const;
  CNFOrdinal successor() const { return add(from_nat(1)); }

  std::string str() const;
  // Grammar: expr := term ('+' term)*, term := 'w' ['^' atom] ['*' nat] | nat,
  // atom := 'w' | nat | '(' expr ')'.  Sums are normalized by ordinal addition.
  static CNFOrdinal parse(std::string_view text);

 private:
  std::vector<Term> terms_;
};

struct CNFOrdinal::Term {
  CNFOrdinal exponent;
  std::uint64_t coeff = 0;
};

// w * a, expanded termwise: w * (w^e*c + ...) = w^(1+e)*c + ...
CNFOrdinal omega_times(const CNFOrdinal& a);

// Splits a as w*delta + k (k natural); throws if a is not of that shape
// (every CNF ordinal is, so this always succeeds for valid input).
struct OmegaSplit {
  CNFOrdinal delta;
  std::uint64_t finite;
};
OmegaSplit split_omega_multiple(const CNFOrdinal& a);

// A rank: an ordinal or the symbol infinity (greater than every ordinal).
class RankValue {
 public:
  RankValue() = default;
  static RankValue infinity();
  static RankValue of(CNFOrdinal o);
  static RankValue finite(std::uint64_t n) { return of(CNFOrdinal::from_nat(n)); }

  bool is_infinite() const { return infinite_; }
  const CNFOrdinal& ordinal() const;  // requires finite ordinal value

  static int cmp(const RankValue& a, const RankValue& b);
  bool operator==(const RankValue& o) const { return cmp(*this, o) == 0; }
  bool operator<(const RankValue& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const RankValue& o) const { return cmp(*this, o) <= 0; }

  std::string str() const;

 private:
  bool infinite_ = false;
  CNFOrdinal ord_;
};

// floor(log2(n+1)); log2_floor(0) is an error.
int log2_floor(std::uint64_t n);

}  // namespace rankfn
