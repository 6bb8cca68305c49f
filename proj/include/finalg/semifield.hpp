// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/error.hpp"

namespace finalg {

// A scalar drawn from one of the registered semifields.  `zero` marks the
// absorbing element; otherwise `g` indexes the finite unit group (mixed-radix
// over the cyclic factor orders, least-significant factor first) and `e` is
// the exponent on the infinite cyclic generator for semifields that carry
// one.  `sf` identifies the owning semifield; operations across distinct
// semifields are errors.
struct Scalar {
  bool zero = true;
  uint32_t g = 0;
  int32_t e = 0;
  uint16_t sf = 0;

  friend bool operator==(const Scalar&, const Scalar&) = default;
};

enum class AddRule : uint8_t {
  kGroup,  // distinct nonzero elements sum to zero
  kLex,    // same unit part: larger exponent absorbs; else zero
};

enum class SemifieldKind : uint8_t {
  kFInfinity,
  kCyclotomic,
  kGroupSemifield,
  kLexMax,
  kMonomials,  // sign times one free generator; used by the prime catalog
};

// Addition in every registered semifield is idempotent and commutative with
// an absorbing zero, and every element plus its negation is zero.  The only
// structural choices are the finite unit group, whether an infinite cyclic
// generator is present, and whether same-unit sums compare exponents (kLex)
// or collapse to zero (kGroup).
class Semifield {
 public:
  Semifield(const Semifield&) = delete;
  Semifield& operator=(const Semifield&) = delete;

  // Interned registry: equal arguments return the identical instance.
  static const Semifield& finfinity();
  static const Semifield& cyclotomic(uint32_t k);
  static const Semifield& group_semifield(std::vector<uint32_t> orders,
                                          uint32_t minus_one_g);
  static const Semifield& lexmax(const Semifield& base);
  static const Semifield& monomials();
  static const Semifield& by_id(uint16_t id);

  uint16_t id() const { return id_; }
  SemifieldKind kind() const { return kind_; }
  AddRule rule() const { return rule_; }
  bool has_free_slot() const { return free_slot_; }
  bool is_finite() const { return !free_slot_; }
  const std::vector<uint32_t>& orders() const { return orders_; }
  uint32_t unit_count() const { return unit_count_; }
  uint32_t minus_one_g() const { return minus_one_g_; }
  // For kLexMax, the finite semifield the units were extended from.
  const Semifield& base() const;
  uint32_t cyclotomic_k() const;
  const std::string& name() const { return name_; }

  Scalar zero() const { return Scalar{true, 0, 0, id_}; }
  Scalar one() const { return Scalar{false, 0, 0, id_}; }
  Scalar minus_one() const { return Scalar{false, minus_one_g_, 0, id_}; }
  Scalar unit(uint32_t g, int32_t e = 0) const;
  // Mixed-radix digits of a unit's finite part, least-significant first.
  std::vector<uint32_t> digits(uint32_t g) const;
  uint32_t from_digits(const std::vector<uint32_t>& d) const;

  Scalar add(Scalar a, Scalar b) const;
  Scalar mul(Scalar a, Scalar b) const;
  Scalar neg(Scalar a) const { return mul(a, minus_one()); }
  Scalar inverse(Scalar a) const;  // error on zero
  Scalar pow(Scalar a, int64_t n) const;
  // a <= b in the order where addition is meet and zero is bottom.
  bool leq(Scalar a, Scalar b) const { return add(a, b) == a; }

  // Finite semifields only: all elements, zero first, then units by index.
  std::vector<Scalar> elements() const;
  std::vector<Scalar> units() const;

  std::string to_string(Scalar a) const;

 private:
  friend struct SemifieldAccess;
  Semifield() = default;
  void check_owned(Scalar a) const;

  uint16_t id_ = 0;
  SemifieldKind kind_ = SemifieldKind::kFInfinity;
  AddRule rule_ = AddRule::kGroup;
  bool free_slot_ = false;
  std::vector<uint32_t> orders_;
  uint32_t unit_count_ = 1;
  uint32_t minus_one_g_ = 0;
  uint16_t base_id_ = 0;  // kLexMax only
  std::string name_;
};

}  // namespace finalg
