// SPDX-License-Identifier: MIT
#include "finalg/semifield.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <deque>

namespace finalg {
namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::unique_ptr<Semifield>> entries;
};

Registry& registry() {
  static Registry* r = new Registry;  // leaked intentionally: interned forever
  return *r;
}

uint64_t product_of(const std::vector<uint32_t>& orders) {
  uint64_t p = 1;
  for (uint32_t o : orders) p *= o;
  return p;
}

}  // namespace

struct SemifieldAccess {
  static Semifield* make() { return new Semifield(); }
  static void init(Semifield& s, uint16_t id, SemifieldKind kind, AddRule rule,
                   bool free_slot, std::vector<uint32_t> orders,
                   uint32_t minus_one_g, uint16_t base_id, std::string name) {
    s.id_ = id;
    s.kind_ = kind;
    s.rule_ = rule;
    s.free_slot_ = free_slot;
    s.orders_ = std::move(orders);
    s.unit_count_ = static_cast<uint32_t>(product_of(s.orders_));
    s.minus_one_g_ = minus_one_g;
    s.base_id_ = base_id;
    s.name_ = std::move(name);
  }
  static SemifieldKind kind(const Semifield& s) { return s.kind_; }
  static const std::vector<uint32_t>& orders(const Semifield& s) {
    return s.orders_;
  }
  static uint32_t minus_one(const Semifield& s) { return s.minus_one_g_; }
  static uint16_t base_id(const Semifield& s) { return s.base_id_; }
};

namespace {

// Finds an existing entry with identical structural data or creates one.
const Semifield& intern(SemifieldKind kind, AddRule rule, bool free_slot,
                        std::vector<uint32_t> orders, uint32_t minus_one_g,
                        uint16_t base_id, std::string name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (const auto& e : r.entries) {
    if (SemifieldAccess::kind(*e) == kind && e->rule() == rule &&
        e->has_free_slot() == free_slot &&
        SemifieldAccess::orders(*e) == orders &&
        SemifieldAccess::minus_one(*e) == minus_one_g &&
        SemifieldAccess::base_id(*e) == base_id) {
      return *e;
    }
  }
  require(r.entries.size() < std::numeric_limits<uint16_t>::max(),
          "semifield registry overflow");
  auto* s = SemifieldAccess::make();
  SemifieldAccess::init(*s, static_cast<uint16_t>(r.entries.size()), kind,
                        rule, free_slot, std::move(orders), minus_one_g,
                        base_id, std::move(name));
  r.entries.emplace_back(s);
  return *r.entries.back();
}

void validate_minus_one(const std::vector<uint32_t>& orders, uint32_t m) {
  uint64_t total = product_of(orders);
  require(m != 0 && m < total, "minus-one must be a nontrivial unit");
  // must have order exactly two: doubling each digit gives the identity
  uint32_t rest = m;
  for (uint32_t o : orders) {
    uint32_t d = rest % o;
    rest /= o;
    require((2 * d) % o == 0, "minus-one must square to one");
  }
}

}  // namespace

const Semifield& Semifield::finfinity() {
  static const Semifield& s = intern(SemifieldKind::kFInfinity,
                                     AddRule::kGroup, false, {2}, 1, 0, "Finf");
  return s;
}

const Semifield& Semifield::cyclotomic(uint32_t k) {
  require(k >= 1, "cyclotomic index must be at least 1");
  if (k == 1) return finfinity();
  return intern(SemifieldKind::kCyclotomic, AddRule::kGroup, false, {2 * k}, k,
                0, "Finf^" + std::to_string(k));
}

const Semifield& Semifield::group_semifield(std::vector<uint32_t> orders,
                                            uint32_t minus_one_g) {
  require(!orders.empty(), "unit group needs at least one cyclic factor");
  for (uint32_t o : orders) require(o >= 1, "cyclic factor order must be >= 1");
  require(product_of(orders) <= (1u << 20), "unit group too large");
  validate_minus_one(orders, minus_one_g);
  std::string nm = "Units[";
  for (size_t i = 0; i < orders.size(); ++i) {
    if (i) nm += "x";
    nm += std::to_string(orders[i]);
  }
  nm += "]";
  return intern(SemifieldKind::kGroupSemifield, AddRule::kGroup, false,
                std::move(orders), minus_one_g, 0, nm);
}

const Semifield& Semifield::lexmax(const Semifield& base) {
  require(base.is_finite(), "lexmax base must be a finite semifield");
  return intern(SemifieldKind::kLexMax, AddRule::kLex, true, base.orders(),
                base.minus_one_g(), base.id(), "LexMax(" + base.name() + ")");
}

const Semifield& Semifield::monomials() {
  static const Semifield& s = intern(SemifieldKind::kMonomials,
                                     AddRule::kGroup, true, {2}, 1, 0,
                                     "Monomials");
  return s;
}

const Semifield& Semifield::by_id(uint16_t id) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  require(id < r.entries.size(), "unknown semifield id");
  return *r.entries[id];
}

const Semifield& Semifield::base() const {
  require(kind_ == SemifieldKind::kLexMax, "only lexmax has a base semifield");
  return by_id(base_id_);
}

uint32_t Semifield::cyclotomic_k() const {
  if (kind_ == SemifieldKind::kFInfinity) return 1;
  require(kind_ == SemifieldKind::kCyclotomic,
          "cyclotomic index of a non-cyclotomic semifield");
  return orders_[0] / 2;
}

Scalar Semifield::unit(uint32_t g, int32_t e) const {
  require(g < unit_count_, "unit index out of range");
  require(free_slot_ || e == 0, "this semifield has no free generator");
  return Scalar{false, g, e, id_};
}

std::vector<uint32_t> Semifield::digits(uint32_t g) const {
  std::vector<uint32_t> d(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) {
    d[i] = g % orders_[i];
    g /= orders_[i];
  }
  return d;
}

uint32_t Semifield::from_digits(const std::vector<uint32_t>& d) const {
  require(d.size() == orders_.size(), "digit count mismatch");
  uint64_t g = 0;
  for (size_t i = orders_.size(); i-- > 0;) {
    require(d[i] < orders_[i], "digit out of range");
    g = g * orders_[i] + d[i];
  }
  return static_cast<uint32_t>(g);
}

void Semifield::check_owned(Scalar a) const {
  require(a.sf == id_, "scalar belongs to a different semifield");
}

Scalar Semifield::add(Scalar a, Scalar b) const {
  check_owned(a);
  check_owned(b);
  if (a.zero || b.zero) return zero();
  if (a == b) return a;
  if (rule_ == AddRule::kLex && a.g == b.g) {
    return Scalar{false, a.g, std::max(a.e, b.e), id_};
  }
  return zero();
}

Scalar Semifield::mul(Scalar a, Scalar b) const {
  check_owned(a);
  check_owned(b);
  if (a.zero || b.zero) return zero();
  uint32_t g = 0;
  uint64_t place = 1;
  uint32_t ra = a.g, rb = b.g;
  for (uint32_t o : orders_) {
    uint32_t d = (ra % o + rb % o) % o;
    g += static_cast<uint32_t>(d * place);
    place *= o;
    ra /= o;
    rb /= o;
  }
  int64_t e = static_cast<int64_t>(a.e) + b.e;
  require(e >= std::numeric_limits<int32_t>::min() &&
              e <= std::numeric_limits<int32_t>::max(),
          "exponent overflow");
  return Scalar{false, g, static_cast<int32_t>(e), id_};
}

Scalar Semifield::inverse(Scalar a) const {
  check_owned(a);
  require(!a.zero, "zero has no inverse");
  uint32_t g = 0;
  uint64_t place = 1;
  uint32_t ra = a.g;
  for (uint32_t o : orders_) {
    uint32_t d = (o - ra % o) % o;
    g += static_cast<uint32_t>(d * place);
    place *= o;
    ra /= o;
  }
  return Scalar{false, g, -a.e, id_};
}

Scalar Semifield::pow(Scalar a, int64_t n) const {
  check_owned(a);
  if (n == 0) return one();
  if (a.zero) return zero();
  Scalar base = n < 0 ? inverse(a) : a;
  uint64_t k = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
  Scalar acc = one();
  while (k) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

std::vector<Scalar> Semifield::elements() const {
  require(is_finite(), "cannot enumerate an infinite semifield");
  std::vector<Scalar> out;
  out.reserve(unit_count_ + 1);
  out.push_back(zero());
  for (uint32_t g = 0; g < unit_count_; ++g) out.push_back(unit(g));
  return out;
}

std::vector<Scalar> Semifield::units() const {
  require(is_finite(), "cannot enumerate an infinite semifield");
  std::vector<Scalar> out;
  out.reserve(unit_count_);
  for (uint32_t g = 0; g < unit_count_; ++g) out.push_back(unit(g));
  return out;
}

std::string Semifield::to_string(Scalar a) const {
  check_owned(a);
  if (a.zero) return "0";
  std::string finite;
  switch (kind_) {
    case SemifieldKind::kFInfinity:
      finite = a.g == 0 ? "1" : "-1";
      break;
    case SemifieldKind::kCyclotomic: {
      uint32_t k = orders_[0] / 2;
      uint32_t g = a.g;
      bool negated = g >= k;
      if (negated) g -= k;
      if (g == 0) {
        finite = negated ? "-1" : "1";
      } else {
        finite = (negated ? "-z" : "z");
        if (g != 1) finite += "^" + std::to_string(g);
      }
      break;
    }
    default: {
      if (a.g == 0) {
        finite = "1";
      } else if (a.g == minus_one_g_) {
        finite = "-1";
      } else {
        finite = "u(";
        auto d = digits(a.g);
        for (size_t i = 0; i < d.size(); ++i) {
          if (i) finite += ",";
          finite += std::to_string(d[i]);
        }
        finite += ")";
      }
      break;
    }
  }
  if (!free_slot_) return finite;
  if (a.e == 0) return finite;
  std::string t = "t";
  if (a.e != 1) t += "^" + std::to_string(a.e);
  if (finite == "1") return t;
  if (finite == "-1") return "-" + t;
  return finite + "*" + t;
}

}  // namespace finalg
