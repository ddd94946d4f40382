#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathabs {

class Rng;

// Arc weights live in a carrier embedded in double. Arc absence is not a
// carrier value: it is the empty Entry, which behaves as an adjoined zero
// (absorbing for mul, neutral for add). This is what lets min-plus on
// [0, inf) be used even though its additive neutral element is not in the
// carrier.
using Weight = double;
using Entry = std::optional<Weight>;

enum class SemiringKind {
  kBoolean,    // ({1}, or, and)
  kCounting,   // (positive integers, +, *)   arc value = multiplicity
  kReal,       // (reals, +, *)
  kMinPlus,    // ([0, inf), min, +)
  kMaxMin,     // ([0, 1], max, min)          bottleneck / fuzzy
  kViterbi,    // ([0, 1], max, *)
};

class Semiring {
 public:
  constexpr explicit Semiring(SemiringKind kind = SemiringKind::kBoolean) : kind_(kind) {}

  // Accepted names: boolean, counting, real, minplus-nonneg, maxmin, viterbi.
  static Semiring by_name(std::string_view name);
  static std::vector<Semiring> all();

  SemiringKind kind() const { return kind_; }
  std::string_view name() const;
  std::string_view carrier_description() const;

  Weight add(Weight a, Weight b) const;
  Weight mul(Weight a, Weight b) const;
  Weight one() const;

  bool in_carrier(Weight w) const;

  // A carrier value whose sums and products in this semiring are exact in
  // double arithmetic (small integers or dyadic rationals).
  Weight sample(Rng& rng) const;

  Entry plus(const Entry& a, const Entry& b) const {
    if (!a) return b;
    if (!b) return a;
    return add(*a, *b);
  }
  Entry times(const Entry& a, const Entry& b) const {
    if (!a || !b) return std::nullopt;
    return mul(*a, *b);
  }

  bool is_boolean() const { return kind_ == SemiringKind::kBoolean; }

  friend bool operator==(const Semiring&, const Semiring&) = default;

 private:
  SemiringKind kind_;
};

struct LawReport {
  std::string semiring;
  std::size_t samples = 0;
  bool add_commutative = true;
  bool mul_commutative = true;
  bool add_associative = true;
  bool mul_associative = true;
  bool distributive = true;
  bool unit = true;

  bool all_pass() const {
    return add_commutative && mul_commutative && add_associative && mul_associative &&
           distributive && unit;
  }
};

// Evaluates the commutative-semiring laws on `samples` random carrier
// triples. Deterministic for a fixed seed.
LawReport check_semiring_laws(const Semiring& s, std::size_t samples, std::uint64_t seed);
LawReport check_semiring_laws(std::string_view name, std::size_t samples, std::uint64_t seed);

}  // namespace pathabs
