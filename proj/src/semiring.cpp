#include "pathabs/semiring.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pathabs/errors.hpp"
#include "pathabs/rng.hpp"

namespace pathabs {

namespace {

struct NamedKind {
  std::string_view name;
  SemiringKind kind;
  std::string_view carrier;
};

constexpr NamedKind kNames[] = {
    {"boolean", SemiringKind::kBoolean, "{1} with or/and; absence is 0"},
    {"counting", SemiringKind::kCounting, "positive integers with +/*"},
    {"real", SemiringKind::kReal, "real numbers with +/*"},
    {"minplus-nonneg", SemiringKind::kMinPlus, "[0, inf) with min/+"},
    {"maxmin", SemiringKind::kMaxMin, "[0, 1] with max/min"},
    {"viterbi", SemiringKind::kViterbi, "[0, 1] with max/*"},
};

const NamedKind& lookup(SemiringKind kind) {
  for (const auto& n : kNames)
    if (n.kind == kind) return n;
  throw InvariantError("unhandled semiring kind");
}

}  // namespace

Semiring Semiring::by_name(std::string_view name) {
  for (const auto& n : kNames)
    if (n.name == name) return Semiring(n.kind);
  throw ValidationError("unknown semiring '" + std::string(name) + "'");
}

std::vector<Semiring> Semiring::all() {
  std::vector<Semiring> out;
  for (const auto& n : kNames) out.emplace_back(n.kind);
  return out;
}

std::string_view Semiring::name() const { return lookup(kind_).name; }

std::string_view Semiring::carrier_description() const { return lookup(kind_).carrier; }

Weight Semiring::add(Weight a, Weight b) const {
  switch (kind_) {
    case SemiringKind::kBoolean:
      return 1.0;
    case SemiringKind::kCounting:
    case SemiringKind::kReal:
      return a + b;
    case SemiringKind::kMinPlus:
      return std::min(a, b);
    case SemiringKind::kMaxMin:
    case SemiringKind::kViterbi:
      return std::max(a, b);
  }
  throw InvariantError("unhandled semiring kind");
}

Weight Semiring::mul(Weight a, Weight b) const {
  switch (kind_) {
    case SemiringKind::kBoolean:
      return 1.0;
    case SemiringKind::kCounting:
    case SemiringKind::kReal:
    case SemiringKind::kViterbi:
      return a * b;
    case SemiringKind::kMinPlus:
      return a + b;
    case SemiringKind::kMaxMin:
      return std::min(a, b);
  }
  throw InvariantError("unhandled semiring kind");
}

Weight Semiring::one() const {
  switch (kind_) {
    case SemiringKind::kMinPlus:
      return 0.0;
    default:
      return 1.0;
  }
}

bool Semiring::in_carrier(Weight w) const {
  if (!std::isfinite(w)) return false;
  switch (kind_) {
    case SemiringKind::kBoolean:
      return w == 1.0;
    case SemiringKind::kCounting:
      return w >= 1.0 && std::floor(w) == w && w <= 9007199254740992.0;
    case SemiringKind::kReal:
      return true;
    case SemiringKind::kMinPlus:
      return w >= 0.0;
    case SemiringKind::kMaxMin:
    case SemiringKind::kViterbi:
      return w >= 0.0 && w <= 1.0;
  }
  return false;
}

Weight Semiring::sample(Rng& rng) const {
  switch (kind_) {
    case SemiringKind::kBoolean:
      return 1.0;
    case SemiringKind::kCounting:
      return static_cast<Weight>(rng.uniform_int(1, 9));
    case SemiringKind::kReal:
      return static_cast<Weight>(rng.uniform_int(-9, 9));
    case SemiringKind::kMinPlus:
      return static_cast<Weight>(rng.uniform_int(0, 20));
    case SemiringKind::kMaxMin:
    case SemiringKind::kViterbi:
      // Multiples of 1/8: products of three stay exact.
      return static_cast<Weight>(rng.uniform_int(0, 8)) / 8.0;
  }
  return one();
}

LawReport check_semiring_laws(const Semiring& s, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ValidationError("law check needs at least one sample");
  LawReport report;
  report.semiring = std::string(s.name());
  report.samples = samples;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Weight a = s.sample(rng);
    const Weight b = s.sample(rng);
    const Weight c = s.sample(rng);
    report.add_commutative &= s.add(a, b) == s.add(b, a);
    report.mul_commutative &= s.mul(a, b) == s.mul(b, a);
    report.add_associative &= s.add(s.add(a, b), c) == s.add(a, s.add(b, c));
    report.mul_associative &= s.mul(s.mul(a, b), c) == s.mul(a, s.mul(b, c));
    report.distributive &= s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c));
    report.unit &= s.mul(a, s.one()) == a;
  }
  return report;
}

LawReport check_semiring_laws(std::string_view name, std::size_t samples, std::uint64_t seed) {
  return check_semiring_laws(Semiring::by_name(name), samples, seed);
}

}  // namespace pathabs
