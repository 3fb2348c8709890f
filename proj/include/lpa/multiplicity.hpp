#ifndef LPA_MULTIPLICITY_HPP
#define LPA_MULTIPLICITY_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <string>

namespace lpa {

/// A count in N ∪ {infinity}. Edge bundles store values >= 1 (enforced by
/// graph validation); zero is representable so the same type can carry
/// path counts. Infinity compares greater than every finite value and
/// absorbs under addition and (nonzero) multiplication.
class Multiplicity {
public:
  constexpr Multiplicity() : v_(0) {}
  constexpr Multiplicity(std::uint64_t n) : v_(n) {}

  static constexpr Multiplicity infinity() {
    Multiplicity m;
    m.v_ = kInf;
    return m;
  }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr bool is_zero() const { return v_ == 0; }

  /// Finite value; meaningless for the infinite element.
  constexpr std::uint64_t value() const { return v_; }

  friend constexpr bool operator==(Multiplicity a, Multiplicity b) = default;
  friend constexpr std::strong_ordering operator<=>(Multiplicity a, Multiplicity b) {
    return a.v_ <=> b.v_;  // kInf is the largest representable value
  }

  /// Saturating addition: infinity absorbs; finite overflow clamps to the
  /// largest finite value (irrelevant at the supported graph sizes but
  /// keeps comparisons against infinity exact).
  friend constexpr Multiplicity operator+(Multiplicity a, Multiplicity b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    std::uint64_t s = a.v_ + b.v_;
    if (s < a.v_ || s == kInf) s = kInf - 1;
    return Multiplicity(s);
  }

  /// Saturating multiplication with 0 * infinity = 0 (counting semantics:
  /// no completions downstream means no paths, however many parallel
  /// edges lead there).
  friend constexpr Multiplicity operator*(Multiplicity a, Multiplicity b) {
    if (a.is_zero() || b.is_zero()) return Multiplicity(0);
    if (a.is_infinite() || b.is_infinite()) return infinity();
    if (a.v_ > (kInf - 1) / b.v_) return Multiplicity(kInf - 1);
    return Multiplicity(a.v_ * b.v_);
  }

  Multiplicity& operator+=(Multiplicity o) { return *this = *this + o; }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_;
};

}  // namespace lpa

#endif  // LPA_MULTIPLICITY_HPP
