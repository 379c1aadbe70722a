#ifndef MANDELROOTS_NUMERIC_HPP
#define MANDELROOTS_NUMERIC_HPP

#include <cmath>

#include "mandelroots/errors.hpp"

namespace mandelroots {

/// Working precision of a computation. Double is the native mode; HighPrec
/// is backed by double-double arithmetic and therefore supports up to 31
/// decimal digits.
class NumericContext {
 public:
  enum class Mode { Double, HighPrec };

  static NumericContext double_precision() { return NumericContext(Mode::Double, 0, 0x1p-52); }

  static NumericContext high_precision(int digits) {
    if (digits < 1 || digits > kMaxDigits)
      throw ValidationError("high-precision digits must be in [1, 31]");
    return NumericContext(Mode::HighPrec, digits, std::pow(10.0, -digits));
  }

  Mode mode() const { return mode_; }
  int digits() const { return digits_; }
  double epsilon() const { return epsilon_; }

  static constexpr int kMaxDigits = 31;  // double-double unit roundoff is 2^-104

 private:
  NumericContext(Mode m, int d, double e) : mode_(m), digits_(d), epsilon_(e) {}

  Mode mode_;
  int digits_;
  double epsilon_;
};

}  // namespace mandelroots

#endif
