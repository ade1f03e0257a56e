#pragma once

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace asymlab {

/// Nonnegative real extended with +inf. Addition absorbs +inf; scaling by
/// zero yields zero even for the infinite value.
class ExtReal {
 public:
  constexpr ExtReal() = default;
  ExtReal(double v) : value_(v) {  // NOLINT: implicit by design
    if (std::isnan(v) || v < 0.0) throw std::invalid_argument("ExtReal: needs a nonnegative real");
    if (std::isinf(v)) {
      infinite_ = true;
      value_ = 0.0;
    }
  }

  static ExtReal infinity() {
    ExtReal r;
    r.infinite_ = true;
    return r;
  }

  bool is_finite() const { return !infinite_; }
  bool is_infinite() const { return infinite_; }

  double value() const {
    if (infinite_) throw std::logic_error("ExtReal: no finite value");
    return value_;
  }

  /// Finite value, or IEEE +inf; handy for ordering and reporting.
  double as_double() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  ExtReal operator+(const ExtReal& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return ExtReal(value_ + o.value_);
  }

  ExtReal scaled(double alpha) const {
    if (alpha < 0.0) throw std::invalid_argument("ExtReal: negative scaling");
    if (alpha == 0.0) return ExtReal(0.0);
    if (infinite_) return infinity();
    return ExtReal(alpha * value_);
  }

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    return a.as_double() < b.as_double();
  }
  friend bool operator<=(const ExtReal& a, const ExtReal& b) {
    return a.as_double() <= b.as_double();
  }

  std::string str() const { return infinite_ ? "+inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, const ExtReal& x) {
    if (x.infinite_) return os << "+inf";
    return os << x.value_;
  }

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

inline ExtReal ext_max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

}  // namespace asymlab
