#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rpf {

// Two log-domain magnitudes closer than this are considered equal.
// Used library-wide by equality, matching, and axiom validation.
inline constexpr double kLogTolerance = 1e-9;

/// A point of the extended nonnegative half-line [0, +inf] together with
/// the wildcard element that stands for an indeterminate (0/0-style) value.
/// Strictly positive finite magnitudes are stored as their natural log, so
/// products of many extreme ratios neither overflow nor lose precision.
class Magnitude {
 public:
  enum class Kind { Zero, Finite, Infinity, Wildcard };

  // Defaults to 1, the multiplicative identity.
  constexpr Magnitude() : kind_(Kind::Finite), log_(0.0) {}

  static constexpr Magnitude zero() { return Magnitude(Kind::Zero); }
  static constexpr Magnitude one() { return Magnitude(); }
  static constexpr Magnitude infinity() { return Magnitude(Kind::Infinity); }
  static constexpr Magnitude wildcard() { return Magnitude(Kind::Wildcard); }

  /// Finite magnitude e^log_value. The log must be a finite real.
  static Magnitude from_log(double log_value) {
    if (!std::isfinite(log_value))
      throw std::invalid_argument("Magnitude::from_log: log value must be finite");
    Magnitude m(Kind::Finite);
    m.log_ = log_value;
    return m;
  }

  /// Build from a linear value in [0, +inf]. Rejects NaN and negatives.
  static Magnitude from_linear(double value) {
    if (std::isnan(value) || value < 0.0)
      throw std::invalid_argument("Magnitude::from_linear: value must be in [0, +inf]");
    if (value == 0.0) return zero();
    if (std::isinf(value)) return infinity();
    return from_log(std::log(value));
  }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_zero() const { return kind_ == Kind::Zero; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_infinity() const { return kind_ == Kind::Infinity; }
  constexpr bool is_wildcard() const { return kind_ == Kind::Wildcard; }

  /// True for 0, finite, or inf; false only for the wildcard.
  constexpr bool is_magnitude() const { return kind_ != Kind::Wildcard; }

  double log_value() const {
    if (!is_finite()) throw std::logic_error("Magnitude::log_value: not a finite magnitude");
    return log_;
  }

  /// Linear value; may round to 0 or inf for extreme logs. Wildcard has none.
  double linear() const {
    switch (kind_) {
      case Kind::Zero: return 0.0;
      case Kind::Finite: return std::exp(log_);
      case Kind::Infinity: return std::numeric_limits<double>::infinity();
      default: throw std::logic_error("Magnitude::linear: wildcard has no linear value");
    }
  }

  friend bool operator==(const Magnitude& a, const Magnitude& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ != Kind::Finite) return true;
    return std::fabs(a.log_ - b.log_) <= kLogTolerance;
  }
  friend bool operator!=(const Magnitude& a, const Magnitude& b) { return !(a == b); }

 private:
  explicit constexpr Magnitude(Kind kind) : kind_(kind), log_(0.0) {}

  Kind kind_;
  double log_;
};

/// Product on the magnitude-wildcard space: 0 * inf = *, and * absorbs.
inline Magnitude operator*(const Magnitude& a, const Magnitude& b) {
  if (a.is_wildcard() || b.is_wildcard()) return Magnitude::wildcard();
  if ((a.is_zero() && b.is_infinity()) || (a.is_infinity() && b.is_zero()))
    return Magnitude::wildcard();
  if (a.is_zero() || b.is_zero()) return Magnitude::zero();
  if (a.is_infinity() || b.is_infinity()) return Magnitude::infinity();
  return Magnitude::from_log(a.log_value() + b.log_value());
}

/// Sum. Finite sums are evaluated as log(e^a + e^b) without leaving the log
/// domain. The wildcard propagates: * + m = *.
inline Magnitude operator+(const Magnitude& a, const Magnitude& b) {
  if (a.is_wildcard() || b.is_wildcard()) return Magnitude::wildcard();
  if (a.is_infinity() || b.is_infinity()) return Magnitude::infinity();
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const double hi = std::max(a.log_value(), b.log_value());
  const double lo = std::min(a.log_value(), b.log_value());
  return Magnitude::from_log(hi + std::log1p(std::exp(lo - hi)));
}

/// Multiplicative inverse: 0 and inf swap, the wildcard maps to itself.
inline Magnitude inverse(const Magnitude& m) {
  switch (m.kind()) {
    case Magnitude::Kind::Zero: return Magnitude::infinity();
    case Magnitude::Kind::Infinity: return Magnitude::zero();
    case Magnitude::Kind::Wildcard: return Magnitude::wildcard();
    default: return Magnitude::from_log(-m.log_value());
  }
}

/// The matching relation: the parameter is matched by the constraint when
/// they are equal or the constraint is the wildcard. Not symmetric.
inline bool matches(const Magnitude& param, const Magnitude& constraint) {
  return constraint.is_wildcard() || param == constraint;
}

/// Maps [0, inf] onto [0, 1] by x -> x/(x+1). Rejects the wildcard, which
/// has no place on the interval.
inline double inverse_odds(const Magnitude& m) {
  switch (m.kind()) {
    case Magnitude::Kind::Zero: return 0.0;
    case Magnitude::Kind::Infinity: return 1.0;
    case Magnitude::Kind::Finite:
      // x/(x+1) = 1/(1 + e^-log x), stable for any finite log.
      return 1.0 / (1.0 + std::exp(-m.log_value()));
    default:
      throw std::invalid_argument("inverse_odds: wildcard entry cannot be embedded");
  }
}

/// Inverse of inverse_odds: u/(1-u), with the endpoints mapping to 0 and inf.
inline Magnitude odds(double u) {
  if (!(u >= 0.0 && u <= 1.0))
    throw std::invalid_argument("odds: argument must lie in [0, 1]");
  if (u == 0.0) return Magnitude::zero();
  if (u == 1.0) return Magnitude::infinity();
  return Magnitude::from_log(std::log(u) - std::log1p(-u));
}

namespace detail {

// Shortest decimal that reproduces the stored log value to within this
// bound. Tighter than kLogTolerance so rendering never perturbs equality.
inline constexpr double kRenderLogTolerance = 1e-10;

// Log of a well-formed positive decimal, folding the exponent into the log
// domain when the linear value is not representable.
inline double log_of_decimal(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (std::isfinite(v) && v >= std::numeric_limits<double>::min()) return std::log(v);
  const size_t epos = text.find_first_of("eE");
  const double mantissa = std::strtod(text.substr(0, epos).c_str(), &end);
  const double exp10 = std::strtod(text.c_str() + epos + 1, &end);
  return std::log(mantissa) + exp10 * std::numbers::ln10;
}

// Fewest significant digits whose log lands within the render tolerance.
inline std::string pick_decimal(double log_value) {
  char buf[64];
  if (log_value > -708.0 && log_value < 709.0) {
    const double linear = std::exp(log_value);
    for (int prec = 1; prec <= 17; ++prec) {
      std::snprintf(buf, sizeof(buf), "%.*g", prec, linear);
      if (std::fabs(log_of_decimal(buf) - log_value) <= kRenderLogTolerance) break;
    }
    return buf;
  }
  // Out of double range: base-10 mantissa and exponent.
  const double log10_value = log_value / std::numbers::ln10;
  double exp10 = std::floor(log10_value);
  double mantissa = std::pow(10.0, log10_value - exp10);
  if (mantissa >= 10.0) {
    mantissa /= 10.0;
    exp10 += 1.0;
  }
  for (int prec = 1; prec <= 17; ++prec) {
    char mant[32];
    std::snprintf(mant, sizeof(mant), "%.*g", prec, mantissa);
    std::snprintf(buf, sizeof(buf), "%se%+lld", mant, static_cast<long long>(exp10));
    if (std::fabs(log_of_decimal(buf) - log_value) <= kRenderLogTolerance) break;
  }
  return buf;
}

// The canonical text must be a fixed point of parse -> render so that
// canonical documents are byte-stable. pick_decimal sits at a threshold, so
// iterate the reparse until the text reproduces itself.
inline std::string render_finite(double log_value) {
  std::string text = pick_decimal(log_value);
  for (int pass = 0; pass < 4; ++pass) {
    std::string next = pick_decimal(log_of_decimal(text));
    if (next == text) break;
    text = std::move(next);
  }
  return text;
}

}  // namespace detail

/// Canonical text form: "0", "inf", "*", or the shortest decimal that
/// reproduces the finite value. parse_magnitude inverts it exactly.
inline std::string render(const Magnitude& m) {
  switch (m.kind()) {
    case Magnitude::Kind::Zero: return "0";
    case Magnitude::Kind::Infinity: return "inf";
    case Magnitude::Kind::Wildcard: return "*";
    default: return detail::render_finite(m.log_value());
  }
}

/// Parses the textual form. Decimals beyond double range (e.g. "2e+900")
/// are folded straight into the log domain instead of overflowing.
inline Magnitude parse_magnitude(std::string_view text) {
  if (text == "inf") return Magnitude::infinity();
  if (text == "*") return Magnitude::wildcard();
  if (text.empty() || !(std::isdigit(static_cast<unsigned char>(text[0])) || text[0] == '.'))
    throw std::invalid_argument("parse_magnitude: not a non-negative decimal: '" +
                                std::string(text) + "'");

  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw std::invalid_argument("parse_magnitude: trailing characters in '" + s + "'");

  // Zero iff every mantissa digit is zero.
  bool any_nonzero_digit = false;
  for (const char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c >= '1' && c <= '9') any_nonzero_digit = true;
  }
  if (!any_nonzero_digit) return Magnitude::zero();

  if (std::isfinite(v) && v >= std::numeric_limits<double>::min())
    return Magnitude::from_log(std::log(v));

  // Over- or underflow (including the subnormal range, where strtod loses
  // precision): recover mantissa and exponent by hand.
  const size_t epos = s.find_first_of("eE");
  if (epos == std::string::npos)
    throw std::invalid_argument("parse_magnitude: value out of range: '" + s + "'");
  const std::string mant_text = s.substr(0, epos);
  const double mantissa = std::strtod(mant_text.c_str(), &end);
  const long long exp10 = std::strtoll(s.c_str() + epos + 1, &end, 10);
  if (mantissa <= 0.0 || !std::isfinite(mantissa) || std::llabs(exp10) > 100000000)
    throw std::invalid_argument("parse_magnitude: value out of range: '" + s + "'");
  return Magnitude::from_log(std::log(mantissa) + static_cast<double>(exp10) * std::numbers::ln10);
}

}  // namespace rpf
