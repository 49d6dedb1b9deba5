#include "itermag/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace itermag {

Rational const& Extended::value() const {
  if (inf_) {
    throw std::logic_error("Extended::value() on infinity");
  }
  return value_;
}

std::string Extended::to_string() const { return inf_ ? "inf" : rational_to_string(value_); }

std::string rational_to_string(Rational const& q) { return q.get_str(); }

namespace {
bool all_digits(std::string const& s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}
}  // namespace

Rational parse_rational(std::string const& text) {
  std::string s    = text;
  bool        neg  = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s   = s.substr(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) {
      throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    out = Rational(mpz_class(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string ip = s.substr(0, dot);
    std::string fp = s.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip))
        || (!fp.empty() && !all_digits(fp))) {
      throw std::invalid_argument("malformed decimal: '" + text + "'");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
    mpz_class num(ip.empty() ? std::string("0") : ip);
    num = num * scale + (fp.empty() ? mpz_class(0) : mpz_class(fp));
    out = Rational(num, scale);
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed number: '" + text + "'");
    }
    out = Rational(mpz_class(s));
  }
  out.canonicalize();
  return neg ? Rational(-out) : out;
}

Extended parse_extended(std::string const& text) {
  if (text == "inf" || text == "infinity" || text == "∞") {
    return Extended::infinity();
  }
  return Extended(parse_rational(text));
}

}  // namespace itermag
