#ifndef NPSPREAD_RATIONAL_HPP
#define NPSPREAD_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace npspread {

// All scalar arithmetic in this library is exact. Integer and Rational are
// GMP-backed; Rational values are kept canonical (lowest terms, positive
// denominator), which GMP preserves under arithmetic as long as every entry
// point canonicalizes. Use the helpers below instead of raw string or
// numerator/denominator construction.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class user_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// num/den in canonical form; throws user_error on zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" with optional sign; throws user_error on bad input.
Rational parse_rational(std::string_view text);

/// "p" when the value is integral, "p/q" otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// Numerator of an integral rational; throws internal_error otherwise.
Integer to_integer(const Rational& value);

} // namespace npspread

#endif
