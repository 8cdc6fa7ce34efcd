#ifndef RIGIDITY_RATIONAL_HPP
#define RIGIDITY_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace rigidity {

// All scalar arithmetic is exact. GMP keeps rationals canonical (lowest
// terms, positive denominator) as long as raw p/q constructions are
// canonicalized, which parse_rat and make_rat do.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

Rat make_rat(long num, long den = 1);
Rat make_rat(const Int& num, const Int& den);

// "p/q" or "p"; rejects q = 0 and garbage
std::optional<Rat> parse_rat(const std::string& text);

// inverse of parse_rat: "p/q", or "p" when q = 1
std::string rat_str(const Rat& value);

// approximate rendering for human-facing output only, never for verdicts
std::string rat_decimal(const Rat& value, int digits = 6);

std::string vec_str(const Vec& values);

inline int sign(const Rat& value) { return sgn(value); }

}  // namespace rigidity

#endif
