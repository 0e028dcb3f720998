#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace borsuk {

// GMP keeps mpq_class canonical: lowest terms, positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Parses "num/den" or a bare integer (optional sign). Throws
/// PreconditionError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Exact Σ(p_i − q_i)². Throws PreconditionError on dimension mismatch.
Rational squared_distance(std::span<const Rational> p, std::span<const Rational> q);

Rational dot(std::span<const Rational> p, std::span<const Rational> q);

}  // namespace borsuk
