#include "borsuk/rational.hpp"

#include <cctype>

#include "borsuk/errors.hpp"

namespace borsuk {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num) || (slash != std::string_view::npos && !valid_integer(den)))
    throw PreconditionError("malformed rational '" + std::string(text) + "'");
  Rational q;
  q.get_num() = to_integer(num);
  q.get_den() = slash == std::string_view::npos ? Integer(1) : to_integer(den);
  if (q.get_den() == 0) throw PreconditionError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational squared_distance(std::span<const Rational> p, std::span<const Rational> q) {
  if (p.size() != q.size())
    throw PreconditionError("squared_distance: dimension mismatch (" + std::to_string(p.size()) +
                            " vs " + std::to_string(q.size()) + ")");
  Rational sum = 0;
  Rational diff;
  for (std::size_t i = 0; i < p.size(); ++i) {
    diff = p[i] - q[i];
    sum += diff * diff;
  }
  return sum;
}

Rational dot(std::span<const Rational> p, std::span<const Rational> q) {
  if (p.size() != q.size()) throw PreconditionError("dot: dimension mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p[i] * q[i];
  return sum;
}

}  // namespace borsuk
