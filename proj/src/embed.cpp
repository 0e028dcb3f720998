#include "borsuk/embed.hpp"

#include <bit>
#include <set>
#include <string>

#include "borsuk/errors.hpp"
#include "borsuk/rng.hpp"

namespace borsuk {

namespace {

constexpr std::uint64_t kMaxTensorEntries = std::uint64_t{1} << 24;

std::uint64_t checked_power(int n, int k) {
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) {
    p *= static_cast<std::uint64_t>(n);
    if (p > kMaxTensorEntries)
      throw InstanceTooLarge("tensor power with " + std::to_string(n) + "^" + std::to_string(k) +
                             " coordinates is too large");
  }
  return p;
}

std::int64_t ipow(std::int64_t b, int k) {
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= b;
  return r;
}

RationalVector to_rationals(const TensorPoint& t) {
  RationalVector v;
  v.reserve(t.coords.size());
  for (auto c : t.coords) v.emplace_back(static_cast<long>(c));
  return v;
}

EmbeddedSet embed(const std::vector<SignVector>& vectors, int n, int k, std::string label) {
  const std::uint64_t dim = checked_power(n, k);
  if (dim * vectors.size() > kMaxTensorEntries * 4)
    throw InstanceTooLarge("embedded set " + label + " is too large");
  EmbeddedSet out;
  out.n = n;
  out.k = k;
  out.reduced_dimension = static_cast<std::size_t>(n) * (n + 1) / 2;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  std::vector<RationalVector> pts;
  for (const auto& x : vectors) {
    // For even k, x and −x have the same image; the smaller mask stands for
    // both, and it is the one with the last entry +1.
    if (k % 2 == 0 && (x.bits & top)) continue;
    out.representatives.push_back(x);
    pts.push_back(to_rationals(tensor_power(x, k)));
  }
  out.points = PointSet(dim, std::move(pts), std::move(label));
  return out;
}

}  // namespace

TensorPoint tensor_power(const SignVector& x, int k) {
  if (k < 1) throw PreconditionError("tensor_power: k must be >= 1");
  if (x.n < 1) throw PreconditionError("tensor_power: empty sign vector");
  const std::uint64_t size = checked_power(x.n, k);
  TensorPoint t;
  t.n = x.n;
  t.k = k;
  t.coords.resize(size);
  for (std::uint64_t idx = 0; idx < size; ++idx) {
    int negatives = 0;
    for (std::uint64_t rest = idx, j = 0; j < static_cast<std::uint64_t>(k); ++j) {
      negatives += x.entry(static_cast<int>(rest % x.n)) < 0;
      rest /= x.n;
    }
    t.coords[idx] = (negatives % 2) ? -1 : 1;
  }
  return t;
}

std::int64_t embedded_squared_distance(const SignVector& x, const SignVector& y, int k) {
  if (k < 1) throw PreconditionError("embedded_squared_distance: k must be >= 1");
  return 2 * ipow(x.n, k) - 2 * ipow(inner_product(x, y), k);
}

std::int64_t tensor_squared_distance(const TensorPoint& a, const TensorPoint& b) {
  if (a.coords.size() != b.coords.size())
    throw PreconditionError("tensor_squared_distance: dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const std::int64_t d = a.coords[i] - b.coords[i];
    s += d * d;
  }
  return s;
}

EmbeddedSet c1_set(int n) {
  return embed(balanced_sign_vectors(n), n, 2, "C1(n=" + std::to_string(n) + ")");
}

EmbeddedSet c2_set(int n) {
  if (n < 2 || n > 14) throw PreconditionError("c2_set: n must be in 2..14");
  return embed(all_sign_vectors(n), n, 2, "C2(n=" + std::to_string(n) + ")");
}

EmbeddedSet tensor_set(int n, int k) {
  if (n < 1 || n > 20) throw PreconditionError("tensor_set: n must be in 1..20");
  if (k < 1) throw PreconditionError("tensor_set: k must be >= 1");
  if (n == 1 && k % 2 == 0)
    throw PreconditionError("tensor_set: n=1 with even k collapses to a single point");
  return embed(all_sign_vectors(n), n, k,
               "tensor(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")");
}

Graph merged_orthogonality_graph(const std::vector<SignVector>& representatives) {
  return orthogonality_graph(representatives);
}

PointSet c3_sample(int n, std::size_t count, std::uint64_t seed) {
  if (n < 2 || n > 16) throw PreconditionError("c3_sample: n must be in 2..16");
  if (count < 1) throw PreconditionError("c3_sample: count must be positive");
  Rng rng(seed);
  std::set<std::vector<std::string>> seen;
  std::vector<RationalVector> pts;
  std::size_t attempts = 0;
  while (pts.size() < count) {
    if (++attempts > 100 * count + 1000)
      throw InstanceTooLarge("c3_sample: could not draw enough distinct points");
    // Inverse stereographic projection of a random rational point of Q^{n-1}
    // lands exactly on the unit sphere.
    RationalVector t(n - 1);
    Rational s = 0;
    for (auto& c : t) {
      c = Rational(rng.uniform_int(-8, 8), rng.uniform_int(1, 8));
      c.canonicalize();
      s += c * c;
    }
    RationalVector u(n);
    for (int i = 0; i + 1 < n; ++i) u[i] = 2 * t[i] / (1 + s);
    u[n - 1] = (s - 1) / (1 + s);
    RationalVector sq;
    sq.reserve(static_cast<std::size_t>(n) * n);
    std::vector<std::string> key;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        sq.push_back(u[i] * u[j]);
        key.push_back(sq.back().get_str());
      }
    if (!seen.insert(key).second) continue;
    pts.push_back(std::move(sq));
  }
  return PointSet(static_cast<std::size_t>(n) * n, std::move(pts),
                  "C3 sample (n=" + std::to_string(n) + ", approximate model)");
}

}  // namespace borsuk
