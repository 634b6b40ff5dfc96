#pragma once
// Exact coefficient fields: the rationals (GMP-backed) and prime fields
// GF(p) for 64-bit p.  Every algorithm in the library is templated on a
// field object F providing:
//
//   using Elem = ...;                value type
//   kind(), characteristic()        field identification
//   zero(), one(), from_long(n)     constants
//   add/sub/mul/neg, div/inv        arithmetic (div/inv throw on zero)
//   is_zero(a), eq(a,b)             tests
//   str(a), parse(s)                decimal (or "a/b") round-trip
//
// Field objects are tiny value types; pass them by const reference.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bd {

enum class FieldKind { rationals, prime };

// ----------------------------------------------------------------- primes --

namespace detail {
inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}
inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}
}  // namespace detail

// Deterministic Miller-Rabin; the witness set below is exact for all 64-bit n.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

// Smallest prime >= lo after a uniformly random offset; used to draw
// specialization primes >= 2^31 for genericity trials.
inline std::uint64_t random_prime_at_least(std::uint64_t lo, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(lo, lo + (lo >> 1));
  std::uint64_t n = dist(rng) | 1;
  while (!is_prime_u64(n)) n += 2;
  return n;
}

// -------------------------------------------------------------- rationals --

struct RatField {
  using Elem = mpq_class;

  FieldKind kind() const { return FieldKind::rationals; }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_long(long n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem div(const Elem& a, const Elem& b) const {
    if (b == 0) throw std::domain_error("division by zero in Q");
    return a / b;
  }
  Elem inv(const Elem& a) const { return div(one(), a); }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  std::string str(const Elem& a) const { return a.get_str(); }

  std::optional<Elem> parse(std::string_view s) const {
    if (s.empty()) return std::nullopt;
    // mpq accepts "a/b"; validate charset first since set_str is permissive
    // about whitespace.
    for (char c : s) {
      if (!(c == '-' || c == '/' || (c >= '0' && c <= '9'))) return std::nullopt;
    }
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return q;
  }
};

// ------------------------------------------------------------ prime field --

struct FpField {
  using Elem = std::uint64_t;

  std::uint64_t p = 2;

  FpField() = default;
  explicit FpField(std::uint64_t p_) : p(p_) {
    if (!is_prime_u64(p)) throw std::invalid_argument("GF(p): p is not prime");
  }

  FieldKind kind() const { return FieldKind::prime; }
  std::uint64_t characteristic() const { return p; }
  std::string name() const { return "GF(" + std::to_string(p) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_long(long n) const {
    long r = n % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;             // p < 2^63 in practice; guard anyway
    if (s >= p || s < a) s -= p;
    return s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p - b); }
  Elem mul(Elem a, Elem b) const { return detail::mulmod_u64(a, b, p); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    // extended Euclid on (a, p); p prime
    std::int64_t t = 0, nt = 1;
    std::uint64_t r = p, nr = a;
    while (nr != 0) {
      std::uint64_t q = r / nr;
      std::int64_t tmp = t - static_cast<std::int64_t>(q) * nt;
      t = nt; nt = tmp;
      std::uint64_t rmp = r - q * nr;
      r = nr; nr = rmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  std::string str(Elem a) const { return std::to_string(a); }

  std::optional<Elem> parse(std::string_view s) const {
    if (s.empty()) return std::nullopt;
    bool negate = false;
    if (s[0] == '-') { negate = true; s.remove_prefix(1); }
    auto part = [&](std::string_view t) -> std::optional<Elem> {
      if (t.empty()) return std::nullopt;
      Elem v = 0;
      for (char c : t) {
        if (c < '0' || c > '9') return std::nullopt;
        v = add(mul(v, 10 % p), from_long(c - '0'));
      }
      return v;
    };
    auto slash = s.find('/');
    std::optional<Elem> num, den;
    if (slash == std::string_view::npos) {
      num = part(s);
      den = one();
    } else {
      num = part(s.substr(0, slash));
      den = part(s.substr(slash + 1));
    }
    if (!num || !den || is_zero(*den)) return std::nullopt;
    Elem v = div(*num, *den);
    return negate ? neg(v) : v;
  }

  // Uniform sample in [0, p).
  Elem sample(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    return dist(rng);
  }
};

}  // namespace bd
