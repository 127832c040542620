#include "girthforge/exact.hpp"

#include <array>
#include <numeric>

namespace girthforge {

ExponentSpec::ExponentSpec(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw Error("exponent denominator must be positive");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

ExponentSpec ExponentSpec::scaled(std::uint64_t factor) const {
  return ExponentSpec(num_ * factor, den_);
}

BigInt int_nth_root(const BigInt& x, unsigned long r) {
  if (r == 0) throw Error("root index must be positive");
  if (sgn(x) < 0) throw Error("root of a negative number");
  BigInt t;
  mpz_root(t.get_mpz_t(), x.get_mpz_t(), r);
  return t;
}

namespace {

BigInt pow_ui(const BigInt& base, std::uint64_t e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// scale^b * n^a, the radicand whose b-th root is scale * n^(a/b).
BigInt radicand(const BigInt& n, const ExponentSpec& e, const BigInt& scale) {
  if (sgn(n) < 0 || sgn(scale) < 0) throw Error("floor_pow/ceil_pow need nonnegative inputs");
  return pow_ui(scale, e.den()) * pow_ui(n, e.num());
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool trial_division(const BigInt& n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  const BigInt limit = int_nth_root(n, 2);
  for (BigInt d = 3; d <= limit; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

BigInt floor_pow(const BigInt& n, const ExponentSpec& e, const BigInt& scale) {
  return int_nth_root(radicand(n, e, scale), e.den());
}

BigInt ceil_pow(const BigInt& n, const ExponentSpec& e, const BigInt& scale) {
  const BigInt x = radicand(n, e, scale);
  BigInt t = int_nth_root(x, e.den());
  if (pow_ui(t, e.den()) != x) ++t;
  return t;
}

bool is_prime(const BigInt& x) {
  if (x < 2) return false;
  if (mpz_fits_ulong_p(x.get_mpz_t()) && sizeof(unsigned long) == 8) {
    return miller_rabin_u64(x.get_ui());
  }
  return trial_division(x);
}

BigInt next_prime(const BigInt& x) {
  BigInt c = x < 1 ? BigInt(1) : x;
  do {
    ++c;
  } while (!is_prime(c));
  return c;
}

std::optional<BigInt> prime_in_window(const BigInt& lo, const BigInt& hi) {
  if (!(lo < hi)) throw Error("prime_in_window requires lo < hi");
  BigInt c = lo < 1 ? BigInt(1) : lo;
  for (++c; c < hi; ++c) {
    if (is_prime(c)) return c;
  }
  return std::nullopt;
}

IntTuple primitive(IntTuple v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  for (const auto& x : v) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  for (auto& x : v) x /= g;
  return v;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace girthforge
