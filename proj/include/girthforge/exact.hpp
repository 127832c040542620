#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace girthforge {

using BigInt = mpz_class;
using Rational = mpq_class;

/// A coordinate tuple of exact integers.
using IntTuple = std::vector<BigInt>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Exponent a/b, always stored reduced.
class ExponentSpec {
 public:
  ExponentSpec(std::uint64_t num, std::uint64_t den);

  std::uint64_t num() const { return num_; }
  std::uint64_t den() const { return den_; }

  /// This exponent times a nonnegative integer, reduced.
  ExponentSpec scaled(std::uint64_t factor) const;

  friend bool operator==(const ExponentSpec&, const ExponentSpec&) = default;

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// Largest t >= 0 with t^r <= x.
BigInt int_nth_root(const BigInt& x, unsigned long r);

/// floor(scale * n^(a/b)), exact.
BigInt floor_pow(const BigInt& n, const ExponentSpec& e, const BigInt& scale);

/// ceil(scale * n^(a/b)), exact.
BigInt ceil_pow(const BigInt& n, const ExponentSpec& e, const BigInt& scale);

/// Deterministic primality: Miller-Rabin with the first twelve prime
/// witnesses below 2^64, trial division above.
bool is_prime(const BigInt& x);

/// Smallest prime strictly greater than x.
BigInt next_prime(const BigInt& x);

/// Smallest prime q with lo < q < hi, if any.
std::optional<BigInt> prime_in_window(const BigInt& lo, const BigInt& hi);

/// Converts to a primitive integer vector: gcd of entries is 1 and the
/// first nonzero entry is positive. The zero vector is returned unchanged.
IntTuple primitive(IntTuple v);

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);  // always "num/den"

}  // namespace girthforge
