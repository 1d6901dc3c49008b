#pragma once

#include <cstdint>
#include <vector>

namespace qhorn {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

/// Arithmetic modulo a prime below 2^62; throws InputError for non-primes.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t prime = kDefaultPrime);

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
    auto s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exp) const noexcept;
  std::uint64_t inv(std::uint64_t a) const;  // a != 0

 private:
  std::uint64_t p_;
};

/// Dense row-major matrix over a prime field. Entries are kept in [0, p).
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(std::size_t rows, std::size_t cols, PrimeField field = PrimeField());

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint64_t value);
  void add_to(std::size_t r, std::size_t c, std::uint64_t value);
  void sub_from(std::size_t r, std::size_t c, std::uint64_t value);

  /// Gaussian elimination on a copy.
  std::size_t rank() const;
  /// Throws InputError when not square; the 0x0 determinant is 1.
  std::uint64_t determinant() const;
  /// Applies the matrix to a column vector.
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

}  // namespace qhorn
