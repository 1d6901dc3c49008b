#include "qhorn/prime_field.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <random>

#include "qhorn/errors.hpp"

namespace qhorn {

PrimeField::PrimeField(std::uint64_t prime) : p_(prime) {
  if (prime < 2 || prime >= (std::uint64_t{1} << 62))
    throw InputError("prime must lie in [2, 2^62)");
  std::mt19937_64 gen(prime);
  if (!boost::multiprecision::miller_rabin_test(boost::multiprecision::cpp_int(prime), 32, gen))
    throw InputError(std::to_string(prime) + " is not prime");
}

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exp) const noexcept {
  std::uint64_t result = 1 % p_;
  base %= p_;
  while (exp) {
    if (exp & 1) result = mul(result, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

PrimeFieldMatrix::PrimeFieldMatrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

void PrimeFieldMatrix::set(std::size_t r, std::size_t c, std::uint64_t value) {
  data_.at(r * cols_ + c) = value % field_.prime();
}

void PrimeFieldMatrix::add_to(std::size_t r, std::size_t c, std::uint64_t value) {
  auto& cell = data_.at(r * cols_ + c);
  cell = field_.add(cell, value % field_.prime());
}

void PrimeFieldMatrix::sub_from(std::size_t r, std::size_t c, std::uint64_t value) {
  auto& cell = data_.at(r * cols_ + c);
  cell = field_.sub(cell, value % field_.prime());
}

namespace {

// Row-reduces `m` in place; returns the rank and accumulates the determinant sign/pivots.
std::size_t eliminate(std::vector<std::uint64_t>& m, std::size_t rows, std::size_t cols,
                      const PrimeField& f, std::uint64_t* det) {
  std::size_t rank = 0;
  if (det) *det = 1 % f.prime();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) {
      if (det) *det = 0;
      continue;
    }
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m[pivot * cols + k], m[rank * cols + k]);
      if (det) *det = f.neg(*det);
    }
    const auto p = m[rank * cols + c];
    if (det) *det = f.mul(*det, p);
    const auto p_inv = f.inv(p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const auto factor = f.mul(m[r * cols + c], p_inv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        m[r * cols + k] = f.sub(m[r * cols + k], f.mul(factor, m[rank * cols + k]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t PrimeFieldMatrix::rank() const {
  auto copy = data_;
  return eliminate(copy, rows_, cols_, field_, nullptr);
}

std::uint64_t PrimeFieldMatrix::determinant() const {
  if (rows_ != cols_)
    throw InputError("determinant of a non-square " + std::to_string(rows_) + "x" +
                     std::to_string(cols_) + " matrix");
  auto copy = data_;
  std::uint64_t det = 1 % field_.prime();
  auto rank = eliminate(copy, rows_, cols_, field_, &det);
  return rank == rows_ ? det : 0;
}

std::vector<std::uint64_t> PrimeFieldMatrix::apply(const std::vector<std::uint64_t>& x) const {
  if (x.size() != cols_) throw InputError("vector length does not match matrix columns");
  std::vector<std::uint64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) y[r] = field_.add(y[r], field_.mul(at(r, c), x[c]));
  return y;
}

}  // namespace qhorn
