#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace mrc {

/// Arithmetic in GF(p) for a machine-word prime p.  All element values are
/// canonical representatives in [0, p).
class PrimeField {
public:
  explicit PrimeField(uint64_t p);

  uint64_t p() const { return p_; }

  uint64_t reduce(int64_t a) const;
  uint64_t add(uint64_t a, uint64_t b) const { return a + b >= p_ ? a + b - p_ : a + b; }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;  // a != 0
  uint64_t pow(uint64_t a, uint64_t n) const;

private:
  uint64_t p_;
};

bool is_prime(uint64_t n);

/// Dense row-major matrix over GF(p).  Carries no field pointer; the field is
/// passed to the operations that need it.
struct PrimeFieldMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<uint64_t> entries;

  PrimeFieldMatrix() = default;
  PrimeFieldMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  uint64_t& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
  uint64_t at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Reduced row echelon form together with the pivot column indices.
struct Rref {
  PrimeFieldMatrix mat;
  std::vector<std::size_t> pivots;
};

Rref rref(PrimeFieldMatrix m, const PrimeField& f);

struct RankKernel {
  std::size_t rank = 0;
  // Column vectors of length cols, one per free column, in reduced echelon
  // form: vector k has a 1 at its free column and zeros at the other free
  // columns.
  std::vector<std::vector<uint64_t>> kernel_basis;
};

RankKernel rank_and_kernel(const PrimeFieldMatrix& m, const PrimeField& f);

std::size_t rank_of(const PrimeFieldMatrix& m, const PrimeField& f);

/// Distinct roots in GF(p) of c0 + c1 t + ... + c4 t^4, sorted ascending.
/// Scans all of GF(p) when p <= 2^16, otherwise takes gcd with t^p - t.
/// Throws std::invalid_argument on the identically zero polynomial.
std::vector<uint64_t> quartic_roots(const std::array<uint64_t, 5>& coeffs, const PrimeField& f);

}  // namespace mrc
