#include "mrc/ff.hpp"

#include <algorithm>
#include <stdexcept>

namespace mrc {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod_u64(uint64_t a, uint64_t n, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (n) {
    if (n & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    n >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t p) : p_(p) {
  if (!is_prime(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

uint64_t PrimeField::reduce(int64_t a) const {
  int64_t r = a % static_cast<int64_t>(p_);
  if (r < 0) r += static_cast<int64_t>(p_);
  return static_cast<uint64_t>(r);
}

uint64_t PrimeField::mul(uint64_t a, uint64_t b) const {
  if (p_ <= (1ull << 32)) return a * b % p_;
  return mulmod_u64(a, b, p_);
}

uint64_t PrimeField::pow(uint64_t a, uint64_t n) const { return powmod_u64(a % p_, n, p_); }

uint64_t PrimeField::inv(uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a, p_ - 2);
}

Rref rref(PrimeFieldMatrix m, const PrimeField& f) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    uint64_t inv = f.inv(m.at(r, c));
    for (std::size_t j = c; j < cols; ++j) m.at(r, j) = f.mul(m.at(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      uint64_t factor = m.at(i, c);
      for (std::size_t j = c; j < cols; ++j)
        m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

RankKernel rank_and_kernel(const PrimeFieldMatrix& m, const PrimeField& f) {
  Rref e = rref(m, f);
  RankKernel out;
  out.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<uint64_t> v(m.cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      v[e.pivots[r]] = f.neg(e.mat.at(r, c));
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank_of(const PrimeFieldMatrix& m, const PrimeField& f) {
  return rref(m, f).pivots.size();
}

namespace {

// Small dense polynomials over GF(p), ascending coefficients, no leading zeros.
using Poly = std::vector<uint64_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const PrimeField& f) {
  // m is monic
  while (a.size() >= m.size()) {
    uint64_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    if (lead != 0) {
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
    }
    a.pop_back();
  }
  trim(a);
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const PrimeField& f) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return poly_mod(std::move(c), m, f);
}

Poly poly_powmod(Poly base, uint64_t n, const Poly& m, const PrimeField& f) {
  Poly r = poly_mod({1}, m, f);
  base = poly_mod(std::move(base), m, f);
  while (n) {
    if (n & 1) r = poly_mulmod(r, base, m, f);
    base = poly_mulmod(base, base, m, f);
    n >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    uint64_t inv = f.inv(b.back());
    Poly bm = b;
    for (auto& c : bm) c = f.mul(c, inv);
    a = poly_mod(std::move(a), bm, f);
    std::swap(a, b);
  }
  if (!a.empty()) {
    uint64_t inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

uint64_t poly_eval(const Poly& a, uint64_t t, const PrimeField& f) {
  uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = f.add(f.mul(v, t), a[i]);
  return v;
}

// Splits a monic squarefree product of distinct linear factors into roots.
void split_roots(const Poly& g, const PrimeField& f, uint64_t& state, std::vector<uint64_t>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    // t + c -> root -c
    out.push_back(f.neg(g[0]));
    return;
  }
  // random shift a; gcd with (t+a)^((p-1)/2) - 1 splits the roots
  for (;;) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    uint64_t a = (state >> 16) % f.p();
    Poly h = poly_powmod({a, 1}, (f.p() - 1) / 2, g, f);
    if (h.empty())
      h = {f.p() - 1};
    else
      h[0] = f.sub(h[0], 1);
    Poly d = poly_gcd(h, g, f);
    if (d.size() > 1 && d.size() < g.size()) {
      // divide g by d
      Poly q;
      Poly rem = g;
      std::size_t qdeg = g.size() - d.size();
      q.assign(qdeg + 1, 0);
      for (std::size_t k = qdeg + 1; k-- > 0;) {
        uint64_t c = rem.size() > d.size() - 1 + k ? rem[d.size() - 1 + k] : 0;
        q[k] = c;
        if (c != 0) {
          for (std::size_t i = 0; i < d.size(); ++i)
            rem[k + i] = f.sub(rem[k + i], f.mul(c, d[i]));
        }
      }
      trim(q);
      split_roots(d, f, state, out);
      split_roots(q, f, state, out);
      return;
    }
  }
}

}  // namespace

std::vector<uint64_t> quartic_roots(const std::array<uint64_t, 5>& coeffs, const PrimeField& f) {
  Poly poly(coeffs.begin(), coeffs.end());
  for (auto& c : poly) c %= f.p();
  trim(poly);
  if (poly.empty()) throw std::invalid_argument("quartic_roots: identically zero");

  std::vector<uint64_t> roots;
  if (f.p() <= (1ull << 16)) {
    for (uint64_t t = 0; t < f.p(); ++t)
      if (poly_eval(poly, t, f) == 0) roots.push_back(t);
    return roots;
  }

  // gcd(f, t^p - t) isolates the distinct roots in GF(p)
  uint64_t lead_inv = f.inv(poly.back());
  Poly monic = poly;
  for (auto& c : monic) c = f.mul(c, lead_inv);
  Poly tp = poly_powmod({0, 1}, f.p(), monic, f);  // t^p mod f
  if (tp.size() < 2) tp.resize(2, 0);
  tp[1] = f.sub(tp[1], 1);  // t^p - t
  Poly g = poly_gcd(tp, monic, f);
  uint64_t state = 0x9e3779b97f4a7c15ull ^ f.p();
  split_roots(g, f, state, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace mrc
