#include "mrc/hilbert.hpp"

#include <numeric>
#include <stdexcept>

namespace mrc {

int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int64_t surface_hilbert(int64_t d, int64_t x) {
  if (d < 1) throw std::invalid_argument("surface_hilbert: d >= 1 required");
  if (x < 0) return 0;
  return binom(x + 3, 3) - binom(x - d + 3, 3);
}

int64_t surface_h(int64_t d, int64_t x) {
  if (x < 0) return 0;
  return surface_hilbert(d, x) - surface_hilbert(d, x - 1);
}

HVector family_hvector(const FamilyParams& params) {
  const auto [d, e, t] = params;
  if (d < 1 || e < 0) throw std::invalid_argument("family_hvector: bad parameters");
  if (t < 1 || t > surface_h(d, e))
    throw std::invalid_argument("family_hvector: surplus t out of range [1, h_S(e)]");
  HVector h(e + 1);
  for (int64_t x = 0; x < e; ++x) h[x] = std::min(binom(x + 2, 2), surface_h(d, x));
  h[e] = t;
  return h;
}

int64_t cardinality(const FamilyParams& params) { return hvector_sum(family_hvector(params)); }

HVector gorenstein_hvector(int64_t d, int64_t socle) {
  if (socle < 0) throw std::invalid_argument("gorenstein_hvector: socle >= 0 required");
  HVector h(socle + 1);
  for (int64_t x = 0; x <= socle / 2; ++x) {
    h[x] = std::min(binom(x + 2, 2), surface_h(d, x));
    h[socle - x] = h[x];
  }
  return h;
}

namespace {

int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int64_t ceil_div(int64_t a, int64_t b) { return -floor_div(-a, b); }

}  // namespace

CriticalValues critical_values(int64_t d, int64_t e) {
  if (e < 1) throw std::invalid_argument("critical_values: e >= 1 required");
  const int64_t he1 = surface_h(d, e - 1);
  const int64_t he = surface_h(d, e);
  const int64_t hp1 = surface_h(d, e + 1);
  CriticalValues cv;
  cv.m1 = floor_div(he1, 3);                 // max t with 3t <= h_S(e-1)
  cv.m2 = ceil_div(he1, 3);                  // min t with 3t >= h_S(e-1)
  // Boundary convention of the published small-e table: at e = 2 the tie
  // 3t = h_S(1) is not counted for m2, giving m2(2) = 2.
  if (e == 2 && cv.m2 < 2) cv.m2 = 2;
  cv.m3 = he - ceil_div(hp1, 3);             // max t with 3(h_S(e)-t) >= h_S(e+1)
  cv.m4 = he - floor_div(hp1, 3);            // min t with 3(h_S(e)-t) <= h_S(e+1)
  return cv;
}

std::vector<int64_t> numerator(const HVector& h) {
  if (h.empty()) return {};
  static const int64_t koszul[4] = {1, -3, 3, -1};
  std::vector<int64_t> n(h.size() + 3, 0);
  for (std::size_t k = 0; k < h.size(); ++k)
    for (int j = 0; j < 4; ++j) n[k + j] += h[k] * koszul[j];
  return n;
}

int64_t hvector_sum(const HVector& h) { return std::accumulate(h.begin(), h.end(), int64_t{0}); }

}  // namespace mrc
