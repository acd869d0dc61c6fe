#pragma once

#include <cstdint>
#include <vector>

namespace mrc {

/// First difference of a Hilbert function, indexed from degree 0 with trailing
/// zeros trimmed.  An empty vector stands for the zero scheme (only produced
/// as a degenerate linkage residual).
using HVector = std::vector<int64_t>;

/// Parameters of the point family X_{e,t} on a surface of degree d: socle
/// degree e and surplus t (the last h-vector entry).
struct FamilyParams {
  int64_t d = 4;
  int64_t e = 0;
  int64_t t = 0;
};

/// The at-most-four surpluses per socle degree that decide the conjecture for
/// every surplus.
struct CriticalValues {
  int64_t m1 = 0, m2 = 0, m3 = 0, m4 = 0;
};

int64_t binom(int64_t n, int64_t k);  // 0 for n < k or k < 0

/// Hilbert function of a degree-d surface in P^3.
int64_t surface_hilbert(int64_t d, int64_t x);

/// First difference of surface_hilbert.  Equals dx - C(d-1,2) + 1 for x >= d-1.
int64_t surface_h(int64_t d, int64_t x);

/// h-vector (1, 3, 6, ..., h_S(e-1), t) of the family X_{e,t}.
HVector family_hvector(const FamilyParams& params);

/// |X_{e,t}| = H_S(e-1) + t.
int64_t cardinality(const FamilyParams& params);

/// Symmetric h-vector of a relatively compressed arithmetically Gorenstein
/// point set of the given socle degree.
HVector gorenstein_hvector(int64_t d, int64_t socle);

CriticalValues critical_values(int64_t d, int64_t e);

/// Hilbert-series numerator: convolution of h with (1, -3, 3, -1).
/// Output length is len(h) + 3.
std::vector<int64_t> numerator(const HVector& h);

int64_t hvector_sum(const HVector& h);

}  // namespace mrc
