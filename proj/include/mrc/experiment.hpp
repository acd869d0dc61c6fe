#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mrc/betti.hpp"
#include "mrc/ff.hpp"
#include "mrc/hilbert.hpp"

namespace mrc {

using Rng = std::mt19937_64;

/// Exponent vector of a monomial in x0..x3.
using Monomial = std::array<int, 4>;

/// All degree-d monomials in x0..x3 in graded lexicographic order (within a
/// degree: exponent vectors in descending lexicographic order).  This is the
/// "grlex-x0x1x2x3" order used everywhere, including in point-set files.
std::vector<Monomial> monomials(int64_t degree);

/// Dense coefficient vector of a quartic form against monomials(4).
using QuarticForm = std::vector<uint64_t>;

uint64_t evaluate_form(const QuarticForm& form, const std::array<uint64_t, 4>& pt,
                       const PrimeField& f);

/// Unbiased uniform draw from [0, n).
uint64_t uniform_below(Rng& rng, uint64_t n);

/// A finite set of projective points in P^3 over GF(p), each normalized so
/// that its first nonzero coordinate is 1, optionally remembering the quartic
/// surface they were sampled on.
struct PointSet {
  PrimeField field;
  std::vector<std::array<uint64_t, 4>> points;
  std::optional<QuarticForm> surface;
};

/// Uniformly random nonzero quartic form.
QuarticForm sample_surface(const PrimeField& field, Rng& rng);

/// n distinct random points on {form = 0}, found by drawing three coordinates
/// and solving the remaining univariate quartic (cycling through which
/// coordinate is solved for when no root exists).  Throws "surface rejected"
/// when too many draws fail, which flags degenerate forms.
PointSet sample_points_on_surface(const QuarticForm& form, int64_t n, const PrimeField& field,
                                  Rng& rng);

/// Basis of [I_X]_j as rows against monomials(j): the reduced kernel of the
/// |X| x C(j+3,3) evaluation matrix.
PrimeFieldMatrix ideal_graded_piece(const PointSet& ps, int64_t j);

/// h-vector of X computed directly from evaluation ranks (trailing zeros
/// trimmed).
HVector observed_hvector(const PointSet& ps, int64_t window);

/// Actual graded Betti numbers beta_{i,j} of R/I_X for j <= window, computed
/// as Koszul homology: beta_{i,j} = nullity(d_i at degree j) - rank(d_{i+1}
/// at degree j) on Lambda^i V (x) (R/I)_{j-i}.  Throws "increase window" when
/// a nonzero entry touches the top degree, and rejects any nonzero beta_4
/// (points in P^3 have projective dimension 3).
BettiTable graded_betti(const PointSet& ps, int64_t window);

struct TrialReport {
  FamilyParams params;
  uint64_t p = 0;
  uint64_t seed = 0;
  int trial = 0;
  BettiTable predicted;
  BettiTable observed;
  HVector observed_h;
  bool hilbert_match = false;
  bool betti_match = false;
  bool resampled = false;
  std::string error;  // nonempty when sampling failed and the trial aborted
  double ms_sample = 0.0;
  double ms_betti = 0.0;
};

/// Independent random trials: per trial a fresh surface and a fresh set of
/// cardinality(params) points on it, compared against predict_mrc (or
/// predict_generic when e <= d).  Deterministic given master_seed; a failed
/// match triggers one automatic resample before being reported.
std::vector<TrialReport> run_trials(const FamilyParams& params, uint64_t p, int trials,
                                    uint64_t master_seed);

// --- json plumbing ---------------------------------------------------------

std::string point_set_to_json(const PointSet& ps);
PointSet point_set_from_json(const std::string& text);
std::string reports_to_json(const std::vector<TrialReport>& reports);

}  // namespace mrc
