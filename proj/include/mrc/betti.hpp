#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mrc/hilbert.hpp"

namespace mrc {

/// Graded Betti numbers of R/I for a point scheme in P^3: beta_{i,j} indexed
/// by homological index i (0..3) and internal degree j (the twist of the free
/// summand R(-j)).  Only nonzero multiplicities are stored.
struct BettiTable {
  std::map<std::pair<int, int64_t>, int64_t> entries;
  std::optional<FamilyParams> params;  // set by the predictors, used by render

  int64_t get(int i, int64_t j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int64_t j, int64_t mult);
  int64_t max_degree() const;

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries == b.entries;
  }
};

/// The six multiplicities of the conjectured resolution shape, with
/// a1 = h_S(e) - t and c2 = t; a2*b1 = 0 and b2*c1 = 0.
struct MrcShape {
  int64_t d = 0, e = 0;
  int64_t a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
};

/// Conjectured minimal free resolution of X_{e,t} for e >= d+1.  The
/// multiplicities at degrees e+1 and e+2 come from the sign of the
/// Hilbert-series numerator, which forces the two orthogonality conditions.
BettiTable predict_mrc(const FamilyParams& params);
MrcShape mrc_shape(const FamilyParams& params);

/// Betti table of n general points in P^3 (the two-row shape).
BettiTable predict_generic(int64_t n);

/// Generic h-vector of n points in P^3 (truncated binomial growth).
HVector generic_hvector(int64_t n);

/// Inverse consistency check: recover the h-vector whose numerator matches
/// the alternating column sums of the table.  Throws if no nonnegative
/// finite h-vector is consistent ("not a point-scheme table").
HVector hilbert_from_table(const BettiTable& tbl);

struct ShapeCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

/// True iff nonzero entries occur only at the slots of the conjectured shape
/// for (d, e) and both orthogonality products vanish.
ShapeCheck validate_mrc_shape(const BettiTable& tbl, int64_t d, int64_t e);

enum class RenderFormat { table, resolution, json };

std::string render(const BettiTable& tbl, RenderFormat format);
std::string render(const BettiTable& tbl, const std::string& format);

}  // namespace mrc
