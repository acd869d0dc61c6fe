#include "mrc/betti.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mrc {

void BettiTable::add(int i, int64_t j, int64_t mult) {
  if (mult == 0) return;
  auto key = std::make_pair(i, j);
  int64_t v = entries[key] + mult;
  if (v < 0) throw std::logic_error("BettiTable: negative multiplicity");
  if (v == 0)
    entries.erase(key);
  else
    entries[key] = v;
}

int64_t BettiTable::max_degree() const {
  int64_t m = 0;
  for (const auto& [key, mult] : entries) m = std::max(m, key.second);
  return m;
}

MrcShape mrc_shape(const FamilyParams& params) {
  const auto [d, e, t] = params;
  if (e <= d)
    throw std::invalid_argument("predict_mrc: e <= d; the conjecture for small socle degree is predict_generic");
  const auto num = numerator(family_hvector(params));
  MrcShape s;
  s.d = d;
  s.e = e;
  s.a1 = -num[e];
  s.b1 = std::max<int64_t>(num[e + 1], 0);
  s.a2 = std::max<int64_t>(-num[e + 1], 0);
  s.b2 = std::max<int64_t>(num[e + 2], 0);
  s.c1 = std::max<int64_t>(-num[e + 2], 0);
  s.c2 = -num[e + 3];
  if (s.a1 != surface_h(d, e) - t || s.c2 != t || -num[d] != 1)
    throw std::logic_error("mrc_shape: numerator inconsistent with family parameters");
  return s;
}

BettiTable predict_mrc(const FamilyParams& params) {
  MrcShape s = mrc_shape(params);
  BettiTable tbl;
  tbl.params = params;
  tbl.add(0, 0, 1);
  tbl.add(1, s.d, 1);
  tbl.add(1, s.e, s.a1);
  tbl.add(1, s.e + 1, s.a2);
  tbl.add(2, s.e + 1, s.b1);
  tbl.add(2, s.e + 2, s.b2);
  tbl.add(3, s.e + 2, s.c1);
  tbl.add(3, s.e + 3, s.c2);
  return tbl;
}

HVector generic_hvector(int64_t n) {
  if (n < 1) throw std::invalid_argument("generic_hvector: n >= 1 required");
  HVector h;
  int64_t left = n;
  for (int64_t x = 0; left > 0; ++x) {
    int64_t v = std::min(binom(x + 2, 2), left);
    h.push_back(v);
    left -= v;
  }
  return h;
}

BettiTable predict_generic(int64_t n) {
  BettiTable tbl;
  tbl.add(0, 0, 1);
  if (n == 2) {
    // Two points are cut out by two linear forms and a quadric (a complete
    // intersection): the Koszul syzygy of the linear forms survives, so the
    // table is not the pure sign-rule one.
    tbl.add(1, 1, 2);
    tbl.add(1, 2, 1);
    tbl.add(2, 2, 1);
    tbl.add(2, 3, 2);
    tbl.add(3, 4, 1);
    return tbl;
  }
  const HVector h = generic_hvector(n);
  const auto num = numerator(h);
  const int64_t e = static_cast<int64_t>(h.size()) - 1;
  int64_t a1 = -num[e];
  if (e == 0) a1 = -(num[0] - 1);  // beta_{0,0} sits at the same degree
  if (a1 < 0) throw std::logic_error("predict_generic: unexpected numerator sign");
  tbl.add(1, e, a1);
  tbl.add(1, e + 1, std::max<int64_t>(-num[e + 1], 0));
  tbl.add(2, e + 1, std::max<int64_t>(num[e + 1], 0));
  tbl.add(2, e + 2, std::max<int64_t>(num[e + 2], 0));
  tbl.add(3, e + 2, std::max<int64_t>(-num[e + 2], 0));
  tbl.add(3, e + 3, -num[e + 3]);
  return tbl;
}

HVector hilbert_from_table(const BettiTable& tbl) {
  int64_t jmax = 0;
  for (const auto& [key, mult] : tbl.entries) {
    if (key.first > 3 && mult != 0)
      throw std::invalid_argument("hilbert_from_table: projective dimension > 3");
    jmax = std::max(jmax, key.second);
  }
  std::vector<int64_t> num(jmax + 4, 0);
  for (const auto& [key, mult] : tbl.entries)
    num[key.second] += (key.first % 2 == 0 ? mult : -mult);

  auto prev = [](const HVector& h, int64_t j) -> int64_t {
    return (j >= 0 && j < static_cast<int64_t>(h.size())) ? h[j] : 0;
  };
  HVector h;
  for (int64_t j = 0; j < static_cast<int64_t>(num.size()); ++j) {
    int64_t v = num[j] + 3 * prev(h, j - 1) - 3 * prev(h, j - 2) + prev(h, j - 3);
    if (v < 0) throw std::invalid_argument("hilbert_from_table: not a point-scheme table");
    h.push_back(v);
  }
  for (int64_t j = static_cast<int64_t>(num.size()); j < static_cast<int64_t>(num.size()) + 3; ++j) {
    if (3 * prev(h, j - 1) - 3 * prev(h, j - 2) + prev(h, j - 3) != 0)
      throw std::invalid_argument("hilbert_from_table: not a point-scheme table");
    h.push_back(0);
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

ShapeCheck validate_mrc_shape(const BettiTable& tbl, int64_t d, int64_t e) {
  ShapeCheck out;
  out.ok = true;
  auto flag = [&](const std::string& v) {
    out.ok = false;
    out.violations.push_back(v);
  };
  const std::vector<std::pair<int, int64_t>> allowed = {
      {0, 0},     {1, d},     {1, e},     {1, e + 1},
      {2, e + 1}, {2, e + 2}, {3, e + 2}, {3, e + 3}};
  for (const auto& [key, mult] : tbl.entries) {
    if (mult == 0) continue;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      std::ostringstream os;
      os << "unexpected entry beta(" << key.first << "," << key.second << ") = " << mult;
      flag(os.str());
    }
  }
  if (tbl.get(0, 0) != 1) flag("beta(0,0) != 1");
  if (tbl.get(1, e + 1) != 0 && tbl.get(2, e + 1) != 0) flag("a2*b1 != 0");
  if (tbl.get(2, e + 2) != 0 && tbl.get(3, e + 2) != 0) flag("b2*c1 != 0");
  return out;
}

namespace {

std::string render_resolution(const BettiTable& tbl) {
  std::ostringstream os;
  os << "0";
  for (int i = 3; i >= 1; --i) {
    // summands with larger twist first, matching the usual display
    std::vector<std::pair<int64_t, int64_t>> summands;
    for (const auto& [key, mult] : tbl.entries)
      if (key.first == i) summands.push_back({key.second, mult});
    std::sort(summands.rbegin(), summands.rend());
    os << " → ";
    if (summands.empty()) {
      os << "0";
      continue;
    }
    bool first = true;
    for (const auto& [j, mult] : summands) {
      if (!first) os << " ⊕ ";
      first = false;
      os << "R(-" << j << ")";
      if (mult != 1) os << "^" << mult;
    }
  }
  os << " → I → 0";
  return os.str();
}

std::string render_table(const BettiTable& tbl) {
  int64_t max_row = 0;
  for (const auto& [key, mult] : tbl.entries)
    max_row = std::max(max_row, key.second - key.first);
  std::vector<std::vector<int64_t>> grid(max_row + 1, std::vector<int64_t>(4, 0));
  for (const auto& [key, mult] : tbl.entries)
    if (key.first <= 3) grid[key.second - key.first][key.first] += mult;

  std::vector<std::size_t> width(4, 1);
  for (const auto& row : grid)
    for (int i = 0; i < 4; ++i)
      width[i] = std::max(width[i], std::to_string(row[i]).size());

  std::ostringstream os;
  os << "    ";
  for (int i = 0; i < 4; ++i) {
    std::string hd = std::to_string(i);
    os << std::string(width[i] + 2 - hd.size(), ' ') << hd;
  }
  os << "\n";
  for (int64_t r = 0; r <= max_row; ++r) {
    std::string lbl = std::to_string(r) + ":";
    os << std::string(4 - std::min<std::size_t>(4, lbl.size()), ' ') << lbl;
    for (int i = 0; i < 4; ++i) {
      std::string cell = grid[r][i] == 0 ? "." : std::to_string(grid[r][i]);
      os << std::string(width[i] + 2 - cell.size(), ' ') << cell;
    }
    os << "\n";
  }
  return os.str();
}

std::string render_json(const BettiTable& tbl) {
  nlohmann::json betti = nlohmann::json::object();
  for (const auto& [key, mult] : tbl.entries)
    betti[std::to_string(key.first) + "," + std::to_string(key.second)] = mult;
  nlohmann::json j;
  j["betti"] = betti;
  if (tbl.params) {
    j["d"] = tbl.params->d;
    j["e"] = tbl.params->e;
    j["t"] = tbl.params->t;
  }
  return j.dump();
}

}  // namespace

std::string render(const BettiTable& tbl, RenderFormat format) {
  switch (format) {
    case RenderFormat::table:
      return render_table(tbl);
    case RenderFormat::resolution:
      return render_resolution(tbl);
    case RenderFormat::json:
      return render_json(tbl);
  }
  throw std::invalid_argument("render: unknown format");
}

std::string render(const BettiTable& tbl, const std::string& format) {
  if (format == "table" || format == "text" || format == "m2-style") return render_table(tbl);
  if (format == "resolution") return render_resolution(tbl);
  if (format == "json") return render_json(tbl);
  throw std::invalid_argument("render: unknown format '" + format + "'");
}

}  // namespace mrc
