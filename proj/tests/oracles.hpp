#pragma once

// Brute-force oracles, deliberately independent of the library's search and
// cover implementations: plain subset sweeps over word-sized universes.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "softtop/signature.hpp"

namespace oracles {

/// Minimum subfamily size covering `target`, by trying all 2^n subfamilies.
inline std::size_t brute_min_cover_size(const std::vector<std::uint64_t>& sets,
                                        std::uint64_t target) {
  std::size_t best = SIZE_MAX;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << sets.size()); ++s) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if (s >> i & 1) u |= sets[i];
    if ((u & target) == target)
      best = std::min(best, static_cast<std::size_t>(std::popcount(s)));
  }
  return best;
}

/// The three soft topology axioms on a family of ground masks.
inline bool axioms_hold(const std::vector<std::uint64_t>& family, std::uint64_t full) {
  auto has = [&](std::uint64_t m) {
    return std::find(family.begin(), family.end(), m) != family.end();
  };
  if (!has(0) || !has(full)) return false;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!has(family[i] | family[j]) || !has(family[i] & family[j])) return false;
  return true;
}

/// Every family over every ground soft set that satisfies the axioms.
/// Only feasible for cells <= 4 (2^(2^cells) candidate families).
inline std::vector<std::vector<std::uint64_t>> brute_topologies(std::size_t cells) {
  std::size_t ground = std::size_t{1} << cells;
  std::uint64_t full = ground - 1;
  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << ground); ++fam) {
    std::vector<std::uint64_t> members;
    for (std::size_t g = 0; g < ground; ++g)
      if (fam >> g & 1) members.push_back(g);
    if (axioms_hold(members, full)) out.push_back(std::move(members));
  }
  return out;
}

/// Subset-union representability: some subfamily of `basis` unions to m.
inline bool brute_representable(const std::vector<std::uint64_t>& basis, std::uint64_t m) {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << basis.size()); ++s) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (s >> i & 1) u |= basis[i];
    if (u == m) return true;
  }
  return false;
}

/// Independent re-statement of the separation deciders, straight off the
/// definitions, on raw member masks. `nx`/`ne` describe the signature and
/// `members` the open family; everything is quantifier loops, no shared
/// code with the library's deciders.
struct RawSpace {
  std::size_t nx, ne;
  std::vector<std::uint64_t> members;

  std::uint64_t full() const {
    return (std::uint64_t{1} << (nx * ne)) - 1;
  }
  std::uint64_t column(std::size_t x) const {
    std::uint64_t c = 0;
    for (std::size_t e = 0; e < ne; ++e) c |= std::uint64_t{1} << (e * nx + x);
    return c;
  }
  bool member_point(std::uint64_t set, std::size_t x) const {
    return (set & column(x)) == column(x);
  }
  bool disjoint_point(std::uint64_t set, std::size_t x) const {
    return (set & column(x)) == 0;
  }
  std::vector<std::uint64_t> closed() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t m : members) out.push_back(m ^ full());
    return out;
  }

  bool t0() const {
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = x + 1; y < nx; ++y) {
        bool ok = false;
        for (std::uint64_t m : members)
          if ((member_point(m, x) && !member_point(m, y)) ||
              (member_point(m, y) && !member_point(m, x))) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
    return true;
  }
  bool t1() const {
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < nx; ++y) {
        if (x == y) continue;
        bool ok = false;
        for (std::uint64_t m : members)
          if (member_point(m, x) && !member_point(m, y)) {
            ok = true;
            break;
          }
        if (!ok) return false;
      }
    return true;
  }
  bool t2() const {
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = x + 1; y < nx; ++y) {
        bool ok = false;
        for (std::uint64_t m1 : members) {
          if (!member_point(m1, x)) continue;
          for (std::uint64_t m2 : members)
            if (member_point(m2, y) && (m1 & m2) == 0) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        if (!ok) return false;
      }
    return true;
  }
  bool regular(bool point_disjoint_form) const {
    for (std::size_t x = 0; x < nx; ++x)
      for (std::uint64_t g : closed()) {
        bool qualifies =
            point_disjoint_form ? disjoint_point(g, x) : !member_point(g, x);
        if (!qualifies) continue;
        bool ok = false;
        for (std::uint64_t f1 : members) {
          if (!member_point(f1, x)) continue;
          for (std::uint64_t f2 : members)
            if ((g & f2) == g && (f1 & f2) == 0) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        if (!ok) return false;
      }
    return true;
  }
  bool normal() const {
    std::vector<std::uint64_t> cl = closed();
    for (std::uint64_t f : cl)
      for (std::uint64_t g : cl) {
        if ((f & g) != 0) continue;
        bool ok = false;
        for (std::uint64_t o1 : members) {
          if ((f & o1) != f) continue;
          for (std::uint64_t o2 : members)
            if ((g & o2) == g && (o1 & o2) == 0) {
              ok = true;
              break;
            }
          if (ok) break;
        }
        if (!ok) return false;
      }
    return true;
  }
  bool points_closed() const {
    for (std::size_t x = 0; x < nx; ++x) {
      std::uint64_t point = column(x);
      bool found = false;
      for (std::uint64_t m : members)
        if (m == (point ^ full())) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }
};

/// Canonical form of a member-mask family under all point/parameter
/// relabelings, written directly on masks: the lexicographically smallest
/// sorted list, comparing bit-reversed words.
inline bool mask_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) == 0;
}

inline std::vector<std::uint64_t> brute_canonical(const std::vector<std::uint64_t>& members,
                                                  std::size_t nx, std::size_t ne) {
  std::vector<std::size_t> pperm(nx), eperm(ne);
  for (std::size_t i = 0; i < nx; ++i) pperm[i] = i;
  std::vector<std::uint64_t> best;
  do {
    for (std::size_t i = 0; i < ne; ++i) eperm[i] = i;
    do {
      std::vector<std::uint64_t> image;
      for (std::uint64_t m : members) {
        std::uint64_t out = 0;
        for (std::size_t e = 0; e < ne; ++e)
          for (std::size_t x = 0; x < nx; ++x)
            if (m >> (e * nx + x) & 1) out |= std::uint64_t{1} << (eperm[e] * nx + pperm[x]);
        image.push_back(out);
      }
      std::sort(image.begin(), image.end(), mask_less);
      if (best.empty() ||
          std::lexicographical_compare(image.begin(), image.end(), best.begin(), best.end(),
                                       mask_less))
        best = image;
    } while (std::next_permutation(eperm.begin(), eperm.end()));
  } while (std::next_permutation(pperm.begin(), pperm.end()));
  return best;
}

}  // namespace oracles
