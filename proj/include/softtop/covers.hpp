#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "softtop/topology.hpp"

namespace softtop {

/// Families handed to the exhaustive subfamily sweeps (FIP, basis covers)
/// are capped at this size; the subfamily sweeps are exponential.
inline constexpr std::size_t kMaxEnumerableFamily = 20;

inline bool is_cover(std::span<const SoftSet> members, const SoftSet& target) {
  CellMask u = 0;
  for (const auto& m : members) {
    require_same_signature(m.signature(), target.signature(), "cover check");
    u |= m.raw();
  }
  return (u & target.raw()) == target.raw();
}

/// An indexed family of soft sets covering a target. When `within` is set,
/// every member is open in that topology (a soft open cover).
struct Cover {
  SoftSet target;
  std::vector<SoftSet> members;
  std::optional<Topology> within;

  static Cover of(SoftSet target, std::vector<SoftSet> members) {
    if (!is_cover(members, target))
      throw std::invalid_argument("cover: the members do not cover the target");
    return Cover{std::move(target), std::move(members), std::nullopt};
  }

  static Cover open_cover(const Topology& t, SoftSet target, std::vector<SoftSet> members) {
    for (const auto& m : members)
      if (!t.contains(m))
        throw std::invalid_argument("open cover: member " + to_string(m) +
                                    " is not open in the topology");
    Cover c = of(std::move(target), std::move(members));
    c.within = t;
    return c;
  }

  bool is_open() const { return within.has_value(); }
};

enum class SubcoverStrategy { exact, greedy };

namespace detail {

/// Indices of `members` sorted by canonical order of the sets, original
/// position breaking ties between duplicates.
inline std::vector<std::size_t> canonical_index_order(std::span<const SoftSet> members) {
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(members[a], members[b]);
  });
  return order;
}

/// Largest-marginal-coverage heuristic over the cells of `target`; ties go
/// to the canonically smaller member. Returns chosen indices.
inline std::vector<std::size_t> greedy_subcover(std::span<const SoftSet> members,
                                                CellMask target) {
  std::vector<std::size_t> order = canonical_index_order(members);
  std::vector<std::size_t> chosen;
  CellMask uncovered = target;
  while (uncovered != 0) {
    std::size_t best = members.size();
    int best_gain = -1;
    for (std::size_t idx : order) {
      int gain = std::popcount(members[idx].raw() & uncovered);
      if (gain > best_gain) {
        best_gain = gain;
        best = idx;
      }
    }
    if (best == members.size() || best_gain <= 0)
      throw std::logic_error("greedy subcover: target not coverable");
    chosen.push_back(best);
    uncovered &= ~members[best].raw();
  }
  return chosen;
}

/// Branch-and-bound minimum set cover over word-sized universes. Candidates
/// are explored by descending marginal coverage with a greedy incumbent;
/// the lower bound is ceil(remaining / largest set).
inline std::size_t min_cover_size(std::span<const CellMask> sets, CellMask target,
                                  std::size_t incumbent) {
  std::size_t best = incumbent;
  auto bound = [&](CellMask uncovered) {
    int biggest = 0;
    for (CellMask s : sets) biggest = std::max(biggest, std::popcount(s & uncovered));
    if (biggest == 0) return std::size_t{SIZE_MAX};
    int rem = std::popcount(uncovered);
    return static_cast<std::size_t>((rem + biggest - 1) / biggest);
  };
  auto rec = [&](auto&& self, CellMask uncovered, std::size_t used) -> void {
    if (uncovered == 0) {
      best = std::min(best, used);
      return;
    }
    if (used + 1 >= best) return;
    std::size_t lb = bound(uncovered);
    if (lb == SIZE_MAX || used + lb >= best) return;
    // Branch on the candidates by descending marginal coverage.
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < sets.size(); ++i)
      if ((sets[i] & uncovered) != 0) cands.push_back(i);
    std::sort(cands.begin(), cands.end(), [&](std::size_t a, std::size_t b) {
      int ca = std::popcount(sets[a] & uncovered), cb = std::popcount(sets[b] & uncovered);
      return ca != cb ? ca > cb : a < b;
    });
    // Cover the lowest uncovered cell: every cover must pick a set that
    // contains it, so branching on those sets alone stays exhaustive.
    CellMask pivot = uncovered & (~uncovered + 1);
    for (std::size_t i : cands) {
      if ((sets[i] & pivot) == 0) continue;
      self(self, uncovered & ~sets[i], used + 1);
    }
  };
  rec(rec, target, 0);
  return best;
}

}  // namespace detail

/// Minimum-cardinality (exact) or heuristic (greedy) subfamily that still
/// covers the target. Exact search is branch-and-bound with a greedy
/// incumbent; among equal-size optima the canonically smallest subfamily
/// wins. Results are re-verified as covers before returning.
inline std::vector<SoftSet> minimal_subcover(const Cover& cover, SubcoverStrategy strategy) {
  if (!is_cover(cover.members, cover.target))
    throw std::invalid_argument("minimal subcover: the members do not cover the target");
  CellMask target = cover.target.raw();
  std::vector<SoftSet> out;
  if (target == 0) return out;

  if (strategy == SubcoverStrategy::greedy) {
    for (std::size_t idx : detail::greedy_subcover(cover.members, target))
      out.push_back(cover.members[idx]);
  } else {
    std::vector<std::size_t> order = detail::canonical_index_order(cover.members);
    std::vector<CellMask> sets(cover.members.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
      sets[i] = cover.members[order[i]].raw() & target;
    std::size_t greedy_size = detail::greedy_subcover(cover.members, target).size();
    std::size_t k = detail::min_cover_size(sets, target, greedy_size);
    // Among all covers of minimum size, take the one whose canonical member
    // sequence is lexicographically smallest: scan size-k combinations in
    // canonical index order and keep the first that covers.
    std::vector<std::size_t> picked;
    auto pick = [&](auto&& self, std::size_t from, CellMask uncovered) -> bool {
      if (uncovered == 0) return true;
      if (picked.size() == k) return false;
      CellMask rest = 0;
      for (std::size_t i = from; i < sets.size(); ++i) rest |= sets[i];
      if ((rest & uncovered) != uncovered) return false;
      for (std::size_t i = from; i < sets.size(); ++i) {
        // A member adding nothing at its position is globally redundant,
        // so it cannot occur in a minimum-size cover.
        if ((sets[i] & uncovered) == 0) continue;
        picked.push_back(i);
        if (self(self, i + 1, uncovered & ~sets[i])) return true;
        picked.pop_back();
      }
      return false;
    };
    if (!pick(pick, 0, target))
      throw std::logic_error("minimal subcover: exact search lost the optimum");
    for (std::size_t i : picked) out.push_back(cover.members[order[i]]);
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  if (!is_cover(out, cover.target))
    throw std::logic_error("minimal subcover: produced a non-cover");
  return out;
}

/// Sectionwise restriction of an open cover of ~Y to the subspace on Y.
/// Member order (and so index correspondence) is preserved, so a subcover
/// on either side maps to a subcover on the other by index.
inline Cover restrict_cover(const Cover& cover, const Topology& t, PointMask Y) {
  require_same_signature(cover.target.signature(), t.signature(), "cover restriction");
  SoftSet expected = SoftSet::constant(t.signature(), Y);
  if (cover.target != expected)
    throw std::invalid_argument("cover restriction: the target is not ~Y for the given Y");
  for (const auto& m : cover.members)
    if (!t.contains(m))
      throw std::invalid_argument("cover restriction: member " + to_string(m) +
                                  " is not open in the topology");
  Topology sub = t.subspace(Y);
  std::vector<SoftSet> restricted;
  restricted.reserve(cover.members.size());
  for (const auto& m : cover.members) restricted.push_back(m.restrict_to(Y));
  Cover out{SoftSet::absolute(sub.signature()), std::move(restricted), std::move(sub)};
  if (!is_cover(out.members, out.target))
    throw std::logic_error("cover restriction: restriction lost coverage");
  return out;
}

/// Soft compactness. Finite soft topologies are always soft compact: an
/// open cover draws its members from the finite family, so it is finite
/// and is its own finite subcover. Countable soft compactness coincides
/// with soft compactness here for the same reason. Provided so property
/// suites treat compactness as a named, uniformly decided property.
inline Verdict is_compact(const Topology& t) {
  std::ostringstream os;
  os << "soft compact: every soft open cover draws from the " << t.size()
     << "-member family, hence is finite and is its own finite subcover; "
        "on finite spaces countably soft compact and soft compact coincide, "
        "so both hold";
  return Verdict::pass(os.str());
}

inline Verdict is_countably_compact(const Topology& t) {
  Verdict v = is_compact(t);
  v.detail = "countably " + v.detail;
  return v;
}

/// Finite intersection property: every nonempty subfamily has non-null
/// intersection. Subfamilies are checked in size-then-canonical order with
/// an early exit, so the witness is a smallest null subfamily.
inline Verdict has_fip(std::span<const SoftSet> family) {
  if (family.size() > kMaxEnumerableFamily)
    throw std::invalid_argument("finite intersection property: family larger than " +
                                std::to_string(kMaxEnumerableFamily) + " members");
  if (family.empty())
    return Verdict::pass_vacuous("empty family: no nonempty subfamilies to check");
  for (std::size_t i = 1; i < family.size(); ++i)
    require_same_signature(family[0].signature(), family[i].signature(),
                           "finite intersection property");
  std::vector<std::size_t> order = detail::canonical_index_order(family);
  std::vector<std::size_t> picked;
  std::vector<SoftSet> witness;
  auto scan = [&](auto&& self, std::size_t from, std::size_t want, CellMask acc) -> bool {
    if (want == 0) {
      if (acc == 0) {
        for (std::size_t i : picked) witness.push_back(family[order[i]]);
        return true;
      }
      return false;
    }
    for (std::size_t i = from; i + want <= order.size(); ++i) {
      picked.push_back(i);
      if (self(self, i + 1, want - 1, acc & family[order[i]].raw())) return true;
      picked.pop_back();
    }
    return false;
  };
  CellMask full = family[0].signature()->full_mask();
  for (std::size_t size = 1; size <= order.size(); ++size)
    if (scan(scan, 0, size, full)) {
      std::ostringstream os;
      os << "a " << size << "-member subfamily has null intersection";
      return Verdict::fail(os.str()).with_sets(std::move(witness));
    }
  return Verdict::pass("every nonempty subfamily has non-null intersection");
}

/// Prefix intersections C_1, C_1 n C_2, ...: turns a family with the
/// finite intersection property into a descending chain of closed sets.
inline std::vector<SoftSet> fip_chain(std::span<const SoftSet> family) {
  std::vector<SoftSet> chain;
  for (const auto& c : family) chain.push_back(chain.empty() ? c : (chain.back() & c));
  return chain;
}

/// The closed-set compactness criterion, brute-forced: over every nonempty
/// family of closed sets, FIP must imply a non-null total intersection.
/// The contrapositive route is replayed too: a closed family with null
/// total intersection complements into an open cover of ~X, a finite
/// subcover is extracted, and its complements must intersect to null.
inline Verdict fip_equivalence(const Topology& t) {
  std::vector<SoftSet> closed = t.closed_sets();
  if (closed.size() > 16)
    throw std::invalid_argument(
        "finite intersection sweep: more than 16 closed sets; the subfamily "
        "sweep is exponential");
  std::size_t n = closed.size();
  CellMask full = t.signature()->full_mask();
  std::vector<CellMask> inter(std::size_t{1} << n);
  inter[0] = full;
  for (std::uint64_t s = 1; s < inter.size(); ++s) {
    std::uint64_t low = s & (~s + 1);
    inter[s] = inter[s ^ low] & closed[std::countr_zero(low)].raw();
  }
  auto family_of = [&](std::uint64_t s) {
    std::vector<SoftSet> fam;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) fam.push_back(closed[i]);
    return fam;
  };
  for (std::uint64_t s = 1; s < inter.size(); ++s) {
    bool fip = true;
    for (std::uint64_t sub = s; sub != 0; sub = (sub - 1) & s)
      if (inter[sub] == 0) {
        fip = false;
        break;
      }
    if (fip && inter[s] == 0)
      return Verdict::fail(
                 "closed family has the finite intersection property but a "
                 "null total intersection")
          .with_sets(family_of(s));
    if (inter[s] == 0) {
      // De Morgan replay: complements must cover ~X ...
      std::vector<SoftSet> opens;
      for (std::size_t i = 0; i < n; ++i)
        if (s >> i & 1) opens.push_back(closed[i].complement());
      SoftSet abs = SoftSet::absolute(t.signature());
      if (!is_cover(opens, abs))
        return Verdict::fail(
                   "null closed family whose complements fail to cover the "
                   "absolute soft set")
            .with_sets(family_of(s));
      // ... and a finite subcover complements back to a null subfamily.
      CellMask meet = full;
      for (std::size_t idx : detail::greedy_subcover(opens, full))
        meet &= opens[idx].complement().raw();
      if (meet != 0)
        return Verdict::fail(
                   "finite subcover whose closed complements do not intersect "
                   "to null")
            .with_sets(family_of(s));
    }
  }
  std::ostringstream os;
  os << "checked all " << (inter.size() - 1) << " nonempty families over " << n
     << " closed sets: FIP families have non-null intersection and null "
        "families complement into open covers with null finite subfamilies";
  return Verdict::pass(os.str());
}

/// Nonnull descending chains of closed sets have non-null intersection.
/// Preconditions (closedness, non-nullity, nesting) are input errors.
inline Verdict nested_intersection(const Topology& t, std::span<const SoftSet> chain) {
  if (chain.empty())
    throw std::invalid_argument("nested intersection: empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    SetStatus st = t.status(chain[i]);
    if (st != SetStatus::closed && st != SetStatus::clopen)
      throw std::invalid_argument("nested intersection: chain member " +
                                  to_string(chain[i]) + " is not soft closed");
    if (chain[i].is_null())
      throw std::invalid_argument("nested intersection: chain member is null");
    if (i > 0 && !chain[i].subset_of(chain[i - 1]))
      throw std::invalid_argument("nested intersection: chain is not descending at position " +
                                  std::to_string(i));
  }
  CellMask acc = t.signature()->full_mask();
  for (const auto& c : chain) acc &= c.raw();
  SoftSet meet(t.signature(), acc);
  if (acc == 0)
    return Verdict::fail("the chain intersects to the null soft set").with_sets({meet});
  return Verdict::pass("the chain has the non-null intersection " + to_string(meet))
      .with_sets({meet});
}

/// Compactness through a soft basis, replayed both ways. Forward: every
/// cover of ~X by basis elements (all subfamilies of B are enumerated) has
/// a finite subcover. Converse: every open cover of ~X expands into basis
/// elements, a finite basis subcover is extracted and pulled back to a
/// finite subcover of the original cover.
inline Verdict basis_cover_check(const Topology& t, std::span<const SoftSet> basis,
                                 std::size_t max_family = kMaxEnumerableFamily) {
  Verdict b = t.is_basis(basis);
  if (!b.holds)
    throw std::invalid_argument("basis cover check: not a soft basis (" + b.detail + ")");
  if (basis.size() > max_family)
    throw std::invalid_argument("basis cover check: basis larger than " +
                                std::to_string(max_family) + " elements");
  SoftSet abs = SoftSet::absolute(t.signature());
  CellMask full = t.signature()->full_mask();
  std::size_t basis_covers = 0;

  std::vector<CellMask> braw;
  for (const auto& bset : basis) braw.push_back(bset.raw());
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << basis.size()); ++s) {
    CellMask u = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (s >> i & 1) u |= braw[i];
    if (u != full) continue;
    ++basis_covers;
    std::vector<SoftSet> fam;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (s >> i & 1) fam.push_back(basis[i]);
    std::vector<SoftSet> sub = minimal_subcover(Cover{abs, fam, std::nullopt},
                                                SubcoverStrategy::greedy);
    if (!is_cover(sub, abs))
      return Verdict::fail("a basis cover of ~X yielded no finite subcover").with_sets(fam);
  }

  // Converse: open covers of ~X drawn from the member list. When the
  // member list itself is too large to sweep, replay on the full family.
  std::size_t open_covers = 0;
  auto replay = [&](const std::vector<SoftSet>& cover_fam) -> std::optional<Verdict> {
    std::vector<SoftSet> expanded;
    std::vector<std::size_t> origin;  // basis element -> first covering member
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t u = 0; u < cover_fam.size(); ++u)
        if ((braw[i] & cover_fam[u].raw()) == braw[i]) {
          expanded.push_back(basis[i]);
          origin.push_back(u);
          break;
        }
    }
    if (!is_cover(expanded, abs))
      return Verdict::fail(
                 "expanding an open cover into basis elements lost coverage of ~X")
          .with_sets(cover_fam);
    std::vector<SoftSet> pulled;
    for (std::size_t idx : detail::greedy_subcover(expanded, full))
      pulled.push_back(cover_fam[origin[idx]]);
    if (!is_cover(pulled, abs))
      return Verdict::fail("the pulled-back subcover does not cover ~X").with_sets(cover_fam);
    return std::nullopt;
  };
  const auto& members = t.members();
  if (members.size() <= max_family) {
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << members.size()); ++s) {
      CellMask u = 0;
      std::vector<SoftSet> fam;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (s >> i & 1) {
          u |= members[i].raw();
          fam.push_back(members[i]);
        }
      if (u != full) continue;
      ++open_covers;
      if (auto bad = replay(fam)) return *bad;
    }
  } else {
    std::vector<SoftSet> fam(members.begin(), members.end());
    ++open_covers;
    if (auto bad = replay(fam)) return *bad;
  }

  std::ostringstream os;
  os << "all " << basis_covers << " basis covers of ~X admit finite subcovers; "
     << open_covers << " open covers expanded into basis elements and pulled back";
  return Verdict::pass(os.str());
}

}  // namespace softtop
