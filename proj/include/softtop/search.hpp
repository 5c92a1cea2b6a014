#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "softtop/covers.hpp"
#include "softtop/separation.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// The named-property vocabulary shared by the deciders, the catalog and
/// the counterexample search. Every id resolves to exactly one decider.
enum class Property {
  t0,
  t1,
  t2,
  regular,
  t3,
  normal,
  t4,
  compact,
  points_closed,
  wkm_point_disjoint,
  wkm_not_member,
};

inline std::vector<Property> all_properties() {
  return {Property::t0,      Property::t1,      Property::t2,
          Property::regular, Property::t3,      Property::normal,
          Property::t4,      Property::compact, Property::points_closed,
          Property::wkm_point_disjoint, Property::wkm_not_member};
}

inline const char* property_name(Property p) {
  switch (p) {
    case Property::t0: return "t0";
    case Property::t1: return "t1";
    case Property::t2: return "t2";
    case Property::regular: return "regular";
    case Property::t3: return "t3";
    case Property::normal: return "normal";
    case Property::t4: return "t4";
    case Property::compact: return "compact";
    case Property::points_closed: return "points-closed";
    case Property::wkm_point_disjoint: return "wkm-point-disjoint";
    case Property::wkm_not_member: return "wkm-not-member";
  }
  return "?";
}

inline Property parse_property(std::string_view name) {
  for (Property p : all_properties())
    if (name == property_name(p)) return p;
  throw std::invalid_argument("unknown property '" + std::string(name) + "'");
}

inline Verdict evaluate_property(const Topology& t, Property p) {
  switch (p) {
    case Property::t0: return check_axiom(t, Axiom::t0);
    case Property::t1: return check_axiom(t, Axiom::t1);
    case Property::t2: return check_axiom(t, Axiom::t2);
    case Property::regular: return check_axiom(t, Axiom::regular);
    case Property::t3: return check_axiom(t, Axiom::t3);
    case Property::normal: return check_axiom(t, Axiom::normal);
    case Property::t4: return check_axiom(t, Axiom::t4);
    case Property::compact: return is_compact(t);
    case Property::points_closed: return points_closed(t);
    case Property::wkm_point_disjoint: return wkm_condition(t, NonMembership::point_disjoint);
    case Property::wkm_not_member: return wkm_condition(t, NonMembership::not_member);
  }
  throw std::invalid_argument("unknown property");
}

/// Simultaneous point and parameter relabeling: the bit at cell (e, x) is
/// pushed forward to cell (param_perm[e], point_perm[x]).
inline SoftSet relabel(const SoftSet& a, std::span<const std::size_t> point_perm,
                       std::span<const std::size_t> param_perm) {
  const auto& sig = *a.signature();
  CellMask out = 0;
  for (std::size_t e = 0; e < sig.param_count(); ++e)
    for (std::size_t x = 0; x < sig.point_count(); ++x)
      if (a.raw() >> sig.cell(e, x) & 1)
        out |= CellMask{1} << sig.cell(param_perm[e], point_perm[x]);
  return SoftSet(a.signature(), out);
}

inline Topology relabel(const Topology& t, std::span<const std::size_t> point_perm,
                        std::span<const std::size_t> param_perm) {
  std::vector<SoftSet> members;
  members.reserve(t.size());
  for (const auto& m : t.members()) members.push_back(relabel(m, point_perm, param_perm));
  return Topology::from_members(t.signature(), members);
}

namespace detail {

inline void check_relabel_group(const SignaturePtr& sig) {
  double size = 1;
  for (std::size_t i = 2; i <= sig->point_count(); ++i) size *= static_cast<double>(i);
  for (std::size_t i = 2; i <= sig->param_count(); ++i) size *= static_cast<double>(i);
  if (size > 1e6)
    throw std::invalid_argument(
        "canonical form: the relabeling group is too large to sweep");
}

inline bool mask_canonical_less(CellMask a, CellMask b) {
  CellMask d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) == 0;
}

/// One lookup table per element of the relabeling group, mapping every
/// ground mask (< 2^cells) to its relabeled mask. Only built for word-sized
/// ground-set spaces (cells <= 6).
inline std::vector<std::vector<std::uint8_t>> relabel_tables(const Signature& sig) {
  std::size_t nx = sig.point_count(), ne = sig.param_count(), cells = sig.cell_count();
  std::size_t ground = std::size_t{1} << cells;
  std::vector<std::size_t> pperm(nx), eperm(ne);
  std::vector<std::vector<std::uint8_t>> tables;
  for (std::size_t i = 0; i < nx; ++i) pperm[i] = i;
  do {
    for (std::size_t i = 0; i < ne; ++i) eperm[i] = i;
    do {
      std::vector<std::uint8_t> tbl(ground);
      for (std::size_t m = 0; m < ground; ++m) {
        std::uint8_t out = 0;
        for (std::size_t e = 0; e < ne; ++e)
          for (std::size_t x = 0; x < nx; ++x)
            if (m >> (e * nx + x) & 1)
              out |= static_cast<std::uint8_t>(1u << (eperm[e] * nx + pperm[x]));
        tbl[m] = out;
      }
      tables.push_back(std::move(tbl));
    } while (std::next_permutation(eperm.begin(), eperm.end()));
  } while (std::next_permutation(pperm.begin(), pperm.end()));
  return tables;
}

/// Lexicographically minimal sorted member list over the relabeling group.
inline std::vector<CellMask> canonical_mask_list(
    std::span<const CellMask> members, const std::vector<std::vector<std::uint8_t>>& tables) {
  std::vector<CellMask> best, image(members.size());
  for (const auto& tbl : tables) {
    for (std::size_t i = 0; i < members.size(); ++i)
      image[i] = tbl[static_cast<std::size_t>(members[i])];
    std::sort(image.begin(), image.end(), mask_canonical_less);
    if (best.empty() || std::lexicographical_compare(image.begin(), image.end(),
                                                     best.begin(), best.end(),
                                                     mask_canonical_less))
      best = image;
  }
  return best;
}

}  // namespace detail

/// Canonical form of a topology under all point/parameter relabelings: the
/// representative whose canonically sorted member list is lexicographically
/// minimal. Two topologies are isomorphic iff their canonical forms are
/// equal.
inline Topology canonical_form(const Topology& t) {
  detail::check_relabel_group(t.signature());
  const auto& sig = *t.signature();
  std::vector<std::size_t> pperm(sig.point_count()), eperm(sig.param_count());
  for (std::size_t i = 0; i < pperm.size(); ++i) pperm[i] = i;
  std::optional<std::vector<CellMask>> best;
  do {
    for (std::size_t i = 0; i < eperm.size(); ++i) eperm[i] = i;
    do {
      std::vector<CellMask> image;
      image.reserve(t.size());
      for (const auto& m : t.members()) image.push_back(relabel(m, pperm, eperm).raw());
      std::sort(image.begin(), image.end(), detail::mask_canonical_less);
      if (!best || std::lexicographical_compare(image.begin(), image.end(), best->begin(),
                                                best->end(), detail::mask_canonical_less))
        best = image;
    } while (std::next_permutation(eperm.begin(), eperm.end()));
  } while (std::next_permutation(pperm.begin(), pperm.end()));
  std::vector<SoftSet> members;
  members.reserve(best->size());
  for (CellMask m : *best) members.emplace_back(t.signature(), m);
  return Topology::from_members(t.signature(), members);
}

/// Exhaustive enumeration of every soft topology over the signature,
/// isomorph-reduced: each relabeling class appears exactly once, as its
/// canonical form, and the stream is sorted by the canonical topology
/// order. Requires at most 64 ground soft sets (|X|*|E| <= 6 cells).
inline std::vector<Topology> enum_topologies(const SignaturePtr& sig) {
  std::size_t cells = sig->cell_count();
  if (cells > 6)
    throw std::invalid_argument(
        "exhaustive enumeration needs 2^(|X|*|E|) <= 64 ground soft sets; use "
        "random sampling for larger signatures");
  const std::size_t ground = std::size_t{1} << cells;
  const std::uint64_t full = sig->full_mask();

  // A family is a bitmask over ground soft sets; a ground set's index is
  // its own cell mask, so unions/intersections are index arithmetic.
  // Growing an already closed family by one set only needs the new set's
  // combinations (and on, transitively).
  auto close_add = [&](std::uint64_t fam, std::uint64_t fresh) {
    std::vector<std::uint8_t> work;
    for (std::uint64_t rest = fresh & ~fam; rest; rest &= rest - 1)
      work.push_back(static_cast<std::uint8_t>(std::countr_zero(rest)));
    fam |= fresh;
    while (!work.empty()) {
      std::uint64_t g = work.back();
      work.pop_back();
      for (std::uint64_t rest = fam; rest; rest &= rest - 1) {
        std::uint64_t m = static_cast<std::uint64_t>(std::countr_zero(rest));
        for (std::uint64_t c : {g | m, g & m})
          if (!(fam >> c & 1)) {
            fam |= std::uint64_t{1} << c;
            work.push_back(static_cast<std::uint8_t>(c));
          }
      }
    }
    return fam;
  };

  std::uint64_t base = (std::uint64_t{1} << 0) | (std::uint64_t{1} << full);
  std::unordered_set<std::uint64_t> seen{base};
  std::vector<std::uint64_t> stack{base};
  while (!stack.empty()) {
    std::uint64_t fam = stack.back();
    stack.pop_back();
    for (std::size_t g = 0; g < ground; ++g) {
      if (fam >> g & 1) continue;
      std::uint64_t grown = close_add(fam, std::uint64_t{1} << g);
      if (seen.insert(grown).second) stack.push_back(grown);
    }
  }

  auto tables = detail::relabel_tables(*sig);
  std::unordered_set<std::uint64_t> emitted;
  std::vector<Topology> out;
  for (std::uint64_t fam : seen) {
    std::vector<CellMask> members;
    for (std::size_t g = 0; g < ground; ++g)
      if (fam >> g & 1) members.push_back(static_cast<CellMask>(g));
    std::vector<CellMask> canon = detail::canonical_mask_list(members, tables);
    std::uint64_t key = 0;
    for (CellMask m : canon) key |= std::uint64_t{1} << m;
    if (!emitted.insert(key).second) continue;
    std::vector<SoftSet> sets;
    sets.reserve(canon.size());
    for (CellMask m : canon) sets.emplace_back(sig, m);
    out.push_back(Topology::from_members(sig, sets));
  }
  std::sort(out.begin(), out.end(),
            [](const Topology& a, const Topology& b) { return canonical_less(a, b); });
  return out;
}

/// Topology generated from k pseudo-random soft sets (each section drawn
/// uniformly and independently per parameter). Reproducible from the seed;
/// mt19937_64 keeps the stream portable across platforms.
inline Topology random_space(const SignaturePtr& sig, std::uint64_t seed, std::size_t k) {
  std::mt19937_64 rng(seed);
  std::vector<SoftSet> seeds;
  seeds.reserve(k);
  for (std::size_t i = 0; i < k; ++i)
    seeds.emplace_back(sig, static_cast<CellMask>(rng()) & sig->full_mask());
  return Topology::generate(sig, seeds);
}

struct SearchBudget {
  std::size_t max_points = 1;
  std::size_t max_params = 1;
  std::size_t max_topologies = std::size_t{1} << 20;
  std::uint64_t random_seed = 0;
  enum class Mode { exhaustive, random } mode = Mode::exhaustive;
};

struct SearchHit {
  Topology space;
  std::vector<std::pair<Property, Verdict>> verdicts;
};

namespace detail {

inline SignaturePtr generic_signature(std::size_t points, std::size_t params) {
  std::vector<std::string> xs, es;
  for (std::size_t i = 1; i <= points; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= params; ++i) es.push_back("e" + std::to_string(i));
  return Signature::make(std::move(xs), std::move(es));
}

}  // namespace detail

/// First topology in the budgeted stream on which every `holds` property
/// holds and every `fails` property fails, with all queried verdicts
/// attached. Exhaustive mode walks signatures by ascending cell count and
/// streams isomorph-reduced topologies in canonical order, so an empty
/// result is a bounded non-existence claim. Random mode samples
/// generate()-closures of seeded random families, deduplicated by
/// canonical form.
inline std::optional<SearchHit> find_counterexample(std::span<const Property> holds,
                                                    std::span<const Property> fails,
                                                    const SearchBudget& budget) {
  for (Property h : holds)
    for (Property f : fails)
      if (h == f)
        throw std::invalid_argument(std::string("contradictory query: property '") +
                                    property_name(h) + "' both required and forbidden");
  if (budget.max_topologies < 1)
    throw std::invalid_argument("search budget: maxTopologies must be at least 1");

  auto try_space = [&](const Topology& t) -> std::optional<SearchHit> {
    std::vector<std::pair<Property, Verdict>> verdicts;
    for (Property p : holds) {
      Verdict v = evaluate_property(t, p);
      bool ok = v.holds;
      verdicts.emplace_back(p, std::move(v));
      if (!ok) return std::nullopt;
    }
    for (Property p : fails) {
      Verdict v = evaluate_property(t, p);
      bool ok = !v.holds;
      verdicts.emplace_back(p, std::move(v));
      if (!ok) return std::nullopt;
    }
    return SearchHit{t, std::move(verdicts)};
  };

  std::size_t budget_left = budget.max_topologies;
  if (budget.mode == SearchBudget::Mode::exhaustive) {
    std::vector<std::pair<std::size_t, std::size_t>> sizes;
    for (std::size_t nx = 1; nx <= budget.max_points; ++nx)
      for (std::size_t ne = 1; ne <= budget.max_params; ++ne) sizes.emplace_back(nx, ne);
    std::sort(sizes.begin(), sizes.end(), [](auto a, auto b) {
      auto ka = std::tuple{a.first * a.second, a.first, a.second};
      auto kb = std::tuple{b.first * b.second, b.first, b.second};
      return ka < kb;
    });
    for (auto [nx, ne] : sizes) {
      SignaturePtr sig = detail::generic_signature(nx, ne);
      for (const Topology& t : enum_topologies(sig)) {
        if (budget_left == 0) return std::nullopt;
        --budget_left;
        if (auto hit = try_space(t)) return hit;
      }
    }
    return std::nullopt;
  }

  SignaturePtr sig = detail::generic_signature(budget.max_points, budget.max_params);
  std::mt19937_64 rng(budget.random_seed);
  std::unordered_set<std::string> seen;
  while (budget_left-- > 0) {
    std::size_t k = static_cast<std::size_t>(rng() % (2 * sig->cell_count() + 1));
    std::uint64_t sub_seed = rng();
    Topology t = random_space(sig, sub_seed, k);
    Topology canon = canonical_form(t);
    std::ostringstream key;
    for (const auto& m : canon.members()) key << m.raw() << ',';
    if (!seen.insert(key.str()).second) continue;
    if (auto hit = try_space(canon)) return hit;
  }
  return std::nullopt;
}

}  // namespace softtop
