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
#include <vector>

#include "softtop/covers.hpp"
#include "softtop/search.hpp"
#include "softtop/separation.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// Algebra laws replayed on pseudo-random soft sets (or, for the closed-set
/// laws, on pseudo-random topologies).
enum class Law {
  prop2_1,
  prop3_2_i,
  prop3_2_ii,
  prop3_2_iii,
  prop3_2_iv,
  prop3_2_v,
  prop3_2_vi,
  prop3_3_i,
  prop3_3_ii,
  prop3_3_iii,
  prop3_3_iv,
  prop3_3_v,
  de_morgan,
};

inline std::vector<Law> all_laws() {
  return {Law::prop2_1,   Law::prop3_2_i,  Law::prop3_2_ii, Law::prop3_2_iii,
          Law::prop3_2_iv, Law::prop3_2_v, Law::prop3_2_vi, Law::prop3_3_i,
          Law::prop3_3_ii, Law::prop3_3_iii, Law::prop3_3_iv, Law::prop3_3_v,
          Law::de_morgan};
}

inline const char* law_name(Law law) {
  switch (law) {
    case Law::prop2_1: return "prop2.1";
    case Law::prop3_2_i: return "prop3.2.i";
    case Law::prop3_2_ii: return "prop3.2.ii";
    case Law::prop3_2_iii: return "prop3.2.iii";
    case Law::prop3_2_iv: return "prop3.2.iv";
    case Law::prop3_2_v: return "prop3.2.v";
    case Law::prop3_2_vi: return "prop3.2.vi";
    case Law::prop3_3_i: return "prop3.3.i";
    case Law::prop3_3_ii: return "prop3.3.ii";
    case Law::prop3_3_iii: return "prop3.3.iii";
    case Law::prop3_3_iv: return "prop3.3.iv";
    case Law::prop3_3_v: return "prop3.3.v";
    case Law::de_morgan: return "deMorgan";
  }
  return "?";
}

inline Law parse_law(std::string_view name) {
  for (Law l : all_laws())
    if (name == law_name(l)) return l;
  throw std::invalid_argument("unknown law '" + std::string(name) + "'");
}

namespace detail {

inline SoftSet random_soft_set(const SignaturePtr& sig, std::mt19937_64& rng) {
  return SoftSet(sig, static_cast<CellMask>(rng()) & sig->full_mask());
}

/// Half the draws are correlated (supersets, disjoint partners) so the
/// nontrivial directions of the biconditionals actually fire.
inline SoftSet random_superset(const SoftSet& of, std::mt19937_64& rng) {
  return SoftSet(of.signature(),
                 of.raw() | (static_cast<CellMask>(rng()) & of.signature()->full_mask()));
}

}  // namespace detail

/// Evaluates one algebra law on `trials` pseudo-random tuples over the
/// signature. Holds iff no counterexample; the witness is the first
/// failing tuple.
inline Verdict verify_law(Law law, const SignaturePtr& sig, std::size_t trials,
                          std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("verify law: trials must be at least 1");
  std::mt19937_64 rng(seed);
  SoftSet null = SoftSet::null_set(sig), abs = SoftSet::absolute(sig);

  auto fail_tuple = [&](std::size_t trial, std::vector<SoftSet> tuple) {
    std::ostringstream os;
    os << law_name(law) << " failed on trial " << trial;
    return Verdict::fail(os.str()).with_sets(std::move(tuple));
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    SoftSet f = detail::random_soft_set(sig, rng);
    SoftSet g = (rng() & 1) ? detail::random_superset(f, rng)
                            : detail::random_soft_set(sig, rng);
    switch (law) {
      case Law::prop2_1: {
        Topology t = random_space(sig, rng(), static_cast<std::size_t>(rng() % 4));
        std::vector<SoftSet> closed = t.closed_sets();
        if (t.status(null) != SetStatus::clopen || t.status(abs) != SetStatus::clopen)
          return fail_tuple(trial, t.members());
        CellMask meet = sig->full_mask();
        for (const auto& c : closed) meet &= c.raw();
        if (!t.contains(SoftSet(sig, meet).complement())) return fail_tuple(trial, t.members());
        for (std::size_t i = 0; i < closed.size(); ++i)
          for (std::size_t j = i + 1; j < closed.size(); ++j) {
            SetStatus u = t.status(closed[i] | closed[j]);
            SetStatus n = t.status(closed[i] & closed[j]);
            bool u_closed = u == SetStatus::closed || u == SetStatus::clopen;
            bool n_closed = n == SetStatus::closed || n == SetStatus::clopen;
            if (!u_closed || !n_closed)
              return fail_tuple(trial, {closed[i], closed[j]});
          }
        break;
      }
      case Law::prop3_2_i:
        if (f.subset_of(g) != ((f & g) == f)) return fail_tuple(trial, {f, g});
        break;
      case Law::prop3_2_ii: {
        SoftSet h = (rng() & 1) ? detail::random_superset(f, rng)
                                : detail::random_soft_set(sig, rng);
        bool lhs = f.subset_of(g) && f.subset_of(h);
        if (lhs != f.subset_of(g & h)) return fail_tuple(trial, {f, g, h});
        break;
      }
      case Law::prop3_2_iii: {
        SoftSet h = detail::random_superset(f, rng);
        SoftSet i = detail::random_superset(g, rng);
        if (f.subset_of(h) && g.subset_of(i) && !(f | g).subset_of(h | i))
          return fail_tuple(trial, {f, g, h, i});
        break;
      }
      case Law::prop3_2_iv:
      case Law::prop3_3_i:
        if (!(f & f.complement()).is_null()) return fail_tuple(trial, {f});
        break;
      case Law::prop3_2_v: {
        SoftSet d = (rng() & 1) ? SoftSet(sig, g.raw() & ~f.raw()) : g;
        if (((f & d).is_null()) != f.subset_of(d.complement()))
          return fail_tuple(trial, {f, d});
        break;
      }
      case Law::prop3_2_vi:
        if (f.subset_of(g) != g.complement().subset_of(f.complement()))
          return fail_tuple(trial, {f, g});
        break;
      case Law::prop3_3_ii:
        if ((f | null) != f) return fail_tuple(trial, {f});
        break;
      case Law::prop3_3_iii: {
        std::size_t k = static_cast<std::size_t>(rng() % 5);
        std::vector<SoftSet> family;
        CellMask union_raw = 0, dist_raw = 0;
        for (std::size_t i = 0; i < k; ++i) {
          family.push_back(detail::random_soft_set(sig, rng));
          union_raw |= family.back().raw();
          dist_raw |= (f & family.back()).raw();
        }
        if ((f.raw() & union_raw) != dist_raw) {
          family.insert(family.begin(), f);
          return fail_tuple(trial, family);
        }
        break;
      }
      case Law::prop3_3_iv:
        if (null.complement() != abs) return fail_tuple(trial, {null});
        break;
      case Law::prop3_3_v:
        if (abs.complement() != null) return fail_tuple(trial, {abs});
        break;
      case Law::de_morgan:
        if ((f | g).complement() != (f.complement() & g.complement()) ||
            (f & g).complement() != (f.complement() | g.complement()))
          return fail_tuple(trial, {f, g});
        break;
    }
  }
  std::ostringstream os;
  os << law_name(law) << " held on " << trials << " randomized trials";
  return Verdict::pass(os.str());
}

enum class Theorem {
  thm3_4,
  thm3_5,
  thm3_6,
  thm3_7,
  thm3_8,
  cor3_9,
  lemma4_1,
  lemma4_1_converse,
  prop4_3,
  prop4_3_converse,
  thm4_5,
  thm4_6,
  rem4_7,
  rem4_8,
};

inline std::vector<Theorem> all_theorems() {
  return {Theorem::thm3_4,   Theorem::thm3_5, Theorem::thm3_6,
          Theorem::thm3_7,   Theorem::thm3_8, Theorem::cor3_9,
          Theorem::lemma4_1, Theorem::lemma4_1_converse,
          Theorem::prop4_3,  Theorem::prop4_3_converse,
          Theorem::thm4_5,   Theorem::thm4_6, Theorem::rem4_7, Theorem::rem4_8};
}

inline const char* theorem_name(Theorem t) {
  switch (t) {
    case Theorem::thm3_4: return "thm3.4";
    case Theorem::thm3_5: return "thm3.5";
    case Theorem::thm3_6: return "thm3.6";
    case Theorem::thm3_7: return "thm3.7";
    case Theorem::thm3_8: return "thm3.8";
    case Theorem::cor3_9: return "cor3.9";
    case Theorem::lemma4_1: return "lemma4.1";
    case Theorem::lemma4_1_converse: return "lemma4.1-converse";
    case Theorem::prop4_3: return "prop4.3";
    case Theorem::prop4_3_converse: return "prop4.3-converse";
    case Theorem::thm4_5: return "thm4.5";
    case Theorem::thm4_6: return "thm4.6";
    case Theorem::rem4_7: return "rem4.7";
    case Theorem::rem4_8: return "rem4.8";
  }
  return "?";
}

inline Theorem parse_theorem(std::string_view name) {
  for (Theorem t : all_theorems())
    if (name == theorem_name(t)) return t;
  throw std::invalid_argument("unknown theorem id '" + std::string(name) + "'");
}

/// Existence checks: the verdict holds iff a witness is found in scope
/// (these reproduce refutations, so "holds" means "refutation witnessed").
inline bool theorem_is_existential(Theorem t) {
  return t == Theorem::lemma4_1_converse || t == Theorem::prop4_3_converse ||
         t == Theorem::rem4_7 || t == Theorem::rem4_8;
}

namespace detail {

inline void require_small_family(const Topology& t, const char* what) {
  if (t.size() > 16)
    throw std::invalid_argument(std::string(what) +
                                ": the member family exceeds 16 sets; the subfamily "
                                "sweep is exponential");
}

/// All nonempty point subsets of the signature.
inline std::vector<PointMask> nonempty_subsets(const SignaturePtr& sig) {
  std::vector<PointMask> out;
  for (PointMask y = 1; y <= sig->all_points(); ++y) out.push_back(y);
  return out;
}

/// Subspace cover correspondence: every cover of ~Y by opens of the space
/// restricts to a cover of ~Y in the subspace, and finite subcovers pull
/// back and push forward along the index correspondence.
inline Verdict check_cover_correspondence(const Topology& t) {
  require_small_family(t, "cover correspondence");
  const auto& members = t.members();
  for (PointMask y : nonempty_subsets(t.signature())) {
    SoftSet target = SoftSet::constant(t.signature(), y);
    std::vector<SoftSet> restricted;
    restricted.reserve(members.size());
    for (const auto& m : members) restricted.push_back(m.restrict_to(y));
    SoftSet sub_target = SoftSet::absolute(restricted.front().signature());
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << members.size()); ++s) {
      CellMask u = 0;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (s >> i & 1) u |= members[i].raw();
      if ((u & target.raw()) != target.raw()) continue;
      std::vector<SoftSet> fam, fam_r;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (s >> i & 1) {
          fam.push_back(members[i]);
          fam_r.push_back(restricted[i]);
        }
      if (!is_cover(fam_r, sub_target))
        return Verdict::fail("restriction of an open cover of ~Y lost coverage")
            .with_sets(fam);
      std::vector<SoftSet> pulled;
      for (std::size_t idx : greedy_subcover(fam_r, sub_target.raw()))
        pulled.push_back(fam[idx]);
      if (!is_cover(pulled, target))
        return Verdict::fail(
                   "a finite subcover of the restricted cover did not pull back "
                   "to a subcover of ~Y")
            .with_sets(pulled);
      std::vector<SoftSet> pushed;
      for (std::size_t idx : greedy_subcover(fam, target.raw()))
        pushed.push_back(fam_r[idx]);
      if (!is_cover(pushed, sub_target))
        return Verdict::fail(
                   "a finite subcover of the ~Y cover did not restrict to a "
                   "subcover in the subspace")
            .with_sets(fam);
    }
  }
  return Verdict::pass("cover/subcover correspondence replayed for every nonempty Y");
}

/// Finite-scale consequence of "soft compact subspaces of soft Hausdorff
/// spaces are soft closed": finite subspaces are always soft compact, so
/// in a soft T2 space every ~Y must be soft closed.
inline Verdict check_hausdorff_constants_closed(const Topology& t) {
  Verdict t2 = check_axiom(t, Axiom::t2);
  if (!t2.holds)
    return Verdict::pass_vacuous("not soft Hausdorff: the hypothesis is empty here");
  for (PointMask y : nonempty_subsets(t.signature())) {
    SoftSet cst = SoftSet::constant(t.signature(), y);
    SetStatus st = t.status(cst);
    if (st != SetStatus::closed && st != SetStatus::clopen)
      return Verdict::fail("soft Hausdorff space with a non-closed ~Y").with_sets({cst});
  }
  return Verdict::pass("soft Hausdorff: every ~Y is soft closed");
}

/// Replay of "closed subsets of compact spaces are compact": adjoining the
/// complement of a closed ~Y to any open cover of it covers ~X; a finite
/// subcover, minus that complement, restricts to a finite subcover of ~Y.
inline Verdict check_closed_subset_compact(const Topology& t) {
  require_small_family(t, "closed-subset compactness");
  const auto& members = t.members();
  CellMask full = t.signature()->full_mask();
  for (PointMask y : nonempty_subsets(t.signature())) {
    SoftSet a = SoftSet::constant(t.signature(), y);
    SetStatus st = t.status(a);
    if (st != SetStatus::closed && st != SetStatus::clopen) continue;
    std::vector<SoftSet> restricted;
    for (const auto& m : members) restricted.push_back(m.restrict_to(y));
    SoftSet sub_target = SoftSet::absolute(restricted.front().signature());
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << members.size()); ++s) {
      CellMask u = 0;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (s >> i & 1) u |= members[i].raw();
      if ((u & a.raw()) != a.raw()) continue;
      std::vector<SoftSet> adjoined;
      std::vector<std::size_t> source;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (s >> i & 1) {
          adjoined.push_back(members[i]);
          source.push_back(i);
        }
      adjoined.push_back(a.complement());
      if (!is_cover(adjoined, SoftSet::absolute(t.signature())))
        return Verdict::fail(
                   "adjoining the complement of a closed ~Y to one of its open "
                   "covers did not cover ~X")
            .with_sets(adjoined);
      std::vector<SoftSet> trimmed;
      for (std::size_t idx : greedy_subcover(adjoined, full))
        if (idx + 1 < adjoined.size()) trimmed.push_back(restricted[source[idx]]);
      if (!is_cover(trimmed, sub_target))
        return Verdict::fail(
                   "the finite subcover of ~X, minus the adjoined complement, did "
                   "not restrict to a subcover of ~Y")
            .with_sets(adjoined);
    }
  }
  return Verdict::pass("closed-subset compactness construction replayed for every closed ~Y");
}

/// Basis criterion for compactness: the member family is a basis, and the
/// unique minimal basis of union-irreducible members is one too; both pass
/// the basis-cover criterion with its converse replay.
inline Verdict check_basis_compactness(const Topology& t) {
  require_small_family(t, "basis compactness");
  Verdict whole = basis_cover_check(t, t.members(), 16);
  if (!whole.holds) return whole;
  std::vector<SoftSet> minimal = t.minimal_basis();
  Verdict vb = t.is_basis(minimal);
  if (!vb.holds)
    return Verdict::fail("the union-irreducible members fail to form a soft basis: " +
                         vb.detail)
        .with_sets(std::move(vb.sets));
  Verdict part = basis_cover_check(t, minimal, 16);
  if (!part.holds) return part;
  std::ostringstream os;
  os << "basis cover criterion holds for the full family and the "
     << minimal.size() << "-element minimal basis";
  return Verdict::pass(os.str());
}

/// Nonnull descending closed chains intersect non-null, replayed on every
/// strictly descending chain and on the prefix-intersection chains built
/// from FIP families.
inline Verdict check_nested_chains(const Topology& t) {
  require_small_family(t, "nested chains");
  std::vector<SoftSet> closed = t.closed_sets();
  std::vector<SoftSet> nonnull;
  for (const auto& c : closed)
    if (!c.is_null()) nonnull.push_back(c);
  std::vector<SoftSet> chain;
  std::optional<Verdict> bad;
  auto extend = [&](auto&& self, std::size_t last) -> void {
    if (bad) return;
    Verdict v = nested_intersection(t, chain);
    if (!v.holds) {
      v.detail = "a nonnull descending closed chain intersected to null: " + v.detail;
      v.sets = chain;
      bad = std::move(v);
      return;
    }
    for (std::size_t j = 0; j < nonnull.size(); ++j) {
      if (j == last) continue;
      if (nonnull[j].raw() != nonnull[last].raw() && nonnull[j].subset_of(nonnull[last])) {
        chain.push_back(nonnull[j]);
        self(self, j);
        chain.pop_back();
      }
    }
  };
  for (std::size_t i = 0; i < nonnull.size(); ++i) {
    chain = {nonnull[i]};
    extend(extend, i);
    if (bad) return *bad;
  }
  // FIP families convert into chains via prefix intersections.
  std::size_t n = closed.size();
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::vector<SoftSet> family;
    CellMask meet = t.signature()->full_mask();
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) {
        family.push_back(closed[i]);
        meet &= closed[i].raw();
      }
    if (meet == 0) continue;  // no FIP: the corollary converts only FIP families
    std::vector<SoftSet> built = fip_chain(family);
    Verdict v = nested_intersection(t, built);
    if (!v.holds)
      return Verdict::fail("the prefix-intersection chain of an FIP family intersected to null")
          .with_sets(family);
  }
  return Verdict::pass("all nonnull descending closed chains and FIP-built chains intersect non-null");
}

/// Closure meets every open neighborhood: x in closure(F) forces every
/// open G containing x to intersect F.
inline Verdict check_closure_meets(const Topology& t) {
  const auto& sig = t.signature();
  if (sig->cell_count() > 12)
    throw std::invalid_argument("closure sweep: more than 2^12 soft sets to enumerate");
  for (CellMask fr = 0; fr <= sig->full_mask(); ++fr) {
    SoftSet f(sig, fr);
    SoftSet cl = t.closure(f);
    for (std::size_t x = 0; x < sig->point_count(); ++x) {
      if (!cl.contains(x)) continue;
      for (const auto& g : t.members()) {
        if (!g.contains(x)) continue;
        if ((g.raw() & f.raw()) == 0)
          return Verdict::fail("a point of the soft closure has an open neighborhood "
                               "missing the set")
              .with_points({sig->point_name(x)})
              .with_sets({f, g});
      }
    }
  }
  return Verdict::pass("every point of every soft closure meets all its open neighborhoods");
}

/// Hunts the converse failure: a point x whose every open neighborhood
/// meets F although x is not a member of closure(F). Holds iff found.
inline Verdict check_closure_converse_witness(const Topology& t) {
  const auto& sig = t.signature();
  if (sig->cell_count() > 12)
    throw std::invalid_argument("closure sweep: more than 2^12 soft sets to enumerate");
  std::vector<CellMask> order;
  for (CellMask fr = 0; fr <= sig->full_mask(); ++fr) order.push_back(fr);
  std::sort(order.begin(), order.end(), mask_canonical_less);
  for (CellMask fr : order) {
    SoftSet f(sig, fr);
    SoftSet cl = t.closure(f);
    for (std::size_t x = 0; x < sig->point_count(); ++x) {
      if (cl.contains(x)) continue;
      bool all_meet = true;
      for (const auto& g : t.members())
        if (g.contains(x) && (g.raw() & f.raw()) == 0) {
          all_meet = false;
          break;
        }
      if (all_meet) {
        std::ostringstream os;
        os << "every open neighborhood of " << sig->point_name(x) << " meets "
           << to_string(f) << " yet the point is not a member of its closure "
           << to_string(cl);
        return Verdict{true, false, os.str(), {sig->point_name(x)}, {f, cl}};
      }
    }
  }
  return Verdict::fail("no converse witness in this space");
}

/// Regular interpolation: around every point, opens shrink to opens whose
/// closures still fit. Optional standalone evaluation of the conclusion.
inline std::optional<std::pair<std::size_t, SoftSet>> interpolation_failure(const Topology& t) {
  for (std::size_t x = 0; x < t.signature()->point_count(); ++x)
    for (const auto& f : t.members()) {
      if (!f.contains(x)) continue;
      bool found = false;
      for (const auto& g : t.members())
        if (g.contains(x) && t.closure(g).subset_of(f)) {
          found = true;
          break;
        }
      if (!found) return std::make_pair(x, f);
    }
  return std::nullopt;
}

inline Verdict check_regular_interpolation(const Topology& t) {
  Verdict reg = check_axiom(t, Axiom::regular);
  if (!reg.holds)
    return Verdict::pass_vacuous("not soft regular: the hypothesis is empty here");
  if (auto bad = interpolation_failure(t))
    return Verdict::fail("soft regular space where no open around the point closes up "
                         "inside its neighborhood")
        .with_points({t.signature()->point_name(bad->first)})
        .with_sets({bad->second});
  return Verdict::pass("soft regular: every open neighborhood interpolates");
}

inline Verdict check_interpolation_without_regularity(const Topology& t) {
  Verdict reg = check_axiom(t, Axiom::regular);
  if (reg.holds) return Verdict::fail("the space is soft regular; no converse witness here");
  if (interpolation_failure(t))
    return Verdict::fail("the interpolation conclusion fails here too; no converse witness");
  std::ostringstream os;
  os << "not soft regular (" << reg.detail
     << ") although every open neighborhood interpolates";
  Verdict v = Verdict::pass(os.str());
  v.points = reg.points;
  v.sets = reg.sets;
  return v;
}

/// Regularity criterion: soft regular iff around every point avoiding a
/// closed set some open neighborhood has closure disjoint from it.
inline Verdict check_regularity_criterion(const Topology& t) {
  bool lhs = check_axiom(t, Axiom::regular).holds;
  bool rhs = true;
  std::optional<std::pair<std::size_t, SoftSet>> rhs_witness;
  for (std::size_t x = 0; x < t.signature()->point_count() && rhs; ++x)
    for (const auto& f : t.closed_sets()) {
      if (f.contains(x)) continue;
      bool found = false;
      for (const auto& g : t.members())
        if (g.contains(x) && (t.closure(g).raw() & f.raw()) == 0) {
          found = true;
          break;
        }
      if (!found) {
        rhs = false;
        rhs_witness = std::make_pair(x, f);
        break;
      }
    }
  if (lhs == rhs) {
    std::ostringstream os;
    os << "both sides agree: the space is " << (lhs ? "" : "not ") << "soft regular";
    return Verdict::pass(os.str());
  }
  Verdict v = Verdict::fail(lhs ? "soft regular but the disjoint-closure criterion fails"
                                : "the disjoint-closure criterion holds on a non-regular space");
  if (rhs_witness) {
    v.points = {t.signature()->point_name(rhs_witness->first)};
    v.sets = {rhs_witness->second};
  }
  return v;
}

/// Normality criterion: closed-in-open interpolation forces soft normal.
inline Verdict check_normality_criterion(const Topology& t) {
  for (const auto& f : t.closed_sets())
    for (const auto& g : t.members()) {
      if (!f.subset_of(g)) continue;
      bool found = false;
      for (const auto& h : t.members())
        if (f.subset_of(h) && t.closure(h).subset_of(g)) {
          found = true;
          break;
        }
      if (!found)
        return Verdict::pass_vacuous(
            "the closed-in-open interpolation hypothesis fails here: nothing to conclude");
    }
  Verdict normal = check_axiom(t, Axiom::normal);
  if (!normal.holds)
    return Verdict::fail("closed-in-open interpolation holds but the space is not soft "
                         "normal: " +
                         normal.detail)
        .with_sets(std::move(normal.sets));
  return Verdict::pass("closed-in-open interpolation holds and the space is soft normal");
}

/// Weak (point-disjoint) regularity without regularity proper: holds iff
/// this space separates the two readings.
inline Verdict check_wkm_gap(const Topology& t) {
  Verdict weak = wkm_condition(t, NonMembership::point_disjoint);
  Verdict reg = check_axiom(t, Axiom::regular);
  if (weak.holds && !reg.holds) {
    Verdict v = Verdict::pass(
        "the point-disjoint separation condition holds although the space is not "
        "soft regular (" +
        reg.detail + ")");
    v.points = reg.points;
    v.sets = reg.sets;
    return v;
  }
  return Verdict::fail(weak.holds ? "the space is soft regular; the readings agree here"
                                  : "the point-disjoint condition already fails here");
}

/// Soft normal with closed points but not soft T3: holds iff this space
/// witnesses the gap.
inline Verdict check_t4_without_t3(const Topology& t) {
  Verdict normal = check_axiom(t, Axiom::normal);
  Verdict pts = points_closed(t);
  Verdict t3 = check_axiom(t, Axiom::t3);
  if (normal.holds && pts.holds && !t3.holds) {
    Verdict v = Verdict::pass(
        "soft normal with every soft point closed, yet not soft T3 (" + t3.detail + ")");
    v.points = t3.points;
    v.sets = t3.sets;
    return v;
  }
  return Verdict::fail("this space does not separate soft normality from soft T3");
}

inline Verdict check_theorem_on_space(Theorem thm, const Topology& t) {
  switch (thm) {
    case Theorem::thm3_4: return check_cover_correspondence(t);
    case Theorem::thm3_5: return check_hausdorff_constants_closed(t);
    case Theorem::thm3_6: return check_closed_subset_compact(t);
    case Theorem::thm3_7: return check_basis_compactness(t);
    case Theorem::thm3_8: return fip_equivalence(t);
    case Theorem::cor3_9: return check_nested_chains(t);
    case Theorem::lemma4_1: return check_closure_meets(t);
    case Theorem::lemma4_1_converse: return check_closure_converse_witness(t);
    case Theorem::prop4_3: return check_regular_interpolation(t);
    case Theorem::prop4_3_converse: return check_interpolation_without_regularity(t);
    case Theorem::thm4_5: return check_regularity_criterion(t);
    case Theorem::thm4_6: return check_normality_criterion(t);
    case Theorem::rem4_7: return check_wkm_gap(t);
    case Theorem::rem4_8: return check_t4_without_t3(t);
  }
  throw std::invalid_argument("unknown theorem id");
}

}  // namespace detail

struct EnumBounds {
  std::size_t max_points = 1;
  std::size_t max_params = 1;
};

/// Replays one theorem check on a given space.
inline Verdict verify_theorem(Theorem thm, const Topology& space) {
  return detail::check_theorem_on_space(thm, space);
}

/// Replays one theorem check over every isomorph-reduced topology within
/// the bounds. Universal checks hold iff no enumerated space violates
/// them; existential (refutation) checks hold iff some space witnesses
/// them, and a negative answer is a bounded non-existence claim.
inline Verdict verify_theorem(Theorem thm, const EnumBounds& bounds) {
  std::vector<std::pair<std::size_t, std::size_t>> sizes;
  for (std::size_t nx = 1; nx <= bounds.max_points; ++nx)
    for (std::size_t ne = 1; ne <= bounds.max_params; ++ne) sizes.emplace_back(nx, ne);
  std::sort(sizes.begin(), sizes.end(), [](auto a, auto b) {
    auto ka = std::tuple{a.first * a.second, a.first, a.second};
    auto kb = std::tuple{b.first * b.second, b.first, b.second};
    return ka < kb;
  });
  bool existential = theorem_is_existential(thm);
  std::size_t spaces = 0;
  for (auto [nx, ne] : sizes) {
    SignaturePtr sig = detail::generic_signature(nx, ne);
    for (const Topology& t : enum_topologies(sig)) {
      ++spaces;
      Verdict v = detail::check_theorem_on_space(thm, t);
      if (existential && v.holds) {
        std::ostringstream os;
        os << "witness space over |X|=" << nx << ", |E|=" << ne << " with members ";
        for (const auto& m : t.members()) os << to_string(m) << ' ';
        os << "; " << v.detail;
        Verdict out = Verdict::pass(os.str());
        out.points = v.points;
        out.sets = t.members();
        return out;
      }
      if (!existential && !v.holds) {
        std::ostringstream os;
        os << "violated over |X|=" << nx << ", |E|=" << ne << ": " << v.detail;
        Verdict out = Verdict::fail(os.str());
        out.points = v.points;
        out.sets = t.members();
        return out;
      }
    }
  }
  std::ostringstream os;
  if (existential) {
    os << "no witness among the " << spaces
       << " isomorph-reduced topologies with |X|<=" << bounds.max_points
       << ", |E|<=" << bounds.max_params << " (bounded non-existence)";
    return Verdict::fail(os.str());
  }
  os << "held on all " << spaces
     << " isomorph-reduced topologies with |X|<=" << bounds.max_points
     << ", |E|<=" << bounds.max_params;
  return Verdict::pass(os.str());
}

}  // namespace softtop
