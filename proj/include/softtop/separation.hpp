#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "softtop/topology.hpp"
#include "softtop/verdict.hpp"

namespace softtop {

enum class Axiom { t0, t1, t2, regular, t3, normal, t4 };

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::t0: return "T0";
    case Axiom::t1: return "T1";
    case Axiom::t2: return "T2";
    case Axiom::regular: return "regular";
    case Axiom::t3: return "T3";
    case Axiom::normal: return "normal";
    case Axiom::t4: return "T4";
  }
  return "?";
}

/// The two readings of "x is not in (G, E)". `not_member` negates the
/// for-all membership (some section misses x); `point_disjoint` demands
/// (x, E) n (G, E) = Phi_E (every section misses x). They differ, and the
/// choice changes which spaces count as soft regular.
enum class NonMembership { not_member, point_disjoint };

inline const char* to_string(NonMembership f) {
  return f == NonMembership::not_member ? "not-member" : "point-disjoint";
}

namespace detail {

/// Opens F with member(x, F), i.e. x in F(e) for every e.
inline std::vector<SoftSet> opens_containing(const Topology& t, std::size_t x) {
  std::vector<SoftSet> out;
  for (const auto& m : t.members())
    if (m.contains(x)) out.push_back(m);
  return out;
}

/// First (by canonical member order) disjoint pair of opens with
/// member(x, F1) and G subseteq F2.
inline std::optional<std::pair<SoftSet, SoftSet>> separate_point_set(const Topology& t,
                                                                     std::size_t x,
                                                                     const SoftSet& g) {
  for (const auto& f1 : t.members()) {
    if (!f1.contains(x)) continue;
    for (const auto& f2 : t.members()) {
      if (!g.subset_of(f2)) continue;
      if ((f1.raw() & f2.raw()) == 0) return std::make_pair(f1, f2);
    }
  }
  return std::nullopt;
}

inline std::optional<std::pair<SoftSet, SoftSet>> separate_set_pair(const Topology& t,
                                                                    const SoftSet& a,
                                                                    const SoftSet& b) {
  for (const auto& f1 : t.members()) {
    if (!a.subset_of(f1)) continue;
    for (const auto& f2 : t.members()) {
      if (!b.subset_of(f2)) continue;
      if ((f1.raw() & f2.raw()) == 0) return std::make_pair(f1, f2);
    }
  }
  return std::nullopt;
}

/// Exists an open containing x but, in the not-member sense, not y.
inline bool separated_t0(const Topology& t, std::size_t x, std::size_t y) {
  for (const auto& m : t.members())
    if (m.contains(x) && !m.contains(y)) return true;
  return false;
}

}  // namespace detail

/// Point-separation by disjoint opens and point-to-closed-set /
/// closed-pair separation. Quantifier sweeps run in canonical order
/// (points by signature index, closed sets canonically sorted), so the
/// reported witness is the canonically smallest failing tuple.
inline Verdict check_axiom(const Topology& t, Axiom axiom);

/// Soft regularity under a chosen non-membership reading: for every point
/// x and soft closed G that x avoids (in the chosen sense), disjoint opens
/// F1 (containing x) and F2 (containing G) must exist. The not-member form
/// is soft regularity proper; the point-disjoint form is the weaker
/// condition that a one-point two-parameter space already separates from
/// regularity.
inline Verdict wkm_condition(const Topology& t, NonMembership form) {
  const auto& sig = *t.signature();
  std::vector<SoftSet> closed = t.closed_sets();
  std::size_t instances = 0;
  std::optional<std::string> exemplar;
  for (std::size_t x = 0; x < sig.point_count(); ++x)
    for (const auto& g : closed) {
      bool qualifies = form == NonMembership::not_member ? !g.contains(x)
                                                         : g.disjoint_from(x);
      if (!qualifies) continue;
      ++instances;
      auto sep = detail::separate_point_set(t, x, g);
      if (!sep) {
        std::ostringstream os;
        os << "point " << sig.point_name(x) << " and soft closed set " << to_string(g)
           << " (" << to_string(form)
           << " reading) admit no disjoint soft open separation";
        return Verdict::fail(os.str())
            .with_points({sig.point_name(x)})
            .with_sets({g});
      }
      if (!exemplar) {
        std::ostringstream os;
        os << "e.g. " << sig.point_name(x) << " vs " << to_string(g) << " separated by "
           << to_string(sep->first) << " and " << to_string(sep->second);
        exemplar = os.str();
      }
    }
  std::ostringstream os;
  os << "all " << instances << " qualifying (point, closed set) pairs separated";
  if (exemplar) os << "; " << *exemplar;
  return Verdict::pass(os.str());
}

namespace detail {

inline Verdict conjunction(Verdict a, const char* a_name, Verdict b, const char* b_name) {
  if (!a.holds) {
    a.detail = std::string(a_name) + " fails: " + a.detail;
    return a;
  }
  if (!b.holds) {
    b.detail = std::string(b_name) + " fails: " + b.detail;
    return b;
  }
  Verdict v = Verdict::pass(std::string(a_name) + " and " + b_name + " both hold");
  v.vacuous = a.vacuous && b.vacuous;
  return v;
}

}  // namespace detail

inline Verdict check_axiom(const Topology& t, Axiom axiom) {
  const auto& sig = *t.signature();
  std::size_t n = sig.point_count();
  switch (axiom) {
    case Axiom::t0: {
      if (n < 2)
        return Verdict::pass_vacuous("fewer than two points: no distinct pairs to separate");
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (!detail::separated_t0(t, x, y) && !detail::separated_t0(t, y, x))
            return Verdict::fail("neither point has a soft open neighborhood missing the other")
                .with_points({sig.point_name(x), sig.point_name(y)});
      return Verdict::pass("every distinct pair is separated in at least one direction");
    }
    case Axiom::t1: {
      if (n < 2)
        return Verdict::pass_vacuous("fewer than two points: no distinct pairs to separate");
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y) continue;
          if (!detail::separated_t0(t, x, y))
            return Verdict::fail("no soft open set contains the first point but not the second")
                .with_points({sig.point_name(x), sig.point_name(y)});
        }
      return Verdict::pass("every ordered pair of distinct points is separated");
    }
    case Axiom::t2: {
      if (n < 2)
        return Verdict::pass_vacuous("fewer than two points: no distinct pairs to separate");
      std::optional<std::string> exemplar;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
          std::optional<std::pair<SoftSet, SoftSet>> found;
          for (const auto& f1 : t.members()) {
            if (!f1.contains(x)) continue;
            for (const auto& f2 : t.members()) {
              if (!f2.contains(y)) continue;
              if ((f1.raw() & f2.raw()) == 0) {
                found = std::make_pair(f1, f2);
                break;
              }
            }
            if (found) break;
          }
          if (!found)
            return Verdict::fail("no disjoint soft open sets contain the two points")
                .with_points({sig.point_name(x), sig.point_name(y)});
          if (!exemplar)
            exemplar = "e.g. " + sig.point_name(x) + "," + sig.point_name(y) +
                       " separated by " + to_string(found->first) + " and " +
                       to_string(found->second);
        }
      return Verdict::pass("every pair of distinct points has disjoint soft open neighborhoods" +
                           (exemplar ? "; " + *exemplar : std::string{}));
    }
    case Axiom::regular:
      return wkm_condition(t, NonMembership::not_member);
    case Axiom::t3:
      return detail::conjunction(check_axiom(t, Axiom::regular), "soft regular",
                                 check_axiom(t, Axiom::t1), "soft T1");
    case Axiom::normal: {
      std::vector<SoftSet> closed = t.closed_sets();
      std::size_t instances = 0;
      std::optional<std::string> exemplar;
      for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = i; j < closed.size(); ++j) {
          if ((closed[i].raw() & closed[j].raw()) != 0) continue;
          ++instances;
          auto sep = detail::separate_set_pair(t, closed[i], closed[j]);
          if (!sep) {
            std::ostringstream os;
            os << "soft closed sets " << to_string(closed[i]) << " and "
               << to_string(closed[j])
               << " have null intersection but no disjoint soft open supersets";
            return Verdict::fail(os.str()).with_sets({closed[i], closed[j]});
          }
          if (!exemplar && !closed[j].is_null()) {
            std::ostringstream os;
            os << "e.g. " << to_string(closed[i]) << "," << to_string(closed[j])
               << " separated by " << to_string(sep->first) << " and "
               << to_string(sep->second);
            exemplar = os.str();
          }
        }
      std::ostringstream os;
      os << "all " << instances << " disjoint closed pairs separated";
      if (exemplar) os << "; " << *exemplar;
      return Verdict::pass(os.str());
    }
    case Axiom::t4:
      return detail::conjunction(check_axiom(t, Axiom::normal), "soft normal",
                                 check_axiom(t, Axiom::t1), "soft T1");
  }
  throw std::invalid_argument("unknown separation axiom");
}

/// Every soft point (x, E) is soft closed. Implies soft T1; the converse
/// fails in general, which the search module can witness.
inline Verdict points_closed(const Topology& t) {
  const auto& sig = *t.signature();
  for (std::size_t x = 0; x < sig.point_count(); ++x) {
    SetStatus st = t.status(SoftSet::soft_point(t.signature(), x));
    if (st != SetStatus::closed && st != SetStatus::clopen)
      return Verdict::fail("the soft point of " + sig.point_name(x) + " is not soft closed")
          .with_points({sig.point_name(x)});
  }
  return Verdict::pass("every soft point is soft closed");
}

}  // namespace softtop
