#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "softtop/soft_set.hpp"
#include "softtop/verdict.hpp"

namespace softtop {

enum class SetStatus { open, closed, clopen, neither };

inline const char* to_string(SetStatus s) {
  switch (s) {
    case SetStatus::open: return "open";
    case SetStatus::closed: return "closed";
    case SetStatus::clopen: return "clopen";
    case SetStatus::neither: return "neither";
  }
  return "?";
}

/// How the second topology relates to the first by member inclusion:
/// `finer` means the second contains the first.
enum class Comparison { equal, finer, coarser, incomparable };

inline const char* to_string(Comparison c) {
  switch (c) {
    case Comparison::equal: return "equal";
    case Comparison::finer: return "finer";
    case Comparison::coarser: return "coarser";
    case Comparison::incomparable: return "incomparable";
  }
  return "?";
}

/// A validated soft topology: a canonically ordered, deduplicated family of
/// soft sets containing Phi_E and ~X and closed under pairwise union and
/// intersection (finite member lists make arbitrary unions reduce to
/// iterated pairwise ones). Immutable after construction; all queries pure.
class Topology {
 public:
  /// Checks the three axioms on a family. On failure the witness names the
  /// violated axiom and carries the offending member pair (and the missing
  /// combination); the canonically smallest offender is reported.
  static Verdict validate(const SignaturePtr& sig, std::span<const SoftSet> family) {
    for (const auto& m : family)
      require_same_signature(sig, m.signature(), "topology validation");
    std::vector<SoftSet> fam = canonicalize(family);
    SoftSet null = SoftSet::null_set(sig), abs = SoftSet::absolute(sig);
    if (!sorted_contains(fam, null))
      return Verdict::fail("axiom (i) violated: the null soft set is not a member")
          .with_sets({null});
    if (!sorted_contains(fam, abs))
      return Verdict::fail("axiom (i) violated: the absolute soft set is not a member")
          .with_sets({abs});
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        SoftSet u = fam[i] | fam[j];
        if (!sorted_contains(fam, u))
          return Verdict::fail("axiom (ii) violated: the union of " + to_string(fam[i]) +
                               " and " + to_string(fam[j]) + " is not a member")
              .with_sets({fam[i], fam[j], u});
        SoftSet n = fam[i] & fam[j];
        if (!sorted_contains(fam, n))
          return Verdict::fail("axiom (iii) violated: the intersection of " +
                               to_string(fam[i]) + " and " + to_string(fam[j]) +
                               " is not a member")
              .with_sets({fam[i], fam[j], n});
      }
    return Verdict::pass("all three soft topology axioms hold on the " +
                         std::to_string(fam.size()) + "-member family");
  }

  /// Validating constructor; throws on an invalid family.
  static Topology from_members(const SignaturePtr& sig, std::span<const SoftSet> family) {
    Verdict v = validate(sig, family);
    if (!v.holds) throw std::invalid_argument("not a soft topology: " + v.detail);
    return Topology(sig, canonicalize(family));
  }

  /// Smallest soft topology containing the seeds: fixpoint of pairwise
  /// unions/intersections over seeds u {Phi_E, ~X}, with canonical dedup.
  /// The member count is capped by 2^(|X|*|E|) by construction.
  static Topology generate(const SignaturePtr& sig, std::span<const SoftSet> seeds) {
    for (const auto& s : seeds)
      require_same_signature(sig, s.signature(), "topology generation");
    std::unordered_set<CellMask> seen{0, sig->full_mask()};
    std::vector<CellMask> all(seen.begin(), seen.end());
    std::vector<CellMask> fresh = all;
    for (const auto& s : seeds)
      if (seen.insert(s.raw()).second) {
        all.push_back(s.raw());
        fresh.push_back(s.raw());
      }
    while (!fresh.empty()) {
      std::vector<CellMask> next;
      for (CellMask f : fresh)
        for (std::size_t i = 0; i < all.size(); ++i) {
          for (CellMask c : {f | all[i], f & all[i]})
            if (seen.insert(c).second) next.push_back(c);
        }
      for (CellMask c : next) all.push_back(c);
      fresh = std::move(next);
    }
    std::vector<SoftSet> members;
    members.reserve(all.size());
    for (CellMask m : all) members.emplace_back(sig, m);
    std::sort(members.begin(), members.end(), CanonicalLess{});
    return Topology(sig, std::move(members));
  }

  static Topology indiscrete(const SignaturePtr& sig) {
    return generate(sig, std::span<const SoftSet>{});
  }

  /// Every soft set over the signature is open. Only sensible at desk
  /// scale (2^cells members).
  static Topology discrete(const SignaturePtr& sig) {
    if (sig->cell_count() > 20)
      throw std::invalid_argument("discrete topology: too many cells to materialize");
    std::vector<SoftSet> members;
    for (CellMask m = 0; m <= sig->full_mask(); ++m) members.emplace_back(sig, m);
    std::sort(members.begin(), members.end(), CanonicalLess{});
    return Topology(sig, std::move(members));
  }

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<SoftSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(const SoftSet& a) const {
    require_same_signature(sig_, a.signature(), "topology membership");
    return sorted_contains(members_, a);
  }

  SetStatus status(const SoftSet& a) const {
    bool open = contains(a), closed = contains(a.complement());
    if (open && closed) return SetStatus::clopen;
    if (open) return SetStatus::open;
    if (closed) return SetStatus::closed;
    return SetStatus::neither;
  }

  /// Complements of the members, in canonical order.
  std::vector<SoftSet> closed_sets() const {
    std::vector<SoftSet> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.complement());
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

  /// Smallest soft closed superset: the intersection of all soft closed
  /// supersets (well-defined: ~X is closed and closed sets are closed
  /// under intersection).
  SoftSet closure(const SoftSet& a) const {
    require_same_signature(sig_, a.signature(), "closure");
    CellMask acc = sig_->full_mask();
    for (const auto& m : members_) {
      CellMask closed = m.raw() ^ sig_->full_mask();
      if ((closed & a.raw()) == a.raw()) acc &= closed;
    }
    return SoftSet(sig_, acc);
  }

  /// Largest soft open subset; dual of closure.
  SoftSet interior(const SoftSet& a) const {
    require_same_signature(sig_, a.signature(), "interior");
    CellMask acc = 0;
    for (const auto& m : members_)
      if ((m.raw() & a.raw()) == m.raw()) acc |= m.raw();
    return SoftSet(sig_, acc);
  }

  /// Soft relative topology on a nonempty Y subseteq X: the restrictions of
  /// every member, deduplicated, over the sub-universe signature. Valid by
  /// construction (restriction preserves unions and intersections).
  Topology subspace(PointMask Y) const {
    std::vector<SoftSet> restricted;
    restricted.reserve(members_.size());
    for (const auto& m : members_) restricted.push_back(m.restrict_to(Y));
    SignaturePtr sub = restricted.front().signature();
    return Topology(sub, canonicalize(restricted));
  }

  Topology subspace(std::span<const std::string> point_names) const {
    return subspace(sig_->point_mask(point_names));
  }

  /// Success iff every member is a union of elements of B (the empty union
  /// is Phi_E). B must be drawn from the members. The failure witness is
  /// the canonically smallest non-representable member.
  Verdict is_basis(std::span<const SoftSet> basis) const {
    for (const auto& b : basis)
      if (!contains(b))
        throw std::invalid_argument("soft basis check: " + to_string(b) +
                                    " is not a member of the topology");
    for (const auto& m : members_) {
      CellMask u = 0;
      for (const auto& b : basis)
        if ((b.raw() & m.raw()) == b.raw()) u |= b.raw();
      if (u != m.raw())
        return Verdict::fail("member " + to_string(m) +
                             " is not a union of elements of the candidate basis")
            .with_sets({m});
    }
    return Verdict::pass("every member is a union of elements of the " +
                         std::to_string(basis.size()) + "-element basis");
  }

  /// The unique minimal basis of a finite soft topology: its
  /// union-irreducible members.
  std::vector<SoftSet> minimal_basis() const {
    std::vector<SoftSet> out;
    for (const auto& m : members_) {
      if (m.is_null()) continue;
      CellMask below = 0;
      for (const auto& b : members_)
        if (b.raw() != m.raw() && (b.raw() & m.raw()) == b.raw()) below |= b.raw();
      if (below != m.raw()) out.push_back(m);
    }
    return out;
  }

  Comparison compare(const Topology& other) const {
    require_same_signature(sig_, other.sig_, "topology comparison");
    bool other_finer = std::includes(other.members_.begin(), other.members_.end(),
                                     members_.begin(), members_.end(), CanonicalLess{});
    bool other_coarser = std::includes(members_.begin(), members_.end(),
                                       other.members_.begin(), other.members_.end(),
                                       CanonicalLess{});
    if (other_finer && other_coarser) return Comparison::equal;
    if (other_finer) return Comparison::finer;
    if (other_coarser) return Comparison::coarser;
    return Comparison::incomparable;
  }

  friend bool operator==(const Topology& a, const Topology& b) {
    return same_signature(a.sig_, b.sig_) && a.raw_members() == b.raw_members();
  }
  friend bool operator!=(const Topology& a, const Topology& b) { return !(a == b); }

  std::vector<CellMask> raw_members() const {
    std::vector<CellMask> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.raw());
    return out;
  }

 private:
  Topology(SignaturePtr sig, std::vector<SoftSet> members)
      : sig_(std::move(sig)), members_(std::move(members)) {}

  static std::vector<SoftSet> canonicalize(std::span<const SoftSet> family) {
    std::vector<SoftSet> fam(family.begin(), family.end());
    std::sort(fam.begin(), fam.end(), CanonicalLess{});
    fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
    return fam;
  }

  static bool sorted_contains(const std::vector<SoftSet>& fam, const SoftSet& a) {
    return std::binary_search(fam.begin(), fam.end(), a, CanonicalLess{});
  }

  SignaturePtr sig_;
  std::vector<SoftSet> members_;
};

/// Canonical order on topologies over one signature: lexicographic on the
/// canonically sorted member lists. Used for deterministic enumeration
/// streams and isomorph-reduced canonical forms.
inline bool canonical_less(const Topology& a, const Topology& b) {
  return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                      b.members().begin(), b.members().end(),
                                      [](const SoftSet& x, const SoftSet& y) {
                                        return canonical_less(x, y);
                                      });
}

}  // namespace softtop
