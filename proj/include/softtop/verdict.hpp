#pragma once

#include <string>
#include <utility>
#include <vector>

#include "softtop/soft_set.hpp"

namespace softtop {

/// Decision plus evidence. Every decider returns one: `holds` is the
/// boolean answer, `detail` a one-line justification, and `points`/`sets`
/// carry the tuple that certifies failure (or the certificate of success
/// for existential checks). Witnesses are replayable: re-running the
/// relevant definition on them reproduces the verdict.
struct Verdict {
  bool holds = false;
  /// True when the verdict holds only because the quantifier domain was
  /// empty (e.g. point-separation axioms on a one-point universe).
  bool vacuous = false;
  std::string detail;
  std::vector<std::string> points;
  std::vector<SoftSet> sets;

  explicit operator bool() const { return holds; }

  static Verdict pass(std::string detail) { return {true, false, std::move(detail), {}, {}}; }
  static Verdict pass_vacuous(std::string detail) {
    return {true, true, std::move(detail), {}, {}};
  }
  static Verdict fail(std::string detail) { return {false, false, std::move(detail), {}, {}}; }

  Verdict&& with_points(std::vector<std::string> ps) && {
    points = std::move(ps);
    return std::move(*this);
  }
  Verdict&& with_sets(std::vector<SoftSet> ss) && {
    sets = std::move(ss);
    return std::move(*this);
  }

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.holds == b.holds && a.vacuous == b.vacuous && a.detail == b.detail &&
           a.points == b.points && a.sets == b.sets;
  }
  friend bool operator!=(const Verdict& a, const Verdict& b) { return !(a == b); }
};

}  // namespace softtop
