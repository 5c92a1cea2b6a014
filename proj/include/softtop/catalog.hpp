#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softtop/search.hpp"
#include "softtop/topology.hpp"

namespace softtop {

/// What a cataloged space is expected to decide for one property. The
/// `vacuous` flag marks expectations that hold only because the quantifier
/// domain is empty (point-separation axioms on one-point universes), so
/// reports stay honest about how strong e.g. "Hausdorff" is there.
struct Expectation {
  Property property;
  bool expected;
  bool vacuous = false;
};

/// A hard-coded example space with its expected property profile, used as
/// a golden regression fixture. Replaying every decider on `space` must
/// reproduce `expectations` exactly.
struct CatalogEntry {
  std::string id;
  SignaturePtr sig;
  std::vector<std::pair<std::string, SoftSet>> named_sets;
  Topology space;
  std::vector<Expectation> expectations;
  std::string note;
};

inline std::vector<std::string> catalog_ids() { return {"ex4.4", "ex4.9"}; }

/// The two cataloged spaces:
///   ex4.4: one point, two parameters, all four soft sets open. Soft T4
///           (normal, points closed) but not soft T3, and the standing
///           witness that the point-disjoint separation reading differs
///           from soft regularity.
///   ex4.9: one point, five parameters, five opens. Soft compact and
///           (vacuously) soft Hausdorff, yet not soft normal.
inline CatalogEntry example(std::string_view id) {
  if (id == "ex4.4") {
    SignaturePtr sig = Signature::make({"h"}, {"e1", "e2"});
    std::vector<PointMask> f1{1, 0}, f2{0, 1};
    SoftSet F1 = SoftSet::from_sections(sig, f1);
    SoftSet F2 = SoftSet::from_sections(sig, f2);
    std::vector<SoftSet> family{SoftSet::null_set(sig), SoftSet::absolute(sig), F1, F2};
    CatalogEntry entry{
        std::string(id),
        sig,
        {{"F1", F1}, {"F2", F2}},
        Topology::from_members(sig, family),
        {
            {Property::normal, true},
            {Property::t1, true, true},
            {Property::t4, true},
            {Property::regular, false},
            {Property::t3, false},
            {Property::points_closed, true},
            {Property::wkm_point_disjoint, true},
            {Property::compact, true},
        },
        "one-point universe, two parameters, all four soft sets open: soft T4 "
        "but not soft T3; separates the point-disjoint reading of regularity "
        "from the not-member reading",
    };
    return entry;
  }
  if (id == "ex4.9") {
    SignaturePtr sig = Signature::make({"h"}, {"e1", "e2", "e3", "e4", "e5"});
    std::vector<PointMask> f1{0, 1, 0, 1, 0}, f2{1, 1, 1, 0, 1}, f3{0, 1, 0, 0, 0};
    SoftSet F1 = SoftSet::from_sections(sig, f1);
    SoftSet F2 = SoftSet::from_sections(sig, f2);
    SoftSet F3 = SoftSet::from_sections(sig, f3);
    std::vector<SoftSet> family{SoftSet::null_set(sig), SoftSet::absolute(sig), F1, F2, F3};
    CatalogEntry entry{
        std::string(id),
        sig,
        {{"F1", F1}, {"F2", F2}, {"F3", F3}},
        Topology::from_members(sig, family),
        {
            {Property::compact, true},
            {Property::t2, true, true},
            {Property::normal, false},
            {Property::t4, false},
        },
        "one-point universe, five parameters: soft compact and vacuously soft "
        "Hausdorff, yet not soft normal",
    };
    return entry;
  }
  if (id == "ex4.2")
    throw std::invalid_argument(
        "catalog: 'ex4.2' is deliberately absent (its thirty soft sets come from "
        "external data this catalog does not reproduce)");
  throw std::invalid_argument("catalog: unknown id '" + std::string(id) + "'");
}

}  // namespace softtop
