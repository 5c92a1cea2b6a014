#pragma once

#include <random>
#include <vector>

#include "softtop/catalog.hpp"
#include "softtop/softtop.hpp"

namespace tsupport {

using namespace softtop;

// Space A: X = {h}, E = {e1, e2}, members Phi, ~X, F1 = <{h}|{}>,
// F2 = <{}|{h}>. Built from raw sections, independently of the catalog.
inline SignaturePtr sig_a() { return Signature::make({"h"}, {"e1", "e2"}); }

inline SoftSet a_f1(const SignaturePtr& sig) {
  std::vector<PointMask> s{1, 0};
  return SoftSet::from_sections(sig, s);
}
inline SoftSet a_f2(const SignaturePtr& sig) {
  std::vector<PointMask> s{0, 1};
  return SoftSet::from_sections(sig, s);
}
inline Topology space_a(const SignaturePtr& sig) {
  std::vector<SoftSet> fam{SoftSet::null_set(sig), SoftSet::absolute(sig), a_f1(sig),
                           a_f2(sig)};
  return Topology::from_members(sig, fam);
}

// Space B: X = {h}, E = {e1..e5}, members Phi, ~X, F1 = <{}|{h}|{}|{h}|{}>,
// F2 = <{h}|{h}|{h}|{}|{h}>, F3 = <{}|{h}|{}|{}|{}>.
inline SignaturePtr sig_b() { return Signature::make({"h"}, {"e1", "e2", "e3", "e4", "e5"}); }

inline SoftSet b_f1(const SignaturePtr& sig) {
  std::vector<PointMask> s{0, 1, 0, 1, 0};
  return SoftSet::from_sections(sig, s);
}
inline SoftSet b_f2(const SignaturePtr& sig) {
  std::vector<PointMask> s{1, 1, 1, 0, 1};
  return SoftSet::from_sections(sig, s);
}
inline SoftSet b_f3(const SignaturePtr& sig) {
  std::vector<PointMask> s{0, 1, 0, 0, 0};
  return SoftSet::from_sections(sig, s);
}
inline Topology space_b(const SignaturePtr& sig) {
  std::vector<SoftSet> fam{SoftSet::null_set(sig), SoftSet::absolute(sig), b_f1(sig),
                           b_f2(sig), b_f3(sig)};
  return Topology::from_members(sig, fam);
}

inline SoftSet rand_set(const SignaturePtr& sig, std::mt19937_64& rng) {
  return SoftSet(sig, static_cast<CellMask>(rng()) & sig->full_mask());
}

inline SignaturePtr sig_of(std::size_t nx, std::size_t ne) {
  std::vector<std::string> xs, es;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back(std::string(1, char('a' + i)));
  for (std::size_t i = 1; i <= ne; ++i) es.push_back("e" + std::to_string(i));
  return Signature::make(xs, es);
}

}  // namespace tsupport
