#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "softtop/signature.hpp"

namespace softtop {

/// A soft set over a signature: a total map assigning to every parameter e
/// a section F(e) subseteq X. Stored as one CellMask, sections packed in
/// parameter-major order, so all lattice operations are single-word ops.
/// Values are immutable; identity is structural (signature + sections).
class SoftSet {
 public:
  SoftSet(SignaturePtr sig, CellMask bits) : sig_(std::move(sig)), bits_(bits) {
    if (!sig_) throw std::invalid_argument("soft set: null signature");
    if ((bits_ & ~sig_->full_mask()) != 0)
      throw std::invalid_argument("soft set: section bits outside the signature");
  }

  /// Phi_E: every section empty.
  static SoftSet null_set(SignaturePtr sig) { return SoftSet(std::move(sig), 0); }

  /// ~X: every section is the whole universe.
  static SoftSet absolute(SignaturePtr sig) {
    CellMask full = sig->full_mask();
    return SoftSet(std::move(sig), full);
  }

  /// ~Y for Y subseteq X: every section equals Y. Y = empty gives Phi_E,
  /// Y = X gives ~X.
  static SoftSet constant(SignaturePtr sig, PointMask Y) {
    if ((Y & ~sig->all_points()) != 0)
      throw std::invalid_argument("soft set: constant section has unknown points");
    CellMask bits = 0;
    for (std::size_t e = 0; e < sig->param_count(); ++e)
      bits |= CellMask{Y} << (e * sig->point_count());
    return SoftSet(std::move(sig), bits);
  }

  static SoftSet constant(SignaturePtr sig, std::span<const std::string> point_names) {
    PointMask m = sig->point_mask(point_names);
    return constant(std::move(sig), m);
  }

  /// The soft point (x, E): every section is {x}.
  static SoftSet soft_point(SignaturePtr sig, std::size_t point) {
    if (point >= sig->point_count())
      throw std::invalid_argument("soft set: point index out of range");
    return constant(std::move(sig), PointMask{1} << point);
  }

  static SoftSet soft_point(SignaturePtr sig, std::string_view point_name) {
    std::size_t x = sig->point_index(point_name);
    return soft_point(std::move(sig), x);
  }

  /// Build from one PointMask per parameter, in parameter order.
  static SoftSet from_sections(SignaturePtr sig, std::span<const PointMask> sections) {
    if (sections.size() != sig->param_count())
      throw std::invalid_argument("soft set: expected one section per parameter");
    CellMask bits = 0;
    for (std::size_t e = 0; e < sections.size(); ++e) {
      if ((sections[e] & ~sig->all_points()) != 0)
        throw std::invalid_argument("soft set: section has unknown points");
      bits |= CellMask{sections[e]} << (e * sig->point_count());
    }
    return SoftSet(std::move(sig), bits);
  }

  const SignaturePtr& signature() const { return sig_; }
  CellMask raw() const { return bits_; }

  PointMask section(std::size_t e) const {
    if (e >= sig_->param_count())
      throw std::invalid_argument("soft set: parameter index out of range");
    return (bits_ >> (e * sig_->point_count())) & sig_->all_points();
  }

  bool is_null() const { return bits_ == 0; }
  bool is_absolute() const { return bits_ == sig_->full_mask(); }

  /// True iff every section equals the same Y (the ~Y shape).
  bool is_constant() const {
    PointMask first = section(0);
    for (std::size_t e = 1; e < sig_->param_count(); ++e)
      if (section(e) != first) return false;
    return true;
  }

  SoftSet complement() const { return SoftSet(sig_, bits_ ^ sig_->full_mask()); }

  bool subset_of(const SoftSet& o) const {
    require_same_signature(sig_, o.sig_, "subset");
    return (bits_ & o.bits_) == bits_;
  }

  /// Membership x in (F, E): x in F(e) for every parameter e.
  bool contains(std::size_t point) const {
    CellMask col = sig_->point_column(point);
    return (bits_ & col) == col;
  }
  bool contains(std::string_view point_name) const {
    return contains(sig_->point_index(point_name));
  }

  /// Point-disjointness: (x, E) and this soft set have null intersection,
  /// i.e. x lies in no section. Strictly stronger than !contains(x).
  bool disjoint_from(std::size_t point) const {
    return (bits_ & sig_->point_column(point)) == 0;
  }
  bool disjoint_from(std::string_view point_name) const {
    return disjoint_from(sig_->point_index(point_name));
  }

  /// Sub-soft set over a nonempty Y subseteq X: every section meets Y and
  /// the result lives over the sub-universe signature (points Y, same E).
  SoftSet restrict_to(PointMask Y) const {
    SignaturePtr sub = sig_->sub_signature(Y);
    std::vector<PointMask> sections(sub->param_count(), 0);
    for (std::size_t e = 0; e < sig_->param_count(); ++e) {
      PointMask cut = section(e) & Y, packed = 0;
      std::size_t out = 0;
      for (std::size_t x = 0; x < sig_->point_count(); ++x) {
        if (!(Y >> x & 1)) continue;
        if (cut >> x & 1) packed |= PointMask{1} << out;
        ++out;
      }
      sections[e] = packed;
    }
    return from_sections(std::move(sub), sections);
  }

  SoftSet restrict_to(std::span<const std::string> point_names) const {
    return restrict_to(sig_->point_mask(point_names));
  }

  friend SoftSet operator|(const SoftSet& a, const SoftSet& b) {
    require_same_signature(a.sig_, b.sig_, "union");
    return SoftSet(a.sig_, a.bits_ | b.bits_);
  }
  friend SoftSet operator&(const SoftSet& a, const SoftSet& b) {
    require_same_signature(a.sig_, b.sig_, "intersection");
    return SoftSet(a.sig_, a.bits_ & b.bits_);
  }
  /// Sectionwise difference: H(e) = F(e) \ G(e).
  friend SoftSet operator-(const SoftSet& a, const SoftSet& b) {
    require_same_signature(a.sig_, b.sig_, "difference");
    return SoftSet(a.sig_, a.bits_ & ~b.bits_);
  }
  friend SoftSet operator~(const SoftSet& a) { return a.complement(); }

  friend bool operator==(const SoftSet& a, const SoftSet& b) {
    return same_signature(a.sig_, b.sig_) && a.bits_ == b.bits_;
  }
  friend bool operator!=(const SoftSet& a, const SoftSet& b) { return !(a == b); }

 private:
  SignaturePtr sig_;
  CellMask bits_;
};

/// Canonical order: lexicographic on the concatenated section bitstrings in
/// parameter order (0 before 1). With the parameter-major cell layout the
/// first differing position is the lowest set bit of the XOR.
inline bool canonical_less(const SoftSet& a, const SoftSet& b) {
  require_same_signature(a.signature(), b.signature(), "canonical order");
  CellMask d = a.raw() ^ b.raw();
  if (d == 0) return false;
  CellMask low = d & (~d + 1);
  return (a.raw() & low) == 0;
}

inline bool operator<(const SoftSet& a, const SoftSet& b) { return canonical_less(a, b); }

/// Comparator object for the canonical orders (soft sets and, once
/// defined, topologies); hands the overload set to the algorithms.
struct CanonicalLess {
  template <typename T>
  bool operator()(const T& a, const T& b) const {
    return canonical_less(a, b);
  }
};

/// "<{h}|{}>" notation: one section per parameter, in parameter order.
inline std::string to_string(const SoftSet& a) {
  const auto& sig = *a.signature();
  std::ostringstream os;
  os << '<';
  for (std::size_t e = 0; e < sig.param_count(); ++e) {
    if (e) os << '|';
    os << '{';
    bool first = true;
    for (std::size_t x = 0; x < sig.point_count(); ++x)
      if (a.section(e) >> x & 1) {
        if (!first) os << ',';
        os << sig.point_name(x);
        first = false;
      }
    os << '}';
  }
  os << '>';
  return os.str();
}

/// A soft set (F, A) with an explicit domain A subseteq E. Only the general
/// union/intersection over differing parameter sets lives here; everything
/// past the basic algebra fixes A = E and uses SoftSet.
class PartialSoftSet {
 public:
  /// `domain` is a bitmask over the signature's parameters; `sections` gives
  /// one PointMask per set bit of `domain`, in parameter order.
  PartialSoftSet(SignaturePtr sig, std::uint64_t domain, std::span<const PointMask> sections)
      : sig_(std::move(sig)), domain_(domain), bits_(0) {
    if (!sig_) throw std::invalid_argument("partial soft set: null signature");
    if ((domain_ & ~detail::low_bits(sig_->param_count())) != 0)
      throw std::invalid_argument("partial soft set: domain has unknown parameters");
    if (domain_ == 0) throw std::invalid_argument("partial soft set: domain is empty");
    std::size_t i = 0;
    for (std::size_t e = 0; e < sig_->param_count(); ++e) {
      if (!(domain_ >> e & 1)) continue;
      if (i >= sections.size())
        throw std::invalid_argument("partial soft set: missing sections");
      if ((sections[i] & ~sig_->all_points()) != 0)
        throw std::invalid_argument("partial soft set: section has unknown points");
      bits_ |= CellMask{sections[i]} << (e * sig_->point_count());
      ++i;
    }
    if (i != sections.size())
      throw std::invalid_argument("partial soft set: too many sections");
  }

  static PartialSoftSet total(const SoftSet& a) {
    std::vector<PointMask> sections;
    for (std::size_t e = 0; e < a.signature()->param_count(); ++e)
      sections.push_back(a.section(e));
    return PartialSoftSet(a.signature(), detail::low_bits(a.signature()->param_count()),
                          sections);
  }

  const SignaturePtr& signature() const { return sig_; }
  std::uint64_t domain() const { return domain_; }
  bool in_domain(std::size_t e) const { return e < sig_->param_count() && (domain_ >> e & 1); }

  PointMask section(std::size_t e) const {
    if (!in_domain(e))
      throw std::invalid_argument("partial soft set: parameter outside the domain");
    return (bits_ >> (e * sig_->point_count())) & sig_->all_points();
  }

  /// Only meaningful when the domain is all of E.
  SoftSet to_total() const {
    if (domain_ != detail::low_bits(sig_->param_count()))
      throw std::invalid_argument("partial soft set: domain is not all of E");
    return SoftSet(sig_, bits_);
  }

  friend bool operator==(const PartialSoftSet& a, const PartialSoftSet& b) {
    return same_signature(a.sig_, b.sig_) && a.domain_ == b.domain_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const PartialSoftSet& a, const PartialSoftSet& b) { return !(a == b); }

  friend PartialSoftSet general_union(const PartialSoftSet& a, const PartialSoftSet& b);
  friend PartialSoftSet general_intersection(const PartialSoftSet& a, const PartialSoftSet& b);

 private:
  PartialSoftSet(SignaturePtr sig, std::uint64_t domain, CellMask bits)
      : sig_(std::move(sig)), domain_(domain), bits_(bits) {}

  SignaturePtr sig_;
  std::uint64_t domain_;
  CellMask bits_;  // zero outside the domain's rows
};

/// (F, A) u (G, B) on domain A u B: F(e) on A-B, G(e) on B-A, the
/// sectionwise union on the overlap. With sections zeroed outside their
/// domain this is exactly the bitwise or.
inline PartialSoftSet general_union(const PartialSoftSet& a, const PartialSoftSet& b) {
  require_same_signature(a.sig_, b.sig_, "general union");
  return PartialSoftSet(a.sig_, a.domain_ | b.domain_, a.bits_ | b.bits_);
}

/// (F, A) n (G, B) on domain A n B, sectionwise. An empty overlap is a
/// domain error: the definition presupposes a nonempty C = A n B.
inline PartialSoftSet general_intersection(const PartialSoftSet& a, const PartialSoftSet& b) {
  require_same_signature(a.sig_, b.sig_, "general intersection");
  std::uint64_t dom = a.domain_ & b.domain_;
  if (dom == 0)
    throw std::domain_error("general intersection: the parameter domains do not overlap");
  return PartialSoftSet(a.sig_, dom, a.bits_ & b.bits_);
}

enum class CombineMode { Union, Intersection };

inline PartialSoftSet combine(const PartialSoftSet& a, const PartialSoftSet& b,
                              CombineMode mode) {
  return mode == CombineMode::Union ? general_union(a, b) : general_intersection(a, b);
}

}  // namespace softtop
