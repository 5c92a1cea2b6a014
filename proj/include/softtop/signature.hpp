#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

/// Subset of the point universe X; bit i = the i-th point of the signature.
using PointMask = std::uint64_t;

/// One bit per (parameter, point) cell of a soft set; see Signature::cell.
using CellMask = std::uint64_t;

/// Default cap on |X|*|E|; keeps whole soft sets inside one machine word.
inline constexpr std::size_t kDefaultMaxCells = 24;

/// Absolute cap: a CellMask has 64 bits.
inline constexpr std::size_t kHardMaxCells = 64;

namespace detail {

inline std::uint64_t low_bits(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace detail

class Signature;
using SignaturePtr = std::shared_ptr<const Signature>;

/// The pair (X, E): a finite point universe and a finite parameter set with
/// stable names and indices. Identity is structural (the two name lists);
/// the cell bound is a construction-time constraint, not part of identity.
class Signature {
 public:
  Signature(std::vector<std::string> points, std::vector<std::string> params,
            std::size_t max_cells = kDefaultMaxCells)
      : points_(std::move(points)), params_(std::move(params)), max_cells_(max_cells) {
    if (points_.empty()) throw std::invalid_argument("signature: point universe is empty");
    if (params_.empty()) throw std::invalid_argument("signature: parameter set is empty");
    if (max_cells_ > kHardMaxCells)
      throw std::invalid_argument("signature: cell bound exceeds " + std::to_string(kHardMaxCells));
    if (points_.size() * params_.size() > max_cells_) {
      std::ostringstream os;
      os << "signature: |X|*|E| = " << points_.size() * params_.size()
         << " exceeds the cell bound " << max_cells_;
      throw std::invalid_argument(os.str());
    }
    check_unique(points_, "point");
    check_unique(params_, "parameter");
    point_columns_.resize(points_.size(), 0);
    for (std::size_t e = 0; e < params_.size(); ++e)
      for (std::size_t x = 0; x < points_.size(); ++x)
        point_columns_[x] |= CellMask{1} << cell(e, x);
  }

  static SignaturePtr make(std::vector<std::string> points, std::vector<std::string> params,
                           std::size_t max_cells = kDefaultMaxCells) {
    return std::make_shared<Signature>(std::move(points), std::move(params), max_cells);
  }

  std::size_t point_count() const { return points_.size(); }
  std::size_t param_count() const { return params_.size(); }
  std::size_t cell_count() const { return points_.size() * params_.size(); }
  std::size_t max_cells() const { return max_cells_; }

  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::string& point_name(std::size_t x) const { return points_.at(x); }
  const std::string& param_name(std::size_t e) const { return params_.at(e); }

  std::size_t point_index(std::string_view name) const {
    return index_of(points_, name, "point");
  }
  std::size_t param_index(std::string_view name) const {
    return index_of(params_, name, "parameter");
  }
  bool has_point(std::string_view name) const { return find(points_, name) != points_.size(); }
  bool has_param(std::string_view name) const { return find(params_, name) != params_.size(); }

  /// Bit index of the (parameter e, point x) cell inside a CellMask.
  /// Cells are laid out in parameter-major order, so ascending bit index
  /// walks the concatenated section bitstrings in parameter order.
  std::size_t cell(std::size_t e, std::size_t x) const { return e * points_.size() + x; }

  PointMask all_points() const { return detail::low_bits(points_.size()); }
  CellMask full_mask() const { return detail::low_bits(cell_count()); }

  /// All cells of one point across every parameter (the "column" of x).
  CellMask point_column(std::size_t x) const { return point_columns_.at(x); }

  /// All cells of one parameter (the "row" of e, i.e. the section slot).
  CellMask param_row(std::size_t e) const {
    if (e >= params_.size()) throw std::invalid_argument("signature: parameter index out of range");
    return detail::low_bits(points_.size()) << (e * points_.size());
  }

  PointMask point_mask(std::span<const std::string> names) const {
    PointMask m = 0;
    for (const auto& n : names) m |= PointMask{1} << point_index(n);
    return m;
  }

  std::vector<std::string> point_names(PointMask m) const {
    std::vector<std::string> out;
    for (std::size_t x = 0; x < points_.size(); ++x)
      if (m >> x & 1) out.push_back(points_[x]);
    return out;
  }

  /// Sub-universe signature: the points selected by Y (order preserved),
  /// the same parameters. Y must be nonempty and within the universe.
  SignaturePtr sub_signature(PointMask Y) const {
    if (Y == 0) throw std::invalid_argument("signature: sub-universe is empty");
    if ((Y & ~all_points()) != 0)
      throw std::invalid_argument("signature: sub-universe has unknown points");
    return make(point_names(Y), params_, max_cells_);
  }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.points_ == b.points_ && a.params_ == b.params_;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }

 private:
  static std::size_t find(const std::vector<std::string>& v, std::string_view name) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] == name) return i;
    return v.size();
  }
  static std::size_t index_of(const std::vector<std::string>& v, std::string_view name,
                              const char* kind) {
    std::size_t i = find(v, name);
    if (i == v.size())
      throw std::invalid_argument(std::string("signature: unknown ") + kind + " name '" +
                                  std::string(name) + "'");
    return i;
  }
  static void check_unique(const std::vector<std::string>& v, const char* kind) {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j)
        if (v[i] == v[j])
          throw std::invalid_argument(std::string("signature: duplicate ") + kind + " name '" +
                                      v[i] + "'");
  }

  std::vector<std::string> points_;
  std::vector<std::string> params_;
  std::size_t max_cells_;
  std::vector<CellMask> point_columns_;
};

inline bool same_signature(const SignaturePtr& a, const SignaturePtr& b) {
  return a == b || (a && b && *a == *b);
}

inline void require_same_signature(const SignaturePtr& a, const SignaturePtr& b,
                                   const char* what) {
  if (!same_signature(a, b))
    throw std::invalid_argument(std::string(what) + ": operands have different signatures");
}

}  // namespace softtop
