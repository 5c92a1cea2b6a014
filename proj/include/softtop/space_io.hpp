#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "softtop/topology.hpp"
#include "softtop/verdict.hpp"

namespace softtop {

using OrderedJson = nlohmann::ordered_json;

/// Names that always resolve to the null and absolute soft sets. Documents
/// never list them: both are adjoined to every topology implicitly.
inline constexpr std::string_view kNullName = "Phi";
inline constexpr std::string_view kAbsoluteName = "~X";

/// Parse or semantic errors in a space document; the message carries the
/// byte position (syntax) or the offending JSON path (semantics).
struct DocumentError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A space description: the signature name lists, a dictionary of named
/// soft sets (each a map from parameter to a list of point names; omitted
/// parameters mean empty sections), and the nontrivial members of the
/// topology by name. Serialization is canonical: set names sorted, section
/// lists in signature order, empty sections omitted, fixed key order.
class SpaceDocument {
 public:
  static SpaceDocument parse(const std::string& text,
                             std::size_t max_cells = kDefaultMaxCells) {
    OrderedJson j;
    try {
      j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw DocumentError("space document: " + std::string(e.what()));
    }
    if (!j.is_object()) throw DocumentError("space document: the top level is not an object");
    for (const auto& [key, _] : j.items())
      if (key != "points" && key != "params" && key != "sets" && key != "topology")
        throw DocumentError("space document: unknown key '" + key + "'");

    SpaceDocument doc;
    doc.points_ = string_list(j, "points");
    doc.params_ = string_list(j, "params");
    try {
      doc.sig_ = Signature::make(doc.points_, doc.params_, max_cells);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(std::string("space document: ") + e.what());
    }

    if (!j.contains("sets") || !j["sets"].is_object())
      throw DocumentError("space document: 'sets' must be an object");
    for (const auto& [name, body] : j["sets"].items()) {
      if (name.empty()) throw DocumentError("space document: empty set name");
      if (name == kNullName || name == kAbsoluteName)
        throw DocumentError("space document: the set name '" + name + "' is reserved");
      if (!body.is_object())
        throw DocumentError("space document: sets." + name + " must be an object");
      std::vector<PointMask> sections(doc.params_.size(), 0);
      for (const auto& [param, list] : body.items()) {
        if (!doc.sig_->has_param(param))
          throw DocumentError("space document: sets." + name + ": unknown parameter '" +
                              param + "'");
        if (!list.is_array())
          throw DocumentError("space document: sets." + name + "." + param +
                              " must be a list of point names");
        PointMask m = 0;
        for (const auto& pt : list) {
          if (!pt.is_string())
            throw DocumentError("space document: sets." + name + "." + param +
                                " holds a non-string entry");
          std::string pname = pt.get<std::string>();
          if (!doc.sig_->has_point(pname))
            throw DocumentError("space document: sets." + name + "." + param +
                                ": unknown point '" + pname + "'");
          m |= PointMask{1} << doc.sig_->point_index(pname);
        }
        sections[doc.sig_->param_index(param)] = m;
      }
      doc.sets_.emplace(name, SoftSet::from_sections(doc.sig_, sections));
    }

    if (!j.contains("topology") || !j["topology"].is_array())
      throw DocumentError("space document: 'topology' must be a list of set names");
    for (const auto& entry : j["topology"]) {
      if (!entry.is_string())
        throw DocumentError("space document: 'topology' holds a non-string entry");
      std::string name = entry.get<std::string>();
      if (doc.sets_.find(name) == doc.sets_.end())
        throw DocumentError("space document: topology references the undefined set '" +
                            name + "'");
      doc.topology_.push_back(name);
    }
    std::sort(doc.topology_.begin(), doc.topology_.end());
    doc.topology_.erase(std::unique(doc.topology_.begin(), doc.topology_.end()),
                        doc.topology_.end());
    return doc;
  }

  /// Builds a document for a signature plus named sets; every named set is
  /// listed as a topology member.
  static SpaceDocument make(const SignaturePtr& sig,
                            std::vector<std::pair<std::string, SoftSet>> named_sets) {
    SpaceDocument doc;
    doc.sig_ = sig;
    doc.points_ = sig->points();
    doc.params_ = sig->params();
    for (auto& [name, set] : named_sets) {
      require_same_signature(sig, set.signature(), "space document");
      if (name.empty() || name == kNullName || name == kAbsoluteName)
        throw DocumentError("space document: the set name '" + name + "' is reserved");
      if (!doc.sets_.emplace(name, std::move(set)).second)
        throw DocumentError("space document: duplicate set name '" + name + "'");
      doc.topology_.push_back(name);
    }
    std::sort(doc.topology_.begin(), doc.topology_.end());
    return doc;
  }

  /// Document for an arbitrary topology: the nontrivial members (the null
  /// and absolute soft sets stay implicit) are named G1, G2, ... in
  /// canonical order.
  static SpaceDocument for_topology(const Topology& t) {
    std::vector<std::pair<std::string, SoftSet>> named;
    std::size_t i = 0;
    for (const auto& m : t.members()) {
      if (m.is_null() || m.is_absolute()) continue;
      named.emplace_back("G" + std::to_string(++i), m);
    }
    return make(t.signature(), std::move(named));
  }

  std::string serialize() const {
    OrderedJson j;
    j["points"] = points_;
    j["params"] = params_;
    OrderedJson sets = OrderedJson::object();
    for (const auto& [name, set] : sets_) {
      OrderedJson body = OrderedJson::object();
      for (std::size_t e = 0; e < params_.size(); ++e) {
        if (set.section(e) == 0) continue;
        body[params_[e]] = sig_->point_names(set.section(e));
      }
      sets[name] = std::move(body);
    }
    j["sets"] = std::move(sets);
    j["topology"] = topology_;
    return j.dump(2) + "\n";
  }

  const SignaturePtr& signature() const { return sig_; }
  const std::vector<std::string>& points() const { return points_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::map<std::string, SoftSet>& sets() const { return sets_; }
  const std::vector<std::string>& topology_names() const { return topology_; }

  /// Resolves a set reference: a defined name, the reserved null/absolute
  /// names, or a defined name suffixed with ' for its complement.
  SoftSet set_named(std::string_view name) const {
    if (name == kNullName) return SoftSet::null_set(sig_);
    if (name == kAbsoluteName) return SoftSet::absolute(sig_);
    auto it = sets_.find(std::string(name));
    if (it != sets_.end()) return it->second;
    if (!name.empty() && name.back() == '\'') {
      auto base = sets_.find(std::string(name.substr(0, name.size() - 1)));
      if (base != sets_.end()) return base->second.complement();
    }
    throw DocumentError("space document: no set named '" + std::string(name) + "'");
  }

  /// The topology family: the listed members plus the implicit null and
  /// absolute soft sets.
  std::vector<SoftSet> topology_family() const {
    std::vector<SoftSet> fam{SoftSet::null_set(sig_), SoftSet::absolute(sig_)};
    for (const auto& name : topology_) fam.push_back(sets_.at(name));
    return fam;
  }

  Verdict validate_topology() const {
    std::vector<SoftSet> fam = topology_family();
    return Topology::validate(sig_, fam);
  }

  Topology to_topology() const {
    std::vector<SoftSet> fam = topology_family();
    return Topology::from_members(sig_, fam);
  }

  /// Preferred display for a soft set: its name, the reserved names, a
  /// named complement, or nothing (caller falls back to inline sections).
  std::optional<std::string> display_name(const SoftSet& a) const {
    if (!same_signature(a.signature(), sig_)) return std::nullopt;
    for (const auto& [name, set] : sets_)
      if (set == a) return name;
    if (a.is_null()) return std::string(kNullName);
    if (a.is_absolute()) return std::string(kAbsoluteName);
    for (const auto& [name, set] : sets_)
      if (set.complement() == a) return name + "'";
    return std::nullopt;
  }

  friend bool operator==(const SpaceDocument& a, const SpaceDocument& b) {
    return a.points_ == b.points_ && a.params_ == b.params_ && a.sets_ == b.sets_ &&
           a.topology_ == b.topology_;
  }
  friend bool operator!=(const SpaceDocument& a, const SpaceDocument& b) { return !(a == b); }

 private:
  static std::vector<std::string> string_list(const OrderedJson& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
      throw DocumentError(std::string("space document: '") + key +
                          "' must be a list of names");
    std::vector<std::string> out;
    for (const auto& entry : j[key]) {
      if (!entry.is_string())
        throw DocumentError(std::string("space document: '") + key +
                            "' holds a non-string entry");
      out.push_back(entry.get<std::string>());
    }
    return out;
  }

  SignaturePtr sig_;
  std::vector<std::string> points_;
  std::vector<std::string> params_;
  std::map<std::string, SoftSet> sets_;
  std::vector<std::string> topology_;
};

/// JSON form of one soft set: a named reference where the document can
/// name it, inline sections otherwise.
inline OrderedJson soft_set_json(const SoftSet& a, const SpaceDocument* doc) {
  if (doc) {
    if (auto name = doc->display_name(a)) return OrderedJson{{"name", *name}};
  }
  OrderedJson sections = OrderedJson::object();
  const auto& sig = *a.signature();
  for (std::size_t e = 0; e < sig.param_count(); ++e) {
    if (a.section(e) == 0) continue;
    sections[sig.param_name(e)] = sig.point_names(a.section(e));
  }
  return OrderedJson{{"sections", std::move(sections)}};
}

inline OrderedJson verdict_json(const Verdict& v, const SpaceDocument* doc = nullptr) {
  OrderedJson j;
  j["holds"] = v.holds;
  j["vacuous"] = v.vacuous;
  j["detail"] = v.detail;
  j["points"] = v.points;
  OrderedJson sets = OrderedJson::array();
  for (const auto& s : v.sets) sets.push_back(soft_set_json(s, doc));
  j["sets"] = std::move(sets);
  return j;
}

/// A machine-readable run report: the command echo, the full space
/// document, and one entry per named check. Key order is fixed, and the
/// embedded document lets every verdict be reproduced from the report
/// alone.
inline OrderedJson profile_report(const std::string& command, const std::string& input,
                                  const SpaceDocument& doc,
                                  std::span<const std::pair<std::string, Verdict>> checks,
                                  std::span<const std::string> asserted, int exit_code) {
  OrderedJson report;
  report["command"] = command;
  report["input"] = input;
  report["space"] = OrderedJson::parse(doc.serialize());
  OrderedJson list = OrderedJson::array();
  for (const auto& [name, v] : checks) {
    OrderedJson entry;
    entry["property"] = name;
    entry.update(verdict_json(v, &doc));
    list.push_back(std::move(entry));
  }
  report["checks"] = std::move(list);
  report["assert"] = asserted;
  report["exit"] = exit_code;
  return report;
}

}  // namespace softtop
