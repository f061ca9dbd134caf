#pragma once

// Structured outcome of a check, plus the JSON encoding shared by every
// serialized result.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "leibniz/exactlin.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, not_applicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct NamedSubspace {
  std::string name;
  Subspace space;
};

struct VerificationReport {
  std::string subject;
  std::string field;
  std::vector<Check> checks;
  std::vector<NamedSubspace> subspaces;
  std::vector<std::string> notes;
  std::vector<std::string> witnesses;
  bool not_applicable = false;

  VerificationReport(std::string subject_, const FieldDesc& f)
      : subject(std::move(subject_)), field(f.name()) {}

  bool check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
    return ok;
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void witness(std::string text) { witnesses.push_back(std::move(text)); }
  void subspace(std::string name, Subspace s) { subspaces.push_back({std::move(name), std::move(s)}); }
  void mark_not_applicable(std::string reason) {
    not_applicable = true;
    note(std::move(reason));
  }

  Verdict verdict() const {
    if (std::any_of(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; }))
      return Verdict::fail;
    return not_applicable ? Verdict::not_applicable : Verdict::pass;
  }
  // A theorem is not falsified by an instance where its premise fails.
  bool ok() const { return verdict() != Verdict::fail; }

  const Check* find_check(const std::string& name) const {
    auto it = std::find_if(checks.begin(), checks.end(),
                           [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
  }
  const Subspace* find_subspace(const std::string& name) const {
    auto it = std::find_if(subspaces.begin(), subspaces.end(),
                           [&](const NamedSubspace& s) { return s.name == name; });
    return it == subspaces.end() ? nullptr : &it->space;
  }
};

inline Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

inline Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(to_json(s.vector(i)));
  return Json{{"dim", s.dim()}, {"ambient", s.ambient_dim()}, {"basis", basis}};
}

inline Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json entry{{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  Json spaces = Json::object();
  for (const auto& s : r.subspaces) spaces[s.name] = to_json(s.space);
  return Json{{"subject", r.subject},
              {"field", r.field},
              {"verdict", to_string(r.verdict())},
              {"checks", checks},
              {"subspaces", spaces},
              {"notes", r.notes},
              {"witnesses", r.witnesses}};
}

}  // namespace leibniz
