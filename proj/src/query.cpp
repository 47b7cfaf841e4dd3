// Copyright 2026 The auraspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "auraspace/query.hpp"

#include <functional>
#include <map>

#include "auraspace/space_io.hpp"
#include "auraspace/topologies.hpp"

namespace auraspace {
namespace {

using SetOp = std::function<PointSet(const IdealAuraSpace&, PointSet)>;

const std::map<std::string, SetOp, std::less<>>& set_ops() {
  static const std::map<std::string, SetOp, std::less<>> ops{
      {"star", local_star},
      {"auralocal", aura_local},
      {"clstar", star_closure},
      {"claura", aura_closure},
      {"intaura", aura_interior},
      {"clsa", ia_closure},
      {"clsa_inf", ia_closure_fixpoint},
      {"psi", psi_aura},
      {"psi_classical", psi},
      {"intsa", ia_interior},
      {"cl", [](const IdealAuraSpace& s, PointSet a) { return classical_closure(s.topology(), a); }},
      {"int", [](const IdealAuraSpace& s, PointSet a) { return classical_interior(s.topology(), a); }},
  };
  return ops;
}

nlohmann::ordered_json set_json(const Universe& u, PointSet s) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (int x : s) arr.push_back(u.name(x));
  return arr;
}

bool flag(const OpennessProfile& p, std::string_view name) {
  for (OpenClass c : kOpenClasses) {
    if (to_string(c) == name) return has_class(p, c);
  }
  throw UnknownOp("is:" + std::string(name));
}

}  // namespace

QueryValue evaluate(const IdealAuraSpace& space, std::string_view op, std::string_view arg) {
  const Universe& u = space.universe();
  if (auto it = set_ops().find(op); it != set_ops().end()) return it->second(space, parse_set(u, arg));
  if (op == "trace") return ia_closure_trace(space, parse_set(u, arg));
  if (op == "transitive") return space.is_transitive();
  if (op == "ideal") return space.ideal().members();
  if (op == "closed") {
    std::vector<PointSet> closed;
    for (PointSet o : space.topology().opens()) closed.push_back(complement(o, space.size()));
    return SetFamily(std::move(closed));
  }
  if (op == "classify") return classify(space, parse_set(u, arg));
  if (op == "nbhd") {
    const auto x = u.index_of(arg);
    if (!x) throw SpaceError("unknown point '" + std::string(arg) + "'");
    return neighborhoods(space, *x);
  }
  if (op.starts_with("family:")) return gen_family(space, op.substr(7));
  if (op.starts_with("in:")) return gen_family(space, op.substr(3)).contains(parse_set(u, arg));
  if (op.starts_with("is:")) {
    const auto name = op.substr(3);
    const PointSet a = parse_set(u, arg);
    if (name == "b_set") return is_b_set(space, a).has_value();
    return flag(classify(space, a), name);
  }
  throw UnknownOp(op);
}

std::string format_trace(const Universe& u, const ClosureTrace& t) {
  std::string out;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    if (i) out += " ⊂ ";
    out += format_set(u, t.steps[i]);
  }
  return out + "  [stabilized at " + std::to_string(t.stabilized_at) + "]";
}

std::string format_profile(const OpennessProfile& p) {
  std::string out;
  for (OpenClass c : kOpenClasses) {
    if (!out.empty()) out += ' ';
    out += std::string(to_string(c)) + "=" + (has_class(p, c) ? "1" : "0");
  }
  return out;
}

std::string to_text(const Universe& u, const QueryValue& v) {
  struct Visitor {
    const Universe& u;
    std::string operator()(PointSet s) const { return format_set(u, s); }
    std::string operator()(const ClosureTrace& t) const { return format_trace(u, t); }
    std::string operator()(const SetFamily& f) const { return format_family(u, f); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const OpennessProfile& p) const { return format_profile(p); }
  };
  return std::visit(Visitor{u}, v);
}

nlohmann::ordered_json to_json(const Universe& u, const QueryValue& v) {
  struct Visitor {
    const Universe& u;
    nlohmann::ordered_json operator()(PointSet s) const { return set_json(u, s); }
    nlohmann::ordered_json operator()(const ClosureTrace& t) const {
      nlohmann::ordered_json steps = nlohmann::ordered_json::array();
      for (PointSet s : t.steps) steps.push_back(set_json(u, s));
      return {{"steps", steps}, {"stabilized_at", t.stabilized_at}};
    }
    nlohmann::ordered_json operator()(const SetFamily& f) const {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (PointSet s : f) arr.push_back(set_json(u, s));
      return arr;
    }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const OpennessProfile& p) const {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (OpenClass c : kOpenClasses) obj[std::string(to_string(c))] = has_class(p, c);
      return obj;
    }
  };
  return std::visit(Visitor{u}, v);
}

}  // namespace auraspace
