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

// Name-based dispatch over every operator, generator and classifier, shared by
// the command line and the fixture corpus.
//
//   star auralocal clstar claura intaura clsa clsa_inf trace psi psi_classical
//   intsa cl int                                  set argument -> set / trace
//   nbhd                                          point argument -> family
//   family:<tau|tau_aura|tau_star|tausa|tausa_c|beta>        -> family
//   in:<same names>                               set argument -> bool
//   is:<ia_open|semi|pre|alpha|beta|b_set>        set argument -> bool
//   classify                                      set argument -> profile
//   transitive                                    no argument  -> bool
//   ideal closed                                  no argument  -> family

#ifndef AURASPACE_QUERY_HPP_
#define AURASPACE_QUERY_HPP_

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "auraspace/classifiers.hpp"
#include "auraspace/operators.hpp"

namespace auraspace {

class UnknownOp : public SpaceError {
 public:
  explicit UnknownOp(std::string_view op) : SpaceError("unknown operation '" + std::string(op) + "'") {}
};

using QueryValue = std::variant<PointSet, ClosureTrace, SetFamily, bool, OpennessProfile>;

QueryValue evaluate(const IdealAuraSpace& space, std::string_view op, std::string_view arg);

/// `{a,c}`, `{d} ⊂ {c,d}  [stabilized at 1]`, `{{},{a}}`, `true`, or
/// `ia_open=1 semi=1 pre=1 alpha=1 beta=1 b_set=1`.
std::string to_text(const Universe& u, const QueryValue& v);
nlohmann::ordered_json to_json(const Universe& u, const QueryValue& v);

std::string format_trace(const Universe& u, const ClosureTrace& t);
std::string format_profile(const OpennessProfile& p);

}  // namespace auraspace

#endif  // AURASPACE_QUERY_HPP_
