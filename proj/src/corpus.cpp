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

#include "auraspace/corpus.hpp"

#include <algorithm>

#include "auraspace/query.hpp"
#include "auraspace/space_io.hpp"

namespace auraspace {
namespace {

constexpr const char* kPowerSet3 = "{{},{a},{b},{a,b},{c},{a,c},{b,c},{a,b,c}}";
constexpr const char* kChainTauAura = "{{},{b},{a,b},{c},{b,c},{a,b,c}}";

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> f;

  f.push_back({"strict-inclusion",
               R"({"points": ["a","b","c"],
                   "opens": [[],["a"],["b"],["a","b"],["a","b","c"]],
                   "ideal": {"members": [[],["c"]]},
                   "aura": {"a": ["a"], "b": ["a","b"], "c": ["a","b","c"]}})",
               {
                   {"auralocal", "{a}", "{a,b,c}", "strict-inclusion example: aura-local set of {a} is X"},
                   {"star", "{a}", "{a,c}", "strict-inclusion example: local function of {a}"},
                   {"nbhd", "c", "{{a,b,c}}", "strict-inclusion example: c has only X as an open neighbourhood"},
               }});

  f.push_back({"not-closed",
               R"({"points": ["a","b","c","d"],
                   "opens": [[],["a"],["a","b"],["a","b","c"],["a","b","c","d"]],
                   "ideal": {"members": [[],["d"]]},
                   "aura": {"a": ["a"], "b": ["a","b"], "c": ["a","b","c"], "d": ["a","b","c","d"]}})",
               {
                   {"auralocal", "{a}", "{a,b,c,d}", "not-closed example, first space: aura-local set of {a}"},
               }});

  f.push_back({"not-closed-prime",
               R"({"points": ["a","b","c","d"],
                   "opens": [[],["a"],["b","c"],["a","b","c"],["a","b","c","d"]],
                   "ideal": {"members": [[],["a"]]},
                   "aura": {"a": ["a"], "b": ["b","c"], "c": ["b","c"], "d": ["a","b","c","d"]}})",
               {
                   {"auralocal", "{b}", "{b,c,d}", "not-closed example, primed space: aura-local set of {b}"},
                   {"closed", "", "{{},{d},{a,d},{b,c,d},{a,b,c,d}}", "not-closed example, primed space: closed sets"},
                   {"cl", "{b}", "{b,c,d}", "not-closed example, primed space: {b,c,d} is closed"},
               }});

  f.push_back({"non-idempotent-3pt",
               R"({"points": ["a","b","c"],
                   "opens": [[],["a"],["b"],["a","b"],["c"],["a","c"],["b","c"],["a","b","c"]],
                   "ideal": {"members": [[],["b"]]},
                   "aura": {"a": ["a","b"], "b": ["b","c"], "c": ["c"]}})",
               {
                   {"auralocal", "{c}", "{b,c}", "non-idempotency proof, 3-point space: aura-local set of {c}"},
                   {"clsa", "{c}", "{b,c}", "non-idempotency proof, 3-point space: closure of {c}"},
                   {"auralocal", "{b,c}", "{b,c}", "non-idempotency proof, 3-point space: aura-local set of {b,c}"},
                   {"clsa", "{b,c}", "{b,c}", "non-idempotency proof, 3-point space: second iterate equals first"},
               }});

  f.push_back({"non-idempotent-3pt-variant",
               R"({"points": ["a","b","c"],
                   "opens": [[],["a"],["b"],["a","b"],["c"],["a","c"],["b","c"],["a","b","c"]],
                   "ideal": {"members": [[],["c"]]},
                   "aura": {"a": ["a","b"], "b": ["b","c"], "c": ["c"]}})",
               {
                   {"auralocal", "{c}", "{}", "non-idempotency proof, modified ideal: aura-local set of {c} is empty"},
                   {"clsa", "{c}", "{c}", "non-idempotency proof, modified ideal: closure of {c}"},
               }});

  f.push_back({"non-idempotent-4pt-blocked",
               R"({"points": ["a","b","c","d"],
                   "opens": "discrete",
                   "ideal": {"members": [[],["c"]]},
                   "aura": {"a": ["a","b"], "b": ["b","c"], "c": ["c","d"], "d": ["d"]}})",
               {
                   {"auralocal", "{d}", "{c,d}", "non-idempotency proof, 4-point chain with ideal {c}: aura-local set of {d}"},
                   {"clsa", "{d}", "{c,d}", "non-idempotency proof, 4-point chain with ideal {c}: closure of {d}"},
                   {"auralocal", "{c,d}", "{c,d}", "non-idempotency proof, 4-point chain with ideal {c}: aura-local set of {c,d}"},
                   {"clsa", "{c,d}", "{c,d}", "non-idempotency proof, 4-point chain with ideal {c}: second iterate"},
               }});

  f.push_back({"non-idempotent-5pt",
               R"({"points": ["a","b","c","d","e"],
                   "opens": "discrete",
                   "ideal": {"generators": [["b"],["d"]]},
                   "aura": {"a": ["a","b"], "b": ["b","c"], "c": ["c","d"], "d": ["d","e"], "e": ["e"]}})",
               {
                   {"ideal", "", "{{},{b},{d},{b,d}}", "non-idempotency proof, 5-point space: ideal generated by {b} and {d}"},
                   {"auralocal", "{e}", "{d,e}", "non-idempotency proof, 5-point space: aura-local set of {e}"},
                   {"clsa", "{e}", "{d,e}", "non-idempotency proof, 5-point space: closure of {e}"},
                   {"auralocal", "{d,e}", "{d,e}", "non-idempotency proof, 5-point space: aura-local set of {d,e}"},
                   {"clsa", "{d,e}", "{d,e}", "non-idempotency proof, 5-point space: second iterate"},
               }});

  f.push_back({"non-idempotent-4pt",
               R"({"points": ["a","b","c","d"],
                   "opens": "discrete",
                   "ideal": {"members": [[],["a"]]},
                   "aura": {"a": ["a","b"], "b": ["b","c"], "c": ["c","d"], "d": ["d"]}})",
               {
                   {"auralocal", "{d}", "{c,d}", "non-idempotency proof, unblocked 4-point chain: aura-local set of {d}"},
                   {"clsa", "{d}", "{c,d}", "non-idempotency proof, unblocked 4-point chain: first iterate"},
                   {"auralocal", "{c,d}", "{b,c,d}", "non-idempotency proof, unblocked 4-point chain: aura-local set of {c,d}"},
                   {"clsa", "{c,d}", "{b,c,d}", "non-idempotency proof, unblocked 4-point chain: second iterate"},
                   {"auralocal", "{b,c,d}", "{a,b,c,d}", "non-idempotency proof, unblocked 4-point chain: aura-local set of {b,c,d}"},
                   {"clsa", "{b,c,d}", "{a,b,c,d}", "non-idempotency proof, unblocked 4-point chain: third iterate"},
                   {"clsa", "{a,b,c,d}", "{a,b,c,d}", "non-idempotency proof, unblocked 4-point chain: X is fixed"},
                   {"trace", "{d}", "{d} ⊂ {c,d} ⊂ {b,c,d} ⊂ {a,b,c,d}  [stabilized at 3]",
                    "non-idempotency proof, unblocked 4-point chain: three iterations to stabilize"},
               }});

  f.push_back({"chain-strict-v1",
               R"({"points": ["a","b","c"],
                   "opens": "discrete",
                   "ideal": {"members": [[],["c"]]},
                   "aura": {"a": ["a","b"], "b": ["b"], "c": ["c"]}})",
               {
                   {"transitive", "", "true", "chain-strict example, first space: the scope function is transitive"},
                   {"intaura", "{a}", "{}", "chain-strict example, first space: aura(a) is not inside {a}"},
                   {"family:tau_aura", "", kChainTauAura, "chain-strict example, first space: aura topology"},
                   {"auralocal", "{b}", "{a,b}", "chain-strict example, first space: complement of {a,c}"},
                   {"in:tausa", "{a,c}", "false", "chain-strict example, first space: {a,c} is not open"},
                   {"in:tausa", "{a}", "false", "chain-strict example, first space: {a} is not open"},
                   {"auralocal", "{c}", "{}", "chain-strict example, first space: complement of {a,b}"},
                   {"in:tausa", "{a,b}", "true", "chain-strict example, first space: {a,b} is open"},
                   {"auralocal", "{a}", "{a}", "chain-strict example, first space: complement of {b,c}"},
                   {"in:tausa", "{b,c}", "true", "chain-strict example, first space: {b,c} is open"},
                   {"auralocal", "{a,c}", "{a}", "chain-strict example, first space: complement of {b}"},
                   {"auralocal", "{a,b}", "{a,b}", "chain-strict example, first space: complement of {c}"},
                   {"family:tausa", "", kChainTauAura, "chain-strict example, first space: ideal-aura topology equals aura topology"},
               }});

  f.push_back({"chain-strict-v2",
               R"({"points": ["a","b","c"],
                   "opens": "discrete",
                   "ideal": {"members": [[],["b"]]},
                   "aura": {"a": ["a","b"], "b": ["b"], "c": ["c"]}})",
               {
                   {"transitive", "", "true", "chain-strict example, modified ideal: transitive"},
                   {"family:tau_aura", "", kChainTauAura, "chain-strict example, modified ideal: aura topology"},
                   {"auralocal", "{b,c}", "{c}", "chain-strict example, modified ideal: complement of {a}"},
                   {"in:tausa", "{a}", "true", "chain-strict example, modified ideal: {a} is ideal-aura open"},
                   {"in:tau_aura", "{a}", "false", "chain-strict example, modified ideal: {a} is not aura open"},
                   {"star", "{b,c}", "{c}", "chain-strict example, modified ideal: local function of {b,c}"},
                   {"in:tau_star", "{a}", "true", "chain-strict example, modified ideal: {a} is star open"},
                   {"auralocal", "{b}", "{}", "chain-strict example, modified ideal: complement of {a,c}"},
                   {"in:tausa", "{a,c}", "true", "chain-strict example, modified ideal: {a,c} is ideal-aura open"},
                   {"star", "{b}", "{}", "chain-strict example, modified ideal: local function of {b}"},
                   {"in:tau_star", "{a,c}", "true", "chain-strict example, modified ideal: {a,c} is star open"},
                   {"family:tau_star", "", kPowerSet3, "chain-strict example, modified ideal: star topology is discrete"},
                   {"family:tausa", "", kPowerSet3, "chain-strict example, modified ideal: ideal-aura topology is discrete"},
               }});

  f.push_back({"hierarchy-strict",
               R"({"points": ["a","b","c","d"],
                   "opens": "discrete",
                   "ideal": {"members": [[],["d"]]},
                   "aura": {"a": ["a","b"], "b": ["b"], "c": ["c","d"], "d": ["d"]}})",
               {
                   {"transitive", "", "true", "hierarchy-strict example: transitive"},
                   {"auralocal", "{a,c}", "{a,c}", "hierarchy-strict example: aura-local set of A={a,c}"},
                   {"clsa", "{a,c}", "{a,c}", "hierarchy-strict example: closure of A"},
                   {"intsa", "{a,c}", "{c}", "hierarchy-strict example: interior of A"},
                   {"clsa", "{c}", "{c}", "hierarchy-strict example: closure of int(A)"},
                   {"is:semi", "{a,c}", "false", "hierarchy-strict example: A is not semi-open"},
                   {"is:pre", "{a,c}", "false", "hierarchy-strict example: A is not pre-open"},
                   {"is:beta", "{a,c}", "false", "hierarchy-strict example: A is not beta-open"},
                   {"intsa", "{b,c,d}", "{b,c,d}", "hierarchy-strict example: interior of B={b,c,d}"},
                   {"is:ia_open", "{b,c,d}", "true", "hierarchy-strict example: B is open"},
                   {"is:alpha", "{b,c,d}", "true", "hierarchy-strict example: B has every type (alpha)"},
                   {"is:semi", "{b,c,d}", "true", "hierarchy-strict example: B has every type (semi)"},
                   {"is:pre", "{b,c,d}", "true", "hierarchy-strict example: B has every type (pre)"},
                   {"is:beta", "{b,c,d}", "true", "hierarchy-strict example: B has every type (beta)"},
                   {"intsa", "{a,b,d}", "{a,b,d}", "hierarchy-strict example: interior of C={a,b,d}"},
                   {"is:ia_open", "{a,b,d}", "true", "hierarchy-strict example: C is open"},
                   {"intsa", "{a,d}", "{d}", "hierarchy-strict example: interior of D={a,d}"},
                   {"clsa", "{a,d}", "{a,d}", "hierarchy-strict example: closure of D"},
                   {"clsa", "{d}", "{d}", "hierarchy-strict example: closure of int(D)"},
                   {"is:semi", "{a,d}", "false", "hierarchy-strict example: D is not semi-open"},
                   {"is:pre", "{a,d}", "false", "hierarchy-strict example: D is not pre-open"},
               }});
  return f;
}

}  // namespace

IdealAuraSpace Fixture::space() const {
  // "discrete" is shorthand for the power set; everything else is the file format.
  nlohmann::json doc = nlohmann::json::parse(space_json);
  if (doc["opens"] == "discrete") {
    const Universe u(doc["points"].get<std::vector<std::string>>());
    auto opens = nlohmann::json::array();
    for (PointSet s : power_set(u.size())) opens.push_back(set_to_json(u, s));
    doc["opens"] = opens;
  }
  return space_from_json(doc);
}

const std::vector<Fixture>& builtin_fixtures() {
  static const std::vector<Fixture> fixtures = make_fixtures();
  return fixtures;
}

const Fixture& builtin_fixture(std::string_view name) {
  for (const auto& f : builtin_fixtures()) {
    if (f.name == name) return f;
  }
  throw SpaceError("unknown fixture '" + std::string(name) + "'");
}

std::size_t CorpusReport::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const CorpusRow& r) { return !r.ok; }));
}

CorpusReport run_corpus(const std::vector<Fixture>& fixtures, std::string_view only) {
  if (!only.empty() &&
      std::none_of(fixtures.begin(), fixtures.end(), [&](const Fixture& f) { return f.name == only; })) {
    throw SpaceError("unknown fixture '" + std::string(only) + "'");
  }
  CorpusReport report;
  for (const auto& fixture : fixtures) {
    if (!only.empty() && fixture.name != only) continue;
    std::optional<IdealAuraSpace> space;
    std::string load_error;
    try {
      space = fixture.space();
    } catch (const std::exception& e) {
      load_error = std::string("error: ") + e.what();
    }
    for (const auto& e : fixture.expectations) {
      CorpusRow row{fixture.name, e.op, e.arg, e.expected, load_error, e.location, false};
      if (space) {
        try {
          row.got = to_text(space->universe(), evaluate(*space, e.op, e.arg));
        } catch (const std::exception& ex) {
          row.got = std::string("error: ") + ex.what();
        }
      }
      row.ok = row.got == row.expected;
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

CorpusReport run_corpus(std::string_view only) { return run_corpus(builtin_fixtures(), only); }

}  // namespace auraspace
