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

// Acceptance suite. Prints one PASS/FAIL line per criterion; with a numeric
// argument only that criterion runs. Exit status is nonzero if any selected
// criterion fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>
#include <algorithm>
#include <string>
#include <vector>

#include "auraspace/corpus.hpp"
#include "auraspace/laws.hpp"
#include "auraspace/operators.hpp"
#include "auraspace/query.hpp"
#include "auraspace/search.hpp"
#include "auraspace/topologies.hpp"
#include "auraspace/space_io.hpp"
#include "oracle.hpp"

using namespace auraspace;

namespace {

// Pinned limits.
constexpr double kCorpusSeconds = 1.0;
constexpr double kLawSuiteSeconds = 300.0;
constexpr std::uint64_t kRandomSpaces = 10000;
constexpr std::uint64_t kRandomSeed = 1;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      note << " [" << what << "]";
    }
  }
};

std::string eval_text(const IdealAuraSpace& s, const std::string& op, const std::string& arg) {
  return to_text(s.universe(), evaluate(s, op, arg));
}

Verdict corpus() {
  Verdict v;
  const auto t0 = Clock::now();
  const CorpusReport report = run_corpus();
  const auto si = builtin_fixture("strict-inclusion").space();
  const auto ch = builtin_fixture("non-idempotent-4pt").space();
  const auto v2 = builtin_fixture("chain-strict-v2").space();
  const auto hs = builtin_fixture("hierarchy-strict").space();
  v.require(eval_text(si, "star", "{a}") == "{a,c}", "A* = {a,c}");
  v.require(eval_text(si, "auralocal", "{a}") == "{a,b,c}", "A^a = X");
  const ClosureTrace t = ia_closure_trace(ch, parse_set(ch.universe(), "{d}"));
  v.require(format_trace(ch.universe(), t) == "{d} ⊂ {c,d} ⊂ {b,c,d} ⊂ {a,b,c,d}  [stabilized at 3]", "trace of {d}");
  v.require(eval_text(v2, "in:tausa", "{a}") == "true" && eval_text(v2, "in:tau_aura", "{a}") == "false",
            "{a} in tausa minus tau_aura");
  v.require(gen_family(v2, "tausa").size() == 8, "tausa is the power set");
  v.require(eval_text(hs, "intsa", "{a,c}") == "{c}", "int({a,c}) = {c}");
  v.require(eval_text(hs, "is:ia_open", "{b,c,d}") == "true", "{b,c,d} open");
  const double secs = seconds_since(t0);
  v.require(report.ok(), std::to_string(report.failures()) + " corpus mismatches");
  v.require(secs < kCorpusSeconds, "runtime");
  v.note << " " << (report.rows.size() - report.failures()) << "/" << report.rows.size() << " expectations, "
         << secs << " s (limit " << kCorpusSeconds << " s)";
  return v;
}

Verdict law_suite() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto source = SpaceSource::exhaustive(1, 3);
  std::vector<std::string> asserted;
  for (const auto& l : law_registry()) {
    if (l.kind == LawKind::Asserted) asserted.push_back(l.id);
  }
  unsigned jobs = std::thread::hardware_concurrency();
  const auto reports = run_laws(asserted, source, static_cast<int>(jobs == 0 ? 1 : jobs));
  std::uint64_t violations = 0, maps = 0;
  for (const auto& r : reports) {
    violations += r.violation_count;
    maps = std::max(maps, r.maps_checked);
    if (!r.ok()) {
      std::ostringstream what;
      what << r.law_id << ": " << r.violation_count << " violations";
      if (!r.violations.empty()) what << ", first " << r.violations.front().detail;
      v.require(false, what.str());
    }
  }
  const double secs = seconds_since(t0);
  v.require(secs < kLawSuiteSeconds, "runtime");
  v.note << " " << reports.size() << " asserted laws over " << source.size() << " spaces and " << maps
         << " maps, " << violations << " violations, " << secs << " s (limit " << kLawSuiteSeconds << " s)";
  return v;
}

Verdict enumerator() {
  Verdict v;
  const std::size_t expected[] = {0, 1, 4, 29};
  for (int n = 1; n <= 3; ++n) {
    const std::size_t ref = oracle::topologies(n).size();
    const std::size_t ours = all_topologies(n).size();
    v.require(ref == expected[n], "brute force n=" + std::to_string(n));
    v.require(ours == ref, "enumerator n=" + std::to_string(n));
    v.note << " n=" << n << ": " << ours;
  }
  return v;
}

SearchConfig exhaustive(int n) {
  SearchConfig c;
  c.n = n;
  return c;
}

Verdict search_findings() {
  Verdict v;
  struct Case {
    std::string predicate;
    int n;
    bool must_find;
  };
  const std::vector<Case> cases{{"NONIDEMPOTENT_K(3)", 4, true},
                                {"STRICT_STAR_AURA", 3, true},
                                {"TAU_AURA_STRICT_TAUSA", 3, true},
                                {"TAUSAC_NOT_IN_TAU", 4, false}};
  for (const auto& c : cases) {
    const auto p = parse_predicate(c.predicate);
    const auto a = find_witness(p, exhaustive(c.n));
    const auto b = find_witness(p, exhaustive(c.n));
    const bool same = a.witness.has_value() == b.witness.has_value() &&
                      (!a.witness || serialize_witness(*a.witness) == serialize_witness(*b.witness));
    v.require(same, c.predicate + " not deterministic");
    if (c.must_find) v.require(a.witness.has_value(), c.predicate + " not found");
    if (a.witness) v.require(verify_witness(*a.witness), c.predicate + " does not re-verify");
    v.note << " | " << describe_outcome(p, a);
  }
  SearchConfig r = exhaustive(4);
  r.mode = SearchMode::Random;
  r.seed = 42;
  r.budget = 20000;
  const auto p = parse_predicate("NONIDEMPOTENT_K(3)");
  const auto x = find_witness(p, r);
  const auto y = find_witness(p, r);
  v.require(x.witness && y.witness && x.witness->index == y.witness->index, "seeded random search");
  return v;
}

Verdict random_properties() {
  Verdict v;
  const auto source = SpaceSource::random(4, 5, kRandomSpaces, kRandomSeed);
  std::vector<std::string> asserted;
  for (const auto& l : law_registry()) {
    if (l.kind == LawKind::Asserted && l.scope == LawScope::Space) asserted.push_back(l.id);
  }
  std::uint64_t violations = 0;
  for (const auto& r : run_laws(asserted, source)) {
    violations += r.violation_count;
    v.require(r.spaces_checked + r.spaces_skipped == kRandomSpaces, r.law_id + " coverage");
    if (!r.ok()) v.require(false, r.law_id);
  }
  std::uint64_t traces = 0, bad_trace = 0, bad_dual = 0;
  for (std::uint64_t i = 0; i < source.size(); ++i) {
    const auto s = source.at(i);
    const int n = s.size();
    for_each_subset(s.full(), [&](PointSet a) {
      ++traces;
      if (ia_closure_trace(s, a).stabilized_at > n) ++bad_trace;
      if (ia_interior(s, a) != complement(ia_closure(s, complement(a, n)), n)) ++bad_dual;
    });
  }
  v.require(bad_trace == 0, "trace bound");
  v.require(bad_dual == 0, "duality");
  v.note << " " << kRandomSpaces << " spaces (seed " << kRandomSeed << "), " << asserted.size()
         << " space laws, " << violations << " violations; " << traces << " (space, A) pairs, " << bad_trace
         << " trace-bound and " << bad_dual << " duality failures";
  return v;
}

Verdict round_trip() {
  Verdict v;
  std::size_t fixtures = 0, witnesses = 0;
  for (const auto& f : builtin_fixtures()) {
    const auto s = f.space();
    const std::string canon = serialize_space(s);
    v.require(parse_space(canon) == s && serialize_space(parse_space(canon)) == canon, f.name);
    ++fixtures;
  }
  for (const auto& info : predicate_registry()) {
    for (int n = 1; n <= 3; ++n) {
      const auto p = parse_predicate(info.id);
      const auto r = find_witness(p, exhaustive(n));
      if (!r.witness) continue;
      const std::string text = serialize_witness(*r.witness);
      const Witness back = parse_witness(text);
      v.require(serialize_witness(back) == text && back.space == r.witness->space, info.id);
      v.require(verify_witness(back), info.id + " re-verify");
      ++witnesses;
      break;
    }
  }
  v.note << " " << fixtures << " fixtures, " << witnesses << " witnesses";
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"corpus reproduction", corpus},
      {"exhaustive law suite n<=3", law_suite},
      {"enumerator oracle", enumerator},
      {"search findings", search_findings},
      {"random property checks n in {4,5}", random_properties},
      {"round trip", round_trip}};
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  bool all_ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (only != 0 && id != only) continue;
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ":" << v.note.str() << '\n';
  }
  return all_ok ? 0 : 1;
}
