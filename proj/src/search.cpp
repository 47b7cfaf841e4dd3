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

#include "auraspace/search.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "auraspace/classifiers.hpp"
#include "auraspace/operators.hpp"
#include "auraspace/space_io.hpp"
#include "auraspace/topologies.hpp"
#include "parallel.hpp"

namespace auraspace {
namespace {

// Each evaluator fills `w.subsets` / `w.metrics` and returns true on success.
using Eval = bool (*)(const IdealAuraSpace&, int k, Witness& w);

template <class Fn>
bool first_subset(const IdealAuraSpace& s, Fn&& fn) {
  const std::uint32_t count = std::uint32_t{1} << s.size();
  for (std::uint32_t m = 0; m < count; ++m) {
    if (fn(PointSet(m))) return true;
  }
  return false;
}

bool first_missing(const SetFamily& big, const SetFamily& small, const char* name, Witness& w) {
  for (PointSet g : big) {
    if (!small.contains(g)) {
      w.subsets = {{name, g}};
      return true;
    }
  }
  return false;
}

bool strict_star_aura(const IdealAuraSpace& s, int, Witness& w) {
  return first_subset(s, [&](PointSet a) {
    const PointSet star = local_star(s, a);
    const PointSet al = aura_local(s, a);
    if (star == al) return false;
    w.subsets = {{"A", a}, {"A*", star}, {"A^a", al}};
    return true;
  });
}

bool aura_local_not_closed(const IdealAuraSpace& s, int, Witness& w) {
  return first_subset(s, [&](PointSet a) {
    const PointSet al = aura_local(s, a);
    if (s.topology().is_closed(al)) return false;
    w.subsets = {{"A", a}, {"A^a", al}};
    return true;
  });
}

bool nonidempotent_k(const IdealAuraSpace& s, int k, Witness& w) {
  return first_subset(s, [&](PointSet a) {
    const ClosureTrace t = ia_closure_trace(s, a);
    if (t.stabilized_at < k) return false;
    w.subsets = {{"A", a}, {"limit", t.limit()}};
    w.metrics = {{"k", k}, {"stabilized_at", t.stabilized_at}};
    return true;
  });
}

bool tau_aura_strict_tausa(const IdealAuraSpace& s, int, Witness& w) {
  return first_missing(gen_tausa(s).opens(), gen_tau_aura(s).opens(), "G", w);
}

bool tausa_strict_taustar(const IdealAuraSpace& s, int, Witness& w) {
  return first_missing(gen_tau_star(s).opens(), gen_tausa(s).opens(), "G", w);
}

bool tausac_not_in_tau(const IdealAuraSpace& s, int, Witness& w) {
  if (s.ideal().is_trivial()) return false;
  return first_missing(gen_tausa_c(s).opens(), s.topology().opens(), "G", w);
}

template <bool (*Test)(const OpennessProfile&)>
bool class_test(const IdealAuraSpace& s, int, Witness& w) {
  return first_subset(s, [&](PointSet a) {
    if (!Test(classify(s, a))) return false;
    w.subsets = {{"A", a}};
    return true;
  });
}

bool semi_not_alpha_p(const OpennessProfile& p) { return p.semi && !p.alpha; }
bool pre_not_alpha_p(const OpennessProfile& p) { return p.pre && !p.alpha; }
bool beta_only_p(const OpennessProfile& p) { return p.beta && !p.semi && !p.pre; }
bool semi_pre_not_alpha_p(const OpennessProfile& p) { return p.semi && p.pre && !p.alpha; }

bool semi_and_pre_not_alpha_nontransitive(const IdealAuraSpace& s, int k, Witness& w) {
  if (s.is_transitive()) return false;
  return class_test<semi_pre_not_alpha_p>(s, k, w);
}

bool property_vii_nontransitive_fail(const IdealAuraSpace& s, int, Witness& w) {
  if (s.is_transitive()) return false;
  return first_subset(s, [&](PointSet a) {
    const PointSet al = aura_local(s, a);
    for (PointSet j : s.ideal().members()) {
      if (aura_local(s, a - j) != al) {
        w.subsets = {{"A", a}, {"J", j}};
        return true;
      }
    }
    return false;
  });
}

bool i_open(const IdealAuraSpace& s, PointSet a) {
  return a.subset_of(classical_interior(s.topology(), star_closure(s, a)));
}

bool ia_open(const IdealAuraSpace& s, PointSet a) { return a.subset_of(ia_interior(s, a)); }

bool iopen_not_iaopen(const IdealAuraSpace& s, int, Witness& w) {
  return first_subset(s, [&](PointSet a) {
    if (!i_open(s, a) || ia_open(s, a)) return false;
    w.subsets = {{"A", a}};
    return true;
  });
}

bool iaopen_not_iopen(const IdealAuraSpace& s, int, Witness& w) {
  return first_subset(s, [&](PointSet a) {
    if (!ia_open(s, a) || i_open(s, a)) return false;
    w.subsets = {{"A", a}};
    return true;
  });
}

// The identity onto (X, τ*) is τ*-continuous; it is τ-continuous iff τ* ⊆ τ.
bool comparison_iii_fail(const IdealAuraSpace& s, int, Witness& w) {
  if (!first_missing(gen_tau_star(s).opens(), s.topology().opens(), "V", w)) return false;
  w.metrics = {{"map", "identity"}, {"target", "tau_star"}};
  return true;
}

bool tausa_eq_tau_aura(const IdealAuraSpace& s, int, Witness& w) {
  if (s.ideal().is_trivial()) return false;
  const SetFamily tsa = gen_tausa(s).opens();
  if (tsa != gen_tau_aura(s).opens()) return false;
  w.metrics = {{"opens", tsa.size()}};
  return true;
}

struct Entry {
  PredicateInfo info;
  Eval eval;
};

const std::vector<Entry>& entries() {
  using R = PredicateRole;
  static const std::vector<Entry> e{
      {{"STRICT_STAR_AURA", R::Strictness, "A* ⊊ A^a for some A"}, strict_star_aura},
      {{"AURA_LOCAL_NOT_CLOSED", R::Strictness, "A^a is not τ-closed for some A"}, aura_local_not_closed},
      {{"NONIDEMPOTENT_K", R::Strictness, "iterating cl*a on some A takes at least k steps"}, nonidempotent_k},
      {{"TAU_AURA_STRICT_TAUSA", R::Strictness, "τ_a ⊊ τ*a"}, tau_aura_strict_tausa},
      {{"TAUSA_STRICT_TAUSTAR", R::Strictness, "τ*a ⊊ τ*"}, tausa_strict_taustar},
      {{"TAUSAC_NOT_IN_TAU", R::Refutation, "I ≠ {∅} and τ*a_c ⊄ τ"}, tausac_not_in_tau},
      {{"SEMI_NOT_ALPHA", R::Strictness, "semi-open, not alpha-open"}, class_test<semi_not_alpha_p>},
      {{"PRE_NOT_ALPHA", R::Strictness, "pre-open, not alpha-open"}, class_test<pre_not_alpha_p>},
      {{"BETA_NOT_SEMI_NOT_PRE", R::Strictness, "beta-open, neither semi- nor pre-open"}, class_test<beta_only_p>},
      {{"SEMI_AND_PRE_NOT_ALPHA_NONTRANSITIVE", R::OpenQuestion,
        "non-transitive a; semi-open and pre-open but not alpha-open"},
       semi_and_pre_not_alpha_nontransitive},
      {{"PROPERTY_VII_NONTRANSITIVE_FAIL", R::OpenQuestion, "non-transitive a; (A\\J)^a ≠ A^a for some J ∈ I"},
       property_vii_nontransitive_fail},
      {{"IOPEN_NOT_IAOPEN", R::Strictness, "A ⊆ int(cl*(A)) but A is not ia-open"}, iopen_not_iaopen},
      {{"IAOPEN_NOT_IOPEN", R::Strictness, "A is ia-open but A ⊄ int(cl*(A))"}, iaopen_not_iopen},
      {{"COMPARISON_III_FAIL", R::Refutation,
        "identity onto (X, τ*) is τ*-continuous but not τ-continuous"},
       comparison_iii_fail},
      {{"TAUSA_EQ_TAU_AURA", R::Census, "I ≠ {∅} and τ*a = τ_a"}, tausa_eq_tau_aura},
  };
  return e;
}

const Entry& entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw UnknownPredicate(id);
}

class Stream {
 public:
  explicit Stream(const SearchConfig& config) : config_(config) {
    check_config(config_);
    if (config_.mode == SearchMode::Exhaustive) {
      blocks_ = exhaustive_blocks(config_);
      length_ = blocks_.empty() ? 0 : blocks_.back().first_index + blocks_.back().count;
    } else {
      length_ = config_.budget;
    }
  }

  std::uint64_t length() const { return length_; }

  /// Empty for positions removed by canonicalization.
  std::optional<IdealAuraSpace> at(std::uint64_t i) const {
    IdealAuraSpace s = config_.mode == SearchMode::Random ? random_space(config_, i) : block_space(i);
    if (config_.canonicalize && !is_canonical(s, config_)) return std::nullopt;
    return s;
  }

 private:
  IdealAuraSpace block_space(std::uint64_t i) const {
    auto it = std::upper_bound(blocks_.begin(), blocks_.end(), i,
                               [](std::uint64_t v, const SpaceBlock& b) { return v < b.first_index; });
    --it;
    return it->space(i - it->first_index);
  }

  SearchConfig config_;
  std::vector<SpaceBlock> blocks_;
  std::uint64_t length_ = 0;
};

constexpr std::uint64_t kChunk = 256;

int max_stabilization(const IdealAuraSpace& s) {
  int worst = 0;
  first_subset(s, [&](PointSet a) {
    const int k = ia_closure_trace(s, a).stabilized_at;
    if (k > s.size()) {
      throw std::logic_error("closure iteration exceeded n steps on " + serialize_space(s));
    }
    worst = std::max(worst, k);
    return false;
  });
  return worst;
}

}  // namespace

const std::vector<PredicateInfo>& predicate_registry() {
  static const std::vector<PredicateInfo> infos = [] {
    std::vector<PredicateInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::string PredicateSpec::text() const {
  return id == "NONIDEMPOTENT_K" ? id + "(" + std::to_string(k) + ")" : id;
}

const PredicateInfo& PredicateSpec::info() const { return entry(id).info; }

PredicateSpec parse_predicate(std::string_view text) {
  PredicateSpec spec;
  std::string_view param;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (!text.ends_with(")")) throw SpaceError("malformed predicate '" + std::string(text) + "'");
    param = text.substr(open + 1, text.size() - open - 2);
    text = text.substr(0, open);
  } else if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    param = text.substr(colon + 1);
    text = text.substr(0, colon);
  }
  spec.id = std::string(text);
  entry(spec.id);
  if (spec.id == "NONIDEMPOTENT_K") {
    spec.k = 2;
    if (!param.empty()) {
      const auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), spec.k);
      if (ec != std::errc() || ptr != param.data() + param.size() || spec.k < 1) {
        throw SpaceError("NONIDEMPOTENT_K needs a positive integer, got '" + std::string(param) + "'");
      }
    }
  } else if (!param.empty()) {
    throw SpaceError("predicate " + spec.id + " takes no parameter");
  }
  return spec;
}

std::optional<Witness> evaluate_predicate(const PredicateSpec& p, const IdealAuraSpace& space) {
  Witness w{p.text(), 0, {}, {}, nlohmann::ordered_json::object(), space};
  if (!entry(p.id).eval(space, p.k, w)) return std::nullopt;
  return w;
}

SearchResult find_witness(const PredicateSpec& p, const SearchConfig& config) {
  entry(p.id);
  const Stream stream(config);
  SearchResult result;
  result.config = describe_config(config);

  struct Slot {
    std::optional<Witness> witness;
    std::uint64_t skipped = 0;
  };
  const std::uint64_t chunks = (stream.length() + kChunk - 1) / kChunk;
  std::vector<Slot> slots(chunks);

  detail::parallel_chunks(stream.length(), kChunk, config.jobs, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      const auto space = stream.at(i);
      if (!space) {
        ++slots[c].skipped;
        continue;
      }
      if (auto w = evaluate_predicate(p, *space)) {
        w->index = i;
        w->config = result.config;
        slots[c].witness = std::move(w);
        return false;
      }
    }
    return true;
  });

  // Chunks are handed out in order and never abandoned midway, so every chunk
  // before the first successful one ran to completion.
  for (auto& slot : slots) {
    result.skipped += slot.skipped;
    if (slot.witness) {
      result.examined = slot.witness->index + 1;
      result.witness = std::move(slot.witness);
      return result;
    }
  }
  result.examined = stream.length();
  result.budget_exhausted = config.mode == SearchMode::Random;
  return result;
}

std::string describe_outcome(const PredicateSpec& p, const SearchResult& r) {
  const PredicateRole role = p.info().role;
  std::ostringstream out;
  if (r.witness) {
    out << "found " << p.text() << " at index " << r.witness->index << " (" << r.config << "): ";
    switch (role) {
      case PredicateRole::Strictness: out << "exhibits the claimed strictness"; break;
      case PredicateRole::Refutation: out << "refutes statement / consistent with proof"; break;
      case PredicateRole::OpenQuestion: out << "a witness exists"; break;
      case PredicateRole::Census: out << "positive instance"; break;
    }
    return out.str();
  }
  out << "NotFound " << p.text() << " after " << r.examined << " spaces (" << r.config << ")";
  if (r.budget_exhausted) out << ", budget exhausted";
  switch (role) {
    case PredicateRole::Refutation: out << ": does not refute statement at this scale"; break;
    case PredicateRole::OpenQuestion: out << ": evidence, not proof"; break;
    default: break;
  }
  return out.str();
}

std::string serialize_witness(const Witness& w) {
  const Universe& u = w.space.universe();
  nlohmann::ordered_json subsets = nlohmann::ordered_json::object();
  for (const auto& [name, set] : w.subsets) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int x : set) arr.push_back(u.name(x));
    subsets[name] = arr;
  }
  nlohmann::ordered_json block = {{"predicate", w.predicate},
                                  {"index", w.index},
                                  {"config", w.config},
                                  {"subsets", subsets},
                                  {"metrics", w.metrics}};
  return serialize_space(w.space, {{"witness", block}});
}

bool has_witness_block(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  return doc.is_object() && doc.contains("witness");
}

Witness parse_witness(std::string_view text) {
  const auto doc = nlohmann::ordered_json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SpaceFormatError({"document: not valid JSON"});
  if (!doc.is_object() || !doc.contains("witness") || !doc["witness"].is_object()) {
    throw SpaceFormatError({"witness: missing witness block"});
  }
  IdealAuraSpace space = parse_space(text);
  const auto& block = doc["witness"];
  std::vector<std::string> problems;
  auto need = [&](const char* key, bool ok) {
    if (!ok) problems.push_back(std::string("witness: '") + key + "' missing or mistyped");
    return ok;
  };
  Witness w{"", 0, "", {}, nlohmann::ordered_json::object(), space};
  if (need("predicate", block.contains("predicate") && block["predicate"].is_string())) {
    w.predicate = block["predicate"].get<std::string>();
  }
  if (need("index", block.contains("index") && block["index"].is_number_unsigned())) {
    w.index = block["index"].get<std::uint64_t>();
  }
  if (block.contains("config")) {
    if (need("config", block["config"].is_string())) w.config = block["config"].get<std::string>();
  }
  if (need("subsets", block.contains("subsets") && block["subsets"].is_object())) {
    for (const auto& [name, value] : block["subsets"].items()) {
      try {
        w.subsets.emplace_back(name, set_from_json(space.universe(), nlohmann::json::parse(value.dump())));
      } catch (const SpaceError& e) {
        problems.push_back("witness: subset '" + name + "': " + e.what());
      }
    }
  }
  if (block.contains("metrics")) {
    if (need("metrics", block["metrics"].is_object())) w.metrics = block["metrics"];
  }
  if (!problems.empty()) throw SpaceFormatError(problems);
  parse_predicate(w.predicate);
  return w;
}

bool verify_witness(const Witness& w) {
  const auto again = evaluate_predicate(parse_predicate(w.predicate), w.space);
  return again && again->subsets == w.subsets && again->metrics == w.metrics;
}

StabilizationCensus stabilization_census(const SearchConfig& config) {
  const Stream stream(config);
  const std::uint64_t chunks = (stream.length() + kChunk - 1) / kChunk;
  std::vector<StabilizationCensus> parts(chunks);
  detail::parallel_chunks(stream.length(), kChunk, config.jobs, [&](std::uint64_t c, std::uint64_t b, std::uint64_t e) {
    for (std::uint64_t i = b; i < e; ++i) {
      const auto space = stream.at(i);
      if (!space) continue;
      const int k = max_stabilization(*space);
      ++(space->is_transitive() ? parts[c].transitive : parts[c].non_transitive)[k];
      ++parts[c].examined;
      parts[c].max_index = std::max(parts[c].max_index, k);
    }
    return true;
  });
  StabilizationCensus total;
  for (const auto& p : parts) {
    for (const auto& [k, v] : p.transitive) total.transitive[k] += v;
    for (const auto& [k, v] : p.non_transitive) total.non_transitive[k] += v;
    total.examined += p.examined;
    total.max_index = std::max(total.max_index, p.max_index);
  }
  return total;
}

std::string format_census(const StabilizationCensus& c) {
  std::ostringstream out;
  out << "spaces: " << c.examined << ", max stabilization index: " << c.max_index << '\n';
  out << "index  transitive  non-transitive\n";
  for (int k = 0; k <= c.max_index; ++k) {
    const auto t = c.transitive.count(k) ? c.transitive.at(k) : 0;
    const auto nt = c.non_transitive.count(k) ? c.non_transitive.at(k) : 0;
    out << std::setw(5) << k << std::setw(12) << t << std::setw(16) << nt << '\n';
  }
  return out.str();
}

nlohmann::ordered_json census_to_json(const StabilizationCensus& c) {
  auto hist = [](const std::map<int, std::uint64_t>& m) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [k, v] : m) obj[std::to_string(k)] = v;
    return obj;
  };
  return {{"examined", c.examined},
          {"max_index", c.max_index},
          {"transitive", hist(c.transitive)},
          {"non_transitive", hist(c.non_transitive)}};
}

}  // namespace auraspace
