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

#include "auraspace/laws.hpp"

#include <algorithm>
#include <sstream>

#include "auraspace/continuity.hpp"
#include "auraspace/operators.hpp"
#include "auraspace/space_io.hpp"
#include "auraspace/topologies.hpp"
#include "parallel.hpp"

namespace auraspace {

std::string_view to_string(LawKind k) { return k == LawKind::Asserted ? "asserted" : "probe"; }

std::string_view to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::None: return "none";
    case Hypothesis::Transitive: return "transitive";
    case Hypothesis::NonTransitive: return "non-transitive";
    case Hypothesis::TrivialIdeal: return "trivial-ideal";
    case Hypothesis::NontrivialIdeal: return "nontrivial-ideal";
    case Hypothesis::ImproperIdeal: return "improper-ideal";
    case Hypothesis::FullScope: return "full-scope";
  }
  return "?";
}

namespace {

template <class Op>
std::vector<PointSet> tabulate(std::uint32_t count, Op&& op) {
  std::vector<PointSet> out(count);
  for (std::uint32_t m = 0; m < count; ++m) out[m] = op(PointSet(m));
  return out;
}

}  // namespace

SpaceTables::SpaceTables(IdealAuraSpace s)
    : space(std::move(s)),
      n(space.size()),
      full(space.full()),
      count(std::uint32_t{1} << n),
      transitive(space.is_transitive()) {
  const auto& sp = space;
  star = tabulate(count, [&](PointSet a) { return local_star(sp, a); });
  aura_local = tabulate(count, [&](PointSet a) { return auraspace::aura_local(sp, a); });
  star_closure = tabulate(count, [&](PointSet a) { return auraspace::star_closure(sp, a); });
  cl_aura = tabulate(count, [&](PointSet a) { return aura_closure(sp, a); });
  int_aura = tabulate(count, [&](PointSet a) { return aura_interior(sp, a); });
  clsa = tabulate(count, [&](PointSet a) { return ia_closure(sp, a); });
  intsa = tabulate(count, [&](PointSet a) { return ia_interior(sp, a); });
  psi_aura = tabulate(count, [&](PointSet a) { return auraspace::psi_aura(sp, a); });
  psi = tabulate(count, [&](PointSet a) { return auraspace::psi(sp, a); });
  cl = tabulate(count, [&](PointSet a) { return classical_closure(sp.topology(), a); });
  interior = tabulate(count, [&](PointSet a) { return classical_interior(sp.topology(), a); });
  clsa_inf.resize(count);
  stabilized_at.resize(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    const ClosureTrace trace = ia_closure_trace(sp, PointSet(m));
    clsa_inf[m] = trace.limit();
    stabilized_at[m] = trace.stabilized_at;
  }
  tau = sp.topology().opens();
  const TopologyBundle bundle = gen_topologies(sp);
  tau_aura = bundle.tau_aura.opens();
  tau_star = bundle.tau_star.opens();
  tausa = bundle.tausa.opens();
  tausa_c = bundle.tausa_c.opens();
  classes = classify_all(sp);
}

bool SpaceTables::satisfies(Hypothesis h) const {
  switch (h) {
    case Hypothesis::None: return true;
    case Hypothesis::Transitive: return transitive;
    case Hypothesis::NonTransitive: return !transitive;
    case Hypothesis::TrivialIdeal: return space.ideal().is_trivial();
    case Hypothesis::NontrivialIdeal: return !space.ideal().is_trivial();
    case Hypothesis::ImproperIdeal: return space.ideal().is_improper();
    case Hypothesis::FullScope:
      for (int x = 0; x < n; ++x) {
        if (space.aura(x) != full) return false;
      }
      return true;
  }
  return false;
}

void Outcome::fail(std::string detail) {
  if (failure_details_.size() < kKeep) failure_details_.push_back(std::move(detail));
  ++failures_;
}

void Outcome::remark(std::string detail) {
  if (remark_details_.size() < kKeep) remark_details_.push_back(std::move(detail));
  ++remarks_;
}

namespace {

// ---- helpers for law bodies ----

struct Fmt {
  const SpaceTables& t;
  std::string operator()(PointSet a) const { return format_set(t.space.universe(), a); }
  std::string operator()(const SetFamily& f) const { return format_family(t.space.universe(), f); }
};

template <class Fn>
void each(const SpaceTables& t, Fn&& fn) {
  for (std::uint32_t m = 0; m < t.count; ++m) fn(PointSet(m));
}

template <class Fn>
void each_pair(const SpaceTables& t, Fn&& fn) {
  for (std::uint32_t a = 0; a < t.count; ++a) {
    for (std::uint32_t b = 0; b < t.count; ++b) fn(PointSet(a), PointSet(b));
  }
}

PointSet cmp(const SpaceTables& t, PointSet a) { return complement(a, t.n); }

void check_subset(const SpaceTables& t, const SetFamily& lo, const SetFamily& hi, const char* what, Outcome& o) {
  for (PointSet s : lo) {
    if (!hi.contains(s)) {
      o.fail(std::string(what) + ": " + Fmt{t}(s) + " is missing from the larger family");
      return;
    }
  }
}

// ---- local function ----

void star_properties(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  if (!t.star[0].empty()) o.fail("∅* = " + f(t.star[0]));
  each_pair(t, [&](PointSet a, PointSet b) {
    if (a.subset_of(b) && !t.star[a.bits()].subset_of(t.star[b.bits()])) {
      o.fail("monotonicity fails for A=" + f(a) + " B=" + f(b));
    }
    if (t.star[(a | b).bits()] != (t.star[a.bits()] | t.star[b.bits()])) {
      o.fail("additivity fails for A=" + f(a) + " B=" + f(b));
    }
  });
  each(t, [&](PointSet a) {
    const PointSet s = t.star[a.bits()];
    if (!t.tau.contains(cmp(t, s))) o.fail("A*=" + f(s) + " is not closed for A=" + f(a));
    if (!t.star[s.bits()].subset_of(s)) o.fail("(A*)* ⊄ A* for A=" + f(a));
  });
}

void star_subset_aura(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  bool strict_seen = false;
  each(t, [&](PointSet a) {
    const PointSet s = t.star[a.bits()];
    const PointSet al = t.aura_local[a.bits()];
    if (!s.subset_of(al)) o.fail("A=" + f(a) + ": A*=" + f(s) + " ⊄ A^a=" + f(al));
    if (s != al && !strict_seen) {
      strict_seen = true;
      o.remark("strict for A=" + f(a) + ": A*=" + f(s) + " ⊊ A^a=" + f(al));
    }
  });
}

void star_topology(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  check_subset(t, t.tau, t.tau_star, "τ ⊆ τ*", o);
  each(t, [&](PointSet a) {
    const bool open = t.tau_star.contains(a);
    if (open != a.subset_of(t.psi[a.bits()])) o.fail("τ*-openness disagrees with A ⊆ ψ(A) for A=" + f(a));
    const PointSet c = t.star_closure[a.bits()];
    if (!a.subset_of(c)) o.fail("cl* not extensive at A=" + f(a));
    if (t.star_closure[c.bits()] != c) o.fail("cl* not idempotent at A=" + f(a));
  });
  if (!t.star_closure[0].empty()) o.fail("cl*(∅) ≠ ∅");
  each_pair(t, [&](PointSet a, PointSet b) {
    if (t.star_closure[(a | b).bits()] != (t.star_closure[a.bits()] | t.star_closure[b.bits()])) {
      o.fail("cl* not additive for A=" + f(a) + " B=" + f(b));
    }
  });
}

// ---- aura-local function ----

void aura_local_empty(const SpaceTables& t, Outcome& o) {
  if (!t.aura_local[0].empty()) o.fail("∅^a = " + Fmt{t}(t.aura_local[0]));
}

void aura_local_monotone(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each_pair(t, [&](PointSet a, PointSet b) {
    if (a.subset_of(b) && !t.aura_local[a.bits()].subset_of(t.aura_local[b.bits()])) {
      o.fail("A=" + f(a) + " ⊆ B=" + f(b) + " but A^a=" + f(t.aura_local[a.bits()]) +
             " ⊄ B^a=" + f(t.aura_local[b.bits()]));
    }
  });
}

void aura_local_additive(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each_pair(t, [&](PointSet a, PointSet b) {
    if (t.aura_local[(a | b).bits()] != (t.aura_local[a.bits()] | t.aura_local[b.bits()])) {
      o.fail("(A∪B)^a ≠ A^a ∪ B^a for A=" + f(a) + " B=" + f(b));
    }
  });
}

void aura_local_below_aura_closure(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (!t.aura_local[a.bits()].subset_of(t.cl_aura[a.bits()])) {
      o.fail("A^a=" + f(t.aura_local[a.bits()]) + " ⊄ cl_a(A)=" + f(t.cl_aura[a.bits()]) + " for A=" + f(a));
    }
  });
}

void aura_local_trivial_ideal(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (t.aura_local[a.bits()] != t.cl_aura[a.bits()]) o.fail("A^a ≠ cl_a(A) for A=" + f(a));
  });
}

void aura_local_improper_ideal(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (!t.aura_local[a.bits()].empty()) o.fail("A^a=" + f(t.aura_local[a.bits()]) + " for A=" + f(a));
  });
}

void aura_local_ideal_absorption(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    for (PointSet j : t.space.ideal().members()) {
      if (t.aura_local[(a - j).bits()] != t.aura_local[a.bits()]) {
        o.fail("(A\\J)^a ≠ A^a for A=" + f(a) + " J=" + f(j));
        return;
      }
    }
  });
}

void aura_local_ideal_antitone(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  const Universe& u = t.space.universe();
  for_each_subset(t.space.ideal().support(), [&](PointSet smaller) {
    const IdealAuraSpace coarser = t.space.with_ideal(Ideal::principal(u, smaller));
    each(t, [&](PointSet a) {
      if (!t.aura_local[a.bits()].subset_of(aura_local(coarser, a))) {
        o.fail("A^a(I) ⊄ A^a(P(" + f(smaller) + ")) for A=" + f(a));
      }
    });
  });
}

void aura_local_vs_closure(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  const bool trivial = t.space.ideal().is_trivial();
  each(t, [&](PointSet a) {
    const PointSet al = t.aura_local[a.bits()];
    const PointSet ca = t.cl_aura[a.bits()];
    if (!al.subset_of(ca)) o.fail("(i) A^a ⊄ cl_a(A) for A=" + f(a));
    if (trivial && al != ca) o.fail("(i) equality fails under the trivial ideal for A=" + f(a));
    if (a.subset_of(al) && !(a | al).subset_of(ca)) o.fail("(ii) fails for A=" + f(a));
    bool condition = true;
    for (int x = 0; x < t.n; ++x) {
      const PointSet meet = t.space.aura(x) & a;
      if (!meet.empty() && t.space.ideal().contains(meet)) condition = false;
    }
    if ((al == ca) != condition) o.fail("(iii) equivalence fails for A=" + f(a));
  });
}

void aura_local_not_closed(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const PointSet al = t.aura_local[a.bits()];
    if (!t.tau.contains(cmp(t, al))) {
      o.remark("A=" + f(a) + ": A^a=" + f(al) + " is not τ-closed");
    }
  });
}

// ---- closure operators ----

void cech_axioms(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  if (!t.clsa[0].empty()) o.fail("cl(∅) = " + f(t.clsa[0]));
  each(t, [&](PointSet a) {
    if (!a.subset_of(t.clsa[a.bits()])) o.fail("not extensive at A=" + f(a));
  });
  each_pair(t, [&](PointSet a, PointSet b) {
    if (a.subset_of(b) && !t.clsa[a.bits()].subset_of(t.clsa[b.bits()])) {
      o.fail("not monotone at A=" + f(a) + " B=" + f(b));
    }
    if (t.clsa[(a | b).bits()] != (t.clsa[a.bits()] | t.clsa[b.bits()])) {
      o.fail("not additive at A=" + f(a) + " B=" + f(b));
    }
  });
}

void kuratowski_fixpoint(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  if (!t.clsa_inf[0].empty()) o.fail("cl∞(∅) = " + f(t.clsa_inf[0]));
  each(t, [&](PointSet a) {
    const PointSet c = t.clsa_inf[a.bits()];
    if (!a.subset_of(c)) o.fail("not extensive at A=" + f(a));
    if (t.clsa_inf[c.bits()] != c) o.fail("not idempotent at A=" + f(a));
    if (t.clsa[c.bits()] != c) o.fail("cl∞(A) is not a fixpoint of the single step at A=" + f(a));
  });
  each_pair(t, [&](PointSet a, PointSet b) {
    if (t.clsa_inf[(a | b).bits()] != (t.clsa_inf[a.bits()] | t.clsa_inf[b.bits()])) {
      o.fail("not additive at A=" + f(a) + " B=" + f(b));
    }
  });
}

void trace_bound(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const ClosureTrace trace = ia_closure_trace(t.space, a);
    if (trace.stabilized_at > t.n) {
      o.fail("stabilized at " + std::to_string(trace.stabilized_at) + " > n for A=" + f(a));
    }
    if (trace.steps.front() != a || static_cast<int>(trace.steps.size()) != trace.stabilized_at + 1) {
      o.fail("malformed trace for A=" + f(a));
      return;
    }
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
      const PointSet prev = trace.steps[i - 1];
      if (trace.steps[i] != t.clsa[prev.bits()] || trace.steps[i] == prev) {
        o.fail("trace is not a strictly growing iteration for A=" + f(a));
        return;
      }
    }
    if (t.clsa[trace.limit().bits()] != trace.limit()) o.fail("trace limit is not fixed for A=" + f(a));
  });
}

void not_idempotent(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  int worst = 0;
  PointSet worst_a;
  each(t, [&](PointSet a) {
    if (t.stabilized_at[a.bits()] > worst) {
      worst = t.stabilized_at[a.bits()];
      worst_a = a;
    }
  });
  if (worst >= 2) {
    o.remark("A=" + f(worst_a) + " needs " + std::to_string(worst) + " iterations");
  }
}

void transitive_idempotent(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const PointSet c = t.clsa[a.bits()];
    if (t.clsa[c.bits()] != c) o.fail("cl(cl(A)) ≠ cl(A) for A=" + f(a));
    if (t.clsa_inf[a.bits()] != c) o.fail("cl∞(A) ≠ cl(A) for A=" + f(a));
  });
  if (t.tausa != t.tausa_c) o.fail("fixpoint and single-step topologies differ");
}

// ---- topologies ----

void topology_chain(const SpaceTables& t, Outcome& o) {
  check_subset(t, t.tau_aura, t.tausa, "τ_a ⊆ τ*a", o);
  check_subset(t, t.tausa, t.tausa_c, "τ*a ⊆ τ*a_c", o);
  check_subset(t, t.tausa_c, t.tau_star, "τ*a_c ⊆ τ*", o);
  check_subset(t, t.tau_aura, t.tau, "τ_a ⊆ τ", o);
  check_subset(t, t.tau, t.tau_star, "τ ⊆ τ*", o);
}

void tausa_eq_tausa_c(const SpaceTables& t, Outcome& o) {
  if (t.tausa != t.tausa_c) {
    o.fail("τ*a=" + Fmt{t}(t.tausa) + " ≠ τ*a_c=" + Fmt{t}(t.tausa_c));
  }
}

void chain_tau_containment(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  for (PointSet g : t.tausa_c) {
    if (!t.tau.contains(g)) {
      o.fail(f(g) + " ∈ τ*a_c but ∉ τ");
      return;
    }
  }
}

void tausa_eq_tau_aura(const SpaceTables& t, Outcome& o) {
  if (t.tausa == t.tau_aura) o.remark("τ*a = τ_a = " + Fmt{t}(t.tau_aura) + " with a nontrivial ideal");
}

void trivial_ideal_reduction(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (t.aura_local[a.bits()] != t.cl_aura[a.bits()]) o.fail("A^a ≠ cl_a(A) for A=" + f(a));
    if (t.clsa[a.bits()] != t.cl_aura[a.bits()]) o.fail("cl*a(A) ≠ cl_a(A) for A=" + f(a));
    const OpennessProfile aura_only = classify_with([&](PointSet s) { return t.cl_aura[s.bits()]; },
                                                    [&](PointSet s) { return t.int_aura[s.bits()]; }, a);
    OpennessProfile ours = t.classes[a.bits()];
    ours.b_set = false;
    if (!(ours == aura_only)) o.fail("generalized open classes differ from the aura-only ones for A=" + f(a));
  });
  if (t.tausa != t.tau_aura) o.fail("τ*a ≠ τ_a");
}

void improper_ideal(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (!t.aura_local[a.bits()].empty()) o.fail("A^a ≠ ∅ for A=" + f(a));
    if (t.clsa[a.bits()] != a) o.fail("cl*a is not the identity at A=" + f(a));
  });
  if (t.tausa.size() != t.count) o.fail("τ*a is not discrete");
}

void full_scope(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const PointSet expect = t.space.ideal().contains(a) ? PointSet{} : t.full;
    if (t.aura_local[a.bits()] != expect) o.fail("A^a=" + f(t.aura_local[a.bits()]) + " for A=" + f(a));
  });
}

void finite_ideal(const SpaceTables& t, Outcome& o) {
  // On a finite set every subset is finite, so the ideal of finite sets is P(X).
  const IdealAuraSpace finite = t.space.with_ideal(Ideal::improper(t.space.universe()));
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (!aura_local(finite, a).empty()) o.fail("A^a(I_f) ≠ ∅ for A=" + f(a));
  });
  if (gen_tausa(finite).opens().size() != t.count) o.fail("τ*a(I_f) is not discrete");
}

// ---- psi ----

void psi_properties(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  const Ideal& ideal = t.space.ideal();
  if (t.psi_aura[t.full.bits()] != t.full) o.fail("(i) ψ_a(X) ≠ X");
  PointSet empty_expect;
  for (int x = 0; x < t.n; ++x) {
    if (ideal.contains(t.space.aura(x))) empty_expect |= PointSet::singleton(x);
  }
  if (t.psi_aura[0] != empty_expect) o.fail("(ii) ψ_a(∅)=" + f(t.psi_aura[0]) + ", expected " + f(empty_expect));
  each_pair(t, [&](PointSet a, PointSet b) {
    if (a.subset_of(b) && !t.psi_aura[a.bits()].subset_of(t.psi_aura[b.bits()])) {
      o.fail("(iii) not monotone at A=" + f(a) + " B=" + f(b));
    }
    if (t.psi_aura[(a & b).bits()] != (t.psi_aura[a.bits()] & t.psi_aura[b.bits()])) {
      o.fail("(iv) ψ_a(A∩B) ≠ ψ_a(A) ∩ ψ_a(B) at A=" + f(a) + " B=" + f(b));
    }
  });
  each(t, [&](PointSet a) {
    const PointSet p = t.psi_aura[a.bits()];
    if (!p.subset_of(t.psi[a.bits()])) o.fail("(v) ψ_a(A) ⊄ ψ(A) at A=" + f(a));
    PointSet direct;
    for (int x = 0; x < t.n; ++x) {
      if (ideal.contains(t.space.aura(x) - a)) direct |= PointSet::singleton(x);
    }
    if (!p.subset_of(a | (direct - a))) o.fail("(vi) fails at A=" + f(a));
    if (direct != cmp(t, t.aura_local[cmp(t, a).bits()])) o.fail("the two formulas for ψ_a disagree at A=" + f(a));
  });
}

void psi_aura_ideal_absorption(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    for (PointSet j : t.space.ideal().members()) {
      if (t.psi_aura[(a | j).bits()] != t.psi_aura[a.bits()]) {
        o.fail("ψ_a(A∪J) ≠ ψ_a(A) for A=" + f(a) + " J=" + f(j));
        return;
      }
    }
  });
}

void psi_characterization(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    if (t.tausa.contains(a) != a.subset_of(t.psi_aura[a.bits()])) {
      o.fail("A=" + f(a) + ": membership in τ*a disagrees with A ⊆ ψ_a(A)");
    }
  });
}

void basis_theorem(const SpaceTables& t, Outcome& o) {
  const SetFamily beta = gen_basis_beta(t.space);
  const auto generated = topology_from_basis(t.space.universe(), beta);
  if (!generated) {
    o.fail("β does not generate a topology");
    return;
  }
  if (generated.value().opens() != t.tausa) {
    o.fail("β generates " + Fmt{t}(generated.value().opens()) + " but τ*a=" + Fmt{t}(t.tausa));
  }
}

// ---- generalized open sets ----

void interior_duality(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const PointSet in = t.intsa[a.bits()];
    if (in != cmp(t, t.clsa[cmp(t, a).bits()])) o.fail("int*a(A) ≠ X \\ cl*a(X\\A) at A=" + f(a));
    if (in != (a & t.psi_aura[a.bits()])) o.fail("int*a(A) ≠ A ∩ ψ_a(A) at A=" + f(a));
  });
}

void open_class_hierarchy(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const OpennessProfile& p = t.classes[a.bits()];
    if (!p.respects_hierarchy()) o.fail("hierarchy broken at A=" + f(a));
    if (p.ia_open != t.tausa_c.contains(a)) o.fail("ia-open disagrees with τ*a_c at A=" + f(a));
    if (t.tausa.contains(a) && !p.alpha) o.fail("τ*a-open but not alpha at A=" + f(a));
  });
}

void semi_pre_alpha(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  each(t, [&](PointSet a) {
    const OpennessProfile& p = t.classes[a.bits()];
    if (p.semi && p.pre && !p.alpha) o.fail("A=" + f(a) + " is semi-open and pre-open but not alpha-open");
  });
}

void reduction_diagram(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  const bool trivial = t.space.ideal().is_trivial();
  each(t, [&](PointSet a) {
    const bool a_open = t.tau_aura.contains(a);
    const bool ia_open = t.classes[a.bits()].ia_open;
    if (a_open && !ia_open) o.fail("a-open but not ia-open: " + f(a));
    if (trivial && ia_open && !a_open) o.fail("ia-open but not a-open under the trivial ideal: " + f(a));
  });
}

void compat_independence(const SpaceTables& t, Outcome& o) {
  Fmt f{t};
  bool i_only = false;
  bool ia_only = false;
  each(t, [&](PointSet a) {
    const bool i_open = a.subset_of(t.interior[t.star_closure[a.bits()].bits()]);
    const bool ia_open = t.classes[a.bits()].ia_open;
    if (i_open && !ia_open && !i_only) {
      i_only = true;
      o.remark("I-open, not ia-open: " + f(a));
    }
    if (ia_open && !i_open && !ia_only) {
      ia_only = true;
      o.remark("ia-open, not I-open: " + f(a));
    }
  });
}

// ---- maps ----

std::string target_set(PointSet v) {
  std::string out = "{";
  for (int y : v) {
    if (out.size() > 1) out += ',';
    out += "pqr"[y];
  }
  return out + "}";
}

std::string describe_map(const SpaceTables& t, const MapCase& m) {
  std::string out = "f:";
  for (int x = 0; x < t.n; ++x) out += " " + t.space.universe().name(x) + "→" + "pqr"[m.table[x]];
  out += "; σ={";
  bool first = true;
  for (PointSet v : m.target) {
    if (!first) out += ',';
    first = false;
    out += target_set(v);
  }
  return out + "}";
}

void continuity_hierarchy(const SpaceTables& t, const MapCase& m, Outcome& o) {
  const ContinuityProfile p = continuity_profile(t.classes, m.table, m.target);
  if (!p.respects_hierarchy()) o.fail("profile breaks the hierarchy for " + describe_map(t, m));
}

void decomposition(const SpaceTables& t, const MapCase& m, Outcome& o) {
  const DecompositionReport r = decomposition_from_tables(t.transitive, t.classes, t.tausa, m.table, m.target);
  if (!r.holds()) {
    std::string detail = describe_map(t, m);
    if (r.witness) {
      detail += "; preimage of " + target_set(*r.witness) + " = " +
                Fmt{t}(preimage(m.table, *r.witness)) + " is alpha-open but not τ*a-open";
    }
    o.fail(detail);
  }
}

void alpha_decomposition(const SpaceTables& t, const MapCase& m, Outcome& o) {
  const ContinuityProfile p = continuity_profile(t.classes, m.table, m.target);
  if ((p.semi && p.pre) != p.alpha) o.fail("semi ∧ pre ≠ alpha continuity for " + describe_map(t, m));
}

void comparison_chain(const SpaceTables& t, const MapCase& m, Outcome& o) {
  const bool aura = !continuity_witness(m.table, t.tau_aura, m.target);
  const bool tausa = !continuity_witness(m.table, t.tausa, m.target);
  const bool star = !continuity_witness(m.table, t.tau_star, m.target);
  if (aura && !tausa) o.fail("τ_a-continuous but not τ*a-continuous: " + describe_map(t, m));
  if (tausa && !star) o.fail("τ*a-continuous but not τ*-continuous: " + describe_map(t, m));
}

void comparison_iii(const SpaceTables& t, const MapCase& m, Outcome& o) {
  if (continuity_witness(m.table, t.tau_star, m.target)) return;
  if (const auto v = continuity_witness(m.table, t.tau, m.target)) {
    o.fail("τ*-continuous but not τ-continuous: " + describe_map(t, m) + "; preimage of " + target_set(*v) +
           " = " + Fmt{t}(preimage(m.table, *v)) + " ∉ τ");
  }
}

std::vector<LawInfo> make_registry() {
  using K = LawKind;
  using S = LawScope;
  using H = Hypothesis;
  auto space = [](std::string id, K k, H h, std::string topic, std::string statement, SpaceLawFn fn) {
    return LawInfo{std::move(id), k, S::Space, h, std::move(topic), std::move(statement), fn, nullptr};
  };
  auto map = [](std::string id, K k, H h, std::string topic, std::string statement, MapLawFn fn) {
    return LawInfo{std::move(id), k, S::Map, h, std::move(topic), std::move(statement), nullptr, fn};
  };
  return {
      space("star_properties", K::Asserted, H::None, "local-function",
            "∅*=∅; A*⊆B* for A⊆B; (A∪B)*=A*∪B*; A* is closed; (A*)*⊆A*", star_properties),
      space("star_topology", K::Asserted, H::None, "local-function",
            "cl* is Kuratowski; τ⊆τ*; A∈τ* iff A⊆ψ(A)", star_topology),
      space("star_subset_aura", K::Asserted, H::None, "star-vs-aura-local", "A* ⊆ A^a", star_subset_aura),
      space("aura_local_empty", K::Asserted, H::None, "aura-local-properties", "∅^a = ∅", aura_local_empty),
      space("aura_local_monotone", K::Asserted, H::None, "aura-local-properties", "A⊆B implies A^a⊆B^a",
            aura_local_monotone),
      space("aura_local_additive", K::Asserted, H::None, "aura-local-properties", "(A∪B)^a = A^a ∪ B^a",
            aura_local_additive),
      space("aura_local_below_aura_closure", K::Asserted, H::None, "aura-local-properties", "A^a ⊆ cl_a(A)",
            aura_local_below_aura_closure),
      space("aura_local_trivial_ideal", K::Asserted, H::TrivialIdeal, "aura-local-properties",
            "I={∅} implies A^a = cl_a(A)", aura_local_trivial_ideal),
      space("aura_local_improper_ideal", K::Asserted, H::ImproperIdeal, "aura-local-properties",
            "I=P(X) implies A^a = ∅", aura_local_improper_ideal),
      space("aura_local_ideal_absorption", K::Asserted, H::Transitive, "aura-local-properties",
            "J∈I implies (A\\J)^a = A^a", aura_local_ideal_absorption),
      space("aura_local_ideal_absorption_nontransitive", K::Probe, H::NonTransitive, "aura-local-properties",
            "J∈I implies (A\\J)^a = A^a without transitivity", aura_local_ideal_absorption),
      space("aura_local_ideal_antitone", K::Asserted, H::None, "aura-local-properties",
            "I2⊆I1 implies A^a(I1) ⊆ A^a(I2)", aura_local_ideal_antitone),
      space("aura_local_not_closed", K::Probe, H::None, "aura-local-not-closed",
            "A^a need not be τ-closed (records instances)", aura_local_not_closed),
      space("aura_local_vs_closure", K::Asserted, H::None, "aura-local-vs-closure",
            "A^a ⊆ cl_a(A); A⊆A^a implies A∪A^a ⊆ cl_a(A); equality iff no nonempty trace lies in I",
            aura_local_vs_closure),
      space("cech_axioms", K::Asserted, H::None, "cech-closure",
            "cl*a(∅)=∅, extensive, monotone, additive", cech_axioms),
      space("not_idempotent", K::Probe, H::None, "non-idempotency",
            "cl*a need not be idempotent (records the slowest subset)", not_idempotent),
      space("trace_bound", K::Asserted, H::None, "non-idempotency",
            "iteration of cl*a grows strictly and stabilizes within n steps", trace_bound),
      space("kuratowski_fixpoint", K::Asserted, H::None, "iterated-closure",
            "cl∞ is a Kuratowski closure operator", kuratowski_fixpoint),
      space("topology_chain", K::Asserted, H::None, "topology-chain",
            "τ_a ⊆ τ*a ⊆ τ*a_c ⊆ τ*, τ_a ⊆ τ ⊆ τ*", topology_chain),
      space("tausa_eq_tausa_c", K::Asserted, H::None, "topology-chain",
            "the fixpoint and single-step topologies coincide", tausa_eq_tausa_c),
      space("chain_tau_containment", K::Probe, H::NontrivialIdeal, "topology-chain",
            "I≠{∅} implies τ*a_c ⊆ τ (withdrawn clause)", chain_tau_containment),
      space("transitive_idempotent", K::Asserted, H::Transitive, "transitivity-idempotency",
            "transitive a implies cl*a idempotent and τ*a = τ*a_c", transitive_idempotent),
      space("trivial_ideal_reduction", K::Asserted, H::TrivialIdeal, "trivial-ideal",
            "I={∅}: A^a = cl*a(A) = cl_a(A), τ*a = τ_a, generalized open classes agree", trivial_ideal_reduction),
      space("improper_ideal", K::Asserted, H::ImproperIdeal, "improper-ideal",
            "I=P(X): A^a=∅, cl*a is the identity, τ*a = P(X)", improper_ideal),
      space("full_scope", K::Asserted, H::FullScope, "chain-equalities",
            "a(x)=X for all x: A^a = X if A∉I, else ∅", full_scope),
      space("finite_ideal", K::Asserted, H::None, "finite-ideal",
            "finite X with the ideal of finite sets: A^a=∅ and τ*a = P(X)", finite_ideal),
      space("psi_properties", K::Asserted, H::None, "psi-aura",
            "ψ_a(X)=X; ψ_a(∅)={x : a(x)∈I}; monotone; ψ_a(A∩B)=ψ_a(A)∩ψ_a(B); ψ_a⊆ψ; both formulas agree",
            psi_properties),
      space("psi_aura_ideal_absorption", K::Asserted, H::Transitive, "psi-aura",
            "J∈I implies ψ_a(A∪J) = ψ_a(A)", psi_aura_ideal_absorption),
      space("psi_characterization", K::Asserted, H::Transitive, "psi-characterization",
            "A∈τ*a iff A ⊆ ψ_a(A)", psi_characterization),
      space("psi_characterization_nontransitive", K::Probe, H::NonTransitive, "psi-characterization",
            "A∈τ*a iff A ⊆ ψ_a(A) without transitivity", psi_characterization),
      space("basis_theorem", K::Asserted, H::Transitive, "basis", "β = {a(x)\\J} is a basis for τ*a",
            basis_theorem),
      space("basis_theorem_nontransitive", K::Probe, H::NonTransitive, "basis",
            "β is a basis for τ*a without transitivity", basis_theorem),
      space("interior_duality", K::Asserted, H::None, "interior",
            "int*a(A) = X \\ cl*a(X\\A) = A ∩ ψ_a(A)", interior_duality),
      space("open_class_hierarchy", K::Asserted, H::None, "generalized-open-hierarchy",
            "open ⇒ alpha ⇒ semi, pre ⇒ beta; ia-open = τ*a_c", open_class_hierarchy),
      space("semi_pre_alpha", K::Asserted, H::Transitive, "generalized-open-hierarchy",
            "semi-open ∧ pre-open ⇒ alpha-open", semi_pre_alpha),
      space("semi_pre_alpha_nontransitive", K::Probe, H::NonTransitive, "generalized-open-hierarchy",
            "semi-open ∧ pre-open ⇒ alpha-open without transitivity", semi_pre_alpha),
      space("reduction_diagram", K::Asserted, H::None, "compatibility",
            "a-open ⇒ ia-open, with equality when I={∅}", reduction_diagram),
      space("compat_independence", K::Probe, H::None, "compatibility",
            "I-open and ia-open are independent (records instances)", compat_independence),
      space("tausa_eq_tau_aura", K::Probe, H::NontrivialIdeal, "ideal-adds-no-opens",
            "nontrivial ideals with τ*a = τ_a (records instances)", tausa_eq_tau_aura),
      map("continuity_hierarchy", K::Asserted, H::None, "continuity-hierarchy",
          "continuous ⇒ alpha ⇒ semi, pre ⇒ beta continuous", continuity_hierarchy),
      map("decomposition", K::Asserted, H::Transitive, "decomposition",
          "τ*a-continuous iff semi- and pre-continuous iff alpha-continuous", decomposition),
      map("alpha_decomposition", K::Asserted, H::Transitive, "decomposition",
          "semi- and pre-continuous iff alpha-continuous", alpha_decomposition),
      map("comparison_chain", K::Asserted, H::None, "comparison",
          "τ_a-continuous ⇒ τ*a-continuous ⇒ τ*-continuous", comparison_chain),
      map("comparison_iii", K::Probe, H::None, "comparison", "τ*-continuous ⇒ τ-continuous (withdrawn clause)",
          comparison_iii),
  };
}

struct Target {
  SetFamily opens;
  int size;
};

const std::vector<Target>& map_targets() {
  static const std::vector<Target> targets = [] {
    std::vector<Target> out;
    for (int m = 1; m <= kMapLawMaxTarget; ++m) {
      for (const FiniteTopology& t : all_topologies(m)) out.push_back({t.opens(), m});
    }
    return out;
  }();
  return targets;
}

std::string compact_space(const IdealAuraSpace& space) {
  return nlohmann::json::parse(serialize_space(space)).dump();
}

void keep(std::vector<LawViolation>& into, std::uint64_t index, const IdealAuraSpace& space,
          const std::vector<std::string>& details, std::uint64_t total) {
  if (into.size() >= LawReport::kMaxViolations) return;
  std::string detail = details.empty() ? std::string() : details.front();
  if (total > 1) detail += " (+" + std::to_string(total - 1) + " more)";
  into.push_back({index, compact_space(space), std::move(detail)});
}

void run_map_law(const LawInfo& law, const SpaceTables& t, Outcome& o, std::uint64_t& maps) {
  std::vector<int> table(t.n, 0);
  for (const Target& target : map_targets()) {
    const MapCase mc{table, target.opens, target.size};
    std::fill(table.begin(), table.end(), 0);
    for (;;) {
      law.map_fn(t, mc, o);
      ++maps;
      int i = t.n - 1;
      while (i >= 0 && ++table[i] == target.size) table[i--] = 0;
      if (i < 0) break;
    }
  }
}

void merge_into(LawReport& into, const LawReport& part) {
  into.spaces_checked += part.spaces_checked;
  into.spaces_skipped += part.spaces_skipped;
  into.maps_checked += part.maps_checked;
  into.violation_count += part.violation_count;
  into.finding_count += part.finding_count;
  into.map_scale_skipped = into.map_scale_skipped || part.map_scale_skipped;
  for (const auto& v : part.violations) {
    if (into.violations.size() < LawReport::kMaxViolations) into.violations.push_back(v);
  }
  for (const auto& v : part.findings) {
    if (into.findings.size() < LawReport::kMaxViolations) into.findings.push_back(v);
  }
}

}  // namespace

const std::vector<LawInfo>& law_registry() {
  static const std::vector<LawInfo> registry = make_registry();
  return registry;
}

const LawInfo& find_law(std::string_view id) {
  for (const auto& law : law_registry()) {
    if (law.id == id) return law;
  }
  throw UnknownLaw(id);
}

std::vector<std::string> all_law_ids() {
  std::vector<std::string> ids;
  for (const auto& law : law_registry()) ids.push_back(law.id);
  return ids;
}

std::string LawReport::status() const {
  if (kind == LawKind::Probe) return "probe-only";
  return violation_count == 0 ? "pass" : "fail";
}

std::vector<LawReport> run_laws(const std::vector<std::string>& law_ids, const SpaceSource& source, int jobs) {
  std::vector<const LawInfo*> laws;
  for (const auto& id : law_ids) laws.push_back(&find_law(id));

  constexpr std::uint64_t kChunk = 64;
  const std::uint64_t chunks = (source.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<LawReport>> partial(chunks, std::vector<LawReport>(laws.size()));

  detail::parallel_chunks(source.size(), kChunk, jobs, [&](std::uint64_t c, std::uint64_t begin, std::uint64_t end) {
    auto& reports = partial[c];
    for (std::uint64_t i = begin; i < end; ++i) {
      const SpaceTables t(source.at(i));
      for (std::size_t k = 0; k < laws.size(); ++k) {
        const LawInfo& law = *laws[k];
        LawReport& r = reports[k];
        if (!t.satisfies(law.hypothesis)) {
          ++r.spaces_skipped;
          continue;
        }
        if (law.scope == LawScope::Map && t.n > kMapLawMaxSource) {
          ++r.spaces_skipped;
          r.map_scale_skipped = true;
          continue;
        }
        Outcome o;
        if (law.scope == LawScope::Space) {
          law.space_fn(t, o);
        } else {
          run_map_law(law, t, o, r.maps_checked);
        }
        ++r.spaces_checked;
        if (o.failed()) {
          ++r.violation_count;
          keep(r.violations, i, t.space, o.failure_details(), o.failures());
        }
        if (o.remarks() > 0) {
          ++r.finding_count;
          keep(r.findings, i, t.space, o.remark_details(), o.remarks());
        }
      }
    }
    return true;
  });

  std::vector<LawReport> out;
  for (std::size_t k = 0; k < laws.size(); ++k) {
    LawReport r;
    r.law_id = laws[k]->id;
    r.kind = laws[k]->kind;
    for (const auto& part : partial) merge_into(r, part[k]);
    out.push_back(std::move(r));
  }
  return out;
}

LawReport run_law(std::string_view law_id, const SpaceSource& source, int jobs) {
  return run_laws({std::string(law_id)}, source, jobs).front();
}

std::string format_law_report(const LawReport& r) {
  std::ostringstream out;
  out << r.law_id << ": " << r.status() << " (" << r.spaces_checked << " spaces";
  if (r.maps_checked) out << ", " << r.maps_checked << " maps";
  if (r.spaces_skipped) out << ", " << r.spaces_skipped << " skipped";
  out << ")";
  if (r.kind == LawKind::Probe) {
    out << " counterexamples=" << r.violation_count << " findings=" << r.finding_count;
  } else if (r.violation_count) {
    out << " violations=" << r.violation_count;
  }
  if (r.map_scale_skipped) out << " [map laws run on sources with n ≤ " << kMapLawMaxSource << " only]";
  out << '\n';
  for (const auto& v : r.violations) {
    out << "  " << (r.kind == LawKind::Probe ? "counterexample" : "violation") << " #" << v.space_index << ": "
        << v.detail << "\n    " << v.space << '\n';
  }
  if (r.kind == LawKind::Probe || r.violation_count == 0) {
    for (const auto& v : r.findings) {
      out << "  finding #" << v.space_index << ": " << v.detail << "\n    " << v.space << '\n';
    }
  }
  return out.str();
}

nlohmann::ordered_json law_report_to_json(const LawReport& r) {
  auto list = [](const std::vector<LawViolation>& vs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& v : vs) {
      arr.push_back({{"space_index", v.space_index},
                     {"space", nlohmann::ordered_json::parse(v.space)},
                     {"detail", v.detail}});
    }
    return arr;
  };
  return {{"law", r.law_id},
          {"kind", std::string(to_string(r.kind))},
          {"status", r.status()},
          {"spaces_checked", r.spaces_checked},
          {"spaces_skipped", r.spaces_skipped},
          {"maps_checked", r.maps_checked},
          {"violation_count", r.violation_count},
          {"violations", list(r.violations)},
          {"finding_count", r.finding_count},
          {"findings", list(r.findings)}};
}

}  // namespace auraspace
