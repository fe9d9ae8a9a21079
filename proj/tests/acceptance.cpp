// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include "fgcover/analysis.hpp"
#include "fgcover/oracle.hpp"
#include "fgcover/spectral.hpp"
#include "fgcover/zcover.hpp"
#include "fixtures.hpp"

using namespace fgc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) detail << "failed: " << what << "; ";
    pass = pass && ok;
  }
};

std::vector<unsigned> periods_of(const PartitionSpec& spec) {
  std::vector<unsigned> p;
  for (const auto& m : spec.members) p.push_back(period(*m.graph));
  return p;
}

IntPolynomial one_minus_nz_pow(int n, unsigned h) {
  mpz_class nh;
  mpz_ui_pow_ui(nh.get_mpz_t(), n, h);
  return IntPolynomial{1} - IntPolynomial::monomial(nh, h);
}

void golden(Outcome& o) {
  const auto t0 = Clock::now();
  const auto h = std::make_shared<const SchreierGraph>(
      fold(2, fixtures::words({"aaaa", "bbbb", "aB", "aaBB", "aaaBBB"}, 2)));
  const TransitionMatrix a = transition_matrix(*h);
  const unsigned per = period(a);
  const Coset ha = Coset::of(h, parse_word("a", 2));
  const RationalFunction ph = genfunc(*h, 0, 0);
  const RationalFunction pha = genfunc(*h, 0, ha.vertex);
  const double dt = seconds_since(t0);
  o.require(h->index() == 4, "index");
  o.require(a == TransitionMatrix{{0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {2, 0, 0, 0}}, "transition matrix");
  o.require(per == 4, "period");
  o.require(ph == RationalFunction(IntPolynomial{1}, IntPolynomial{1, 0, 0, 0, -16}), "p_H");
  o.require(pha == RationalFunction(IntPolynomial{0, 2}, IntPolynomial{1, 0, 0, 0, -16}), "p_Ha");
  o.require(dt < 1.0, "runtime");
  o.detail << "index " << h->index() << ", period " << per << ", p_H = " << ph.to_string() << ", p_Ha = "
           << pha.to_string() << ", " << dt << " s";
}

void sum_identity(Outcome& o, const std::vector<PartitionSpec>& corpus) {
  const auto t0 = Clock::now();
  std::size_t checked = 0;
  for (const auto& spec : corpus) {
    const SumIdentity s = check_sum_identity(spec);
    o.require(s.holds && s.residual.is_zero(), "sum identity");
    const CoefficientIdentity c = check_coefficient_identity(spec, 20);
    mpz_class p = 1;
    bool powers = c.totals.size() == 21;
    for (std::size_t k = 0; powers && k <= 20; ++k, p *= spec.rank) powers = c.totals[k] == p;
    o.require(c.holds && powers, "coefficient identity");
    ++checked;
  }
  const double dt = seconds_since(t0);
  o.require(checked >= 20, "at least 20 partitions");
  o.require(dt < 10.0, "runtime");
  o.detail << checked << " partitions, K = 20, " << dt << " s";
}

void period_clauses(Outcome& o, const std::vector<PartitionSpec>& corpus) {
  std::size_t applicable = 0, instances = 0, failures = 0;
  for (const auto& spec : corpus) {
    const auto p = periods_of(spec);
    if (*std::max_element(p.begin(), p.end()) <= 1) continue;
    ++applicable;
    const Findings f = theorem1_check(spec);
    for (const auto& c : f.clauses) {
      if (c.status == ClauseStatus::NotApplicable) continue;
      ++instances;
      if (c.status == ClauseStatus::Fail) ++failures;
    }
  }
  o.require(applicable > 0, "no partition with a period > 1");
  o.require(failures == 0, "clause failure");
  o.detail << applicable << " partitions with max period > 1, " << instances << " clause instances, " << failures
           << " failures";
}

void residues(Outcome& o, const std::vector<PartitionSpec>& corpus) {
  std::size_t sums = 0, nonzero = 0;
  for (const auto& spec : corpus) {
    auto present = periods_of(spec);
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    for (unsigned h : present) {
      if (h == 1) continue;
      for (long m = 1; m < static_cast<long>(h); ++m) {
        if (std::gcd(m, static_cast<long>(h)) != 1) continue;
        ++sums;
        if (!residue_sum_check(spec, h, m).value.is_zero()) ++nonzero;
      }
    }
  }
  o.require(sums > 0, "no residue sum to check");
  o.require(nonzero == 0, "nonzero residue sum");
  o.detail << sums << " exact residue sums, " << nonzero << " nonzero";
}

void davenport_rado(Outcome& o) {
  std::vector<ZCoveringSpec> systems{ZCoveringSpec({{2, 0}, {4, 1}, {4, 3}})};
  for (std::uint64_t seed = 1; systems.size() < 13; ++seed) {
    const ZCoveringSpec g = generate_z_covering(2 + seed % 5, seed);
    if (g.size() > 1) systems.push_back(g);
  }
  std::size_t failures = 0;
  for (const auto& z : systems) {
    const ZAnalysisReport r = analyze_z(z);
    bool ok = r.verdict.status == PartitionStatus::IsPartition && r.davenport_rado && !r.davenport_rado->any_failed();
    if (ok) {
      std::int64_t dmax = 1;
      for (const auto& c : z.classes()) dmax = std::max(dmax, c.modulus);
      std::size_t repeats = 0;
      for (const auto& c : z.classes()) repeats += c.modulus == dmax;
      ok = repeats >= 2;
      for (const auto& c : z.classes()) {
        bool divides = false;
        for (const auto& e : z.classes()) divides = divides || (&e != &c && e.modulus % c.modulus == 0);
        ok = ok && divides;
      }
    }
    ok = ok && r.lifted_agrees && r.lifted.theorems_hold();
    if (!ok) ++failures;
  }
  o.require(failures == 0, "Davenport-Rado or lifted disagreement");
  o.detail << systems.size() << " covering systems (1 fixed, " << systems.size() - 1 << " generated), " << failures
           << " failures";
}

void oracles(Outcome& o, const std::vector<std::shared_ptr<const SchreierGraph>>& graphs) {
  constexpr std::size_t K = 10;
  std::size_t series_checked = 0, periods_checked = 0;
  std::size_t largest = 0;
  for (const auto& g : graphs) {
    largest = std::max(largest, g->index());
    const Transversal t = transversal(*g);
    const Resolvent r = resolvent(transition_matrix(*g));
    for (Vertex v = 0; v < g->index(); ++v) {
      const Coset c{g, v, GroupWord::from_positive(t.reps[v])};
      const SeriesPrefix counts = oracle::count_by_enumeration(c, K);
      o.require(counts == series(genfunc(r, 0, v), K), "enumeration vs genfunc series");
      o.require(counts == series_from_matrix(*g, 0, v, K), "enumeration vs matrix powers");
      ++series_checked;
    }
    if (g->index() <= oracle::kMaxCycleGraph) {
      o.require(oracle::period_by_cycles(*g) == period(*g), "cycle period");
      ++periods_checked;
    }
  }
  o.require(largest <= 16, "corpus index above 16");
  o.detail << graphs.size() << " subgroups (d <= " << largest << "), " << series_checked << " cosets at K = " << K
           << ", " << periods_checked << " cycle periods";
}

void divisibility(Outcome& o, const std::vector<std::shared_ptr<const SchreierGraph>>& graphs) {
  std::size_t remainders = 0;
  for (const auto& g : graphs) {
    const TransitionMatrix a = transition_matrix(*g);
    const IntPolynomial q = reciprocal_char_poly(a);
    const int n = g->rank();
    if (!exact_quotient(q, IntPolynomial{1, -n})) ++remainders;
    if (!exact_quotient(q, one_minus_nz_pow(n, period(a)))) ++remainders;
  }
  o.require(remainders == 0, "nonzero remainder");
  o.detail << graphs.size() << " subgroups, " << remainders << " nonzero remainders";
}

struct Adversarial {
  std::string name;
  PartitionSpec spec;
  PartitionStatus expected;
};

std::vector<Adversarial> adversarial_suite() {
  using fixtures::spec;
  const auto k = fixtures::mod2_kernel();
  const auto e = fixtures::example1();
  const auto s3 = std::make_shared<const SchreierGraph>(kernel_graph({{1, 0, 2}, {0, 2, 1}}));
  const auto c6 = std::make_shared<const SchreierGraph>(kernel_graph({{1, 2, 3, 4, 5, 0}, {2, 3, 4, 5, 0, 1}}));
  const auto s3t = transversal(*s3);
  std::vector<Adversarial> out;
  out.push_back({"same coset twice", spec(2, {{k, ""}, {k, ""}}), PartitionStatus::Overlap});
  out.push_back({"half of F_2", spec(2, {{k, ""}}), PartitionStatus::Gap});
  out.push_back({"three of four cosets", spec(2, {{e, ""}, {e, "a"}, {e, "aa"}}), PartitionStatus::Gap});
  out.push_back({"Ha and Hb coincide", spec(2, {{e, ""}, {e, "a"}, {e, "b"}, {e, "aa"}}), PartitionStatus::Overlap});
  out.push_back({"mixed indices overlap", spec(2, {{k, ""}, {e, "a"}, {e, "aa"}, {e, "aaa"}}), PartitionStatus::Overlap});
  out.push_back({"inverse representative gap", spec(2, {{k, ""}, {e, "A"}}), PartitionStatus::Gap});
  PartitionSpec s3_missing{2, {}};
  for (Vertex v = 1; v < s3->index(); ++v) s3_missing.members.push_back(Coset::of(s3, GroupWord::from_positive(s3t.reps[v])));
  out.push_back({"S_3 kernel cosets minus one", s3_missing, PartitionStatus::Gap});
  out.push_back({"rank 3 whole group plus a coset", spec(3, {{fixtures::whole(3), ""}, {fixtures::graph_of(3, {"aa", "b", "c", "aba", "aca"}), "a"}}),
                 PartitionStatus::Overlap});
  out.push_back({"integers: 2Z, 3Z, 6Z+1", lift(ZCoveringSpec({{2, 0}, {3, 0}, {6, 1}})), PartitionStatus::Overlap});
  PartitionSpec refined = refine(fixtures::mod2_partition(), 1, c6);
  refined.members.pop_back();
  refined.members.push_back(Coset::of(k, {}));
  out.push_back({"refined partition, last piece replaced", refined, PartitionStatus::Overlap});
  return out;
}

void defects(Outcome& o) {
  const auto suite = adversarial_suite();
  std::size_t correct = 0;
  for (const auto& c : suite) {
    const PartitionVerdict v = verify_partition(c.spec);
    bool ok = v.status == c.expected && v.witness.has_value() && witness_certified(c.spec, v);
    if (ok) {
      std::size_t hits = 0;
      for (const auto& m : c.spec.members) hits += membership(m, *v.witness);
      ok = c.expected == PartitionStatus::Gap ? hits == 0 : hits >= 2;
      if (v.overlap) ok = ok && membership(c.spec.members[v.overlap->first], *v.witness) &&
                          membership(c.spec.members[v.overlap->second], *v.witness);
    }
    if (ok) ++correct;
    else o.require(false, c.name + " (" + to_string(v.status) + ")");
  }
  o.require(suite.size() == 10, "suite size");
  o.detail << correct << "/" << suite.size() << " cases with certified witnesses";
}

}  // namespace

int main() {
  const std::vector<PartitionSpec> corpus = fixtures::corpus();
  const auto graphs = fixtures::corpus_graphs();

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"golden fixture", golden},
      {"sum and coefficient identities", [&](Outcome& o) { sum_identity(o, corpus); }},
      {"period repetition clauses", [&](Outcome& o) { period_clauses(o, corpus); }},
      {"residue sums", [&](Outcome& o) { residues(o, corpus); }},
      {"Davenport-Rado recovery", davenport_rado},
      {"oracle equivalence", [&](Outcome& o) { oracles(o, graphs); }},
      {"spectral divisibility", [&](Outcome& o) { divisibility(o, graphs); }},
      {"defect detection", defects},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
