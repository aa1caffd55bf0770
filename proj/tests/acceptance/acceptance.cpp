// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "charquant/complexes.hpp"

using namespace charquant;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

bool ranks_are(const std::vector<HomologySummary>& hs, const std::vector<int>& expect, bool torsion_free = true) {
  if (hs.size() < expect.size()) return false;
  for (std::size_t i = 0; i < expect.size(); ++i) {
    if (hs[i].free_rank != expect[i]) return false;
    if (torsion_free && !hs[i].torsion.empty()) return false;
  }
  return true;
}

std::string failing_checks(const VerificationReport& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass && !c.informational) s += (s.empty() ? "" : ",") + c.name;
  return r.suite + " p=" + std::to_string(r.p) + " [" + s + "]";
}

void require_report(Outcome& o, const VerificationReport& r) { o.require(r.passed(), failing_checks(r)); }

const std::vector<int> kPrimes23{2, 3};
const std::vector<int> kPrimes235{2, 3, 5};

Outcome quasi_isomorphism() {
  Outcome o;
  for (int p : kPrimes23) {
    const auto r = hochschild_cohomology({Family::HH_rel_Oprime, Coefficient::Dres, p, {3, 0}, true});
    require_report(o, r);
    o.require(ranks_are(r.summaries, {p, 0, 0}), "ranks at p=" + std::to_string(p));
  }
  return o;
}

Outcome periodic_resolution() {
  Outcome o;
  for (int p : kPrimes235) require_report(o, resolution_check(p));
  return o;
}

Outcome reduced_exactness() {
  Outcome o;
  for (int p : kPrimes235) {
    const auto r = reduced_complex(p, 5);
    require_report(o, r);
    o.require(ranks_are(r.summaries, {1, 0, 0, 0, 0}), "ranks at p=" + std::to_string(p));
  }
  return o;
}

Outcome azumaya() {
  Outcome o;
  for (int p : kPrimes235) {
    std::vector<int> points;
    for (int a = 0; a < p; ++a) points.push_back(a);
    require_report(o, azumaya_suite(p, points));
  }
  return o;
}

Outcome two_sided() {
  Outcome o;
  const auto r = two_sided_check(2, 2, 50, 42);
  require_report(o, r);
  o.require(ranks_are(r.summaries, {4, 0}), "ranks");
  return o;
}

Outcome full_quantization() {
  Outcome o;
  const auto a = full_quant_check(2, {2, 4});
  const auto b = full_quant_check(2, {2, 6});
  require_report(o, a);
  require_report(o, b);
  o.require(ranks_are(a.summaries, {2}) && ranks_are(b.summaries, {2}), "H0 rank");
  return o;
}

Outcome non_perfectness() {
  Outcome o;
  for (int p : kPrimes23) {
    const auto r = hochschild_cohomology({Family::HH_rel_Oprime, Coefficient::O, p, {3, 0}, true});
    require_report(o, r);
    o.require(ranks_are(r.summaries, {p, p, p}), "ranks at p=" + std::to_string(p));
    const auto oracle = hypersurface_oracle(p, 3, HypersurfaceCoefficients::O);
    o.require(ranks_are(oracle, {p, p, p}), "oracle ranks at p=" + std::to_string(p));
  }
  return o;
}

Outcome identity_suites() {
  Outcome o;
  for (int p : kPrimes23) require_report(o, identity_suite({p, 100, 42}));
  return o;
}

Outcome oracle_coherence_and_dold_kan() {
  Outcome o;
  require_report(o, oracle_coherence({Family::HH_rel_Oprime, Coefficient::O, 2, {2, 0}, true}, true, 0, 42));
  require_report(o, oracle_coherence({Family::HH_rel_Oprime, Coefficient::Dres, 2, {2, 0}, true}, true, 0, 42));
  require_report(o, oracle_coherence({Family::HH_rel_Oprime, Coefficient::Dres, 3, {2, 0}, false}, false, 200, 42));
  for (int p : kPrimes23)
    for (Coefficient c : {Coefficient::O, Coefficient::Dres, Coefficient::DresOp})
      require_report(o, dold_kan_crosscheck({Family::HH_rel_Oprime, c, p, {2, 0}, true}));
  for (Coefficient c : {Coefficient::O, Coefficient::Dfull})
    require_report(o, dold_kan_crosscheck({Family::HH_rel_Oprime_full, c, 2, {2, 4}, true}));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "restricted-operator coefficients are quasi-isomorphic to O_X", 30, quasi_isomorphism},
      {2, "2-periodic resolution is exact", 60, periodic_resolution},
      {3, "reduced complex is exact except in degree 0", 5, reduced_exactness},
      {4, "restricted operators form an Azumaya algebra over k[t]", 10, azumaya},
      {5, "two-sided complex has H0 = Dres via chi", 60, two_sided},
      {6, "order-truncated full operators quantize O_X", 60, full_quantization},
      {7, "structure-sheaf coefficients are not perfect", 30, non_perfectness},
      {8, "identity suites", 60, identity_suites},
      {9, "oracle coherence and Dold-Kan agreement", 0, oracle_coherence_and_dold_kan},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.require(false, "runtime " + std::to_string(secs) + " s over " + std::to_string(c.limit_seconds) + " s");
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
