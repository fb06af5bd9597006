// Acceptance suite: runs every verification criterion end to end and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "properties.hpp"
#include "qlat/bsgs.hpp"
#include "qlat/checks.hpp"
#include "qlat/group.hpp"
#include "qlat/lattice.hpp"
#include "qlat/permutation.hpp"
#include "qlat/quaternion.hpp"
#include "qlat/tensor.hpp"

using namespace qlat;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto t0 = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(22) << name << std::right
            << std::fixed << std::setprecision(2) << std::setw(8) << secs << "s";
  if (!detail.empty()) std::cout << "  " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

bool checkPasses(CheckContext& ctx, const std::string& name, std::string& detail) {
  for (const auto& def : checkRegistry())
    if (def.name == name) {
      CheckResult r = runSingleCheck(def, ctx);
      detail = r.actual;
      return r.status == CheckResult::Status::Pass;
    }
  detail = "check not found";
  return false;
}

}  // namespace

int main() {
  CheckContext ctx;
  ctx.progress = [](const std::string& msg) { std::cerr << "  .. " << msg << std::endl; };

  // 1. unit group of the Hurwitz integers
  criterion("unit24", [&](std::string& d) { return checkPasses(ctx, "unit24", d); });

  // 2. kissing number of F4
  criterion("f4-kissing", [&](std::string& d) { return checkPasses(ctx, "f4-kissing", d); });

  // 3. unit coordinates span the F4 lattice
  criterion("f4-span", [&](std::string& d) { return checkPasses(ctx, "f4-span", d); });

  // 4. order of the Weyl group realization
  criterion("wf4-order", [&](std::string& d) { return checkPasses(ctx, "wf4-order", d); });

  // 5. kissing number of the Barnes-Wall lattice
  criterion("bw16-kissing", [&](std::string& d) { return checkPasses(ctx, "bw16-kissing", d); });

  // 6. the Weyl-group coordinate span reproduces the Barnes-Wall lattice
  criterion("bw16-span-scale",
            [&](std::string& d) { return checkPasses(ctx, "bw16-span-scale", d); });

  // 7. the 512-element pure-tensor group: order, solvability, classes,
  //    abelianization and exact character norm
  criterion("pure512", [&](std::string& d) {
    std::string d1, d2, d3, d4;
    bool ok = checkPasses(ctx, "pure512-order", d1) && checkPasses(ctx, "pure512-classes", d2) &&
              checkPasses(ctx, "pure512-solvable", d3) && checkPasses(ctx, "pure512-irrep", d4);
    d = "order=" + d1 + " classes=" + d2 + " " + d3 + " char-norm=" + d4;
    return ok;
  });

  // 8. the displayed single-slot relations hold exactly
  criterion("rank4-relations",
            [&](std::string& d) { return checkPasses(ctx, "rank4-relations", d); });

  // 9. the seven generators preserve the lattice in both directions
  criterion("fact1-automorphism",
            [&](std::string& d) { return checkPasses(ctx, "fact1-automorphism", d); });

  // 10. headline order certificate via Schreier-Sims on the 4320 vectors
  criterion("fact1-order", [&](std::string& d) { return checkPasses(ctx, "fact1-order", d); });

  // 11. cross-validation: stabilizer-chain orders equal brute-force closure
  //     sizes for the 24-, 512- and 1152-element groups
  criterion("cross-validation", [&](std::string& d) {
    std::vector<DyadicMatrix> tauGens{tau(HurwitzQuaternion::i()), tau(HurwitzQuaternion::j()),
                                      tau(HurwitzQuaternion::omega())};
    FiniteMatrixGroup g24 = FiniteMatrixGroup::closure(tauGens, 100);
    Bsgs b24 = Bsgs::build(actionOnShortVectors(tauGens, ctx.f4Shell()));
    bool ok24 = Int(static_cast<std::uint64_t>(g24.size())) == b24.order() && g24.size() == 24;

    std::vector<DyadicMatrix> slotGens;
    for (int slot = 1; slot <= 4; ++slot) {
      slotGens.push_back(rho4Basis(slot, QSym::I));
      slotGens.push_back(rho4Basis(slot, QSym::J));
    }
    Bsgs b512 = Bsgs::build(actionOnShortVectors(slotGens, ctx.bw16Shell()));
    bool ok512 = Int(static_cast<std::uint64_t>(ctx.pureTensorGroup().size())) == b512.order() &&
                 ctx.pureTensorGroup().size() == 512;

    std::vector<DyadicMatrix> wf4Gens;
    for (const auto& e : weylF4Generators()) wf4Gens.push_back(rho2(e));
    Bsgs b1152 = Bsgs::build(actionOnShortVectors(wf4Gens, ctx.bw16Shell()));
    bool ok1152 = Int(static_cast<std::uint64_t>(ctx.weylF4().size())) == b1152.order() &&
                  ctx.weylF4().size() == 1152;

    std::ostringstream os;
    os << "24:" << (ok24 ? "agree" : "DISAGREE") << " 512:" << (ok512 ? "agree" : "DISAGREE")
       << " 1152:" << (ok1152 ? "agree" : "DISAGREE");
    d = os.str();
    return ok24 && ok512 && ok1152;
  });

  // 12. expression-vs-constant comparison report is produced in full
  criterion("fact1-crosscheck", [&](std::string& d) {
    auto entries = crossCheckAutGenerators();
    std::ostringstream os;
    for (std::size_t t = 0; t < entries.size(); ++t) {
      if (t) os << ' ';
      os << 'x' << t + 1 << '='
         << (entries[t].match ? "match" : std::to_string(entries[t].diffs.size()) + "-diffs");
    }
    d = os.str();
    return entries.size() == 7;  // a mismatch is a finding, not a failure
  });

  // 13. randomized property suites, 100 exact cases each
  criterion("properties", [&](std::string& d) {
    int kron = qtest::kronMixedProductSuite();
    int hnfF = qtest::hnfSuite();
    int quat = qtest::quaternionSuite();
    int svp = qtest::shortestVectorOracleSuite();
    int bsgs = qtest::bsgsInvarianceSuite();
    std::ostringstream os;
    os << "kron=" << kron << " hnf=" << hnfF << " quaternion=" << quat << " svp-oracle=" << svp
       << " bsgs=" << bsgs << " failed cases";
    d = os.str();
    return kron + hnfF + quat + svp + bsgs == 0;
  });

  std::cout << (failures == 0 ? "acceptance: all criteria PASS" : "acceptance: FAILURES present")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
