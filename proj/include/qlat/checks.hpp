#pragma once

#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "qlat/bsgs.hpp"
#include "qlat/group.hpp"
#include "qlat/lattice.hpp"
#include "qlat/permutation.hpp"
#include "qlat/quaternion.hpp"
#include "qlat/tensor.hpp"
#include "qlat/version.hpp"

namespace qlat {

/// Selecting a check name outside the registry is a usage error (CLI exit
/// code 2), distinct from a check failing.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckResult {
  std::string name;
  enum class Status { Pass, Fail, Error } status = Status::Error;
  std::string expected;
  std::string actual;
  double seconds = 0.0;
};

inline std::string_view statusName(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    default: return "error";
  }
}

struct VerificationReport {
  std::string version;
  std::string timestamp;
  std::vector<CheckResult> checks;
  bool overall = true;
};

/// Shared lazily-computed inputs. Checks may run concurrently; every getter
/// is serialized, and all returned references stay valid for the context's
/// lifetime.
class CheckContext {
 public:
  /// Stage announcements of long-running checks; goes to stderr by default.
  std::function<void(const std::string&)> progress = [](const std::string& msg) {
    std::cerr << "[qlat] " << msg << std::endl;
  };

  const Lattice& f4() {
    std::scoped_lock lk(mu_);
    if (!f4_) f4_.emplace(f4Lattice());
    return *f4_;
  }

  const ShortVectorSet& f4Shell() {
    const Lattice& l = f4();
    std::scoped_lock lk(mu_);
    if (!f4Shell_) f4Shell_.emplace(l.shortestVectors());
    return *f4Shell_;
  }

  const Lattice& bw16() {
    std::scoped_lock lk(mu_);
    if (!bw16_) bw16_.emplace(bw16Lattice());
    return *bw16_;
  }

  const ShortVectorSet& bw16Shell() {
    const Lattice& l = bw16();
    std::scoped_lock lk(mu_);
    if (!bw16Shell_) {
      progress("enumerating the Barnes-Wall minimal vectors");
      bw16Shell_.emplace(l.shortestVectors());
      progress("minimal shell has " + std::to_string(bw16Shell_->count) + " vectors");
    }
    return *bw16Shell_;
  }

  /// The 16-dimensional Weyl-group realization, fully enumerated.
  const FiniteMatrixGroup& weylF4() {
    std::scoped_lock lk(mu_);
    if (!wf4_) {
      std::vector<DyadicMatrix> gens;
      for (const auto& e : weylF4Generators()) gens.push_back(rho2(e));
      wf4_.emplace(FiniteMatrixGroup::closure(std::move(gens), 5000));
    }
    return *wf4_;
  }

  /// The group generated by the eight single-slot matrices.
  const FiniteMatrixGroup& pureTensorGroup() {
    std::scoped_lock lk(mu_);
    if (!pure512_) {
      std::vector<DyadicMatrix> gens;
      for (int slot = 1; slot <= 4; ++slot) {
        gens.push_back(rho4Basis(slot, QSym::I));
        gens.push_back(rho4Basis(slot, QSym::J));
      }
      pure512_.emplace(FiniteMatrixGroup::closure(std::move(gens), 1000));
    }
    return *pure512_;
  }

  /// Stabilizer chain for the automorphism group acting on the 4320 minimal
  /// vectors.
  const Bsgs& autBsgs() {
    const ShortVectorSet& shell = bw16Shell();
    std::scoped_lock lk(mu_);
    if (!autBsgs_) {
      progress("building the degree-" + std::to_string(shell.count) + " permutation action");
      std::vector<DyadicMatrix> gens(autGenerators().begin(), autGenerators().end());
      std::vector<Permutation> perms = actionOnShortVectors(gens, shell);
      progress("running Schreier-Sims");
      autBsgs_.emplace(Bsgs::build(perms, {}, progress));
    }
    return *autBsgs_;
  }

 private:
  std::mutex mu_;
  std::optional<Lattice> f4_, bw16_;
  std::optional<ShortVectorSet> f4Shell_, bw16Shell_;
  std::optional<FiniteMatrixGroup> wf4_, pure512_;
  std::optional<Bsgs> autBsgs_;
};

struct CheckDef {
  std::string name;
  std::string claim;     // self-contained statement of what is verified
  std::string expected;  // frozen expected value
  std::function<std::string(CheckContext&)> run;
};

namespace detail {

inline std::string runUnit24(CheckContext&) {
  QuatUnitGroup g = unitGroup();
  bool nonAbelian =
      HurwitzQuaternion::i() * HurwitzQuaternion::j() !=
      HurwitzQuaternion::j() * HurwitzQuaternion::i();
  std::size_t involutions = 0;
  for (const auto& u : g.elements)
    if (u != HurwitzQuaternion::one() && u * u == HurwitzQuaternion::one()) ++involutions;
  std::ostringstream os;
  os << "order=" << g.elements.size() << " non-abelian=" << (nonAbelian ? "yes" : "no")
     << " involutions=" << involutions;
  return os.str();
}

inline std::string runF4Kissing(CheckContext& ctx) {
  return std::to_string(ctx.f4Shell().count);
}

inline std::string runF4Span(CheckContext& ctx) {
  std::vector<DyadicVector> coords;
  for (const auto& u : unitGroup().elements) {
    auto c = u.coordinates();
    coords.emplace_back(c.begin(), c.end());
  }
  return spanFromVectors(coords) == ctx.f4() ? "equal" : "different";
}

inline std::string runWf4Order(CheckContext& ctx) {
  return std::to_string(ctx.weylF4().size());
}

inline std::string runBw16Kissing(CheckContext& ctx) {
  return std::to_string(ctx.bw16Shell().count);
}

inline std::string runBw16SpanScale(CheckContext& ctx) {
  std::vector<DyadicVector> coords;
  for (const auto& m : ctx.weylF4().elements())
    coords.push_back(algebraCoordinates2(m).coords());
  Lattice span = spanFromVectors(coords);
  for (int c = 1; c <= 2; ++c)
    if (span == ctx.bw16().scaled(Dyadic(c))) return "match c=" + std::to_string(c);
  return "no match";
}

inline std::string runPure512Order(CheckContext& ctx) {
  return std::to_string(ctx.pureTensorGroup().size());
}

inline std::string runPure512Classes(CheckContext& ctx) {
  return std::to_string(ctx.pureTensorGroup().conjugacyClasses().classCount);
}

inline std::string runPure512Solvable(CheckContext& ctx) {
  std::vector<std::size_t> series = ctx.pureTensorGroup().derivedSeries();
  bool solvable = series.back() == 1;
  std::size_t abelianization = series[0] / series[1];
  std::ostringstream os;
  os << (solvable ? "solvable" : "not-solvable") << " abelianization=" << abelianization;
  return os.str();
}

inline std::string runPure512Irrep(CheckContext& ctx) {
  Rational r = ctx.pureTensorGroup().characterNorm();
  return r.den == 1 ? r.num.str() : r.num.str() + "/" + r.den.str();
}

inline std::string runRank4Relations(CheckContext&) {
  const DyadicMatrix id = DyadicMatrix::identity(16);
  const DyadicMatrix negId = -id;
  int squares = 0;
  for (int slot = 1; slot <= 4; ++slot)
    for (QSym s : {QSym::I, QSym::J}) {
      const DyadicMatrix& m = rho4Basis(slot, s);
      if (m * m == negId) ++squares;
    }
  int commute = 0;
  for (int s1 = 1; s1 <= 4; ++s1)
    for (int s2 = s1 + 1; s2 <= 4; ++s2)
      for (QSym y1 : {QSym::I, QSym::J, QSym::K})
        for (QSym y2 : {QSym::I, QSym::J, QSym::K}) {
          DyadicMatrix a = rho4Slot(s1, y1), b = rho4Slot(s2, y2);
          if (a * b == b * a) ++commute;
        }
  int anticommute = 0;
  for (int slot = 1; slot <= 4; ++slot) {
    DyadicMatrix a = rho4Basis(slot, QSym::I), b = rho4Basis(slot, QSym::J);
    if (a * b == -(b * a)) ++anticommute;
  }
  std::ostringstream os;
  os << "squares=" << squares << "/8 commute=" << commute << "/54 anticommute=" << anticommute
     << "/4";
  return os.str();
}

inline std::string runCrossCheck(CheckContext&) {
  auto entries = crossCheckAutGenerators();
  std::size_t matches = 0;
  std::string detail;
  for (std::size_t t = 0; t < entries.size(); ++t) {
    if (entries[t].match) {
      ++matches;
    } else {
      detail += " x" + std::to_string(t + 1) + ":" +
                std::to_string(entries[t].diffs.size()) + "-diffs";
    }
  }
  return std::to_string(matches) + "/7 match" + detail;
}

inline std::string runAutomorphism(CheckContext& ctx) {
  const Lattice& bw = ctx.bw16();
  std::size_t good = 0;
  for (const auto& g : autGenerators())
    if (g.isOrthogonal() && bw.isAutomorphism(g)) ++good;
  return std::to_string(good) + "/7 preserve";
}

inline std::string runAutOrder(CheckContext& ctx) {
  Int order = ctx.autBsgs().order();
  return order.str() + " = " + factorizationString(factorize(order));
}

}  // namespace detail

/// The registry is the single source of truth mapping check names to the
/// claims they verify; report entries carry the claim text.
inline const std::vector<CheckDef>& checkRegistry() {
  static const std::vector<CheckDef> reg = {
      {"unit24",
       "the unit group generated by i, j, k, (1+i+j+k)/2 in the Hurwitz integers is the binary "
       "tetrahedral group: order 24, non-abelian, a unique involution",
       "order=24 non-abelian=yes involutions=1", detail::runUnit24},
      {"f4-kissing", "the F4 root lattice has kissing number 24", "24", detail::runF4Kissing},
      {"f4-span",
       "the Z-span of the 24 unit coordinate vectors equals the F4 root lattice", "equal",
       detail::runF4Span},
      {"wf4-order",
       "the four rank-2 half-sum generators generate a group of order 1152 (the Weyl group of "
       "F4)",
       "1152", detail::runWf4Order},
      {"bw16-kissing", "the 16-dimensional Barnes-Wall lattice has kissing number 4320", "4320",
       detail::runBw16Kissing},
      {"bw16-span-scale",
       "the Z-span of the 1152 Weyl-group coordinate vectors is an exact scaled copy of the "
       "Barnes-Wall lattice",
       "match c=1", detail::runBw16SpanScale},
      {"pure512-order", "the eight single-slot matrices generate a group of order 512 = 2*4^4",
       "512", detail::runPure512Order},
      {"pure512-classes", "the 512-element pure-tensor group has 257 conjugacy classes", "257",
       detail::runPure512Classes},
      {"pure512-solvable",
       "the 512-element group is solvable with abelianization of order 256",
       "solvable abelianization=256", detail::runPure512Solvable},
      {"pure512-irrep",
       "the exact character norm of the 16-dimensional representation is 1 (irreducible)", "1",
       detail::runPure512Irrep},
      {"rank4-relations",
       "all eight single-slot matrices square to -I and distinct slots commute for all symbol "
       "choices; within a slot the i and j images anticommute",
       "squares=8/8 commute=54/54 anticommute=4/4", detail::runRank4Relations},
      {"fact1-crosscheck",
       "the seven tensor half-sum expressions reproduce the seven stored generator matrices "
       "entry for entry",
       "7/7 match", detail::runCrossCheck},
      {"fact1-automorphism",
       "each of the seven generator matrices is orthogonal and maps the Barnes-Wall lattice "
       "onto itself",
       "7/7 preserve", detail::runAutomorphism},
      {"fact1-order",
       "the seven generators acting on the 4320 minimal vectors generate a group of order "
       "89181388800 = 2^21 * 3^5 * 5^2 * 7",
       "89181388800 = 2^21 * 3^5 * 5^2 * 7", detail::runAutOrder},
  };
  return reg;
}

/// Expands a selection ("all" or explicit names) into registry indices,
/// preserving registry order. Unknown names are usage errors.
inline std::vector<std::size_t> resolveSelection(const std::vector<std::string>& names) {
  const auto& reg = checkRegistry();
  std::vector<char> picked(reg.size(), 0);
  bool any = false;
  for (const auto& n : names) {
    if (n == "all") {
      for (auto& p : picked) p = 1;
      any = true;
      continue;
    }
    bool found = false;
    for (std::size_t t = 0; t < reg.size(); ++t)
      if (reg[t].name == n) {
        picked[t] = 1;
        found = any = true;
        break;
      }
    if (!found) throw UsageError("unknown check name: " + n);
  }
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < reg.size(); ++t)
    if (picked[t]) out.push_back(t);
  (void)any;
  return out;
}

inline std::string utcTimestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Runs one check, translating exceptions into status=error.
inline CheckResult runSingleCheck(const CheckDef& def, CheckContext& ctx) {
  CheckResult res;
  res.name = def.name;
  res.expected = def.expected;
  auto t0 = std::chrono::steady_clock::now();
  try {
    res.actual = def.run(ctx);
    res.status =
        res.actual == res.expected ? CheckResult::Status::Pass : CheckResult::Status::Fail;
  } catch (const std::exception& e) {
    res.status = CheckResult::Status::Error;
    res.actual = std::string("error: ") + e.what();
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

/// Runs the selected checks (possibly concurrently; results are assembled in
/// registry order regardless of thread count).
inline VerificationReport runChecks(const std::vector<std::string>& selection, unsigned threads,
                                    CheckContext& ctx) {
  const auto& reg = checkRegistry();
  std::vector<std::size_t> indices = resolveSelection(selection);

  VerificationReport report;
  report.version = std::string(kVersion);
  report.timestamp = utcTimestamp();
  report.checks.resize(indices.size());

  if (threads == 0) threads = std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;
  threads = std::min<std::size_t>(threads, std::max<std::size_t>(indices.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t slot = next.fetch_add(1);
      if (slot >= indices.size()) return;
      report.checks[slot] = runSingleCheck(reg[indices[slot]], ctx);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& c : report.checks)
    if (c.status != CheckResult::Status::Pass) report.overall = false;
  return report;
}

inline VerificationReport runChecks(const std::vector<std::string>& selection,
                                    unsigned threads = 0) {
  CheckContext ctx;
  return runChecks(selection, threads, ctx);
}

/// Stable-schema JSON form of a report:
/// {"version", "timestamp", "checks":[{"name","status","expected","actual","seconds"}],
///  "overall"}.
inline nlohmann::json reportToJson(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"status", std::string(statusName(c.status))},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"seconds", c.seconds}});
  return {{"version", r.version},
          {"timestamp", r.timestamp},
          {"checks", std::move(checks)},
          {"overall", r.overall}};
}

inline void emitJson(const VerificationReport& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("emitJson: cannot open " + path);
  out << reportToJson(r).dump(2) << '\n';
  if (!out) throw std::runtime_error("emitJson: write failed for " + path);
}

/// Human-readable report, one block per check plus an overall verdict.
inline std::string reportToText(const VerificationReport& r) {
  const auto& reg = checkRegistry();
  std::ostringstream os;
  os << "qlat " << r.version << " verification report (" << r.timestamp << ")\n";
  for (const auto& c : r.checks) {
    os << "  [" << (c.status == CheckResult::Status::Pass
                        ? "PASS"
                        : c.status == CheckResult::Status::Fail ? "FAIL" : "ERR ")
       << "] " << c.name;
    os << "  (" << std::fixed << std::setprecision(2) << c.seconds << "s)\n";
    for (const auto& def : reg)
      if (def.name == c.name) {
        os << "         claim:    " << def.claim << '\n';
        break;
      }
    os << "         expected: " << c.expected << '\n';
    os << "         actual:   " << c.actual << '\n';
  }
  os << "overall: " << (r.overall ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace qlat
