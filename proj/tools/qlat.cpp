// qlat: exact verification toolkit for the quaternionic tensor constructions
// (F4 / Barnes-Wall lattices and their automorphism groups).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlat/checks.hpp"

namespace {

using namespace qlat;

unsigned resolveThreads(unsigned flagValue) {
  if (flagValue != 0) return flagValue;
  if (const char* env = std::getenv("QLAT_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return 0;  // library default: hardware concurrency
}

int cmdVerify(const std::vector<std::string>& names, const std::string& jsonPath,
              unsigned threads) {
  CheckContext ctx;
  VerificationReport report =
      runChecks(names.empty() ? std::vector<std::string>{"all"} : names,
                resolveThreads(threads), ctx);
  std::cout << reportToText(report);
  if (!jsonPath.empty()) emitJson(report, jsonPath);
  return report.overall ? 0 : 1;
}

std::vector<DyadicMatrix> groupGenerators(const std::string& group) {
  if (group == "fact1")
    return {autGenerators().begin(), autGenerators().end()};
  if (group == "wf4") {
    std::vector<DyadicMatrix> gens;
    for (const auto& e : weylF4Generators()) gens.push_back(rho2(e));
    return gens;
  }
  if (group == "pure512") {
    std::vector<DyadicMatrix> gens;
    for (int slot = 1; slot <= 4; ++slot) {
      gens.push_back(rho4Basis(slot, QSym::I));
      gens.push_back(rho4Basis(slot, QSym::J));
    }
    return gens;
  }
  throw UsageError("unknown group (expected fact1, wf4 or pure512): " + group);
}

int cmdOrder(const std::string& group, const std::string& bsgsPath) {
  CheckContext ctx;
  std::vector<Permutation> perms =
      actionOnShortVectors(groupGenerators(group), ctx.bw16Shell());
  Bsgs bsgs = Bsgs::build(perms, {}, ctx.progress);
  Int order = bsgs.order();
  std::cout << order.str() << " = " << factorizationString(factorize(order)) << '\n';
  if (!bsgsPath.empty()) {
    std::ofstream out(bsgsPath);
    if (!out) throw std::runtime_error("cannot open " + bsgsPath);
    out << bsgs.toText();
  }
  return 0;
}

const Lattice& latticeByName(CheckContext& ctx, const std::string& name) {
  if (name == "f4") return ctx.f4();
  if (name == "bw16") return ctx.bw16();
  throw UsageError("unknown lattice (expected f4 or bw16): " + name);
}

int cmdKissing(const std::string& name) {
  CheckContext ctx;
  const Lattice& lat = latticeByName(ctx, name);
  ShortVectorSet shell = name == "bw16" ? ctx.bw16Shell() : lat.shortestVectors();
  std::cout << "minimal squared norm: " << shell.norm.str() << '\n';
  std::cout << "kissing number: " << shell.count << '\n';
  return 0;
}

std::map<std::string, DyadicMatrix> exportRegistry() {
  std::map<std::string, DyadicMatrix> reg;
  for (int t = 0; t < 7; ++t)
    reg.emplace("x" + std::to_string(t + 1), autGenerators()[t]);
  auto weyl = weylF4Generators();
  for (int t = 0; t < 4; ++t) reg.emplace("e" + std::to_string(t + 1), rho2(weyl[t]));
  for (int slot = 1; slot <= 4; ++slot) {
    reg.emplace("s" + std::to_string(slot) + "i", rho4Basis(slot, QSym::I));
    reg.emplace("s" + std::to_string(slot) + "j", rho4Basis(slot, QSym::J));
  }
  reg.emplace("tau-i", tau(HurwitzQuaternion::i()));
  reg.emplace("tau-j", tau(HurwitzQuaternion::j()));
  reg.emplace("tau-k", tau(HurwitzQuaternion::k()));
  reg.emplace("tau-omega", tau(HurwitzQuaternion::omega()));
  reg.emplace("f4", f4Lattice().basis());
  reg.emplace("bw16", bw16Lattice().basis());
  return reg;
}

int cmdExport(const std::string& name, const std::string& outPath) {
  auto reg = exportRegistry();
  auto it = reg.find(name);
  if (it == reg.end()) {
    std::string known;
    for (const auto& [k, v] : reg) known += (known.empty() ? "" : ", ") + k;
    throw UsageError("unknown generator " + name + " (known: " + known + ")");
  }
  std::ofstream out(outPath);
  if (!out) throw std::runtime_error("cannot open " + outPath);
  out << it->second.toText();
  if (!out) throw std::runtime_error("write failed for " + outPath);
  return 0;
}

int cmdMember(const std::string& latticeName, const std::string& vectorPath) {
  CheckContext ctx;
  const Lattice& lat = latticeByName(ctx, latticeName);
  std::ifstream in(vectorPath);
  if (!in) throw std::runtime_error("cannot open " + vectorPath);
  std::stringstream buf;
  buf << in.rdbuf();
  DyadicMatrix m = DyadicMatrix::fromText(buf.str());
  if (m.rows() != 1 || m.cols() != lat.dim())
    throw UsageError("vector file must be a 1 x " + std::to_string(lat.dim()) + " matrix");
  std::cout << (lat.member(m.row(0)) ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for quaternionic tensor representations and lattices"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand(
      "verify", "run verification checks (all by default) and print a report");
  std::vector<std::string> checkNames;
  std::string jsonPath;
  unsigned threads = 0;
  verify->add_option("checks", checkNames, "check names, or 'all'");
  verify->add_option("--json", jsonPath, "also write the report as JSON to this path");
  verify->add_option("--threads", threads,
                     "max concurrent checks (default: QLAT_THREADS or all cores)");

  auto* order = app.add_subcommand("order", "certify a group order via Schreier-Sims");
  std::string groupName;
  std::string bsgsPath;
  order->add_option("--group", groupName, "fact1, wf4 or pure512")->required();
  order->add_option("--emit-bsgs", bsgsPath, "write base and strong generators to this path");

  auto* kissing = app.add_subcommand("kissing", "enumerate the minimal vectors of a lattice");
  std::string kissLattice;
  kissing->add_option("--lattice", kissLattice, "f4 or bw16")->required();

  auto* exp = app.add_subcommand("export", "write a generator matrix in text format");
  std::string genName, outPath;
  exp->add_option("--generator", genName, "x1..x7, e1..e4, s1i..s4j, tau-*, f4, bw16")
      ->required();
  exp->add_option("--out", outPath, "output path")->required();

  auto* member = app.add_subcommand("member", "test lattice membership of a vector");
  std::string memLattice, vectorPath;
  member->add_option("--lattice", memLattice, "f4 or bw16")->required();
  member->add_option("--vector", vectorPath, "path to a 1 x dim matrix in text format")
      ->required();

  try {
    app.parse(argc, argv);
    if (verify->parsed()) return cmdVerify(checkNames, jsonPath, threads);
    if (order->parsed()) return cmdOrder(groupName, bsgsPath);
    if (kissing->parsed()) return cmdKissing(kissLattice);
    if (exp->parsed()) return cmdExport(genName, outPath);
    if (member->parsed()) return cmdMember(memLattice, vectorPath);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qlat::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
