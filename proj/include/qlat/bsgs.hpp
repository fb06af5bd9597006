#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qlat/dyadic.hpp"
#include "qlat/permutation.hpp"

namespace qlat {

/// Base and strong generating set of a permutation group, built by the
/// deterministic Schreier-Sims algorithm. The group order is the product of
/// the fundamental orbit sizes; membership is decided by sifting.
class Bsgs {
 public:
  struct Level {
    std::uint32_t basePoint;
    std::vector<std::size_t> genIdx;       // indices into the generator pool
    std::vector<std::uint32_t> orbit;      // discovery order, orbit[0] == basePoint
    std::vector<std::uint32_t> posPlus1;   // point -> orbit position + 1 (0 = absent)
    std::vector<Permutation> transversal;  // by orbit position; maps basePoint to point
    std::vector<std::size_t> scanned;      // per gen slot: verified orbit positions
  };

  /// Builds the stabilizer chain. baseHint points are preferred as base
  /// points in order (used to exercise base-choice invariance); progress, if
  /// set, receives one line per completed level.
  static Bsgs build(const std::vector<Permutation>& generators,
                    std::vector<std::uint32_t> baseHint = {},
                    std::function<void(const std::string&)> progress = {}) {
    Bsgs b;
    b.degree_ = generators.empty() ? 0 : generators.front().degree();
    for (const auto& g : generators) {
      if (g.degree() != b.degree_) throw std::invalid_argument("Bsgs: degree mismatch");
      if (!g.isIdentity()) b.pool_.push_back(g);
    }
    if (b.pool_.empty()) return b;  // trivial group

    std::size_t hintUsed = 0;
    b.newLevel(b.pickInitialBase(baseHint, hintUsed));
    auto& first = b.levels_.front();
    for (std::size_t t = 0; t < b.pool_.size(); ++t) first.genIdx.push_back(t);
    first.scanned.assign(first.genIdx.size(), 0);
    b.extendOrbit(first);

    std::size_t li = 0;
    while (true) {
      bool progressed = false;
      Level& L = b.levels_[li];
      // NB: mutations below may invalidate L and g, so progressed must be
      // checked before either is touched again.
      for (std::size_t slot = 0; !progressed && slot < L.genIdx.size(); ++slot) {
        const Permutation& g = b.pool_[L.genIdx[slot]];
        while (L.scanned[slot] < L.orbit.size()) {
          std::size_t pos = L.scanned[slot]++;
          std::uint32_t p = L.orbit[pos];
          std::uint32_t q = g[p];
          // Schreier generator u_p * g * u_q^{-1}; fixes the base point.
          Permutation sg =
              L.transversal[pos].then(g).then(b.transversalTo(L, q).inverse());
          if (sg.isIdentity()) continue;
          auto [stuck, residue] = b.siftFrom(li + 1, std::move(sg));
          if (!residue) continue;
          // Non-trivial residue: extend the chain with it and re-verify from
          // the level where it got stuck.
          b.pool_.push_back(std::move(*residue));
          std::size_t ri = b.pool_.size() - 1;
          if (stuck == b.levels_.size())
            b.newLevel(b.pickBaseFor(b.pool_[ri], baseHint, hintUsed));
          for (std::size_t l2 = li + 1; l2 <= stuck; ++l2) {
            b.levels_[l2].genIdx.push_back(ri);
            b.levels_[l2].scanned.push_back(0);
            b.extendOrbit(b.levels_[l2]);
          }
          li = stuck;
          progressed = true;
          break;
        }
      }
      if (progressed) continue;
      if (progress)
        progress("level " + std::to_string(li) + " verified, orbit size " +
                 std::to_string(b.levels_[li].orbit.size()));
      if (li == 0) break;
      --li;
    }
    return b;
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& strongGenerators() const { return pool_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::vector<std::uint32_t> base() const {
    std::vector<std::uint32_t> out;
    out.reserve(levels_.size());
    for (const auto& L : levels_) out.push_back(L.basePoint);
    return out;
  }

  /// Exact group order: the product of the fundamental orbit sizes.
  Int order() const {
    Int n = 1;
    for (const auto& L : levels_) n *= Int(static_cast<std::uint64_t>(L.orbit.size()));
    return n;
  }

  /// Membership by sifting: true iff the sifting residue is the identity.
  bool contains(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("Bsgs: degree mismatch");
    auto [stuck, residue] = siftFrom(0, p);
    return !residue.has_value();
  }

  /// Re-checks the strong generating property: every Schreier generator of
  /// every level sifts to the identity.
  bool verifyStrongGeneration() const {
    for (std::size_t li = 0; li < levels_.size(); ++li) {
      const Level& L = levels_[li];
      for (std::size_t slot = 0; slot < L.genIdx.size(); ++slot) {
        const Permutation& g = pool_[L.genIdx[slot]];
        for (std::size_t pos = 0; pos < L.orbit.size(); ++pos) {
          std::uint32_t q = g[L.orbit[pos]];
          Permutation sg = L.transversal[pos].then(g).then(transversalTo(L, q).inverse());
          auto [stuck, residue] = siftFrom(li + 1, std::move(sg));
          if (residue) return false;
        }
      }
    }
    return true;
  }

  /// Text form: degree, base points, then one strong generator per line in
  /// image notation.
  std::string toText() const {
    std::ostringstream os;
    os << "degree " << degree_ << '\n';
    os << "base";
    for (const auto& L : levels_) os << ' ' << L.basePoint;
    os << '\n';
    for (const auto& g : pool_) {
      for (std::size_t p = 0; p < degree_; ++p) {
        if (p) os << ' ';
        os << g[p];
      }
      os << '\n';
    }
    return os.str();
  }

 private:
  void newLevel(std::uint32_t basePoint) {
    Level L;
    L.basePoint = basePoint;
    L.posPlus1.assign(degree_, 0);
    L.orbit.push_back(basePoint);
    L.posPlus1[basePoint] = 1;
    L.transversal.push_back(Permutation::identity(degree_));
    levels_.push_back(std::move(L));
  }

  const Permutation& transversalTo(const Level& L, std::uint32_t point) const {
    return L.transversal[L.posPlus1[point] - 1];
  }

  /// Continues the orbit BFS until no generator extends it further.
  void extendOrbit(Level& L) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t pos = 0; pos < L.orbit.size(); ++pos) {
        for (std::size_t gi : L.genIdx) {
          std::uint32_t q = pool_[gi][L.orbit[pos]];
          if (L.posPlus1[q] == 0) {
            L.posPlus1[q] = static_cast<std::uint32_t>(L.orbit.size() + 1);
            L.orbit.push_back(q);
            L.transversal.push_back(L.transversal[pos].then(pool_[gi]));
            changed = true;
          }
        }
      }
    }
  }

  /// Sifts g through levels start.., returning the level where it got stuck
  /// and the residue (empty when g factors completely into the chain).
  std::pair<std::size_t, std::optional<Permutation>> siftFrom(std::size_t start,
                                                              Permutation g) const {
    for (std::size_t li = start; li < levels_.size(); ++li) {
      const Level& L = levels_[li];
      std::uint32_t q = g[L.basePoint];
      if (q == L.basePoint) continue;
      if (L.posPlus1[q] == 0) return {li, std::move(g)};
      g = g.then(transversalTo(L, q).inverse());
    }
    if (g.isIdentity()) return {levels_.size(), std::nullopt};
    return {levels_.size(), std::move(g)};
  }

  /// Initial base point: lowest-index point in a largest orbit of the whole
  /// generator set.
  std::uint32_t pickInitialBase(const std::vector<std::uint32_t>& hint, std::size_t& hintUsed) {
    for (; hintUsed < hint.size(); ++hintUsed) {
      std::uint32_t cand = hint[hintUsed];
      for (const auto& g : pool_)
        if (g[cand] != cand) {
          ++hintUsed;
          return cand;
        }
    }
    std::vector<char> seen(degree_, 0);
    std::uint32_t best = 0;
    std::size_t bestSize = 0;
    for (std::uint32_t s = 0; s < degree_; ++s) {
      if (seen[s]) continue;
      std::vector<std::uint32_t> comp{s};
      seen[s] = 1;
      bool moved = false;
      for (std::size_t t = 0; t < comp.size(); ++t)
        for (const auto& g : pool_) {
          std::uint32_t y = g[comp[t]];
          if (y != comp[t]) moved = true;
          if (!seen[y]) {
            seen[y] = 1;
            comp.push_back(y);
          }
        }
      if (moved && comp.size() > bestSize) {
        bestSize = comp.size();
        best = s;
      }
    }
    return best;
  }

  /// Base point for a fresh level: a preferred hint point if the residue
  /// moves one, otherwise the lowest-index point on a longest cycle of the
  /// residue (greedy large first orbit).
  std::uint32_t pickBaseFor(const Permutation& residue, const std::vector<std::uint32_t>& hint,
                            std::size_t& hintUsed) {
    for (; hintUsed < hint.size(); ++hintUsed) {
      std::uint32_t cand = hint[hintUsed];
      if (residue[cand] != cand) {
        ++hintUsed;
        return cand;
      }
    }
    std::vector<char> seen(degree_, 0);
    std::uint32_t best = 0;
    std::size_t bestLen = 0;
    for (std::uint32_t s = 0; s < degree_; ++s) {
      if (seen[s] || residue[s] == s) continue;
      std::size_t len = 0;
      std::uint32_t x = s;
      while (!seen[x]) {
        seen[x] = 1;
        x = residue[x];
        ++len;
      }
      if (len > bestLen) {
        bestLen = len;
        best = s;
      }
    }
    return best;
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> pool_;
  std::vector<Level> levels_;
};

/// Complete prime factorization by trial division; adequate at the sizes
/// certified here.
inline std::vector<std::pair<Int, unsigned>> factorize(Int n) {
  if (n < 1) throw std::invalid_argument("factorize: positive integer required");
  std::vector<std::pair<Int, unsigned>> out;
  auto pull = [&](const Int& d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  };
  pull(2);
  for (Int d = 3; d * d <= n; d += 2) pull(d);
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::string factorizationString(const std::vector<std::pair<Int, unsigned>>& f) {
  if (f.empty()) return "1";
  std::string s;
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (t) s += " * ";
    s += f[t].first.str();
    if (f[t].second > 1) s += "^" + std::to_string(f[t].second);
  }
  return s;
}

}  // namespace qlat
