#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlat/matrix.hpp"

namespace qlat {

/// Thrown when a closure would exceed its safety cap, i.e. the generated
/// group is larger than the caller is prepared to enumerate.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(std::size_t cap)
      : std::runtime_error("group closure: group larger than cap " + std::to_string(cap)) {}
};

/// Exact rational in lowest terms; only produced as a result value.
struct Rational {
  Int num;
  Int den;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
};

struct ConjugacyClassing {
  std::size_t classCount = 0;
  std::vector<std::size_t> classSizes;       // sorted ascending
  std::vector<std::size_t> representatives;  // element index of each class
};

/// Fully enumerated finite group of orthogonal dyadic matrices, closed by
/// breadth-first multiplication with deduplication on canonical form.
class FiniteMatrixGroup {
 public:
  /// Generators must be orthogonal and of equal dimension. Throws
  /// CapExceeded if the closure grows past cap.
  static FiniteMatrixGroup closure(std::vector<DyadicMatrix> generators, std::size_t cap) {
    if (generators.empty()) throw std::invalid_argument("closure: no generators");
    std::size_t dim = generators.front().rows();
    for (const auto& g : generators) {
      if (g.rows() != dim || g.cols() != dim)
        throw std::invalid_argument("closure: generators of mixed dimension");
      if (!g.isOrthogonal()) throw std::invalid_argument("closure: generator not orthogonal");
    }
    FiniteMatrixGroup grp;
    grp.dim_ = dim;
    grp.generators_ = std::move(generators);
    std::deque<std::size_t> queue;
    auto add = [&](DyadicMatrix m) -> bool {
      std::string key = m.serialized();
      auto [it, inserted] = grp.index_.emplace(std::move(key), grp.elements_.size());
      if (inserted) {
        if (grp.elements_.size() >= cap) throw CapExceeded(cap);
        grp.elements_.push_back(std::move(m));
        queue.push_back(it->second);
      }
      return inserted;
    };
    add(DyadicMatrix::identity(dim));
    for (const auto& g : grp.generators_) add(g);
    while (!queue.empty()) {
      std::size_t idx = queue.front();
      queue.pop_front();
      for (const auto& s : grp.generators_)
        add(grp.elements_[idx] * s);
    }
    return grp;
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t dim() const { return dim_; }
  const std::vector<DyadicMatrix>& elements() const { return elements_; }
  const std::vector<DyadicMatrix>& generators() const { return generators_; }

  std::optional<std::size_t> indexOf(const DyadicMatrix& m) const {
    auto it = index_.find(m.serialized());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Multiplicative order of each element, as a multiset order -> count.
  std::map<std::uint64_t, std::size_t> elementOrders() const {
    std::map<std::uint64_t, std::size_t> out;
    for (const auto& g : elements_) {
      DyadicMatrix p = g;
      std::uint64_t n = 1;
      while (!p.isIdentity()) {
        p = p * g;
        ++n;
      }
      ++out[n];
    }
    return out;
  }

  /// Conjugation orbits. Each class is the orbit of a representative under
  /// conjugation by the generators.
  ConjugacyClassing conjugacyClasses() const {
    ConjugacyClassing out;
    std::vector<char> seen(elements_.size(), 0);
    std::vector<DyadicMatrix> ginv;
    ginv.reserve(generators_.size());
    for (const auto& g : generators_) ginv.push_back(g.transpose());
    for (std::size_t start = 0; start < elements_.size(); ++start) {
      if (seen[start]) continue;
      std::size_t size = 0;
      std::deque<std::size_t> queue{start};
      seen[start] = 1;
      while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        ++size;
        for (std::size_t t = 0; t < generators_.size(); ++t) {
          DyadicMatrix c = generators_[t] * elements_[x] * ginv[t];
          std::size_t y = *indexOf(c);
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
      }
      out.representatives.push_back(start);
      out.classSizes.push_back(size);
    }
    out.classCount = out.classSizes.size();
    std::sort(out.classSizes.begin(), out.classSizes.end());
    return out;
  }

  /// Successive commutator subgroup orders, starting with |G|, until the
  /// series stabilizes. Terminating at 1 certifies solvability.
  std::vector<std::size_t> derivedSeries(std::size_t cap = 0) const {
    if (cap == 0) cap = elements_.size() + 1;
    std::vector<std::size_t> series{elements_.size()};
    std::vector<DyadicMatrix> gens = generators_;
    for (;;) {
      std::vector<DyadicMatrix> sub = derivedSubgroup(gens, cap);
      series.push_back(sub.size());
      if (sub.size() == 1 || series[series.size() - 1] == series[series.size() - 2]) break;
      gens = std::move(sub);  // subgroup is small; use all elements as generators
    }
    return series;
  }

  /// (1 / |G|) * sum of squared traces, exactly, in lowest terms. Value 1
  /// certifies irreducibility for the rational-valued characters here.
  Rational characterNorm() const {
    Dyadic sum;
    for (const auto& g : elements_) {
      Dyadic t = g.trace();
      sum += t * t;
    }
    Int num = sum.numerator();
    Int den = Int(1) << sum.exponent();
    den *= Int(static_cast<std::uint64_t>(elements_.size()));
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num), den);
    if (g != 0) {
      num /= g;
      den /= g;
    }
    return {num, den};
  }

 private:
  FiniteMatrixGroup() = default;

  /// Commutator subgroup of <gens>: the normal closure of the pairwise
  /// generator commutators under conjugation by gens.
  static std::vector<DyadicMatrix> derivedSubgroup(const std::vector<DyadicMatrix>& gens,
                                                   std::size_t cap) {
    std::size_t dim = gens.front().rows();
    std::vector<DyadicMatrix> ginv;
    ginv.reserve(gens.size());
    for (const auto& g : gens) ginv.push_back(g.transpose());

    std::vector<DyadicMatrix> elems;
    std::unordered_map<std::string, std::size_t> index;
    std::deque<std::size_t> queue;
    auto add = [&](DyadicMatrix m) {
      auto [it, inserted] = index.emplace(m.serialized(), elems.size());
      if (inserted) {
        if (elems.size() >= cap) throw CapExceeded(cap);
        elems.push_back(std::move(m));
        queue.push_back(it->second);
      }
    };
    add(DyadicMatrix::identity(dim));
    for (std::size_t a = 0; a < gens.size(); ++a)
      for (std::size_t b = 0; b < gens.size(); ++b)
        add(ginv[a] * ginv[b] * gens[a] * gens[b]);
    // close under multiplication by current members and conjugation by gens
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t t = 0; t < gens.size(); ++t)
        add(gens[t] * elems[x] * ginv[t]);
      for (std::size_t y = 0; y < elems.size(); ++y) {
        add(elems[x] * elems[y]);
        add(elems[y] * elems[x]);
      }
    }
    return elems;
  }

  std::size_t dim_ = 0;
  std::vector<DyadicMatrix> generators_;
  std::vector<DyadicMatrix> elements_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace qlat
