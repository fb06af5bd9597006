#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qlat/lattice.hpp"
#include "qlat/matrix.hpp"

namespace qlat {

/// Permutation of {0, ..., n-1} in image notation. Points act on the right:
/// x^g = g[x], and (g.then(h))[x] = h[g[x]].
class Permutation {
 public:
  explicit Permutation(std::vector<std::uint32_t> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (std::uint32_t v : img_) {
      if (v >= img_.size() || seen[v])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<std::uint32_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
  }

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator[](std::size_t p) const { return img_[p]; }

  bool isIdentity() const {
    for (std::size_t p = 0; p < img_.size(); ++p)
      if (img_[p] != p) return false;
    return true;
  }

  /// Composition "this, then other".
  Permutation then(const Permutation& o) const {
    if (o.degree() != degree()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<std::uint32_t> v(img_.size());
    for (std::size_t p = 0; p < img_.size(); ++p) v[p] = o.img_[img_[p]];
    Permutation out;
    out.img_ = std::move(v);
    return out;
  }

  Permutation inverse() const {
    std::vector<std::uint32_t> v(img_.size());
    for (std::size_t p = 0; p < img_.size(); ++p) v[img_[p]] = static_cast<std::uint32_t>(p);
    Permutation out;
    out.img_ = std::move(v);
    return out;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }

  /// Multiset of cycle lengths, as (length, count) pairs sorted by length.
  std::vector<std::pair<std::size_t, std::size_t>> cycleType() const {
    std::vector<char> seen(img_.size(), 0);
    std::map<std::size_t, std::size_t> cnt;
    for (std::size_t s = 0; s < img_.size(); ++s) {
      if (seen[s]) continue;
      std::size_t len = 0, x = s;
      while (!seen[x]) {
        seen[x] = 1;
        x = img_[x];
        ++len;
      }
      ++cnt[len];
    }
    return {cnt.begin(), cnt.end()};
  }

 private:
  Permutation() = default;
  std::vector<std::uint32_t> img_;
};

/// Converts matrix generators into permutations of the canonically sorted
/// minimal-vector list. Every generator must map the shell bijectively onto
/// itself; the action is faithful because the shell spans the space.
inline std::vector<Permutation> actionOnShortVectors(const std::vector<DyadicMatrix>& gens,
                                                     const ShortVectorSet& svs) {
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(svs.vectors.size() * 2);
  for (std::uint32_t t = 0; t < svs.vectors.size(); ++t) {
    std::string key;
    serializeVector(svs.vectors[t], key);
    index.emplace(std::move(key), t);
  }
  std::vector<Permutation> out;
  out.reserve(gens.size());
  for (const auto& g : gens) {
    DyadicMatrix gt = g.transpose();
    std::vector<std::uint32_t> images(svs.vectors.size());
    for (std::size_t t = 0; t < svs.vectors.size(); ++t) {
      DyadicVector w = vecMat(svs.vectors[t], gt);  // column convention: v -> g*v
      std::string key;
      serializeVector(w, key);
      auto it = index.find(key);
      if (it == index.end())
        throw std::runtime_error(
            "actionOnShortVectors: generator is not an automorphism of the minimal shell");
      images[t] = it->second;
    }
    out.emplace_back(std::move(images));  // constructor validates bijectivity
  }
  return out;
}

}  // namespace qlat
