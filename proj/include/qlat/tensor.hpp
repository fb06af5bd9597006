#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlat/detail/rep_constants.hpp"
#include "qlat/matrix.hpp"
#include "qlat/quaternion.hpp"

namespace qlat {

/// Quaternion basis symbol.
enum class QSym : std::uint8_t { E = 0, I = 1, J = 2, K = 3 };

inline char qsymChar(QSym s) { return "eijk"[static_cast<int>(s)]; }

struct SignedSym {
  int sign;
  QSym sym;
};

/// Product of two basis symbols (i*j = k, squares of i,j,k are -e, ...).
inline SignedSym qsymMul(QSym a, QSym b) {
  static constexpr int kSign[4][4] = {
      {1, 1, 1, 1},
      {1, -1, 1, -1},
      {1, -1, -1, 1},
      {1, 1, -1, -1},
  };
  static constexpr QSym kSym[4][4] = {
      {QSym::E, QSym::I, QSym::J, QSym::K},
      {QSym::I, QSym::E, QSym::K, QSym::J},
      {QSym::J, QSym::K, QSym::E, QSym::I},
      {QSym::K, QSym::J, QSym::I, QSym::E},
  };
  int ia = static_cast<int>(a), ib = static_cast<int>(b);
  return {kSign[ia][ib], kSym[ia][ib]};
}

/// Signed pure tensor of basis symbols, e.g. -(i (x) j (x) k (x) i).
struct TensorWord {
  int sign = 1;
  std::vector<QSym> factors;

  TensorWord(int sg, std::vector<QSym> f) : sign(sg), factors(std::move(f)) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("TensorWord: sign must be +-1");
    auto r = factors.size();
    if (r != 1 && r != 2 && r != 4)
      throw std::invalid_argument("TensorWord: rank must be 1, 2 or 4");
  }

  std::size_t rank() const { return factors.size(); }
};

inline std::size_t pow4(std::size_t r) { return std::size_t(1) << (2 * r); }

/// Index of a factor word in the lexicographic order over (e,i,j,k) with
/// slot 1 most significant.
inline std::size_t wordIndex(const std::vector<QSym>& factors) {
  std::size_t idx = 0;
  for (QSym s : factors) idx = idx * 4 + static_cast<std::size_t>(s);
  return idx;
}

inline std::vector<QSym> wordAt(std::size_t rank, std::size_t index) {
  std::vector<QSym> w(rank);
  for (std::size_t t = rank; t-- > 0;) {
    w[t] = static_cast<QSym>(index & 3);
    index >>= 2;
  }
  return w;
}

/// Element of the rank-r tensor algebra of the quaternions: 4^r exact
/// coordinates indexed by factor words.
class AlgebraElement {
 public:
  explicit AlgebraElement(std::size_t rank) : rank_(rank), coords_(pow4(rank)) {
    if (rank != 1 && rank != 2 && rank != 4)
      throw std::invalid_argument("AlgebraElement: rank must be 1, 2 or 4");
  }

  static AlgebraElement fromWord(const TensorWord& w) {
    AlgebraElement e(w.rank());
    e.coords_[wordIndex(w.factors)] = Dyadic(w.sign);
    return e;
  }

  /// e (x) ... (x) e, the multiplicative unit.
  static AlgebraElement unit(std::size_t rank) {
    AlgebraElement e(rank);
    e.coords_[0] = Dyadic(1);
    return e;
  }

  /// (1/2) * (sum of signed pure words), the shape of all generators here.
  static AlgebraElement halfSum(std::size_t rank, const std::vector<TensorWord>& words) {
    AlgebraElement e(rank);
    for (const auto& w : words) {
      if (w.rank() != rank) throw std::invalid_argument("halfSum: rank mismatch");
      e.coords_[wordIndex(w.factors)] += Dyadic(w.sign, 1);
    }
    return e;
  }

  std::size_t rank() const { return rank_; }
  const Dyadic& coord(std::size_t idx) const { return coords_[idx]; }
  Dyadic& coord(std::size_t idx) { return coords_[idx]; }
  const std::vector<Dyadic>& coords() const { return coords_; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.rank_ == b.rank_ && a.coords_ == b.coords_;
  }

  /// Bilinear product; structure constants are factor-wise quaternion
  /// products: (a1 (x) b1)(a2 (x) b2) = a1a2 (x) b1b2.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("AlgebraElement: rank mismatch");
    AlgebraElement out(a.rank_);
    for (std::size_t ia = 0; ia < a.coords_.size(); ++ia) {
      if (a.coords_[ia].isZero()) continue;
      for (std::size_t ib = 0; ib < b.coords_.size(); ++ib) {
        if (b.coords_[ib].isZero()) continue;
        int sign = 1;
        std::size_t idx = 0;
        std::size_t wa = ia, wb = ib;
        for (std::size_t t = 0; t < a.rank_; ++t) {
          std::size_t shift = 2 * (a.rank_ - 1 - t);
          QSym sa = static_cast<QSym>((wa >> shift) & 3);
          QSym sb = static_cast<QSym>((wb >> shift) & 3);
          auto [sg, sym] = qsymMul(sa, sb);
          sign *= sg;
          idx = idx * 4 + static_cast<std::size_t>(sym);
        }
        Dyadic term = a.coords_[ia] * b.coords_[ib];
        out.coords_[idx] += (sign < 0) ? -term : term;
      }
    }
    return out;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.rank_ != b.rank_) throw std::invalid_argument("AlgebraElement: rank mismatch");
    AlgebraElement out = a;
    for (std::size_t t = 0; t < out.coords_.size(); ++t) out.coords_[t] += b.coords_[t];
    return out;
  }

 private:
  std::size_t rank_;
  std::vector<Dyadic> coords_;
};

namespace detail {

inline std::vector<DyadicMatrix> parseAll(const std::string_view* texts, std::size_t n) {
  std::vector<DyadicMatrix> out;
  out.reserve(n);
  for (std::size_t t = 0; t < n; ++t) out.push_back(DyadicMatrix::fromText(texts[t]));
  return out;
}

inline const std::vector<DyadicMatrix>& slotBasis() {
  static const std::vector<DyadicMatrix> m = parseAll(kSlotBasisText, 8);
  return m;
}

}  // namespace detail

/// The 16x16 image of a single-slot pure tensor with symbol i or j: the
/// stored constant matrices of the rank-4 representation.
inline const DyadicMatrix& rho4Basis(int slot, QSym sym) {
  if (slot < 1 || slot > 4 || (sym != QSym::I && sym != QSym::J))
    throw std::invalid_argument("rho4Basis: slot in 1..4 and symbol i or j required");
  return detail::slotBasis()[2 * (slot - 1) + (sym == QSym::I ? 0 : 1)];
}

/// Image of a single slot carrying an arbitrary symbol; k is realized as the
/// product of the i and j matrices for that slot.
inline DyadicMatrix rho4Slot(int slot, QSym sym) {
  switch (sym) {
    case QSym::E: return DyadicMatrix::identity(16);
    case QSym::K: return rho4Basis(slot, QSym::I) * rho4Basis(slot, QSym::J);
    default: return rho4Basis(slot, sym);
  }
}

/// Rank-1 representation: linear extension of tau.
inline DyadicMatrix rho1(const AlgebraElement& w) {
  if (w.rank() != 1) throw std::invalid_argument("rho1: rank-1 element required");
  DyadicMatrix out(4, 4);
  for (std::size_t t = 0; t < 4; ++t)
    if (!w.coord(t).isZero()) out = out + w.coord(t) * detail::tauBasis(static_cast<int>(t));
  return out;
}

/// Rank-2 representation: word (a,b) maps to kron(tau(a), tau(b)), extended
/// linearly. Slot 1 is the left Kronecker factor.
inline DyadicMatrix rho2(const AlgebraElement& w) {
  if (w.rank() != 2) throw std::invalid_argument("rho2: rank-2 element required");
  DyadicMatrix out(16, 16);
  for (std::size_t idx = 0; idx < 16; ++idx) {
    if (w.coord(idx).isZero()) continue;
    const DyadicMatrix& a = detail::tauBasis(static_cast<int>(idx >> 2));
    const DyadicMatrix& b = detail::tauBasis(static_cast<int>(idx & 3));
    out = out + w.coord(idx) * kron(a, b);
  }
  return out;
}

/// Image of a rank-4 pure word: product over slots of the single-slot
/// images (slot order is irrelevant, distinct slots commute).
inline DyadicMatrix rho4Word(const std::vector<QSym>& factors) {
  if (factors.size() != 4) throw std::invalid_argument("rho4Word: rank-4 word required");
  DyadicMatrix out = DyadicMatrix::identity(16);
  for (int slot = 1; slot <= 4; ++slot) {
    QSym s = factors[slot - 1];
    if (s == QSym::E) continue;
    out = out * rho4Slot(slot, s);
  }
  return out;
}

/// Rank-4 representation: linear extension of rho4Word.
inline DyadicMatrix rho4(const AlgebraElement& w) {
  if (w.rank() != 4) throw std::invalid_argument("rho4: rank-4 element required");
  DyadicMatrix out(16, 16);
  for (std::size_t idx = 0; idx < 256; ++idx) {
    if (w.coord(idx).isZero()) continue;
    out = out + w.coord(idx) * rho4Word(wordAt(4, idx));
  }
  return out;
}

namespace detail {

inline TensorWord makeWord(int sign, const char* syms) {
  std::vector<QSym> f;
  for (const char* p = syms; *p; ++p) {
    switch (*p) {
      case 'e': f.push_back(QSym::E); break;
      case 'i': f.push_back(QSym::I); break;
      case 'j': f.push_back(QSym::J); break;
      case 'k': f.push_back(QSym::K); break;
      default: throw std::invalid_argument("makeWord: bad symbol");
    }
  }
  return TensorWord(sign, std::move(f));
}

}  // namespace detail

/// The four rank-2 half-sum generators of the 1152-element Weyl group of F4
/// in its 16-dimensional realization.
inline std::array<AlgebraElement, 4> weylF4Generators() {
  using detail::makeWord;
  return {
      AlgebraElement::halfSum(2, {makeWord(1, "ee"), makeWord(1, "ij"), makeWord(1, "jk"),
                                  makeWord(-1, "ki")}),
      AlgebraElement::halfSum(2, {makeWord(1, "ee"), makeWord(-1, "ii"), makeWord(-1, "jj"),
                                  makeWord(-1, "kk")}),
      AlgebraElement::halfSum(2, {makeWord(1, "ee"), makeWord(-1, "ii"), makeWord(-1, "jk"),
                                  makeWord(1, "kj")}),
      AlgebraElement::halfSum(2, {makeWord(1, "ee"), makeWord(-1, "ij"), makeWord(-1, "ji"),
                                  makeWord(1, "kk")}),
  };
}

/// The seven rank-4 half-sum expressions whose images generate the
/// automorphism group of the Barnes-Wall lattice.
inline std::array<AlgebraElement, 7> autGeneratorExpressions() {
  using detail::makeWord;
  return {
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "ijki"),
                                  makeWord(1, "jkik"), makeWord(1, "kijj")}),
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "iiki"),
                                  makeWord(1, "jkik"), makeWord(-1, "kjjj")}),
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "jjii"),
                                  makeWord(1, "ikkk"), makeWord(1, "kijj")}),
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "kjik"),
                                  makeWord(1, "ikkj"), makeWord(-1, "jiji")}),
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "kjkk"),
                                  makeWord(-1, "ikij"), makeWord(-1, "jiji")}),
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "iiee"),
                                  makeWord(1, "jkee"), makeWord(1, "kjee")}),
      AlgebraElement::halfSum(4, {makeWord(1, "eeee"), makeWord(1, "jjke"),
                                  makeWord(1, "ikie"), makeWord(1, "kije")}),
  };
}

/// The seven stored 16x16 generator matrices of the Barnes-Wall automorphism
/// group. These constants are authoritative for all downstream group
/// computations; each is orthogonality-checked on first use.
inline const std::array<DyadicMatrix, 7>& autGenerators() {
  static const std::array<DyadicMatrix, 7> gens = [] {
    std::array<DyadicMatrix, 7> out = {
        DyadicMatrix::fromText(detail::kAutGenText[0]),
        DyadicMatrix::fromText(detail::kAutGenText[1]),
        DyadicMatrix::fromText(detail::kAutGenText[2]),
        DyadicMatrix::fromText(detail::kAutGenText[3]),
        DyadicMatrix::fromText(detail::kAutGenText[4]),
        DyadicMatrix::fromText(detail::kAutGenText[5]),
        DyadicMatrix::fromText(detail::kAutGenText[6]),
    };
    for (const auto& g : out)
      if (!g.isOrthogonal())
        throw std::runtime_error("autGenerators: stored constant is not orthogonal");
    return out;
  }();
  return gens;
}

/// Recovers the rank-2 algebra coordinates of a matrix in the image of rho2
/// via the trace form: the 16 word images kron(tau(a), tau(b)) are
/// orthogonal with squared trace norm 16.
inline AlgebraElement algebraCoordinates2(const DyadicMatrix& m) {
  if (m.rows() != 16 || m.cols() != 16)
    throw std::invalid_argument("algebraCoordinates2: 16x16 matrix required");
  AlgebraElement out(2);
  for (std::size_t idx = 0; idx < 16; ++idx) {
    const DyadicMatrix& a = detail::tauBasis(static_cast<int>(idx >> 2));
    const DyadicMatrix& b = detail::tauBasis(static_cast<int>(idx & 3));
    Dyadic t = (kron(a, b).transpose() * m).trace();
    out.coord(idx) = t * Dyadic(Int(1), 4);  // divide by 16
  }
  return out;
}

struct CrossCheckEntry {
  bool match;
  // (row, col, stored value, expression value) for each differing entry
  std::vector<std::tuple<std::size_t, std::size_t, Dyadic, Dyadic>> diffs;
};

/// Compares the image of each generator expression against the corresponding
/// stored matrix, entry by entry.
inline std::array<CrossCheckEntry, 7> crossCheckAutGenerators() {
  std::array<CrossCheckEntry, 7> out;
  auto exprs = autGeneratorExpressions();
  const auto& stored = autGenerators();
  for (int t = 0; t < 7; ++t) {
    DyadicMatrix img = rho4(exprs[t]);
    CrossCheckEntry& e = out[t];
    for (std::size_t r = 0; r < 16; ++r)
      for (std::size_t c = 0; c < 16; ++c)
        if (img.at(r, c) != stored[t].at(r, c))
          e.diffs.emplace_back(r, c, stored[t].at(r, c), img.at(r, c));
    e.match = e.diffs.empty();
  }
  return out;
}

}  // namespace qlat
