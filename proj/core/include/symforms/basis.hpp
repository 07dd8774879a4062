#ifndef SYMFORMS_BASIS_HPP
#define SYMFORMS_BASIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "symforms/field.hpp"

namespace symforms {

/// Dimensions h^{q,0} = dim H^0(X, Omega^q) of a surface X, for q = 0, 1, 2,
/// together with the ground field. Forms of degree > 2 vanish on a surface.
struct SurfaceHodgeData {
  unsigned h00 = 1;
  unsigned h10 = 0;
  unsigned h20 = 0;
  FieldSpec field;
  std::string label;

  unsigned form_dim(unsigned q) const {
    switch (q) {
      case 0: return h00;
      case 1: return h10;
      case 2: return h20;
      default: return 0;
    }
  }

  friend bool operator==(const SurfaceHodgeData&, const SurfaceHodgeData&) = default;
};

/// Degrees (q_1, ..., q_n), each in {0, 1, 2}, of the per-factor forms in one
/// Kunneth summand of Omega^q on the n-fold product. Total degree is the sum.
struct DegreeComposition {
  std::vector<std::uint8_t> parts;

  unsigned total() const {
    unsigned s = 0;
    for (auto p : parts) s += p;
    return s;
  }

  friend bool operator==(const DegreeComposition&, const DegreeComposition&) = default;
  friend auto operator<=>(const DegreeComposition&, const DegreeComposition&) = default;
};

/// One monomial basis vector of H^0(Omega^q on X^n): a degree composition
/// plus, per slot, the index of a chosen basis form of H^0(Omega^{q_i}).
/// Slots of degree 0 always carry index 0 (the constant function 1).
struct TensorBasisElement {
  DegreeComposition composition;
  std::vector<std::uint32_t> choices;

  friend bool operator==(const TensorBasisElement&, const TensorBasisElement&) = default;
  friend auto operator<=>(const TensorBasisElement&, const TensorBasisElement&) = default;
};

/// An element of S_n acting on the n slots, 0-based: images[i] is where the
/// content of slot i goes.
class Permutation {
public:
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

  std::size_t size() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  /// (a * b)(i) = a(b(i)): apply b first, then a.
  Permutation operator*(const Permutation& b) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

private:
  std::vector<std::uint32_t> images_;
};

std::vector<Permutation> all_permutations(std::size_t n);

struct SignedBasisElement {
  FieldScalar sign;  // +1 or -1 in the field; always +1 in characteristic 2
  TensorBasisElement element;

  friend bool operator==(const SignedBasisElement&, const SignedBasisElement&) = default;
};

/// All (q_1,...,q_n) in {0,1,2}^n with sum q, in lexicographic order.
/// Empty when q > 2n.
std::vector<DegreeComposition> enumerate_compositions(std::size_t n, unsigned q);

/// The monomial basis of H^0(Omega^q on X^n), composition-major and
/// choice-lexicographic within each composition. Compositions with a slot
/// whose form space is zero-dimensional contribute nothing.
std::vector<TensorBasisElement> enumerate_basis(const SurfaceHodgeData& data,
                                                std::size_t n, unsigned q);

/// Sign of permuting graded tensor factors: (-1)^m where m counts inversions
/// of perm between slots of odd degree. For surfaces only degree-1 slots are
/// odd.
int koszul_sign(const Permutation& perm, const DegreeComposition& degrees);

/// Move the content of slot i to slot perm(i), with the Koszul sign reduced
/// into the field (so always +1 in characteristic 2).
SignedBasisElement act(const Permutation& perm, const TensorBasisElement& e,
                       FieldSpec field);

}  // namespace symforms

#endif
