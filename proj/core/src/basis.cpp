#include "symforms/basis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symforms {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw std::invalid_argument("images do not form a permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i,
                                       std::size_t j) {
  if (i >= n || j >= n) throw std::invalid_argument("transposition out of range");
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  std::swap(im[i], im[j]);
  return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& b) const {
  if (size() != b.size()) throw std::invalid_argument("size mismatch in composition");
  std::vector<std::uint32_t> im(size());
  for (std::size_t i = 0; i < size(); ++i) im[i] = images_[b.images_[i]];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> im(size());
  for (std::size_t i = 0; i < size(); ++i) im[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(im));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<std::uint32_t> im(n);
  std::iota(im.begin(), im.end(), 0u);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<DegreeComposition> enumerate_compositions(std::size_t n,
                                                      unsigned q) {
  std::vector<DegreeComposition> out;
  if (q > 2 * n) return out;
  DegreeComposition cur;
  cur.parts.assign(n, 0);
  // Lexicographic by filling slots left to right; remaining sum bounds prune.
  auto rec = [&](auto&& self, std::size_t slot, unsigned remaining) -> void {
    if (slot == n) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    unsigned max_rest = 2 * static_cast<unsigned>(n - slot - 1);
    for (std::uint8_t d = 0; d <= 2; ++d) {
      if (d > remaining) break;
      if (remaining - d > max_rest) continue;
      cur.parts[slot] = d;
      self(self, slot + 1, remaining - d);
    }
    cur.parts[slot] = 0;
  };
  rec(rec, 0, q);
  return out;
}

std::vector<TensorBasisElement> enumerate_basis(const SurfaceHodgeData& data,
                                                std::size_t n, unsigned q) {
  std::vector<TensorBasisElement> out;
  for (const auto& comp : enumerate_compositions(n, q)) {
    bool empty = false;
    for (auto d : comp.parts) {
      if (data.form_dim(d) == 0) { empty = true; break; }
    }
    if (empty) continue;
    // Odometer over choices, first slot most significant.
    std::vector<std::uint32_t> choice(n, 0);
    for (;;) {
      out.push_back(TensorBasisElement{comp, choice});
      std::size_t slot = n;
      while (slot > 0) {
        --slot;
        if (++choice[slot] < data.form_dim(comp.parts[slot])) break;
        choice[slot] = 0;
        if (slot == 0) goto next_composition;
      }
      if (n == 0) break;
    }
  next_composition:;
  }
  return out;
}

int koszul_sign(const Permutation& perm, const DegreeComposition& degrees) {
  if (perm.size() != degrees.parts.size()) {
    throw std::invalid_argument("permutation/degree length mismatch");
  }
  unsigned inversions = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (degrees.parts[i] % 2 == 0) continue;
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (degrees.parts[j] % 2 == 0) continue;
      if (perm(i) > perm(j)) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

SignedBasisElement act(const Permutation& perm, const TensorBasisElement& e,
                       FieldSpec field) {
  const std::size_t n = perm.size();
  if (e.composition.parts.size() != n || e.choices.size() != n) {
    throw std::invalid_argument("element/permutation length mismatch");
  }
  TensorBasisElement img;
  img.composition.parts.assign(n, 0);
  img.choices.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    img.composition.parts[perm(i)] = e.composition.parts[i];
    img.choices[perm(i)] = e.choices[i];
  }
  FieldScalar sign(field, koszul_sign(perm, e.composition));
  return SignedBasisElement{std::move(sign), std::move(img)};
}

}  // namespace symforms
