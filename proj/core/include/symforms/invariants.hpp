#ifndef SYMFORMS_INVARIANTS_HPP
#define SYMFORMS_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "symforms/basis.hpp"
#include "symforms/matrix.hpp"

namespace symforms {

enum class Method { GeneratorKernel, BruteForce, ClosedForm };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& s);

/// Result of an invariant-dimension computation: h^{q,0} of the n-th
/// symmetric product (equivalently, of Hilb^n) for the given surface data.
struct InvariantReport {
  SurfaceHodgeData data;
  unsigned n = 1;
  unsigned q = 0;
  std::size_t dimension = 0;
  Method method = Method::GeneratorKernel;
  /// Coefficient vectors over the enumerate_basis ordering, present on request.
  std::optional<std::vector<std::vector<FieldScalar>>> basis;
};

/// Matrix of the signed slot-permutation action in the enumerate_basis
/// ordering: entry (image index, source index) = Koszul sign.
ExactMatrix action_matrix(const Permutation& perm, const SurfaceHodgeData& data,
                          unsigned n, unsigned q);

/// dim of the common fixed space of all M_sigma, computed as the kernel of
/// the stacked (M_s - I) over the n-1 adjacent transpositions s (they
/// generate S_n). Valid in any characteristic: no averaging is used, so p
/// dividing n! is fine.
InvariantReport invariant_dimension(const SurfaceHodgeData& data, unsigned n,
                                    unsigned q, bool want_basis = false);

/// Independent oracle: kernel of the stacked (M_sigma - I) over all n!
/// permutations. Refuses n above the bound.
InvariantReport invariant_dimension_bruteforce(const SurfaceHodgeData& data,
                                               unsigned n, unsigned q,
                                               unsigned n_bound = 6);

/// Count extracted from the q=2 structure: diagonal 2-forms plus tensor-pair
/// sections. For n >= 2 this is h20 + h10*(h10-1)/2 away from characteristic
/// 2 and h20 + h10*(h10+1)/2 in characteristic 2 (the collapse of the sign
/// also fixes the symmetric pairs). A cross-check, not ground truth; assumes
/// a one-dimensional space of constants (h00 = 1) for n >= 2.
unsigned long closed_form_q2(const SurfaceHodgeData& data, unsigned n);

}  // namespace symforms

#endif
