#include "symforms/presets.hpp"

namespace symforms {

const std::vector<SurfacePreset>& all_presets() {
  static const std::vector<SurfacePreset> presets = {
      {"supersingular-enriques",
       SurfaceHodgeData{1, 1, 1, FieldSpec(2), "supersingular-enriques"},
       "Supersingular Enriques surface in characteristic 2: trivial canonical "
       "bundle (h^{2,0} = 1), h^1(O) = 1 with Frobenius acting as zero, "
       "trivial etale fundamental group. Hodge symmetry can fail in "
       "characteristic 2; this preset takes h^{1,0} = 1, matching h^{0,1} = 1, "
       "so the surface carries a global 1-form. The extra invariant 2-forms "
       "on the symmetric products exist only under that choice."},
      {"enriques-char0",
       SurfaceHodgeData{1, 0, 0, FieldSpec(0), "enriques-char0"},
       "Enriques surface away from characteristic 2: h^{1,0} = h^{2,0} = 0, "
       "canonical bundle 2-torsion but nontrivial, fundamental group Z/2 via "
       "the K3 double cover."},
      {"k3",
       SurfaceHodgeData{1, 0, 1, FieldSpec(0), "k3"},
       "K3 surface: trivial canonical bundle spanned by a nowhere-vanishing "
       "2-form, no global 1-forms, simply connected. The control case: with "
       "no 1-forms, h^{2,0} of every symmetric product stays 1 in every "
       "characteristic."},
      {"abelian-char0",
       SurfaceHodgeData{1, 2, 1, FieldSpec(0), "abelian-char0"},
       "Abelian surface over a characteristic-0 field: two independent global "
       "1-forms, their wedge spanning H^0(Omega^2)."},
  };
  return presets;
}

std::optional<SurfacePreset> find_preset(const std::string& name) {
  for (const auto& p : all_presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace symforms
