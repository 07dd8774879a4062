#ifndef SYMFORMS_PRESETS_HPP
#define SYMFORMS_PRESETS_HPP

#include <optional>
#include <string>
#include <vector>

#include "symforms/basis.hpp"

namespace symforms {

/// A named surface with its h^{q,0} data, default ground field, and the
/// geometric facts the numbers come from.
struct SurfacePreset {
  std::string name;
  SurfaceHodgeData data;
  std::string notes;
};

const std::vector<SurfacePreset>& all_presets();
std::optional<SurfacePreset> find_preset(const std::string& name);

}  // namespace symforms

#endif
