#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boundent/config.hpp"

namespace boundent {

inline constexpr std::uint64_t kDefaultPresetSeed = 1;

struct PresetInfo {
  std::string_view name;
  /// Figure panel the preset mirrors and the qualitative claims it is meant to show.
  std::string_view checks;
};

/// All preset names in canonical order (fig1, fig2, fig3a, ..., fig8).
const std::vector<PresetInfo>& presets();

/// Config for a figure panel. "figN" without a panel letter selects panel (a).
/// Throws UnknownPreset.
ScenarioConfig figure_preset(std::string_view name, std::uint64_t seed = kDefaultPresetSeed);

}  // namespace boundent
