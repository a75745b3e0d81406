#pragma once

#include <string>
#include <string_view>

#include "scherk/domain.hpp"

// SVG rendering of a complex with its horocycle system, in the half-plane
// chart or mapped to the unit disk by the boundary-preserving map sending
// (0,1) to the center. Output is byte-deterministic for identical inputs.

namespace scherk {

struct SceneSpec {
    enum class Chart { halfplane, disk };
    Chart chart = Chart::halfplane;
    bool show_sides = true;
    bool show_horocycles = true;
    bool show_vertices = true;
    int samples = 128;
    int width_px = 800;
};

std::string render_svg(const CellComplex& c, const HorocycleSystem* hs,
                       const SceneSpec& scene, std::string_view input_hash);

}  // namespace scherk
