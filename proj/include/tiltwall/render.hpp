#pragma once

#include <string>
#include <vector>

#include "tiltwall/chern.hpp"
#include "tiltwall/walls.hpp"

namespace tiltwall {

struct RenderOptions {
    int width = 640;
    int height = 420;
    std::string title;
};

// Deterministic SVG of the (alpha, beta) upper half-plane: the given walls,
// the vertical wall at mu(v) (when rank is nonzero), and beta_+- markers.
// Floating point appears only here, at render time.
std::string render_walls_svg(const ChernChar& v, const std::vector<WallLocus>& walls,
                             const RenderOptions& opts = {});

}  // namespace tiltwall
