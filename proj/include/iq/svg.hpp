/*
 * Copyright 2026 The instanton-quiver Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>

#include "iq/stability.hpp"

namespace iq {

struct SvgOverlay {
  StabilityRegion region;
  std::string label;
};

/// SVG 1.1 drawing of the (alpha, gamma)-plane with the five charge-1
/// regions: outside the fourth quadrant, the two chambers on either side of
/// gamma = -alpha, the wall itself and the semistable quadrant boundary.
/// All coordinates are integers and the output depends only on the inputs.
std::string render_regions_svg(const std::optional<SvgOverlay>& overlay = std::nullopt);

}  // namespace iq
