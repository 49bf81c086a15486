// Copyright 2026 The inball Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.
//
// inball measures convex shapes against their largest inscribed ball: for
// shapes tangent to that ball on every boundary element, the derivative of
// area (volume) with respect to the inscribed radius equals the perimeter
// (surface area), and the library verifies that numerically. Shapes that
// fail tangency fall back to an inner-parallel-body erosion limit in 2D.

#pragma once

#include "inball/analyze.hpp"
#include "inball/closedform.hpp"
#include "inball/derivative.hpp"
#include "inball/erosion.hpp"
#include "inball/error.hpp"
#include "inball/geometry2d.hpp"
#include "inball/geometry3d.hpp"
#include "inball/inscribe.hpp"
#include "inball/linprog.hpp"
#include "inball/shape_io.hpp"
#include "inball/vec.hpp"
