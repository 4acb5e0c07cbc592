#pragma once

// Deterministic SVG renderings of the three standard pictures:
//  - Triangles: deltoid, unit circle, a reference amenable triangle with its
//    reflected and large companions, and the frame points/lines of one angle;
//  - PreimageCurves: the curves A e^{i theta} + e^{-2i theta} for every
//    Fibonacci amplitude of n, inside the deltoid;
//  - NeedleCrossings: the 3n needles with base angles -pi j / 3n and the n^2
//    points where p_n vanishes.
// Output is a pure function of the FigureSpec: same fields, same bytes.

#include <string>

#include "deltoid/geometry.hpp"

namespace deltoid {

enum class FigureId { Triangles, PreimageCurves, NeedleCrossings };

struct FigureSpec {
  FigureId id = FigureId::Triangles;
  int n = 0;              // 0 picks the per-figure default (12 / 8)
  double theta = pi / 5;  // frame angle for Triangles
  double lambda0 = 0.4;   // needle parameter of the reference orthocenter
  int samples = 720;      // polyline resolution for curves
  double canvas = 800.0;  // rendered width/height in px
};

std::string render_figure(const FigureSpec& spec);

}  // namespace deltoid
