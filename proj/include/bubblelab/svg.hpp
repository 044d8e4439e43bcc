#pragma once

#include <map>
#include <string>

#include "bubblelab/geometry.hpp"

namespace bubblelab {

/// Figure request. Kinds: gadget, chain, linear, case_realization, path_in_G.
/// Numeric parameters (n, m, j, k, case, d, delta) ride in `params`.
struct FigureSpec {
  std::string kind = "gadget";
  std::map<std::string, double> params;
  int width = 900;
  int height = 900;
  bool annotations = false;
};

/// Deterministic standalone SVG document for the requested figure.
std::string render_figure(const FigureSpec& spec);

}  // namespace bubblelab
