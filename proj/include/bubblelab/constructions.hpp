#pragma once

#include "bubblelab/geometry.hpp"

namespace bubblelab {

/// An n-gadget: the center of a circle plus the vertices of a regular
/// (n-1)-gon inscribed in it. `rotation` is the angle of the first boundary
/// point; with the default 0 one boundary point sits on the +x axis.
struct GadgetSpec {
  int n = 12;
  double radius = 1.0;
  Point center{0.0, 0.0};
  double rotation = 0.0;

  void validate() const;
};

/// Alternating row of m 174-gadgets and m 340-gadgets along the x axis,
/// consecutive centers `d` apart. The 174-gadgets are rescaled by
/// `scale174` so that every gadget touches the two common horizontal
/// sandwich lines with exactly one boundary point each; the default 0
/// requests the unique contact-making value (slightly above 1, see
/// chain_contact_scale()).
struct ChainSpec {
  int m = 1;
  double d = 1e4;
  double scale174 = 0.0;

  void validate() const;
  double effective_scale() const;
};

/// Point rows on 2k+1 horizontal lines: k+1 dense lines (spacing delta)
/// alternating with k sparse lines (spacing 4+delta), vertical gap 2.
/// Every other dense line (the 3rd, 7th, ... of all lines) is shifted
/// right by epsilon so that no four points are co-circular on an empty
/// circle; epsilon = 0 requests the default delta/1000.
struct LinearSpec {
  int j = 1;
  int k = 1;
  double delta = 1.0 / 60.0;
  double epsilon = 0.0;

  void validate() const;
  double effective_epsilon() const { return epsilon > 0.0 ? epsilon : delta / 1000.0; }
  /// 4/delta, which the spacing rules require to be an integer.
  long long quarter_steps() const;
};

PointSet gadget(const GadgetSpec& spec);

PointSet baseline_collinear(int n, double spacing);

PointSet alternating_chain(const ChainSpec& spec);

PointSet linear_grid(const LinearSpec& spec);

/// Appends n_target - |base| collinear points at y = line_y starting at
/// x = offset_x. Used to extend a construction to an arbitrary target size
/// with a far-away cluster.
PointSet padded_to(int n_target, const PointSet& base, double line_y, double spacing,
                   double offset_x);

/// Ratio of the sandwich-line heights of the two gadget types: the largest
/// |y| over a unit 339-gon with a vertex on the +x axis divided by the same
/// quantity for a 173-gon. Rescaling the 174-gadgets by this factor makes
/// all gadgets touch the common sandwich lines.
double chain_contact_scale();

/// Closed-form point count of linear_grid: ((k+1)(4/delta+1) + k) j + (2k+1).
long long linear_grid_count(const LinearSpec& spec);

/// Largest |y| over the boundary points of a unit-radius gadget with a
/// vertex on the +x axis (n-1 vertices).
double gadget_sandwich_height(int n);

}  // namespace bubblelab
