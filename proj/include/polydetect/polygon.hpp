#pragma once

#include <vector>

#include "polydetect/errors.hpp"
#include "polydetect/geometry.hpp"
#include "polydetect/graph.hpp"
#include "polydetect/mcb.hpp"

namespace polydetect {

struct Polygon {
  std::vector<Point> ring;  // counterclockwise, closure implicit, first != last
  double area = 0.0;
  int source_cycle = -1;  // index into the originating basis
};

struct PolygonSet {
  std::vector<Polygon> polygons;
  int count() const { return static_cast<int>(polygons.size()); }
};

/// Shoelace area; positive for counterclockwise rings.
double signed_polygon_area(const std::vector<Point>& ring);
double polygon_area(const std::vector<Point>& ring);

/// One polygon per basis cycle: the ring walks the cycle's edges starting at
/// its lowest vertex id, oriented counterclockwise. Throws MalformedCycleError
/// when an edge set is not a single closed elementary walk or has zero area.
PolygonSet polygons_from_cycles(const CycleBasis& basis, const PlanarGraph& g);

}  // namespace polydetect
