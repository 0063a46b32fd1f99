#pragma once

#include <vector>

#include "virtstring/homotopy.hpp"
#include "virtstring/lie.hpp"
#include "virtstring/polynomial.hpp"
#include "virtstring/string_core.hpp"

namespace vstr {

// edge p leaves the endpoint at position p; a rank-0 diagram has one edge
struct Edge {
  int from = -1, to = -1;  // endpoint positions, -1 for the closed edge
};
std::vector<Edge> edges(const ArrowDiagram& d);
// incoming and outgoing edge of the endpoint at position p
int edge_in(const ArrowDiagram& d, int p);
int edge_out(const ArrowDiagram& d, int p);

struct Labeling {
  std::vector<int> f;        // label per edge, 1-based
  std::vector<int> cutting;  // cutting arrows
  int minus = 0;             // cutting arrows with sign -1
  int size() const { return static_cast<int>(cutting.size()); }
};

enum class LabelMode { lbl, Lbl };
bool is_labeling(const ArrowDiagram& d, const std::vector<int>& f);
std::vector<Labeling> enumerate_labelings(const ArrowDiagram& d, int n, LabelMode mode);

FormalSum nabla(const ArrowDiagram& d, Normalizer& norm);
FormalSum nabla(const ArrowDiagram& d, NormalizeCaps caps = {});
RatPoly2 nabla_ut(const ArrowDiagram& d);

// D with e negated, D' (arrows inside the arc tail->head), D'' (inside head->tail)
ArrowDiagram negate_arrow(const ArrowDiagram& d, int e);
ArrowDiagram skein_part(const ArrowDiagram& d, int e, bool first);
bool skein_check(const ArrowDiagram& d, int e, Normalizer& norm);
bool skein_check_ut(const ArrowDiagram& d, int e);

ArrowDiagram knot_covering(const ArrowDiagram& d, int r);

struct DeltaTerm {
  int sign = 1;
  int z = 0;
  std::vector<std::vector<ArrowDiagram>> factors;  // per label, product of circles
};
std::vector<DeltaTerm> delta_terms(const ArrowDiagram& d, int n);

}  // namespace vstr
