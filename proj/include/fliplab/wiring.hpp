#pragma once

#include <string>
#include <vector>

#include "fliplab/signotope.hpp"

namespace fliplab {

// n wires enter at the left, wire i in row i counted from the top.
// word[t] = p means the wires in rows p and p+1 swap at step t.
// A full diagram has C(n,2) swaps, one per pair; the final top-to-bottom
// order is (n,...,1).
struct WiringDiagram {
  int n = 0;
  std::vector<int> word;  // positions, 1-based
};

struct WiringReport {
  bool ok = true;
  int step = -1;  // first offending step, 0-based
  std::string message;
};

WiringReport validate_wiring(const WiringDiagram& w);
void require_valid(const WiringDiagram& w);

// Sign convention: sigma(ijk) = + iff wire j lies below the swap position
// at the step where wires i and k cross ("above" = smaller row index).
Signotope wiring_to_signotope(const WiringDiagram& w);

// Inverse construction. Crossing order along the wires is derived from the
// signs: sigma(ijk) = + forces crossing(j,k) before crossing(i,k) before
// crossing(i,j); the minus sign reverses that chain. Any linear extension
// is drawable; ties are broken by lex-smallest crossing pair.
WiringDiagram signotope_to_wiring(const Signotope& s);

}
