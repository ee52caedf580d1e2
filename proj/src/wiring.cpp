#include "fliplab/wiring.hpp"

#include <cassert>
#include <numeric>
#include <queue>
#include <utility>

namespace fliplab {

namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

// Lex rank of the pair (i,j), 1 <= i < j <= n.
int pair_rank(int n, int i, int j) {
  return (i - 1) * n - i * (i - 1) / 2 + (j - i - 1);
}

}

WiringReport validate_wiring(const WiringDiagram& w) {
  WiringReport r;
  auto fail = [&r](int step, const std::string& msg) {
    r.ok = false;
    r.step = step;
    r.message = msg;
    return r;
  };
  if (w.n < 3) return fail(-1, "wire count must be at least 3");
  if (static_cast<int>(w.word.size()) != pair_count(w.n))
    return fail(-1, "word length must be C(n,2)");
  std::vector<int> perm(w.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<char> crossed(pair_count(w.n), 0);
  for (size_t t = 0; t < w.word.size(); ++t) {
    int p = w.word[t];
    if (p < 1 || p > w.n - 1) return fail(static_cast<int>(t), "swap position out of range");
    int a = perm[p - 1], b = perm[p];
    int id = pair_rank(w.n, std::min(a, b), std::max(a, b));
    if (crossed[id]) return fail(static_cast<int>(t), "pair swaps twice");
    crossed[id] = 1;
    std::swap(perm[p - 1], perm[p]);
  }
  for (int i = 0; i < w.n; ++i)
    if (perm[i] != w.n - i) return fail(-1, "final order is not reversed");
  return r;
}

void require_valid(const WiringDiagram& w) {
  WiringReport r = validate_wiring(w);
  if (!r.ok) throw std::invalid_argument("invalid wiring diagram: " + r.message);
}

Signotope wiring_to_signotope(const WiringDiagram& w) {
  require_valid(w);
  Signotope s;
  s.n = w.n;
  s.signs.assign(triple_count(w.n), 0);
  std::vector<int> perm(w.n), row(w.n + 1);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = 0; i < w.n; ++i) row[perm[i]] = i + 1;
  for (int p : w.word) {
    int a = perm[p - 1], b = perm[p];
    int lo = std::min(a, b), hi = std::max(a, b);
    for (int c = lo + 1; c < hi; ++c)
      s.signs[triple_rank(w.n, lo, c, hi)] = row[c] > p + 1 ? +1 : -1;
    std::swap(perm[p - 1], perm[p]);
    row[a] = row[b] = 0;
    row[perm[p - 1]] = p;
    row[perm[p]] = p + 1;
  }
  for (int8_t v : s.signs) assert(v != 0);
  assert(validate_signotope(s).ok());
  return s;
}

WiringDiagram signotope_to_wiring(const Signotope& s) {
  require_valid(s);
  int n = s.n;
  int m = pair_count(n);
  // Crossing order constraints along shared wires, one chain per triple.
  std::vector<std::vector<int>> succ(m);
  std::vector<int> indeg(m, 0);
  auto add_edge = [&](int u, int v) {
    succ[u].push_back(v);
    ++indeg[v];
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        int ij = pair_rank(n, i, j), ik = pair_rank(n, i, k), jk = pair_rank(n, j, k);
        if (s.signs[triple_rank(n, i, j, k)] > 0) {
          add_edge(jk, ik);
          add_edge(ik, ij);
        } else {
          add_edge(ij, ik);
          add_edge(ik, jk);
        }
      }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int u = 0; u < m; ++u)
    if (indeg[u] == 0) ready.push(u);
  std::vector<int> order;
  order.reserve(m);
  while (!ready.empty()) {
    int u = ready.top();
    ready.pop();
    order.push_back(u);
    for (int v : succ[u])
      if (--indeg[v] == 0) ready.push(v);
  }
  if (static_cast<int>(order.size()) != m)
    throw std::logic_error("crossing order has a cycle");
  // Recover (i,j) from pair rank by scanning; n is small.
  std::vector<std::pair<int, int>> pair_of(m);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pair_of[pair_rank(n, i, j)] = {i, j};
  WiringDiagram w;
  w.n = n;
  w.word.reserve(m);
  std::vector<int> perm(n), row(n + 1);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = 0; i < n; ++i) row[perm[i]] = i + 1;
  for (int id : order) {
    auto [a, b] = pair_of[id];
    int pa = row[a], pb = row[b];
    if (pa > pb) std::swap(pa, pb);
    if (pb != pa + 1) throw std::logic_error("crossing wires are not adjacent");
    w.word.push_back(pa);
    std::swap(perm[pa - 1], perm[pb - 1]);
    row[perm[pa - 1]] = pa;
    row[perm[pb - 1]] = pb;
  }
  return w;
}

}
