#include "fliplab/triples.hpp"

#include <stdexcept>

namespace fliplab {

long long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int triple_rank(int n, int i, int j, int k) {
  if (!(1 <= i && i < j && j < k && k <= n))
    throw std::invalid_argument("triple_rank: labels must satisfy 1 <= i < j < k <= n");
  long long before_i = binom(n, 3) - binom(n - i + 1, 3);
  long long before_j = binom(n - i, 2) - binom(n - j + 1, 2);
  return static_cast<int>(before_i + before_j + (k - j - 1));
}

Triple triple_at(int n, int rank) {
  if (rank < 0 || rank >= triple_count(n))
    throw std::invalid_argument("triple_at: rank out of range");
  int i = 1;
  while (rank >= binom(n - i, 2)) {
    rank -= static_cast<int>(binom(n - i, 2));
    ++i;
  }
  int j = i + 1;
  while (rank >= n - j) {
    rank -= n - j;
    ++j;
  }
  return Triple{i, j, j + 1 + rank};
}

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  out.reserve(triple_count(n));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) out.push_back(Triple{i, j, k});
  return out;
}

std::vector<Quad> all_quads(int n) {
  std::vector<Quad> out;
  out.reserve(static_cast<size_t>(binom(n, 4)));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) out.push_back(Quad{a, b, c, d});
  return out;
}

std::array<Triple, 4> quad_triples(const Quad& q) {
  return {Triple{q[0], q[1], q[2]}, Triple{q[0], q[1], q[3]},
          Triple{q[0], q[2], q[3]}, Triple{q[1], q[2], q[3]}};
}

int role_in_triple(const Triple& t, int x) {
  if (t[0] == x) return 0;
  if (t[1] == x) return 1;
  if (t[2] == x) return 2;
  throw std::invalid_argument("role_in_triple: label not in triple");
}

}
