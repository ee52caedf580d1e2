#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace fliplab {

// Labels are 1-based. A triple is strictly increasing (i < j < k).
using Triple = std::array<int, 3>;
using Quad = std::array<int, 4>;

long long binom(int n, int k);

inline int triple_count(int n) { return static_cast<int>(binom(n, 3)); }

// Lexicographic rank of (i,j,k) among the C(n,3) increasing triples of [n].
int triple_rank(int n, int i, int j, int k);
inline int triple_rank(int n, const Triple& t) { return triple_rank(n, t[0], t[1], t[2]); }

Triple triple_at(int n, int rank);

std::vector<Triple> all_triples(int n);
std::vector<Quad> all_quads(int n);

// The four triples of a 4-set {a<b<c<d} in lex order:
// (a,b,c), (a,b,d), (a,c,d), (b,c,d).
std::array<Triple, 4> quad_triples(const Quad& q);

// Position of x within the sorted triple: 0 = min, 1 = mid, 2 = max.
int role_in_triple(const Triple& t, int x);

}
