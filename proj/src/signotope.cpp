#include "fliplab/signotope.hpp"

namespace fliplab {

Signotope all_plus(int n) {
  Signotope s;
  s.n = n;
  s.signs.assign(triple_count(n), +1);
  return s;
}

Signotope all_minus(int n) {
  Signotope s;
  s.n = n;
  s.signs.assign(triple_count(n), -1);
  return s;
}

bool packet_monotone(int8_t a, int8_t b, int8_t c, int8_t d) {
  int changes = (a != b) + (b != c) + (c != d);
  return changes <= 1;
}

SignotopeReport validate_signotope(const Signotope& s) {
  SignotopeReport r;
  if (s.n < 3) {
    r.code = SignotopeError::TooFewElements;
    return r;
  }
  if (static_cast<long long>(s.signs.size()) != binom(s.n, 3)) {
    r.code = SignotopeError::WrongLength;
    return r;
  }
  for (int8_t v : s.signs)
    if (v != 1 && v != -1) {
      r.code = SignotopeError::BadSignValue;
      return r;
    }
  for (int a = 1; a <= s.n; ++a)
    for (int b = a + 1; b <= s.n; ++b)
      for (int c = b + 1; c <= s.n; ++c)
        for (int d = c + 1; d <= s.n; ++d) {
          int8_t s1 = s.signs[triple_rank(s.n, a, b, c)];
          int8_t s2 = s.signs[triple_rank(s.n, a, b, d)];
          int8_t s3 = s.signs[triple_rank(s.n, a, c, d)];
          int8_t s4 = s.signs[triple_rank(s.n, b, c, d)];
          if (!packet_monotone(s1, s2, s3, s4)) {
            r.code = SignotopeError::PacketViolation;
            r.packet = Quad{a, b, c, d};
            return r;
          }
        }
  return r;
}

void require_valid(const Signotope& s) {
  SignotopeReport r = validate_signotope(s);
  if (!r.ok()) throw std::invalid_argument("invalid signotope");
}

namespace {

// Checks the packet of 4-set q after toggling the sign of triple `rank`.
bool packet_ok_after_toggle(const Signotope& s, const Quad& q, int rank) {
  int8_t v[4];
  auto ts = quad_triples(q);
  for (int m = 0; m < 4; ++m) {
    int r = triple_rank(s.n, ts[m]);
    v[m] = (r == rank) ? static_cast<int8_t>(-s.signs[r]) : s.signs[r];
  }
  return packet_monotone(v[0], v[1], v[2], v[3]);
}

}

bool is_flippable(const Signotope& s, int rank) {
  Triple t = triple_at(s.n, rank);
  for (int l = 1; l <= s.n; ++l) {
    if (l == t[0] || l == t[1] || l == t[2]) continue;
    Quad q{l, t[0], t[1], t[2]};
    // sort the 4-set
    for (int m = 3; m > 0 && q[m] < q[m - 1]; --m) std::swap(q[m], q[m - 1]);
    if (!packet_ok_after_toggle(s, q, rank)) return false;
  }
  return true;
}

std::vector<int> flippable_ranks(const Signotope& s) {
  std::vector<int> out;
  int m = triple_count(s.n);
  for (int r = 0; r < m; ++r)
    if (is_flippable(s, r)) out.push_back(r);
  return out;
}

std::vector<Triple> flippable_triples(const Signotope& s) {
  std::vector<Triple> out;
  for (int r : flippable_ranks(s)) out.push_back(triple_at(s.n, r));
  return out;
}

Signotope flip(const Signotope& s, int rank) {
  Triple t = triple_at(s.n, rank);
  for (int l = 1; l <= s.n; ++l) {
    if (l == t[0] || l == t[1] || l == t[2]) continue;
    Quad q{l, t[0], t[1], t[2]};
    for (int m = 3; m > 0 && q[m] < q[m - 1]; --m) std::swap(q[m], q[m - 1]);
    if (!packet_ok_after_toggle(s, q, rank))
      throw flip_error("flip would break a packet", q);
  }
  Signotope out = s;
  out.signs[rank] = -out.signs[rank];
  return out;
}

Signotope flip(const Signotope& s, const Triple& t) {
  return flip(s, triple_rank(s.n, t));
}

std::string encode_signs(const Signotope& s) {
  std::string bytes((s.signs.size() + 7) / 8, '\0');
  for (size_t r = 0; r < s.signs.size(); ++r)
    if (s.signs[r] > 0) bytes[r / 8] |= static_cast<char>(1 << (r % 8));
  return bytes;
}

Signotope decode_signs(int n, const std::string& bytes) {
  Signotope s;
  s.n = n;
  int m = triple_count(n);
  if (bytes.size() != static_cast<size_t>((m + 7) / 8))
    throw std::invalid_argument("decode_signs: wrong byte count");
  s.signs.resize(m);
  for (int r = 0; r < m; ++r)
    s.signs[r] = (bytes[r / 8] >> (r % 8)) & 1 ? +1 : -1;
  return s;
}

std::string sign_string(const Signotope& s) {
  std::string out(s.signs.size(), '?');
  for (size_t r = 0; r < s.signs.size(); ++r) out[r] = s.signs[r] > 0 ? '+' : '-';
  return out;
}

Signotope signotope_from_string(int n, const std::string& str) {
  Signotope s;
  s.n = n;
  if (static_cast<long long>(str.size()) != binom(n, 3))
    throw std::invalid_argument("signotope_from_string: wrong length");
  s.signs.reserve(str.size());
  for (char c : str) {
    if (c == '+')
      s.signs.push_back(+1);
    else if (c == '-')
      s.signs.push_back(-1);
    else
      throw std::invalid_argument("signotope_from_string: expected '+' or '-'");
  }
  return s;
}

}
