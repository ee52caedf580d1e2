#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fliplab/triples.hpp"

namespace fliplab {

// Sign map on the lex-ordered triples of [n]. Entry values are +1 / -1.
// Valid iff every 4-set packet (the four triples of the 4-set, lex order)
// has at most one sign change.
struct Signotope {
  int n = 0;
  std::vector<int8_t> signs;
};

Signotope all_plus(int n);
Signotope all_minus(int n);

enum class SignotopeError {
  None,
  TooFewElements,   // n < 3
  WrongLength,      // signs.size() != C(n,3)
  BadSignValue,     // entry outside {+1,-1}
  PacketViolation,  // some 4-set packet has two sign changes
};

struct SignotopeReport {
  SignotopeError code = SignotopeError::None;
  Quad packet{0, 0, 0, 0};  // first violating 4-set in lex order, if any
  bool ok() const { return code == SignotopeError::None; }
};

SignotopeReport validate_signotope(const Signotope& s);
void require_valid(const Signotope& s);  // throws std::invalid_argument

// At most one sign change across the packet sequence.
bool packet_monotone(int8_t a, int8_t b, int8_t c, int8_t d);

struct flip_error : std::runtime_error {
  Quad packet;
  flip_error(const std::string& what, Quad q) : std::runtime_error(what), packet(q) {}
};

// True iff toggling the sign of triple `rank` keeps every packet monotone.
// Only the n-3 packets containing the triple are inspected.
bool is_flippable(const Signotope& s, int rank);

std::vector<int> flippable_ranks(const Signotope& s);      // ascending
std::vector<Triple> flippable_triples(const Signotope& s);  // lex order

Signotope flip(const Signotope& s, int rank);  // throws flip_error if not flippable
Signotope flip(const Signotope& s, const Triple& t);

// Compact byte encoding: bit r of the stream is 1 iff signs[r] == +1.
std::string encode_signs(const Signotope& s);
Signotope decode_signs(int n, const std::string& bytes);

// '+'/'-' string in lex triple order.
std::string sign_string(const Signotope& s);
Signotope signotope_from_string(int n, const std::string& str);

}
