#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pls/solver.hpp"
#include "pls/square.hpp"
#include "pls/transform.hpp"

namespace pls {

// Constructive completion of P in PLS(2,3;n) with cycle type
// {(111,1),(00,k+2)}, k >= 3 (so n = 2k + 7 >= 13).
//
// The square is first moved by isotopy to the normal form
//   P(1,i) = P(i,1) = i,  P(2,2) = 3, P(2,3) = 1,
//   P(2,2i) = 2i+1, P(2,2i+1) = 2i  (i >= 2)
// and then replaced by its (row, symbol) conjugate, whose augmented forward
// diagonal carries only 1s and 2s. The corner entries s1 = cur(1,2) and
// s2 = cur(2,3) decide the case:
//   haggkvist  s1 = s2 = 3: the 3x3 corner is Latin; completed by the solver.
//   a          s1 != s2, 3 not among them.
//   b          s1 != s2, one of them 3; moved into case c by permuting the
//              first three rows, columns and the symbols 1,2 / 3,4.
//   c          s1 = s2 != 3.
enum class PipelineCase { haggkvist, a, b, c };

std::string_view to_string(PipelineCase c);

struct PipelineStage {
  std::string label;
  PartialLatinSquare square;
};

struct PipelineState {
  PartialLatinSquare original;
  PartialLatinSquare current;
  // Applied to `original` in order; undone in reverse at the end.
  std::vector<Transform> transforms;
  std::vector<PipelineStage> stages;

  PipelineCase split = PipelineCase::haggkvist;
  int s1 = 0, s2 = 0;
  std::vector<int> S;  // symbols of rows 4, 5, columns 1-3 of B1
  int q = 0;
  int x = 0;  // B3(q,3)
  int alpha = 0;
  bool swapped_b1 = false;
  bool swapped_b3 = false;
  bool swapped_f = false;

  void record(std::string label);
  // Applies t to `current` and remembers it.
  void push(const Transform& t, std::string label);
};

// The isotopy taking P (cycle type {(111,1),(00,m)}, any m) to the normal
// form above. No checks beyond what the construction itself needs.
Isotopy ct111_normal_isotopy(const PartialLatinSquare& p);

// Isotopy to the normal form followed by the (row, symbol) conjugate.
// Throws WrongCycleType, OrderTooSmall (k < 3).
PipelineState normalize(const PartialLatinSquare& p);

// Reads s1, s2 from the conjugated square and stores the case.
PipelineCase case_split(PipelineState& state);

// Each handler returns a completion of state.original.
PartialLatinSquare complete_haggkvist(PipelineState& state, const SolverOptions& options = {});
PartialLatinSquare complete_case_a(PipelineState& state, const SolverOptions& options = {});
// Moves a case-b state into case c (Throws PipelineDefect if no admissible
// rearrangement is found).
void reduce_case_b(PipelineState& state);
PartialLatinSquare complete_case_c(PipelineState& state, const SolverOptions& options = {});

struct PipelineResult {
  PartialLatinSquare completion;
  PipelineState state;
};

// normalize, case_split, then the matching handler. The result is checked to
// extend P (PipelineDefect otherwise).
PipelineResult complete_theorem32(const PartialLatinSquare& p, const SolverOptions& options = {});

// Stage label lines ("# label") each followed by the square in grid format
// and a blank line.
std::string trace_to_text(const PipelineState& state);

}  // namespace pls
