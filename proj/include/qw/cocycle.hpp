#pragma once

// The L-W slice of a 2-cocycle on the window |i|, |j|, |i+j| <= N.
//
// Unknowns psi(i, j) = psi(L_i, W_j). One homogeneous row per triple (i, j, k)
// whose three slots are in-window:
//   (q^i+1)([j]-[k]) psi(i, j+k) - (q^k+1)([i]-[j]) psi(i+j, k)
//                                 - (q^j+1)([i]-[k]) psi(j, k+i) = 0
// Coboundaries: psi_chi(i, j) = ([i]-[j]) chi(W_{i+j}).
// Gauge: psi(0, m) = 0 for m != 0 and psi(1, -1) = 0.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qw/scalars.hpp"

namespace qw {

using IndexPair = std::pair<int, int>;
using SolutionVector = std::vector<QScalar>;
using SolutionBasis = std::vector<SolutionVector>;

/// psi(L_i, W_j) on a window. Missing in-window entries are zero.
struct CocycleTable {
  int window = 0;
  std::map<IndexPair, QScalar> values;

  QScalar at(int i, int j) const;
  bool in_window(int i, int j) const;
};

struct LinearSystem {
  std::vector<IndexPair> unknown_index;
  std::vector<std::vector<QScalar>> rows;
  std::vector<std::array<int, 3>> row_triples;  // (i, j, k) that produced each row

  std::optional<std::size_t> column_of(IndexPair p) const;
};

/// In-window pairs in lexicographic order.
std::vector<IndexPair> window_pairs(int N);

/// Throws std::invalid_argument for N < 2.
LinearSystem build_cocycle_system(int N);

/// Row of the functional equation for one triple, over the given unknowns.
/// Nullopt if some slot is outside the window.
std::optional<std::vector<QScalar>> cocycle_row(int i, int j, int k, const LinearSystem& sys);

/// Nullspace basis by exact Gauss-Jordan elimination. Rows are taken in order
/// and each pivots on its first nonzero column. Vectors are scaled so that
/// their first nonzero entry is 1.
SolutionBasis nullspace(const std::vector<std::vector<QScalar>>& rows, std::size_t columns);
SolutionBasis solve_homogeneous(const LinearSystem& sys);

/// Every row annihilates v exactly.
bool satisfies(const LinearSystem& sys, const SolutionVector& v);

/// Basis of the subspace of span(solutions) satisfying psi(0, m) = 0 (m != 0)
/// and psi(pinned) = 0. Combination coefficients, not the vectors, are
/// normalized, so an already gauge-fixed single vector comes back unchanged.
SolutionBasis quotient_by_coboundaries(const SolutionBasis& solutions, int N,
                                       IndexPair pinned = {1, -1});

/// psi_chi for chi(W_m) given on |m| <= N (absent entries are zero).
SolutionVector coboundary_vector(int N, const std::map<int, QScalar>& chi);

/// v - psi_chi for the unique chi that makes the result satisfy the gauge.
SolutionVector gauge_project(const SolutionVector& v, int N);

/// The closed form: central_coeff(i) when i + j = 0, zero otherwise.
QScalar closed_form_lw(int i, int j);
SolutionVector closed_form_vector(int N);

struct ClosedFormMatch {
  QScalar multiple;  // basis vector = multiple * closed form
};
struct ClosedFormMismatch {
  std::size_t dimension = 0;
  std::optional<IndexPair> first_difference;
};
using ClosedFormComparison = std::variant<ClosedFormMatch, ClosedFormMismatch>;

ClosedFormComparison compare_closed_form(const SolutionBasis& normalized, int N);

/// Scales v so its first nonzero entry is 1; zero vectors are returned as-is.
SolutionVector normalize_first_nonzero(SolutionVector v);

CocycleTable as_table(int N, const SolutionVector& v);

/// psi(f_q(u), [v, w]) + psi(f_q(w), [u, v]) + psi(f_q(v), [w, u]) = 0 for the
/// closed-form cocycle, on (L_i, L_j, W_k) and on (L_i, L_j, L_k).
bool check_cocycle_identity(int i, int j, int k);
bool check_cocycle_identity_llw(int i, int j, int k);
bool check_cocycle_identity_lll(int i, int j, int k);

/// Full solver pipeline for one window.
struct CocycleSolveReport {
  int window = 0;
  std::vector<IndexPair> unknown_order;
  std::size_t row_count = 0;
  std::size_t nullspace_dimension = 0;
  std::size_t gauge_fixed_dimension = 0;
  bool residual_ok = false;  // every nullspace vector annihilates every row
  ClosedFormComparison comparison;
  SolutionBasis gauge_fixed;

  bool passed() const;
};

CocycleSolveReport solve_cocycle(int N);

}  // namespace qw
