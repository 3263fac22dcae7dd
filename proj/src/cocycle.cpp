#include "qw/cocycle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qw/algebra.hpp"

namespace qw {

QScalar CocycleTable::at(int i, int j) const {
  auto it = values.find({i, j});
  return it == values.end() ? QScalar() : it->second;
}

bool CocycleTable::in_window(int i, int j) const {
  return std::abs(i) <= window && std::abs(j) <= window && std::abs(i + j) <= window;
}

std::optional<std::size_t> LinearSystem::column_of(IndexPair p) const {
  auto it = std::lower_bound(unknown_index.begin(), unknown_index.end(), p);
  if (it == unknown_index.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - unknown_index.begin());
}

std::vector<IndexPair> window_pairs(int N) {
  std::vector<IndexPair> out;
  for (int i = -N; i <= N; ++i)
    for (int j = -N; j <= N; ++j)
      if (std::abs(i + j) <= N) out.emplace_back(i, j);
  return out;
}

std::optional<std::vector<QScalar>> cocycle_row(int i, int j, int k, const LinearSystem& sys) {
  const auto a = sys.column_of({i, j + k});
  const auto b = sys.column_of({i + j, k});
  const auto c = sys.column_of({j, k + i});
  if (!a || !b || !c) return std::nullopt;
  std::vector<QScalar> row(sys.unknown_index.size());
  // Coincident slots accumulate into the same column.
  row[*a] += (q_power(i) + QScalar(1)) * (q_integer(j) - q_integer(k));
  row[*b] -= (q_power(k) + QScalar(1)) * (q_integer(i) - q_integer(j));
  row[*c] -= (q_power(j) + QScalar(1)) * (q_integer(i) - q_integer(k));
  return row;
}

LinearSystem build_cocycle_system(int N) {
  if (N < 2) throw std::invalid_argument("cocycle window must be at least 2");
  LinearSystem sys;
  sys.unknown_index = window_pairs(N);
  // Each slot bounds its indices by 2N, so this range covers every admissible triple.
  const int R = 2 * N;
  for (int i = -R; i <= R; ++i)
    for (int j = -R; j <= R; ++j)
      for (int k = -R; k <= R; ++k)
        if (auto row = cocycle_row(i, j, k, sys)) {
          sys.rows.push_back(std::move(*row));
          sys.row_triples.push_back({i, j, k});
        }
  return sys;
}

SolutionVector normalize_first_nonzero(SolutionVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const QScalar& x) { return !x.is_zero(); });
  if (it == v.end() || it->is_one()) return v;
  const QScalar inv = it->inverse();
  for (auto& x : v) x *= inv;
  return v;
}

SolutionBasis nullspace(const std::vector<std::vector<QScalar>>& rows, std::size_t columns) {
  // Reduced rows, each with pivot entry 1 and zeros in every other pivot column.
  std::vector<std::vector<QScalar>> reduced;
  std::vector<std::size_t> pivots;

  for (const auto& input : rows) {
    std::vector<QScalar> row = input;
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      const QScalar f = row[pivots[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < columns; ++c)
        if (!reduced[r][c].is_zero()) row[c] -= f * reduced[r][c];
    }
    std::size_t p = 0;
    while (p < columns && row[p].is_zero()) ++p;
    if (p == columns) continue;

    const QScalar inv = row[p].inverse();
    for (auto& x : row) x *= inv;
    for (auto& other : reduced) {
      const QScalar f = other[p];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < columns; ++c)
        if (!row[c].is_zero()) other[c] -= f * row[c];
    }
    reduced.push_back(std::move(row));
    pivots.push_back(p);
  }

  std::vector<bool> is_pivot(columns, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  SolutionBasis basis;
  for (std::size_t f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    SolutionVector v(columns);
    v[f] = QScalar(1);
    for (std::size_t r = 0; r < reduced.size(); ++r) v[pivots[r]] = -reduced[r][f];
    basis.push_back(normalize_first_nonzero(std::move(v)));
  }
  return basis;
}

SolutionBasis solve_homogeneous(const LinearSystem& sys) {
  return nullspace(sys.rows, sys.unknown_index.size());
}

bool satisfies(const LinearSystem& sys, const SolutionVector& v) {
  if (v.size() != sys.unknown_index.size()) return false;
  for (const auto& row : sys.rows) {
    QScalar acc;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero() && !v[c].is_zero()) acc += row[c] * v[c];
    if (!acc.is_zero()) return false;
  }
  return true;
}

namespace {

std::vector<IndexPair> gauge_pairs(int N, IndexPair pinned) {
  std::vector<IndexPair> out;
  for (int m = -N; m <= N; ++m)
    if (m != 0) out.emplace_back(0, m);
  out.push_back(pinned);
  return out;
}

std::size_t column_in_window(int N, IndexPair p) {
  const auto pairs = window_pairs(N);
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || *it != p)
    throw std::invalid_argument("pair (" + std::to_string(p.first) + ", " +
                                std::to_string(p.second) + ") is outside the window");
  return static_cast<std::size_t>(it - pairs.begin());
}

bool is_zero_vector(const SolutionVector& v) {
  return std::all_of(v.begin(), v.end(), [](const QScalar& x) { return x.is_zero(); });
}

}  // namespace

SolutionBasis quotient_by_coboundaries(const SolutionBasis& solutions, int N, IndexPair pinned) {
  SolutionBasis nonzero;
  for (const auto& v : solutions)
    if (!is_zero_vector(v)) nonzero.push_back(v);
  if (nonzero.empty()) return {};

  // Gauge values as linear functionals of the combination coefficients.
  std::vector<std::vector<QScalar>> gauge_rows;
  for (IndexPair p : gauge_pairs(N, pinned)) {
    const std::size_t col = column_in_window(N, p);
    std::vector<QScalar> row;
    for (const auto& v : nonzero) row.push_back(v[col]);
    gauge_rows.push_back(std::move(row));
  }

  SolutionBasis out;
  const std::size_t size = nonzero.front().size();
  for (const auto& coeffs : nullspace(gauge_rows, nonzero.size())) {
    SolutionVector v(size);
    for (std::size_t b = 0; b < nonzero.size(); ++b) {
      if (coeffs[b].is_zero()) continue;
      for (std::size_t c = 0; c < size; ++c) v[c] += coeffs[b] * nonzero[b][c];
    }
    if (!is_zero_vector(v)) out.push_back(std::move(v));
  }
  return out;
}

SolutionVector coboundary_vector(int N, const std::map<int, QScalar>& chi) {
  const auto pairs = window_pairs(N);
  SolutionVector v(pairs.size());
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [i, j] = pairs[c];
    auto it = chi.find(i + j);
    if (it != chi.end()) v[c] = (q_integer(i) - q_integer(j)) * it->second;
  }
  return v;
}

SolutionVector gauge_project(const SolutionVector& v, int N) {
  // psi_chi(0, m) = -[m] chi(W_m) and psi_chi(1, -1) = ([1] - [-1]) chi(W_0).
  std::map<int, QScalar> chi;
  for (int m = -N; m <= N; ++m)
    if (m != 0) chi[m] = -v[column_in_window(N, {0, m})] / q_integer(m);
  chi[0] = v[column_in_window(N, {1, -1})] / (q_integer(1) - q_integer(-1));
  const SolutionVector cob = coboundary_vector(N, chi);
  SolutionVector out = v;
  for (std::size_t c = 0; c < out.size(); ++c) out[c] -= cob[c];
  return out;
}

QScalar closed_form_lw(int i, int j) { return i + j == 0 ? central_coeff(i) : QScalar(); }

SolutionVector closed_form_vector(int N) {
  SolutionVector v;
  for (const auto& [i, j] : window_pairs(N)) v.push_back(closed_form_lw(i, j));
  return v;
}

ClosedFormComparison compare_closed_form(const SolutionBasis& normalized, int N) {
  if (normalized.size() != 1) return ClosedFormMismatch{normalized.size(), std::nullopt};
  const auto pairs = window_pairs(N);
  const SolutionVector& v = normalized.front();
  const SolutionVector closed = closed_form_vector(N);

  std::optional<QScalar> lambda;
  for (std::size_t c = 0; c < pairs.size() && !lambda; ++c)
    if (!closed[c].is_zero()) lambda = v[c] / closed[c];
  if (!lambda || lambda->is_zero()) {
    for (std::size_t c = 0; c < pairs.size(); ++c)
      if (!v[c].is_zero() || !closed[c].is_zero()) return ClosedFormMismatch{1, pairs[c]};
    return ClosedFormMismatch{1, std::nullopt};
  }
  for (std::size_t c = 0; c < pairs.size(); ++c)
    if (v[c] != *lambda * closed[c]) return ClosedFormMismatch{1, pairs[c]};
  return ClosedFormMatch{*lambda};
}

CocycleTable as_table(int N, const SolutionVector& v) {
  CocycleTable t;
  t.window = N;
  const auto pairs = window_pairs(N);
  for (std::size_t c = 0; c < pairs.size() && c < v.size(); ++c)
    if (!v[c].is_zero()) t.values[pairs[c]] = v[c];
  return t;
}

namespace {

// Closed-form cocycle on generators; psi(W, L) = -psi(L, W), zero on W-W and C.
QScalar psi_generators(const LieGenerator& x, const LieGenerator& y) {
  if (x.kind == LieKind::C || y.kind == LieKind::C) return {};
  if (x.index + y.index != 0) return {};
  if (x.kind == LieKind::L) return central_coeff(x.index);
  if (y.kind == LieKind::L) return -central_coeff(y.index);
  return {};
}

QScalar psi(const AlgebraElement& x, const AlgebraElement& y) {
  QScalar out;
  const auto ys = lie_components(y);
  for (const auto& [gx, cx] : lie_components(x))
    for (const auto& [gy, cy] : ys) out += cx * cy * psi_generators(gx, gy);
  return out;
}

bool cocycle_identity(const LieGenerator& u, const LieGenerator& v, const LieGenerator& w) {
  const AlgebraElement eu = u.as_element(), ev = v.as_element(), ew = w.as_element();
  QScalar sum = psi(f_q(u), bracket(ev, ew));
  sum += psi(f_q(w), bracket(eu, ev));
  sum += psi(f_q(v), bracket(ew, eu));
  return sum.is_zero();
}

}  // namespace

bool check_cocycle_identity_llw(int i, int j, int k) {
  return cocycle_identity(LieGenerator::L(i), LieGenerator::L(j), LieGenerator::W(k));
}

bool check_cocycle_identity_lll(int i, int j, int k) {
  return cocycle_identity(LieGenerator::L(i), LieGenerator::L(j), LieGenerator::L(k));
}

bool check_cocycle_identity(int i, int j, int k) {
  return check_cocycle_identity_llw(i, j, k) && check_cocycle_identity_lll(i, j, k);
}

bool CocycleSolveReport::passed() const {
  return residual_ok && gauge_fixed_dimension == 1 &&
         std::holds_alternative<ClosedFormMatch>(comparison);
}

CocycleSolveReport solve_cocycle(int N) {
  const LinearSystem sys = build_cocycle_system(N);
  const SolutionBasis basis = solve_homogeneous(sys);
  CocycleSolveReport r;
  r.window = N;
  r.unknown_order = sys.unknown_index;
  r.row_count = sys.rows.size();
  r.nullspace_dimension = basis.size();
  r.residual_ok = std::all_of(basis.begin(), basis.end(),
                              [&](const SolutionVector& v) { return satisfies(sys, v); });
  r.gauge_fixed = quotient_by_coboundaries(basis, N);
  r.gauge_fixed_dimension = r.gauge_fixed.size();
  r.comparison = compare_closed_form(r.gauge_fixed, N);
  return r;
}

}  // namespace qw
