#include "convexmod/exactlp.hpp"

#include <ostream>

namespace convexmod {

namespace {

void dump(std::ostream& os, const std::vector<std::vector<Rational>>& t,
          const std::vector<std::size_t>& basis) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << (i + 1 == t.size() ? "obj" : "x" + std::to_string(basis[i])) << " |";
    for (auto& v : t[i]) os << ' ' << v;
    os << '\n';
  }
  os << '\n';
}

}  // namespace

std::optional<std::vector<Rational>> feasible(const FeasibilitySystem& sys, std::ostream* trace) {
  const std::size_t m = sys.target.size();
  const std::size_t n = sys.columns.size();
  for (auto& col : sys.columns)
    if (col.size() != m) throw Error("dimension mismatch in feasibility system");

  // Tableau rows 0..m-1 are constraints, row m is the phase-1 objective.
  // Columns 0..n-1 are the λ's, n..n+m-1 the artificials, n+m the rhs.
  const std::size_t width = n + m + 1;
  std::vector<std::vector<Rational>> t(m + 1, std::vector<Rational>(width, 0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    int sign = sgn(sys.target[i]) < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * sys.columns[j][i];
    t[i][n + i] = 1;
    t[i][n + m] = sign * sys.target[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < width; ++j) {
    if (j >= n && j < n + m) continue;
    for (std::size_t i = 0; i < m; ++i) t[m][j] -= t[i][j];
  }
  if (trace) dump(*trace, t, basis);

  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (sgn(t[m][j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // Unbounded direction cannot occur: the phase-1 objective is bounded below by 0.
    if (leave == m) break;

    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    if (trace) dump(*trace, t, basis);
  }

  if (sgn(t[m][n + m]) != 0) return std::nullopt;

  std::vector<Rational> x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];

  for (std::size_t i = 0; i < m; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < n; ++j) s += x[j] * sys.columns[j][i];
    if (s != sys.target[i]) throw Error("internal: simplex witness does not satisfy the system");
  }
  for (auto& v : x)
    if (sgn(v) < 0) throw Error("internal: negative simplex witness");
  return x;
}

}  // namespace convexmod
