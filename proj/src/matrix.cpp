#include "bdcluster/matrix.hpp"

#include <algorithm>
#include <unordered_map>

namespace bdc {

PolyMatrix PolyMatrix::sub(const std::vector<int>& rows, const std::vector<int>& cols) const {
  PolyMatrix m(int(rows.size()), int(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(int(i), int(j)) = at(rows[i], cols[j]);
  return m;
}

PolyMatrix PolyMatrix::without(const std::vector<int>& drop_rows, const std::vector<int>& drop_cols) const {
  std::vector<int> rs, cs;
  for (int r = 0; r < rows_; ++r)
    if (std::find(drop_rows.begin(), drop_rows.end(), r) == drop_rows.end()) rs.push_back(r);
  for (int c = 0; c < cols_; ++c)
    if (std::find(drop_cols.begin(), drop_cols.end(), c) == drop_cols.end()) cs.push_back(c);
  return sub(rs, cs);
}

PolyMatrix PolyMatrix::swapped_rows(int r1, int r2) const {
  PolyMatrix m = *this;
  for (int c = 0; c < cols_; ++c) std::swap(m.at(r1, c), m.at(r2, c));
  return m;
}

std::vector<std::vector<mpq_class>> PolyMatrix::eval(const std::function<mpq_class(Variable)>& val) const {
  std::vector<std::vector<mpq_class>> r(rows_, std::vector<mpq_class>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i][j] = at(i, j).eval(val);
  return r;
}

PolyMatrix PolyMatrix::of_variables(const std::vector<int>& rows, const std::vector<int>& cols) {
  PolyMatrix m(int(rows.size()), int(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m.at(int(i), int(j)) = Polynomial::var(rows[i], cols[j]);
  return m;
}

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw NotSquare();
  int n = m.rows();
  if (n == 0) return Polynomial(1);
  if (n > 20) throw std::invalid_argument("determinant size too large for subset memoization");
  // memo[mask] = det of rows [n - popcount(mask), n) restricted to the columns in mask
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint32_t mask, int row) -> Polynomial {
    if (row == n) return Polynomial(1);
    if (row == n - 1) {
      int c = __builtin_ctz(mask);
      return m.at(row, c);
    }
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial s;
    int sign = 1;
    for (int c = 0; c < n; ++c) {
      if (!(mask >> c & 1u)) continue;
      const Polynomial& e = m.at(row, c);
      if (!e.is_zero()) {
        Polynomial minor = self(self, mask & ~(1u << c), row + 1);
        if (!minor.is_zero()) {
          if (sign > 0)
            s += e * minor;
          else
            s -= e * minor;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, s);
    return s;
  };
  return rec(rec, (n == 32 ? 0u : (1u << n)) - 1u, 0);
}

namespace {

void check_index(int i, int n) {
  if (i < 0 || i >= n) throw IndexOutOfRange("row or column index out of range");
}

}  // namespace

bool desnanot_jacobi_check(const PolyMatrix& a, int r1, int r2, int c1, int c2) {
  if (a.rows() != a.cols()) throw NotSquare();
  int n = a.rows();
  for (int i : {r1, r2, c1, c2}) check_index(i, n);
  if (n < 2 || r1 == r2 || c1 == c2) throw IndexOutOfRange("indices must be distinct in a matrix of size >= 2");
  Polynomial lhs = determinant(a) * determinant(a.without({r1, r2}, {c1, c2}));
  Polynomial rhs = determinant(a.without({r1}, {c1})) * determinant(a.without({r2}, {c2})) -
                   determinant(a.without({r2}, {c1})) * determinant(a.without({r1}, {c2}));
  // Row/column order of the deleted pairs fixes the sign convention.
  if ((r1 < r2) != (c1 < c2)) rhs = -rhs;
  return lhs == rhs;
}

bool desnanot_jacobi_check_tall(const PolyMatrix& b, int r1, int r2, int r3, int c1) {
  if (b.rows() != b.cols() + 1) throw NotSquare();
  for (int r : {r1, r2, r3}) check_index(r, b.rows());
  check_index(c1, b.cols());
  if (r1 == r2 || r1 == r3 || r2 == r3) throw IndexOutOfRange("row indices must be distinct");
  if (!(r1 < r2 && r2 < r3)) throw IndexOutOfRange("row indices must be increasing");
  Polynomial lhs = determinant(b.without({r1}, {})) * determinant(b.without({r2, r3}, {c1}));
  Polynomial rhs = determinant(b.without({r2}, {})) * determinant(b.without({r1, r3}, {c1})) -
                   determinant(b.without({r3}, {})) * determinant(b.without({r1, r2}, {c1}));
  return lhs == rhs;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& a, int ncols) {
  std::vector<int> piv;
  int r = 0;
  int nrows = int(a.size());
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int p = -1;
    for (int i = r; i < nrows; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[r], a[p]);
    mpq_class inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

mpq_class det_rational(QMatrix a) {
  int n = int(a.size());
  mpq_class d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[c][c];
      for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return d;
}

int rank(QMatrix a) {
  if (a.empty()) return 0;
  return int(rref(a, int(a[0].size())).size());
}

std::vector<QVector> null_space(const QMatrix& a, int ncols) {
  QMatrix m = a;
  std::vector<int> piv = rref(m, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<QVector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    QVector v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve_particular(const QMatrix& a, const QVector& b, int ncols) {
  QMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  std::vector<int> piv = rref(m, ncols);
  for (std::size_t i = piv.size(); i < m.size(); ++i)
    if (m[i][ncols] != 0) return std::nullopt;
  QVector v(ncols, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = m[i][ncols];
  return v;
}

}  // namespace bdc
