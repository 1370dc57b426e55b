#include "matrix.hpp"

#include "spoly.hpp"

namespace gencomm {

namespace {

// Fraction-free elimination after Bareiss. Entries stay integral (every
// intermediate is a minor of the input), so rank-deficient columns are
// skipped without leaving the ring. Returns the pivot count; when `detp`
// is set the caller wants a full square elimination and *detp receives
// the signed last pivot (0 for singular input).
int bareiss(Matrix<Int> m, Int* detp) {
  const int rows = m.rows(), cols = m.cols();
  Int prev = 1;
  int sign = 1;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (!is_zero(m(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < cols; ++j) swap(m(piv, j), m(row, j));
      sign = -sign;
    }
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Int t = m(row, col) * m(i, j) - m(i, col) * m(row, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, col) = 0;
    }
    prev = m(row, col);
    ++row;
  }
  if (detp) {
    if (row < rows)
      *detp = 0;
    else
      *detp = sign > 0 ? prev : Int(-prev);
  }
  return row;
}

Matrix<Int> clear_denominators(const Matrix<Rational>& m, Int* scale_out) {
  Matrix<Int> out(m.rows(), m.cols(), Int(0));
  Int scale = 1;
  for (int i = 0; i < m.rows(); ++i) {
    Int rowden = 1;
    for (int j = 0; j < m.cols(); ++j) rowden = lcm(rowden, m(i, j).den());
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).num() * (rowden / m(i, j).den());
    scale *= rowden;
  }
  if (scale_out) *scale_out = scale;
  return out;
}

}  // namespace

int rank(const Matrix<Int>& m) { return bareiss(m, nullptr); }

int rank(const Matrix<Rational>& m) { return rank(clear_denominators(m, nullptr)); }

int rank(const Matrix<GfElem>& m_in) {
  Matrix<GfElem> m = m_in;
  const int rows = m.rows(), cols = m.cols();
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = col; j < cols; ++j) std::swap(m(piv, j), m(row, j));
    GfElem inv = m(row, col).inverse();
    for (int i = row + 1; i < rows; ++i) {
      if (m(i, col).is_zero()) continue;
      GfElem f = m(i, col) * inv;
      for (int j = col; j < cols; ++j) m(i, j) -= f * m(row, j);
    }
    ++row;
  }
  return row;
}

Int det(const Matrix<Int>& m) {
  if (!m.square()) throw std::invalid_argument("det: non-square matrix");
  if (m.rows() == 0) return 1;
  Int d;
  bareiss(m, &d);
  return d;
}

Rational det(const Matrix<Rational>& m) {
  if (!m.square()) throw std::invalid_argument("det: non-square matrix");
  if (m.rows() == 0) return Rational(1);
  Int scale;
  Matrix<Int> z = clear_denominators(m, &scale);
  return Rational(det(z), scale);
}

GfElem det(const Matrix<GfElem>& m_in) {
  if (!m_in.square()) throw std::invalid_argument("det: non-square matrix");
  Matrix<GfElem> m = m_in;
  const int n = m.rows();
  GfElem acc(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (!m(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return GfElem(0);
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(m(piv, j), m(col, j));
      acc = -acc;
    }
    acc *= m(col, col);
    GfElem inv = m(col, col).inverse();
    for (int i = col + 1; i < n; ++i) {
      if (m(i, col).is_zero()) continue;
      GfElem f = m(i, col) * inv;
      for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
    }
  }
  return acc;
}

Matrix<GfElem> reduce_mod(const Matrix<Int>& m) {
  return m.map([](const Int& x) { return GfElem::from_int(x); }, GfElem(0));
}

Matrix<Rational> to_rational(const Matrix<Int>& m) {
  return m.map([](const Int& x) { return Rational(x); }, Rational(0));
}

PolyRank rank_poly_exact(const Matrix<PolyQ>& m) {
  PolyRank out;
  out.value = bordered_minor_rank(m);
  return out;
}

PolyRank rank_poly_randomized(const Matrix<PolyQ>& m, int trials, std::uint64_t seed) {
  if (trials <= 0) throw std::invalid_argument("rank_poly_randomized: trials must be positive");
  if (m.rows() == 0 || m.cols() == 0) return {0, true, trials};
  const int k = m(0, 0).k(), n = m(0, 0).n();
  const size_t vars = static_cast<size_t>(k) * n;
  PolyRank out{0, true, trials};
  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(t));
    std::vector<GfElem> point(vars);
    for (auto& x : point) x = GfElem::from_residue(rng.below(GfElem::modulus()));
    Matrix<GfElem> num(m.rows(), m.cols(), GfElem(0));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) num(i, j) = eval_mod(m(i, j), point);
    out.value = std::max(out.value, rank(num));
  }
  return out;
}

nlohmann::json matrix_to_json(const Matrix<Int>& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).get_str());
  return nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Matrix<Int> matrix_from_json(const nlohmann::json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(rows) * cols)
    throw std::invalid_argument("matrix_from_json: entry count does not match shape");
  Matrix<Int> m(rows, cols, Int(0));
  size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int j2 = 0; j2 < cols; ++j2) {
      const auto& e = entries[idx++];
      if (e.is_string())
        m(i, j2) = Int(e.get<std::string>());
      else
        m(i, j2) = Int(static_cast<long>(e.get<long long>()));
    }
  return m;
}

}  // namespace gencomm
