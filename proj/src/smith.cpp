#include "torelli/smith.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <utility>

#include "torelli/errors.hpp"

namespace torelli {

namespace {

// Reduction state. Every row operation on work is mirrored on U (rows) and on
// U_inv (inverse operation on columns); likewise for columns with V / V_inv.
struct Reducer {
  IntMatrix work;
  IntMatrix U;
  IntMatrix U_inv;
  IntMatrix V;
  IntMatrix V_inv;

  explicit Reducer(const IntMatrix& m)
      : work(m),
        U(IntMatrix::identity(m.rows())),
        U_inv(IntMatrix::identity(m.rows())),
        V(IntMatrix::identity(m.cols())),
        V_inv(IntMatrix::identity(m.cols())) {}

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    work.swap_rows(a, b);
    U.swap_rows(a, b);
    U_inv.swap_cols(a, b);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    work.swap_cols(a, b);
    V.swap_cols(a, b);
    V_inv.swap_rows(a, b);
  }
  // row[t] += c * row[s]
  void add_row(std::size_t t, std::size_t s, const Integer& c) {
    if (c == 0) return;
    work.add_row_multiple(t, s, c);
    U.add_row_multiple(t, s, c);
    U_inv.add_col_multiple(s, t, -c);
  }
  // col[t] += c * col[s]
  void add_col(std::size_t t, std::size_t s, const Integer& c) {
    if (c == 0) return;
    work.add_col_multiple(t, s, c);
    V.add_col_multiple(t, s, c);
    V_inv.add_row_multiple(s, t, -c);
  }
  void negate_row(std::size_t i) {
    work.negate_row(i);
    U.negate_row(i);
    U_inv.negate_col(i);
  }

  // Smallest nonzero |entry| in the lower-right block starting at (t, t).
  std::optional<std::pair<std::size_t, std::size_t>> smallest_pivot(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Integer best_abs;
    for (std::size_t i = t; i < work.rows(); ++i)
      for (std::size_t j = t; j < work.cols(); ++j) {
        const Integer& x = work(i, j);
        if (x == 0) continue;
        Integer ax = abs(x);
        if (!best || ax < best_abs) {
          best = {i, j};
          best_abs = ax;
          if (best_abs == 1) return best;
        }
      }
    return best;
  }

  // Clears row t and column t outside the pivot. Returns false when a smaller
  // remainder appeared and the pivot had to be replaced.
  bool clear_cross(std::size_t t) {
    const Integer pivot = work(t, t);
    for (std::size_t i = t + 1; i < work.rows(); ++i) {
      if (work(i, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), work(i, t).get_mpz_t(), pivot.get_mpz_t());
      add_row(i, t, -q);
      if (work(i, t) != 0) {
        swap_rows(t, i);
        return false;
      }
    }
    for (std::size_t j = t + 1; j < work.cols(); ++j) {
      if (work(t, j) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), work(t, j).get_mpz_t(), pivot.get_mpz_t());
      add_col(j, t, -q);
      if (work(t, j) != 0) {
        swap_cols(t, j);
        return false;
      }
    }
    return true;
  }

  // Finds an entry of the remaining block not divisible by the pivot and folds
  // its row into row t. Returns false when the pivot already divides everything.
  bool enforce_divisibility(std::size_t t) {
    const Integer& pivot = work(t, t);
    for (std::size_t i = t + 1; i < work.rows(); ++i)
      for (std::size_t j = t + 1; j < work.cols(); ++j)
        if (!mpz_divisible_p(work(i, j).get_mpz_t(), pivot.get_mpz_t())) {
          add_row(t, i, 1);
          return true;
        }
    return false;
  }
};

}  // namespace

IntVector SmithDecomposition::diagonal() const {
  const std::size_t k = std::min(S.rows(), S.cols());
  IntVector d(k);
  for (std::size_t i = 0; i < k; ++i) d[i] = S(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  Reducer r(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    auto pos = r.smallest_pivot(t);
    if (!pos) break;
    r.swap_rows(t, pos->first);
    r.swap_cols(t, pos->second);
    for (;;) {
      if (!r.clear_cross(t)) continue;
      if (!r.enforce_divisibility(t)) break;
    }
    if (r.work(t, t) < 0) r.negate_row(t);
  }
  SmithDecomposition out;
  out.source = m;
  out.S = std::move(r.work);
  out.U = std::move(r.U);
  out.U_inv = std::move(r.U_inv);
  out.V = std::move(r.V);
  out.V_inv = std::move(r.V_inv);
  out.rank = t;
  return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!m.is_square()) throw NotUnimodular("unimodular_inverse: matrix is not square");
  const auto snf = smith_normal_form(m);
  if (snf.rank != m.rows()) throw NotUnimodular("unimodular_inverse: matrix is singular");
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) != 1) throw NotUnimodular("unimodular_inverse: |det| != 1");
  // U m V = I  =>  m^{-1} = V U
  return snf.V * snf.U;
}

IntMatrix kernel_matrix(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  std::vector<std::size_t> cols;
  for (std::size_t j = snf.rank; j < m.cols(); ++j) cols.push_back(j);
  return snf.V.select_cols(cols);
}

std::vector<IntVector> kernel_basis(const IntMatrix& m) { return kernel_matrix(m).columns(); }

IntMatrix complete_to_basis(const IntVector& v) {
  if (v.empty()) throw InvalidInput("complete_to_basis: empty vector");
  if (content(v) != 1) throw NonPrimitive("complete_to_basis: vector " + to_string(v) + " is not primitive");
  // U v V = e_1 with V = (+-1), hence v = +-U^{-1} e_1.
  const auto snf = smith_normal_form(IntMatrix::from_columns({v}));
  IntMatrix basis = snf.U_inv;
  if (snf.V(0, 0) < 0) basis.negate_col(0);
  return basis;
}

IntMatrix FGAbelianGroup::free_projection() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = torsion_.size(); i < to_normal_.rows(); ++i) rows.push_back(i);
  return to_normal_.select_rows(rows);
}

IntMatrix FGAbelianGroup::free_lift() const {
  std::vector<std::size_t> cols;
  for (std::size_t j = torsion_.size(); j < from_normal_.cols(); ++j) cols.push_back(j);
  return from_normal_.select_cols(cols);
}

IntVector FGAbelianGroup::normalize(const IntVector& x) const {
  IntVector y = to_normal_ * x;
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), torsion_[i].get_mpz_t());
    y[i] = r;
  }
  return y;
}

IntVector FGAbelianGroup::free_coordinates(const IntVector& x) const { return free_projection() * x; }

std::string FGAbelianGroup::describe() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank_ > 0) {
    os << "Z";
    if (free_rank_ > 1) os << '^' << free_rank_;
    first = false;
  }
  for (const auto& d : torsion_) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

FGAbelianGroup cokernel(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  FGAbelianGroup g;
  g.presentation_ = m;
  std::vector<std::size_t> torsion_rows;
  for (std::size_t i = 0; i < snf.rank; ++i)
    if (snf.S(i, i) != 1) {
      torsion_rows.push_back(i);
      g.torsion_.push_back(snf.S(i, i));
    }
  std::vector<std::size_t> keep = torsion_rows;
  for (std::size_t i = snf.rank; i < m.rows(); ++i) keep.push_back(i);
  g.free_rank_ = m.rows() - snf.rank;
  g.to_normal_ = snf.U.select_rows(keep);
  g.from_normal_ = snf.U_inv.select_cols(keep);
  return g;
}

}  // namespace torelli
