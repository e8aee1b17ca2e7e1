#include "grpcalc/exact_linalg.hpp"

#include <algorithm>
#include <utility>

#include "grpcalc/errors.hpp"

namespace grpcalc {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InputError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

void IntegerMatrix::append_rows(const IntegerMatrix& other) {
  if (rows_ == 0 && cols_ == 0) {
    *this = other;
    return;
  }
  if (other.cols_ != cols_) throw InputError("append_rows: column mismatch");
  data_.insert(data_.end(), other.data_.begin(), other.data_.end());
  rows_ += other.rows_;
}

void IntegerMatrix::set_block(std::size_t r, std::size_t c, const IntegerMatrix& block) {
  if (r + block.rows_ > rows_ || c + block.cols_ > cols_) throw InputError("set_block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r + i, c + j) = block(i, j);
}

IntegerMatrix& IntegerMatrix::operator+=(const IntegerMatrix& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix addition: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
  return *this;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix r = a;
  r += b;
  return r;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix subtraction: shape mismatch");
  IntegerMatrix r = a;
  for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
  return r;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: shape mismatch");
  IntegerMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) r(i, j) += x * b(k, j);
    }
  return r;
}

IntegerMatrix operator*(const BigInt& s, const IntegerMatrix& a) {
  IntegerMatrix r = a;
  for (auto& x : r.data_) x *= s;
  return r;
}

IntegerMatrix RationalMatrix::clear_denominators() const {
  IntegerMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    BigInt l = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      const BigInt& d = (*this)(r, c).get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& q = (*this)(r, c);
      m(r, c) = q.get_num() * (l / q.get_den());
    }
  }
  return m;
}

// ----------------------------------------------------------------------------

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

void swap_rows(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  auto ri = a.row(i);
  auto rj = a.row(j);
  for (std::size_t c = 0; c < a.cols(); ++c) mpz_swap(ri[c].get_mpz_t(), rj[c].get_mpz_t());
}

void swap_cols(IntegerMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) mpz_swap(a(r, i).get_mpz_t(), a(r, j).get_mpz_t());
}

// row_i -= q * row_t, over columns [from, cols)
void sub_row(IntegerMatrix& a, std::size_t i, std::size_t t, const BigInt& q, std::size_t from = 0) {
  for (std::size_t c = from; c < a.cols(); ++c)
    if (a(t, c) != 0) mpz_submul(a(i, c).get_mpz_t(), q.get_mpz_t(), a(t, c).get_mpz_t());
}

void sub_col(IntegerMatrix& a, std::size_t j, std::size_t t, const BigInt& q, std::size_t from = 0) {
  for (std::size_t r = from; r < a.rows(); ++r)
    if (a(r, t) != 0) mpz_submul(a(r, j).get_mpz_t(), q.get_mpz_t(), a(r, t).get_mpz_t());
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  SmithForm out;
  BigInt q;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero absolute value in the trailing block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (pr == rows || cmpabs(a(i, j), a(pr, pc)) < 0)) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        sub_row(a, i, t, q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        sub_col(a, j, t, q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot survived; bring it to the pivot
        std::size_t br = t, bc = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (a(i, t) != 0 && cmpabs(a(i, t), a(br, bc)) < 0) {
            br = i;
            bc = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(t, j) != 0 && cmpabs(a(t, j), a(br, bc)) < 0) {
            br = t;
            bc = j;
          }
        swap_rows(a, t, br);
        swap_cols(a, t, bc);
        continue;
      }
      // pivot must divide the trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.diagonal.push_back(abs(a(t, t)));
  }
  out.rank = out.diagonal.size();
  for (std::size_t i = 1; i < out.diagonal.size(); ++i)
    if (!mpz_divisible_p(out.diagonal[i].get_mpz_t(), out.diagonal[i - 1].get_mpz_t()))
      throw InvariantViolation("Smith form divisibility chain broken");
  return out;
}

std::size_t rank_rational(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  BigInt prev = 1;
  BigInt tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    swap_rows(a, rank, piv);
    const BigInt& p = a(rank, c);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const bool zero_lead = a(i, c) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a(i,j) = (p * a(i,j) - a(i,c) * a(rank,j)) / prev
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a(i, j).get_mpz_t());
        if (!zero_lead && a(rank, j) != 0)
          mpz_submul(tmp.get_mpz_t(), a(i, c).get_mpz_t(), a(rank, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(const RationalMatrix& m) { return rank_rational(m.clear_denominators()); }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // p prime: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

namespace {

void require_small_prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    throw InputError("expected a prime below 2^31, got " + std::to_string(p));
}

}  // namespace

std::size_t rank_mod_p(const IntegerMatrix& m, std::uint64_t p) {
  require_small_prime(p);
  ModPBasis basis(m.cols(), p);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<std::uint64_t> v(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
      v[c] = mpz_fdiv_ui(m(r, c).get_mpz_t(), static_cast<unsigned long>(p));
    basis.insert(std::move(v));
  }
  return basis.rank();
}

bool row_space_membership(const IntegerMatrix& basis, std::span<const BigInt> v) {
  if (v.size() != basis.cols() && !(basis.rows() == 0 && basis.cols() == 0))
    throw InputError("row_space_membership: dimension mismatch");
  IntegerMatrix vrow(1, v.size());
  for (std::size_t c = 0; c < v.size(); ++c) vrow(0, c) = v[c];
  if (vrow.is_zero()) return true;
  IntegerMatrix stacked = basis;
  stacked.append_rows(vrow);
  return rank_rational(stacked) == rank_rational(basis);
}

IntegerMatrix hermite_basis(const IntegerMatrix& generators) {
  IntegerMatrix a = generators;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  BigInt q;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (best == rows || cmpabs(a(i, c), a(best, c)) < 0)) best = i;
      if (best == rows) break;
      swap_rows(a, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
        sub_row(a, i, r, q, c);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      if (a(i, c) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), a(i, c).get_mpz_t(), a(r, c).get_mpz_t());
      sub_row(a, i, r, q, c);
    }
    ++r;
  }
  IntegerMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

IntegerMatrix lattice_coordinates(const IntegerMatrix& basis, const IntegerMatrix& sub) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t c = 0;
    while (c < basis.cols() && basis(i, c) == 0) ++c;
    pivots.push_back(c);
  }
  IntegerMatrix coords(sub.rows(), basis.rows());
  BigInt q;
  for (std::size_t s = 0; s < sub.rows(); ++s) {
    std::vector<BigInt> v(sub.row(s).begin(), sub.row(s).end());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
      const BigInt& piv = basis(i, pivots[i]);
      if (!mpz_divisible_p(v[pivots[i]].get_mpz_t(), piv.get_mpz_t()))
        throw InvariantViolation("lattice_coordinates: vector not in lattice");
      mpz_divexact(q.get_mpz_t(), v[pivots[i]].get_mpz_t(), piv.get_mpz_t());
      coords(s, i) = q;
      if (q != 0)
        for (std::size_t c = pivots[i]; c < basis.cols(); ++c) v[c] -= q * basis(i, c);
    }
    if (!std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; }))
      throw InvariantViolation("lattice_coordinates: vector not in span");
  }
  return coords;
}

ModPBasis::ModPBasis(std::size_t dimension, std::uint64_t p)
    : dimension_(dimension), p_(p), pivot_row_(dimension, -1) {}

bool ModPBasis::insert(std::vector<std::uint64_t> v) {
  if (v.size() != dimension_) throw InputError("ModPBasis: dimension mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::uint64_t f = v[pivots_[k]];
    if (f == 0) continue;
    const auto& row = rows_[k];
    for (std::size_t c = pivots_[k]; c < dimension_; ++c)
      if (row[c]) v[c] = (v[c] + (p_ - f) * row[c]) % p_;
  }
  std::size_t lead = 0;
  while (lead < dimension_ && v[lead] == 0) ++lead;
  if (lead == dimension_) return false;
  std::uint64_t inv = mod_inverse(v[lead], p_);
  for (std::size_t c = lead; c < dimension_; ++c) v[c] = v[c] * inv % p_;
  pivot_row_[lead] = static_cast<std::ptrdiff_t>(rows_.size());
  pivots_.push_back(lead);
  rows_.push_back(std::move(v));
  return true;
}

}  // namespace grpcalc
