#include "ordelab/certify.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ordelab {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

Integer determinant(IntMatrix m) {
  if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t n = m.rows;
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && m.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(m.at(k, c), m.at(r, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss step: the division is exact.
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
      }
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntMatrix abelianization_matrix(const GroupPresentation& pres) {
  IntMatrix m(pres.relators.size(), pres.generators.size());
  for (std::size_t r = 0; r < pres.relators.size(); ++r) {
    for (const Letter& l : pres.relators[r]) {
      m.at(r, l.gen) += l.inv ? -1 : 1;
    }
  }
  return m;
}

namespace {

bool is_smith(const IntMatrix& d) {
  for (std::size_t r = 0; r < d.rows; ++r) {
    for (std::size_t c = 0; c < d.cols; ++c) {
      if (r != c && d.at(r, c) != 0) return false;
    }
  }
  std::size_t n = std::min(d.rows, d.cols);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Integer& a = d.at(i, i);
    const Integer& b = d.at(i + 1, i + 1);
    if (a < 0) return false;
    if (a == 0 && b != 0) return false;
    if (a != 0 && b % a != 0) return false;
  }
  return true;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithDecomposition s;
  s.d = a;
  s.u = IntMatrix::identity(a.rows);
  s.v = IntMatrix::identity(a.cols);
  IntMatrix& d = s.d;
  IntMatrix& u = s.u;
  IntMatrix& v = s.v;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < d.cols; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < d.rows; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    // row dst -= q * row src
    for (std::size_t c = 0; c < d.cols; ++c) d.at(dst, c) -= q * d.at(src, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) -= q * u.at(src, c);
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
    for (std::size_t r = 0; r < d.rows; ++r) d.at(r, dst) -= q * d.at(r, src);
    for (std::size_t r = 0; r < v.rows; ++r) v.at(r, dst) -= q * v.at(r, src);
  };

  std::size_t t = 0;
  while (t < d.rows && t < d.cols) {
    std::size_t pr = t, pc = t;
    bool found = false;
    for (std::size_t r = t; r < d.rows; ++r) {
      for (std::size_t c = t; c < d.cols; ++c) {
        if (d.at(r, c) == 0) continue;
        if (!found || abs(d.at(r, c)) < abs(d.at(pr, pc))) {
          pr = r;
          pc = c;
          found = true;
        }
      }
    }
    if (!found) break;
    row_swap(t, pr);
    col_swap(t, pc);

    for (;;) {
      bool again = true;
      while (again) {
        again = false;
        for (std::size_t r = t + 1; r < d.rows; ++r) {
          if (d.at(r, t) == 0) continue;
          row_axpy(r, t, d.at(r, t) / d.at(t, t));
          if (d.at(r, t) != 0) {
            // remainder is a strictly smaller pivot
            row_swap(t, r);
            again = true;
          }
        }
        for (std::size_t c = t + 1; c < d.cols; ++c) {
          if (d.at(t, c) == 0) continue;
          col_axpy(c, t, d.at(t, c) / d.at(t, t));
          if (d.at(t, c) != 0) {
            col_swap(t, c);
            again = true;
          }
        }
      }
      bool divisible = true;
      for (std::size_t r = t + 1; r < d.rows && divisible; ++r) {
        for (std::size_t c = t + 1; c < d.cols; ++c) {
          if (d.at(r, c) % d.at(t, t) != 0) {
            row_axpy(t, r, Integer(-1));  // pull the bad row in and re-reduce
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (d.at(t, t) < 0) {
      for (std::size_t c = 0; c < d.cols; ++c) d.at(t, c) = -d.at(t, c);
      for (std::size_t c = 0; c < u.cols; ++c) u.at(t, c) = -u.at(t, c);
    }
    ++t;
  }

  s.rank = t;
  for (std::size_t i = 0; i < std::min(d.rows, d.cols); ++i) s.diagonal.push_back(d.at(i, i));

  Integer du = determinant(s.u);
  Integer dv = determinant(s.v);
  s.transforms_verified = multiply(multiply(s.u, a), s.v) == s.d &&
                          (du == 1 || du == -1) && (dv == 1 || dv == -1) && is_smith(s.d);
  return s;
}

SurjectionCertificate certify_onto_z(const GroupPresentation& pres) {
  IntMatrix a = abelianization_matrix(pres);
  SmithDecomposition s = smith_normal_form(a);

  SurjectionCertificate cert;
  cert.diagonal = s.diagonal;
  cert.transforms_verified = s.transforms_verified;
  cert.surjects = s.rank < pres.generators.size();
  if (!cert.surjects) return cert;

  // Column rank of v indexes the first free direction of the quotient;
  // columns of a unimodular matrix are primitive vectors.
  for (std::size_t i = 0; i < pres.generators.size(); ++i) {
    cert.generator_images.push_back(s.v.at(i, s.rank));
  }

  Integer g = 0;
  for (const Integer& x : cert.generator_images) g = gcd(g, x);
  bool relators_die = true;
  for (std::size_t r = 0; r < a.rows; ++r) {
    Integer sum = 0;
    for (std::size_t c = 0; c < a.cols; ++c) sum += a.at(r, c) * cert.generator_images[c];
    if (sum != 0) relators_die = false;
  }
  cert.image_verified = g == 1 && relators_die;
  return cert;
}

}  // namespace ordelab
