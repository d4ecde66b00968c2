#pragma once

#include "ordelab/presentation.hpp"
#include "ordelab/rational.hpp"

#include <cstddef>
#include <vector>

namespace ordelab {

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> data;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntMatrix identity(std::size_t n);

  Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

// Exact integer determinant (fraction-free elimination).
Integer determinant(IntMatrix m);

// Rows are relators, columns are generators, entries are exponent sums.
IntMatrix abelianization_matrix(const GroupPresentation& pres);

// d = u * a * v with u, v unimodular and d in Smith form. The checks behind
// transforms_verified recompute the product and both determinants from
// scratch rather than trusting the elimination bookkeeping.
struct SmithDecomposition {
  IntMatrix d, u, v;
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
  bool transforms_verified = false;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// A surjection onto the integers exists exactly when the relator matrix has
// rank below the generator count. When it does, generator_images lists where
// each generator goes; image_verified confirms directly that every relator
// maps to zero and the images generate all of the integers.
struct SurjectionCertificate {
  bool surjects = false;
  std::vector<Integer> diagonal;
  std::vector<Integer> generator_images;
  bool transforms_verified = false;
  bool image_verified = false;
};

SurjectionCertificate certify_onto_z(const GroupPresentation& pres);

}  // namespace ordelab
