#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cansub/valext.hpp"

namespace cansub {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> row(std::size_t r) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

struct EliminationResult {
  Rational determinant;  // zero when the matrix is not square
  std::size_t rank = 0;
};

/// Fraction-free (Bareiss) elimination with row pivoting. Rows are first
/// cleared of denominators so every intermediate entry is an integer.
EliminationResult fraction_free_eliminate(const RationalMatrix& matrix);

/// The homogeneous system over the p+1 subgroups of order p of a curve with
/// h >= p/(p+1): row C reads sum_{D != C} x_D = 0, so the matrix is J - I.
struct CircleSystem {
  std::int64_t p = 2;
  RationalMatrix matrix{0, 0};
};

/// Throws kInvalidInput unless p is prime.
CircleSystem circle_matrix(std::int64_t p);

struct InjectivityVerdict {
  bool invertible = false;
  Rational determinant;
  /// Dimension of the solution space of the homogeneous system.
  std::size_t kernel_dimension = 0;
};

InjectivityVerdict injectivity_verdict(const CircleSystem& sys);

struct RowOperation {
  enum class Kind { kSumAllRows, kScale, kSubtractRow };
  Kind kind = Kind::kSumAllRows;
  std::size_t row = 0;  // kSubtractRow only
  Rational factor{1};   // kScale only
};

/// A linear combination of the system's rows that isolates one unknown.
/// Replaying it on the rows gives the unit vector e_target, so x_target = 0.
struct EliminationTranscript {
  std::size_t target = 0;
  std::vector<RowOperation> steps;
};

/// sum all rows, scale by 1/p, subtract row `target`.
EliminationTranscript elimination_transcript(const CircleSystem& sys, std::size_t target);
std::vector<EliminationTranscript> elimination_transcripts(const CircleSystem& sys);

/// Runs the transcript on an accumulator row that starts at zero.
std::vector<Rational> replay_transcript(const CircleSystem& sys, const EliminationTranscript& transcript);

struct ExtensionPlan {
  Rational start_v;
  int steps = 0;
  Rational final_v;
  std::vector<Rational> orbit;
};

/// How many applications of U_p carry sections over [0, start_v] out to
/// [0, p/(p+1)]. Throws kOutOfRange unless 0 < start_v < 1.
ExtensionPlan extension_plan(std::int64_t p, const Rational& start_v);

}  // namespace cansub
