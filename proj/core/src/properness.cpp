#include "cansub/properness.hpp"

#include <utility>

#include "cansub/curve_params.hpp"
#include "cansub/error.hpp"
#include "cansub/region.hpp"

namespace cansub {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

EliminationResult fraction_free_eliminate(const RationalMatrix& matrix) {
  const std::size_t rows = matrix.rows();
  const std::size_t cols = matrix.cols();

  // Scale each row by the lcm of its denominators; det picks up 1/prod(scales).
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  mpz_class scale_product = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), matrix(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = matrix(r, c).get_num() * (l / matrix(r, c).get_den());
    scale_product *= l;
  }

  mpz_class prev = 1;
  int sign = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap(a[pivot], a[rank]);
      sign = -sign;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]);
        mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }

  EliminationResult result;
  result.rank = rank;
  if (rows == cols && rank == rows) {
    Rational det(mpz_class(sign * a[rows - 1][cols - 1]), scale_product);
    det.canonicalize();
    result.determinant = det;
  }
  return result;
}

CircleSystem circle_matrix(std::int64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::kInvalidInput, std::to_string(p) + " is not prime");
  const auto size = static_cast<std::size_t>(p + 1);
  CircleSystem sys{p, RationalMatrix(size, size)};
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) sys.matrix(r, c) = r == c ? 0 : 1;
  }
  return sys;
}

InjectivityVerdict injectivity_verdict(const CircleSystem& sys) {
  EliminationResult elim = fraction_free_eliminate(sys.matrix);
  InjectivityVerdict verdict;
  verdict.determinant = elim.determinant;
  verdict.kernel_dimension = sys.matrix.cols() - elim.rank;
  verdict.invertible = sgn(elim.determinant) != 0;
  return verdict;
}

EliminationTranscript elimination_transcript(const CircleSystem& sys, std::size_t target) {
  if (target >= sys.matrix.rows()) throw Error(ErrorKind::kInvalidInput, "target row out of range");
  EliminationTranscript t{target, {}};
  t.steps.push_back({RowOperation::Kind::kSumAllRows, 0, Rational(1)});
  t.steps.push_back({RowOperation::Kind::kScale, 0, make_rational(1, sys.p)});
  t.steps.push_back({RowOperation::Kind::kSubtractRow, target, Rational(1)});
  return t;
}

std::vector<EliminationTranscript> elimination_transcripts(const CircleSystem& sys) {
  std::vector<EliminationTranscript> all;
  for (std::size_t c = 0; c < sys.matrix.rows(); ++c) all.push_back(elimination_transcript(sys, c));
  return all;
}

std::vector<Rational> replay_transcript(const CircleSystem& sys, const EliminationTranscript& transcript) {
  const auto& m = sys.matrix;
  std::vector<Rational> acc(m.cols());
  for (const auto& op : transcript.steps) {
    switch (op.kind) {
      case RowOperation::Kind::kSumAllRows:
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t c = 0; c < m.cols(); ++c) acc[c] += m(r, c);
        }
        break;
      case RowOperation::Kind::kScale:
        for (auto& x : acc) x *= op.factor;
        break;
      case RowOperation::Kind::kSubtractRow:
        if (op.row >= m.rows()) throw Error(ErrorKind::kInvalidInput, "transcript row out of range");
        for (std::size_t c = 0; c < m.cols(); ++c) acc[c] -= m(op.row, c);
        break;
    }
  }
  return acc;
}

ExtensionPlan extension_plan(std::int64_t p, const Rational& start_v) {
  SuccOrbit orbit = succ_orbit(p, start_v, supersingular_threshold(p));
  ExtensionPlan plan;
  plan.start_v = start_v;
  plan.steps = orbit.steps;
  plan.final_v = orbit.values.back();
  plan.orbit = std::move(orbit.values);
  return plan;
}

}  // namespace cansub
