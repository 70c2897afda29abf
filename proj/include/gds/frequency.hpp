#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "gds/rational.hpp"

namespace gds {

/// One basis symbol of the exact layer. Symbols within a frequency are
/// jointly Q-linearly independent; independence_class records which
/// declaration group a symbol belongs to.
struct Symbol {
  std::string name;
  Real value;
  int independence_class = 0;
};

enum class FamilyTag { ordinary, linear, padic_example, qli, custom };

/// Sparse rational row over symbol indices, sorted by index.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// A strictly increasing nonnegative sequence lambda_1 <= ... <= lambda_N
/// with an exact rational representation of every entry over the symbol set
/// and a cached double value per entry. Immutable after construction.
class Frequency {
 public:
  Frequency(std::vector<Symbol> symbols, std::vector<SparseRow> rows,
            FamilyTag family);

  std::size_t size() const { return numeric_.size(); }
  /// 0-based accessors; external (spec-file, CSV) indices are 1-based.
  double lambda(std::size_t i) const { return numeric_[i]; }
  const SparseRow& row(std::size_t i) const { return rows_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }
  FamilyTag family() const { return family_; }

  /// Exact evaluation of row i at 50-digit precision.
  Real exact_value(std::size_t i) const;

 private:
  std::vector<Symbol> symbols_;
  std::vector<SparseRow> rows_;
  std::vector<double> numeric_;
  FamilyTag family_;
};

using FrequencyPtr = std::shared_ptr<const Frequency>;

/// lambda_n = log n over symbols log p_j, rows = prime exponent vectors.
FrequencyPtr make_ordinary(std::size_t N);

/// linear: lambda_n = n-1; padic_example: 1, (2^2+1)/2, (3^2+1)/3, ...;
/// qli: sqrt of the square-free integers 2, 3, 5, 6, ... each its own symbol.
FrequencyPtr make_family(FamilyTag tag, std::size_t N);

FrequencyPtr make_custom(std::vector<Symbol> symbols,
                         std::vector<SparseRow> rows);

/// Same rows, every symbol value multiplied by `factor` (lambda -> factor*lambda).
FrequencyPtr scale_frequency(const Frequency& freq, const Rational& factor);

struct LEstimate {
  double value = 0;
  double error = 0;
};

/// Finite-prefix estimate of limsup log(n)/lambda_n from tail-window maxima;
/// the band comes from the last two windows. n = 1 (lambda = 0) is skipped.
LEstimate estimate_L(const Frequency& freq);

struct GapWitness {
  double c_star = 0;        ///< min over the prefix of the scaled gap
  std::size_t argmin = 0;   ///< 1-based index attaining the minimum
  bool stabilized = false;  ///< running minimum unchanged over the last half
  std::size_t last_change = 0;
};

/// Finite-scale witness for Bohr's condition: the minimum of
/// (lambda_{n+1}-lambda_n) * e^{(l+delta) lambda_n} over n < N.
GapWitness check_BC(const Frequency& freq, double l, double delta,
                    std::size_t N);

/// Landau's condition: gap * e^{e^{delta lambda_n}}.
GapWitness check_LC(const Frequency& freq, double delta, std::size_t N);

}  // namespace gds
