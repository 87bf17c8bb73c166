#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgc/construction.hpp"
#include "pgc/enumerate.hpp"
#include "pgc/report.hpp"

namespace pgc {

/// A block-diagonal candidate diag(gamma, Delta) on V = <v0> + U.
struct StabCandidate {
  Scalar gamma = 1;
  Matrix delta;

  Matrix as_matrix() const;
};

enum class SearchMode { structured, brute, endomorphisms };

std::string to_string(SearchMode mode);

struct StabResult {
  SearchMode mode = SearchMode::structured;
  /// Matrices g with g f = f g-hat, ascending by encoding.
  std::vector<Matrix> elements;
  /// Size of the candidate domain: (p-1)|GL(n,p)|, |GL(n+1,p)| or p^((n+1)^2).
  std::uint64_t space_size = 0;
  /// Candidates examined (equals space_size for a complete run).
  std::uint64_t tested = 0;
  /// Structured mode only: candidates rejected by the necessary conditions
  /// Delta A = gamma A Delta and b Delta = b before the full test.
  std::uint64_t pruned = 0;
  double wall_ms = 0.0;

  /// elements == {I}.
  bool is_trivial() const;
  /// elements == {0, I}.
  bool is_zero_and_identity() const;
};

inline constexpr std::uint64_t kDefaultSearchGuard = std::uint64_t{1} << 24;

struct SearchOptions {
  bool prune = true;
  std::uint64_t guard = kDefaultSearchGuard;
  bool force = false;
  /// 0 selects default_worker_count().
  unsigned workers = 0;
};

/// g full(f) == full(f) g-hat, evaluated with full matrix products.
/// g need not be invertible.
bool commutes_with_f(const Matrix& g, const FMatrix& f);

/// Same predicate as commutes_with_f, precompiled for one f: the f-matrix is
/// stored sparsely and the check stops at the first mismatching row. Used in
/// the exhaustive searches; safe to share between threads.
class CommuteTester {
 public:
  explicit CommuteTester(const FMatrix& f);
  bool operator()(const Matrix& g) const;

 private:
  struct Term {
    std::uint32_t j;
    std::uint32_t k;
    Scalar coef;
  };

  const FMatrix* f_;
  std::size_t dim_v_;
  std::size_t dim_w_;
  std::vector<std::vector<Term>> terms_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs_;
};

/// All diag(gamma, Delta), gamma != 0, Delta in GL(n, p), commuting with f.
StabResult stabilizer_structured(const FMatrix& f, const SearchOptions& options = {});

/// All of GL(n+1, p) commuting with f, with no shape assumption.
/// Throws GuardExceeded when p^((n+1)^2) exceeds options.guard without force.
StabResult stabilizer_bruteforce(const FMatrix& f, const SearchOptions& options = {});

/// All (n+1) x (n+1) matrices commuting with f, invertible or not.
StabResult commuting_endomorphisms(const FMatrix& f, const SearchOptions& options = {});

/// Enumerative audit of the steps that reduce the block-diagonal case to the
/// identity: gamma is forced to 1, the invertible centralizer of A is <A>,
/// only A^0 fixes b, and singular solutions of Delta A = gamma A Delta vanish.
Report verify_proof_steps(const FMatrix& f, const SearchOptions& options = {});

}  // namespace pgc
