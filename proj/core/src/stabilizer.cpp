#include "pgc/stabilizer.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <thread>

#include "pgc/serialize.hpp"

namespace pgc {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Partial {
  std::vector<std::pair<std::uint64_t, Matrix>> hits;
  std::uint64_t tested = 0;
  std::uint64_t pruned = 0;
};

// Splits [0, total) over workers, runs `work(range, partial)` on each and
// merges; hits are sorted by encoding so the result does not depend on the
// partition count.
template <class Work>
Partial run_partitioned(std::uint64_t total, unsigned workers, Work work) {
  if (workers == 0) workers = default_worker_count();
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(total, 1)));
  const auto ranges = partition_range(total, workers);
  std::vector<Partial> partials(ranges.size());
  if (ranges.size() == 1) {
    work(ranges[0], partials[0]);
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      threads.emplace_back([&, i] {
        try {
          work(ranges[i], partials[i]);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  Partial merged;
  for (auto& p : partials) {
    merged.tested += p.tested;
    merged.pruned += p.pruned;
    for (auto& h : p.hits) merged.hits.push_back(std::move(h));
  }
  std::sort(merged.hits.begin(), merged.hits.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return merged;
}

std::vector<Matrix> sorted_elements(Partial& partial) {
  std::vector<std::pair<std::uint64_t, Matrix>> keyed;
  keyed.reserve(partial.hits.size());
  for (auto& [code, m] : partial.hits) keyed.emplace_back(encode_matrix(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Matrix> out;
  out.reserve(keyed.size());
  for (auto& [code, m] : keyed) out.push_back(std::move(m));
  return out;
}

EnumerationOptions guard_of(const SearchOptions& o) { return {o.guard, o.force}; }

bool fixes(const Vector& b, const Matrix& delta) { return vec_mul(b, delta) == b; }

}  // namespace

Matrix StabCandidate::as_matrix() const {
  Matrix g(delta.field(), delta.rows() + 1, delta.rows() + 1);
  g(0, 0) = gamma % delta.field().p();
  g.place(delta, 1, 1);
  return g;
}

std::string to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::structured:
      return "structured";
    case SearchMode::brute:
      return "brute";
    case SearchMode::endomorphisms:
      return "endomorphisms";
  }
  return "unknown";
}

bool StabResult::is_trivial() const { return elements.size() == 1 && elements[0].is_identity(); }

bool StabResult::is_zero_and_identity() const {
  if (elements.size() != 2) return false;
  return (elements[0].is_zero() && elements[1].is_identity()) || (elements[1].is_zero() && elements[0].is_identity());
}

bool commutes_with_f(const Matrix& g, const FMatrix& f) {
  if (!g.is_square() || g.rows() != f.dim_v()) throw InvalidArgument("g must be (n+1) x (n+1)");
  return g * f.full() == f.full() * induced_exterior_map(g, f.basis());
}

CommuteTester::CommuteTester(const FMatrix& f)
    : f_(&f), dim_v_(f.dim_v()), dim_w_(f.dim_w()), terms_(f.dim_v()) {
  for (const auto& [j, k] : f.basis().pairs()) {
    pairs_.emplace_back(static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k));
  }
  for (std::size_t i = 0; i < dim_v_; ++i) {
    for (std::size_t w = 0; w < dim_w_; ++w) {
      const Scalar coef = f.full()(i, w);
      if (coef != 0) terms_[i].push_back({pairs_[w].first, pairs_[w].second, coef});
    }
  }
}

bool CommuteTester::operator()(const Matrix& g) const {
  constexpr std::size_t kMaxW = 128;
  if (dim_w_ > kMaxW) return commutes_with_f(g, *f_);
  const auto& field = f_->field();
  const std::uint64_t p = field.p();
  const Matrix& full = f_->full();
  std::array<std::uint64_t, kMaxW> lhs{};
  std::array<std::uint64_t, kMaxW> rhs{};
  for (std::size_t i = 0; i < dim_v_; ++i) {
    // lhs = (v_i g) f
    std::fill_n(lhs.begin(), dim_w_, 0);
    for (std::size_t l = 0; l < dim_v_; ++l) {
      const std::uint64_t x = g(i, l);
      if (x == 0) continue;
      const auto frow = full.row(l);
      for (std::size_t w = 0; w < dim_w_; ++w) lhs[w] += x * frow[w];
    }
    // rhs = (v_i f) g-hat = sum_{(j,k)} a_ijk (v_j g) ^ (v_k g)
    std::fill_n(rhs.begin(), dim_w_, 0);
    for (const auto& t : terms_[i]) {
      const auto gj = g.row(t.j);
      const auto gk = g.row(t.k);
      for (std::size_t w = 0; w < dim_w_; ++w) {
        const auto [s, u] = pairs_[w];
        const std::uint64_t plus = static_cast<std::uint64_t>(gj[s]) * gk[u];
        const std::uint64_t minus = static_cast<std::uint64_t>(gk[s]) * gj[u];
        const std::uint64_t wedge_w = (plus + (p * p - minus % (p * p))) % p;
        rhs[w] += t.coef * wedge_w;
      }
    }
    for (std::size_t w = 0; w < dim_w_; ++w) {
      if (lhs[w] % p != rhs[w] % p) return false;
    }
  }
  return true;
}

StabResult stabilizer_structured(const FMatrix& f, const SearchOptions& options) {
  const auto start = Clock::now();
  const auto& field = f.field();
  const std::size_t n = f.n();
  const std::uint64_t delta_space = matrix_space_size(field, n, n);
  check_guard(delta_space, guard_of(options), "structured search");
  const CommuteTester commutes(f);
  const Matrix& a = f.a();

  auto partial = run_partitioned(delta_space, options.workers, [&](EncodingRange range, Partial& out) {
    Matrix g(field, n + 1, n + 1);
    for_each_invertible(field, n, range, [&](const Matrix& delta, std::uint64_t) {
      g.place(delta, 1, 1);
      const bool fixes_b = !options.prune || fixes(f.b(), delta);
      const Matrix delta_a = options.prune ? delta * a : Matrix(field, 0, 0);
      const Matrix a_delta = options.prune ? a * delta : Matrix(field, 0, 0);
      for (Scalar gamma = 1; gamma < field.p(); ++gamma) {
        ++out.tested;
        if (options.prune && (!fixes_b || !(delta_a == a_delta.scaled(gamma)))) {
          ++out.pruned;
          continue;
        }
        g(0, 0) = gamma;
        if (commutes(g)) out.hits.emplace_back(0, g);
      }
    });
  });

  StabResult result;
  result.mode = SearchMode::structured;
  result.elements = sorted_elements(partial);
  result.space_size = (field.p() - 1) * gl_order(n, field);
  result.tested = partial.tested;
  result.pruned = partial.pruned;
  result.wall_ms = elapsed_ms(start);
  return result;
}

StabResult stabilizer_bruteforce(const FMatrix& f, const SearchOptions& options) {
  const auto start = Clock::now();
  const auto& field = f.field();
  const std::size_t k = f.dim_v();
  const std::uint64_t space = matrix_space_size(field, k, k);
  check_guard(space, guard_of(options), "brute-force stabilizer search");
  const CommuteTester commutes(f);

  auto partial = run_partitioned(space, options.workers, [&](EncodingRange range, Partial& out) {
    for_each_invertible(field, k, range, [&](const Matrix& g, std::uint64_t code) {
      ++out.tested;
      if (commutes(g)) out.hits.emplace_back(code, g);
    });
  });

  StabResult result;
  result.mode = SearchMode::brute;
  result.elements = sorted_elements(partial);
  result.space_size = gl_order(k, field);
  result.tested = partial.tested;
  result.wall_ms = elapsed_ms(start);
  return result;
}

StabResult commuting_endomorphisms(const FMatrix& f, const SearchOptions& options) {
  const auto start = Clock::now();
  const auto& field = f.field();
  const std::size_t k = f.dim_v();
  const std::uint64_t space = matrix_space_size(field, k, k);
  check_guard(space, guard_of(options), "endomorphism search");
  const CommuteTester commutes(f);

  auto partial = run_partitioned(space, options.workers, [&](EncodingRange range, Partial& out) {
    for_each_matrix(field, k, k, range, [&](const Matrix& g, std::uint64_t code) {
      ++out.tested;
      if (commutes(g)) out.hits.emplace_back(code, g);
    });
  });

  StabResult result;
  result.mode = SearchMode::endomorphisms;
  result.elements = sorted_elements(partial);
  result.space_size = space;
  result.tested = partial.tested;
  result.wall_ms = elapsed_ms(start);
  return result;
}

Report verify_proof_steps(const FMatrix& f, const SearchOptions& options) {
  Report report("proof steps");
  const auto& field = f.field();
  const std::size_t n = f.n();
  const Matrix& a = f.a();
  const std::uint64_t delta_space = matrix_space_size(field, n, n);
  check_guard(delta_space, guard_of(options), "proof-step audit");
  const std::uint64_t units = checked_pow(field.p(), n) - 1;

  // Solutions of Delta A = gamma A Delta over all Delta and gamma != 0.
  std::vector<std::pair<Scalar, Matrix>> invertible_solutions;
  std::vector<std::pair<Scalar, Matrix>> singular_solutions;
  std::uint64_t gamma_zero_nonzero = 0;
  nlohmann::json gamma_zero_witness;
  for_each_matrix(field, n, n, {0, delta_space}, [&](const Matrix& delta, std::uint64_t) {
    const Matrix delta_a = delta * a;
    const Matrix a_delta = a * delta;
    const bool invertible = is_invertible(delta);
    if (delta_a.is_zero() && !delta.is_zero()) {
      ++gamma_zero_nonzero;
      gamma_zero_witness = to_json(delta);
    }
    for (Scalar gamma = 1; gamma < field.p(); ++gamma) {
      if (!(delta_a == a_delta.scaled(gamma))) continue;
      (invertible ? invertible_solutions : singular_solutions).emplace_back(gamma, delta);
    }
  });

  {
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& [gamma, delta] : invertible_solutions) {
      if (gamma != 1) witness.push_back({{"gamma", gamma}, {"delta", to_json(delta)}});
    }
    report.add("P1", "Delta A Delta^-1 = gamma A with Delta invertible forces gamma = 1", witness.empty(),
               {{"solutions", invertible_solutions.size()}, {"offending", witness}});
  }

  {
    std::set<Matrix> centralizer;
    for (const auto& [gamma, delta] : invertible_solutions) {
      if (gamma == 1) centralizer.insert(delta);
    }
    std::set<Matrix> powers;
    Matrix acc = Matrix::identity(field, n);
    for (std::uint64_t k = 0; k < units; ++k) {
      powers.insert(acc);
      acc = acc * a;
    }
    const bool ok = centralizer == powers && centralizer.size() == units;
    report.add("P2", "invertible centralizer of A is {A^k : 0 <= k < p^n - 1}", ok,
               {{"centralizer_size", centralizer.size()}, {"powers", powers.size()}});
  }

  {
    nlohmann::json fixing = nlohmann::json::array();
    Matrix acc = Matrix::identity(field, n);
    for (std::uint64_t k = 0; k < units; ++k) {
      if (fixes(f.b(), acc)) fixing.push_back(k);
      acc = acc * a;
    }
    const bool ok = fixing.size() == 1 && fixing[0] == 0;
    report.add("P3", "the only power of A fixing b is A^0", ok, {{"fixing_exponents", fixing}});
  }

  {
    nlohmann::json witness = nlohmann::json::array();
    for (const auto& [gamma, delta] : singular_solutions) {
      if (!delta.is_zero()) witness.push_back({{"gamma", gamma}, {"delta", to_json(delta)}});
    }
    report.add("P4", "a singular Delta with Delta A = gamma A Delta, gamma != 0, is 0", witness.empty(), witness);
  }

  {
    const bool b_nonzero = std::any_of(f.b().begin(), f.b().end(), [](Scalar s) { return s != 0; });
    report.add("P5", "gamma = 0 forces Delta = 0, and Delta = 0 with gamma != 0 contradicts gamma b = 0",
               gamma_zero_nonzero == 0 && b_nonzero, gamma_zero_witness);
  }
  return report;
}

}  // namespace pgc
