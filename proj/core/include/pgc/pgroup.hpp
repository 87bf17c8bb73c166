#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pgc/construction.hpp"
#include "pgc/exterior.hpp"
#include "pgc/matrix.hpp"

namespace pgc {

/// Class-2 power-commutator presentation on generators x_0..x_n:
///
///   [[x_i, x_j], x_k] = 1,
///   x_i^q = prod_{j<k} [x_j, x_k]^{a_ijk},
///   [x_i, x_j]^p = 1,
///
/// with q = p for odd p and q = 4 for p = 2. The exponent table a_ijk is the
/// f-matrix; for odd p the last family follows from the first two.
class Presentation {
 public:
  /// Presentation with an arbitrary (dim_v x dim_v(dim_v-1)/2) exponent table.
  static Presentation from_table(Matrix power_table);

  const PrimeField& field() const noexcept { return table_.field(); }
  std::uint32_t p() const noexcept { return table_.field().p(); }
  std::uint32_t q() const noexcept { return p() == 2 ? 4 : p(); }
  std::size_t generator_count() const noexcept { return table_.rows(); }
  std::size_t commutator_count() const noexcept { return table_.cols(); }
  const Matrix& power_table() const noexcept { return table_; }
  const ExtBasis& basis() const noexcept { return basis_; }

  /// [x_i, x_j]^p = 1 is an independent relation only when p = 2.
  bool commutator_power_relations_explicit() const noexcept { return p() == 2; }

  /// q^(n+1) p^C(n+1,2); throws InvalidArgument on overflow.
  std::uint64_t order() const;

 private:
  explicit Presentation(Matrix table);

  Matrix table_;
  ExtBasis basis_;
};

/// The presentation attached to f; p must be the characteristic of f.
Presentation build_presentation(const FMatrix& f, std::uint32_t p);

/// Normal form x_0^{a_0} ... x_n^{a_n} prod_{j<k} [x_j, x_k]^{c_jk} with
/// 0 <= a_i < q and 0 <= c_jk < p.
struct GroupElement {
  std::vector<std::uint32_t> gen_exp;
  std::vector<std::uint32_t> comm_exp;

  bool operator==(const GroupElement&) const = default;
};

GroupElement identity_element(const Presentation& pres);
GroupElement generator(const Presentation& pres, std::size_t i);
/// The element [x_j, x_k], j < k.
GroupElement commutator_generator(const Presentation& pres, std::size_t j, std::size_t k);
bool is_identity(const GroupElement& e);

/// Product by collection, with [u, v] = u^-1 v^-1 u v so that u v = v u [u, v].
/// Throws InvalidArgument if an element does not fit the presentation.
GroupElement multiply(const GroupElement& x, const GroupElement& y, const Presentation& pres);
GroupElement inverse(const GroupElement& e, const Presentation& pres);
/// e^k by repeated squaring; negative k uses the inverse.
GroupElement power(const GroupElement& e, std::int64_t k, const Presentation& pres);
/// a^-1 b^-1 a b.
GroupElement commutator(const GroupElement& a, const GroupElement& b, const Presentation& pres);

/// Mixed-radix index of e in [0, |P|): generator digits (base q) first, then
/// commutator digits (base p).
std::uint64_t encode_element(const GroupElement& e, const Presentation& pres);
GroupElement decode_element(std::uint64_t code, const Presentation& pres);

GroupElement random_element(const Presentation& pres, std::mt19937_64& rng);

/// Row i holds the commutator exponents of x_i^q. Equals the exponent table
/// whenever the arithmetic is right.
Matrix power_map_matrix(const Presentation& pres);

inline constexpr std::uint64_t kDefaultGroupGuard = std::uint64_t{1} << 20;

/// Central iff it commutes with every generator.
bool is_central(const GroupElement& e, const Presentation& pres);

struct CenterInfo {
  std::uint64_t order = 0;
  /// Distinct generator-exponent parts of central elements, ascending.
  std::vector<std::vector<std::uint32_t>> gen_exp_parts;
  /// Every central element z has z^p = 1.
  bool elementary_abelian = false;
};

/// Z(P) by enumerating the whole group.
CenterInfo compute_center(const Presentation& pres, std::uint64_t guard = kDefaultGroupGuard);

/// Order of the subgroup generated by `gens`, by closure.
std::uint64_t generated_subgroup_order(const std::vector<GroupElement>& gens, const Presentation& pres);

struct OrderCheck {
  std::string name;
  std::uint64_t computed = 0;
  std::uint64_t expected = 0;
  bool matches() const noexcept { return computed == expected; }
};

struct StructureReport {
  std::uint32_t p = 0;
  std::uint32_t q = 0;
  std::uint64_t order_P = 0;
  std::uint64_t order_derived = 0;
  std::uint64_t order_abelianization = 0;
  std::uint64_t order_center = 0;
  std::uint64_t order_frattini = 0;
  /// |P^p| for odd p, |P^4| for p = 2.
  std::uint64_t order_agemo = 0;
  /// Each computed order next to its closed form.
  std::vector<OrderCheck> checks;
  bool all_match_paper = false;
};

/// Enumerates P and computes the orders of P, P', P/P', Z(P), Phi(P) and
/// the q-th power subgroup, comparing each with its closed form in terms of
/// n+1, C(n+1,2) and the rank of the exponent table.
StructureReport structure_report(const Presentation& pres, std::uint64_t guard = kDefaultGroupGuard);

/// Odd p only. True iff a is not central: since every automorphism of these
/// groups is central, an image of a has the form a z with z central, and
/// a z = a^-1 would put a^2, hence a, in Z(P). Also checks a^2 is not central
/// in that case and throws std::logic_error if it is.
bool inverse_image_obstruction(const Presentation& pres, const GroupElement& a);

/// "p q n+1" followed by one line "i: a_i01 a_i02 ..." per generator.
std::string export_text(const Presentation& pres);
nlohmann::json export_json(const Presentation& pres);
/// Relation strings such as "x0^3 = [x0,x1]*[x1,x2]" for use in external
/// computer-algebra systems.
std::vector<std::string> export_relations(const Presentation& pres);

nlohmann::json to_json(const GroupElement& e);
nlohmann::json to_json(const StructureReport& r);
nlohmann::json to_json(const CenterInfo& c);

}  // namespace pgc
