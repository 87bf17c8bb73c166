#include "pgc/pgroup.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "pgc/enumerate.hpp"
#include "pgc/serialize.hpp"

namespace pgc {

namespace {

void check_shape(const GroupElement& e, const Presentation& pres) {
  if (e.gen_exp.size() != pres.generator_count() || e.comm_exp.size() != pres.commutator_count()) {
    throw InvalidArgument("group element does not belong to this presentation");
  }
  for (auto a : e.gen_exp) {
    if (a >= pres.q()) throw InvalidArgument("generator exponent out of range");
  }
  for (auto c : e.comm_exp) {
    if (c >= pres.p()) throw InvalidArgument("commutator exponent out of range");
  }
}

std::uint64_t ipow(std::uint64_t base, std::size_t e) { return checked_pow(base, e); }

template <class Fn>
void for_each_element(const Presentation& pres, Fn&& fn) {
  const std::uint64_t total = pres.order();
  for (std::uint64_t code = 0; code < total; ++code) fn(decode_element(code, pres));
}

void require_guard(const Presentation& pres, std::uint64_t guard) {
  check_guard(pres.order(), {guard, false}, "group enumeration");
}

}  // namespace

Presentation::Presentation(Matrix table) : table_(std::move(table)), basis_(table_.rows()) {}

Presentation Presentation::from_table(Matrix power_table) {
  const std::size_t n1 = power_table.rows();
  if (power_table.cols() != choose2(n1)) {
    throw InvalidArgument("exponent table must be (n+1) x C(n+1,2)");
  }
  return Presentation(std::move(power_table));
}

std::uint64_t Presentation::order() const {
  const std::uint64_t gens = ipow(q(), generator_count());
  const std::uint64_t comms = ipow(p(), commutator_count());
  if (comms != 0 && gens > (std::uint64_t{1} << 62) / comms) throw InvalidArgument("group order overflows");
  return gens * comms;
}

Presentation build_presentation(const FMatrix& f, std::uint32_t p) {
  if (f.field().p() != p) {
    throw InvalidArgument("field mismatch: f is over GF(" + std::to_string(f.field().p()) + "), requested p = " +
                          std::to_string(p));
  }
  return Presentation::from_table(f.full());
}

GroupElement identity_element(const Presentation& pres) {
  return {std::vector<std::uint32_t>(pres.generator_count(), 0),
          std::vector<std::uint32_t>(pres.commutator_count(), 0)};
}

GroupElement generator(const Presentation& pres, std::size_t i) {
  auto e = identity_element(pres);
  e.gen_exp.at(i) = 1;
  return e;
}

GroupElement commutator_generator(const Presentation& pres, std::size_t j, std::size_t k) {
  auto e = identity_element(pres);
  e.comm_exp[pres.basis().index(j, k)] = 1;
  return e;
}

bool is_identity(const GroupElement& e) {
  return std::all_of(e.gen_exp.begin(), e.gen_exp.end(), [](auto v) { return v == 0; }) &&
         std::all_of(e.comm_exp.begin(), e.comm_exp.end(), [](auto v) { return v == 0; });
}

GroupElement multiply(const GroupElement& x, const GroupElement& y, const Presentation& pres) {
  check_shape(x, pres);
  check_shape(y, pres);
  const auto& f = pres.field();
  const std::uint32_t q = pres.q();
  const auto& basis = pres.basis();
  const auto& table = pres.power_table();
  GroupElement out = x;

  for (std::size_t w = 0; w < out.comm_exp.size(); ++w) {
    const auto [j, k] = basis.pair(w);
    // Moving y's x_j^{b_j} left past x's x_k^{a_k} leaves [x_k, x_j]^{a_k b_j}.
    const std::uint64_t correction = static_cast<std::uint64_t>(x.gen_exp[k]) * y.gen_exp[j];
    out.comm_exp[w] = f.sub(f.add(x.comm_exp[w], y.comm_exp[w]), f.reduce_u(correction));
  }
  for (std::size_t i = 0; i < out.gen_exp.size(); ++i) {
    std::uint32_t sum = x.gen_exp[i] + y.gen_exp[i];
    if (sum >= q) {
      sum -= q;
      const auto row = table.row(i);
      for (std::size_t w = 0; w < row.size(); ++w) out.comm_exp[w] = f.add(out.comm_exp[w], row[w]);
    }
    out.gen_exp[i] = sum;
  }
  return out;
}

GroupElement inverse(const GroupElement& e, const Presentation& pres) {
  check_shape(e, pres);
  const std::uint32_t q = pres.q();
  GroupElement candidate = identity_element(pres);
  for (std::size_t i = 0; i < e.gen_exp.size(); ++i) candidate.gen_exp[i] = (q - e.gen_exp[i]) % q;
  // e * x^{-a} is central; cancel it with its inverse.
  const auto t = multiply(e, candidate, pres);
  for (std::size_t w = 0; w < t.comm_exp.size(); ++w) candidate.comm_exp[w] = pres.field().neg(t.comm_exp[w]);
  return candidate;
}

GroupElement power(const GroupElement& e, std::int64_t k, const Presentation& pres) {
  GroupElement base = k < 0 ? inverse(e, pres) : e;
  auto exponent = static_cast<std::uint64_t>(k < 0 ? -k : k);
  GroupElement result = identity_element(pres);
  while (exponent > 0) {
    if (exponent & 1u) result = multiply(result, base, pres);
    base = multiply(base, base, pres);
    exponent >>= 1;
  }
  return result;
}

GroupElement commutator(const GroupElement& a, const GroupElement& b, const Presentation& pres) {
  return multiply(multiply(inverse(a, pres), inverse(b, pres), pres), multiply(a, b, pres), pres);
}

std::uint64_t encode_element(const GroupElement& e, const Presentation& pres) {
  check_shape(e, pres);
  std::uint64_t code = 0;
  for (auto g : e.gen_exp) code = code * pres.q() + g;
  for (auto c : e.comm_exp) code = code * pres.p() + c;
  return code;
}

GroupElement decode_element(std::uint64_t code, const Presentation& pres) {
  GroupElement e = identity_element(pres);
  for (std::size_t w = e.comm_exp.size(); w-- > 0;) {
    e.comm_exp[w] = static_cast<std::uint32_t>(code % pres.p());
    code /= pres.p();
  }
  for (std::size_t i = e.gen_exp.size(); i-- > 0;) {
    e.gen_exp[i] = static_cast<std::uint32_t>(code % pres.q());
    code /= pres.q();
  }
  if (code != 0) throw InvalidArgument("element code out of range");
  return e;
}

GroupElement random_element(const Presentation& pres, std::mt19937_64& rng) {
  GroupElement e = identity_element(pres);
  std::uniform_int_distribution<std::uint32_t> gen_dist(0, pres.q() - 1);
  std::uniform_int_distribution<std::uint32_t> comm_dist(0, pres.p() - 1);
  for (auto& g : e.gen_exp) g = gen_dist(rng);
  for (auto& c : e.comm_exp) c = comm_dist(rng);
  return e;
}

Matrix power_map_matrix(const Presentation& pres) {
  Matrix out(pres.field(), pres.generator_count(), pres.commutator_count());
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    const auto xq = power(generator(pres, i), pres.q(), pres);
    if (!std::all_of(xq.gen_exp.begin(), xq.gen_exp.end(), [](auto v) { return v == 0; })) {
      throw std::logic_error("x_i^q is not a product of commutators");
    }
    std::copy(xq.comm_exp.begin(), xq.comm_exp.end(), out.row(i).begin());
  }
  return out;
}

bool is_central(const GroupElement& e, const Presentation& pres) {
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    if (!is_identity(commutator(e, generator(pres, i), pres))) return false;
  }
  return true;
}

CenterInfo compute_center(const Presentation& pres, std::uint64_t guard) {
  require_guard(pres, guard);
  CenterInfo info;
  std::set<std::vector<std::uint32_t>> parts;
  info.elementary_abelian = true;
  for_each_element(pres, [&](const GroupElement& z) {
    if (!is_central(z, pres)) return;
    ++info.order;
    parts.insert(z.gen_exp);
    if (info.elementary_abelian && !is_identity(power(z, pres.p(), pres))) info.elementary_abelian = false;
  });
  info.gen_exp_parts.assign(parts.begin(), parts.end());
  return info;
}

std::uint64_t generated_subgroup_order(const std::vector<GroupElement>& gens, const Presentation& pres) {
  const std::uint64_t total = pres.order();
  std::vector<bool> seen(total, false);
  std::deque<GroupElement> frontier;
  auto id = identity_element(pres);
  seen[encode_element(id, pres)] = true;
  frontier.push_back(std::move(id));
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    const GroupElement h = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& s : gens) {
      auto next = multiply(h, s, pres);
      const auto code = encode_element(next, pres);
      if (seen[code]) continue;
      seen[code] = true;
      ++count;
      frontier.push_back(std::move(next));
    }
  }
  return count;
}

StructureReport structure_report(const Presentation& pres, std::uint64_t guard) {
  require_guard(pres, guard);
  const std::uint32_t p = pres.p();
  const std::uint32_t q = pres.q();
  const std::size_t n1 = pres.generator_count();
  const std::size_t c = pres.commutator_count();

  StructureReport r;
  r.p = p;
  r.q = q;

  std::set<std::uint64_t> commutator_values, p_powers, q_powers;
  std::vector<GroupElement> commutator_gens, frattini_gens, agemo_gens;
  auto add_unique = [&](std::set<std::uint64_t>& seen, std::vector<GroupElement>& gens, GroupElement e) {
    if (seen.insert(encode_element(e, pres)).second) gens.push_back(std::move(e));
  };
  for_each_element(pres, [&](const GroupElement& g) {
    ++r.order_P;
    for (std::size_t i = 0; i < n1; ++i) add_unique(commutator_values, commutator_gens, commutator(g, generator(pres, i), pres));
    add_unique(p_powers, frattini_gens, power(g, p, pres));
    add_unique(q_powers, agemo_gens, power(g, q, pres));
  });
  // Phi(P) = P^p P'.
  frattini_gens.insert(frattini_gens.end(), commutator_gens.begin(), commutator_gens.end());

  r.order_derived = generated_subgroup_order(commutator_gens, pres);
  r.order_abelianization = r.order_P / r.order_derived;
  r.order_center = compute_center(pres, guard).order;
  r.order_frattini = generated_subgroup_order(frattini_gens, pres);
  r.order_agemo = generated_subgroup_order(agemo_gens, pres);

  const std::size_t image_dim = rank(pres.power_table());
  const bool two = p == 2;
  const std::size_t top_exponent = two ? 2 * n1 : n1;  // |P/P'| = q^(n+1)
  r.checks = {
      {"|P|", r.order_P, checked_pow(p, top_exponent + c)},
      {"|P'|", r.order_derived, checked_pow(p, c)},
      {"|P/P'|", r.order_abelianization, checked_pow(p, top_exponent)},
      {"|Z(P)|", r.order_center, checked_pow(p, two ? n1 + c : c)},
      {"|Phi(P)|", r.order_frattini, checked_pow(p, two ? n1 + c : c)},
      {two ? "|P^4|" : "|P^p|", r.order_agemo, checked_pow(p, image_dim)},
  };
  r.all_match_paper = std::all_of(r.checks.begin(), r.checks.end(), [](const OrderCheck& o) { return o.matches(); });
  return r;
}

bool inverse_image_obstruction(const Presentation& pres, const GroupElement& a) {
  if (pres.p() == 2) throw InvalidArgument("the inverse obstruction argument requires odd p");
  if (is_central(a, pres)) return false;
  if (is_central(power(a, 2, pres), pres)) {
    throw std::logic_error("a is not central but a^2 is; impossible for odd p");
  }
  return true;
}

std::string export_text(const Presentation& pres) {
  std::ostringstream os;
  os << pres.p() << ' ' << pres.q() << ' ' << pres.generator_count() << '\n';
  for (std::size_t i = 0; i < pres.generator_count(); ++i) {
    os << i << ':';
    for (auto a : pres.power_table().row(i)) os << ' ' << a;
    os << '\n';
  }
  return os.str();
}

nlohmann::json export_json(const Presentation& pres) {
  return {{"p", pres.p()},
          {"q", pres.q()},
          {"generators", pres.generator_count()},
          {"commutator_order", pres.commutator_count()},
          {"basis", [&] {
             auto labels = nlohmann::json::array();
             for (std::size_t w = 0; w < pres.basis().size(); ++w) labels.push_back(pres.basis().label(w));
             return labels;
           }()},
          {"power_table", to_json(pres.power_table())},
          {"commutator_power_relations", pres.commutator_power_relations_explicit() ? "explicit" : "implied"},
          {"relations", export_relations(pres)}};
}

std::vector<std::string> export_relations(const Presentation& pres) {
  std::vector<std::string> out;
  const std::size_t n1 = pres.generator_count();
  const auto& basis = pres.basis();
  auto comm = [&](std::size_t w) {
    const auto [j, k] = basis.pair(w);
    return "[x" + std::to_string(j) + ",x" + std::to_string(k) + "]";
  };
  for (std::size_t i = 0; i < n1; ++i) {
    std::string rhs;
    const auto row = pres.power_table().row(i);
    for (std::size_t w = 0; w < row.size(); ++w) {
      if (row[w] == 0) continue;
      if (!rhs.empty()) rhs += "*";
      rhs += comm(w);
      if (row[w] != 1) rhs += "^" + std::to_string(row[w]);
    }
    out.push_back("x" + std::to_string(i) + "^" + std::to_string(pres.q()) + " = " + (rhs.empty() ? "1" : rhs));
  }
  for (std::size_t w = 0; w < basis.size(); ++w) out.push_back(comm(w) + "^" + std::to_string(pres.p()) + " = 1");
  for (std::size_t w = 0; w < basis.size(); ++w) {
    for (std::size_t k = 0; k < n1; ++k) out.push_back("[" + comm(w) + ",x" + std::to_string(k) + "] = 1");
  }
  return out;
}

nlohmann::json to_json(const GroupElement& e) { return {{"gen_exp", e.gen_exp}, {"comm_exp", e.comm_exp}}; }

nlohmann::json to_json(const StructureReport& r) {
  auto quantities = nlohmann::json::array();
  for (const auto& c : r.checks) {
    quantities.push_back(
        {{"name", c.name}, {"computed", c.computed}, {"expected", c.expected}, {"matches_paper", c.matches()}});
  }
  return {{"p", r.p},
          {"q", r.q},
          {"order_P", r.order_P},
          {"order_derived", r.order_derived},
          {"order_abelianization", r.order_abelianization},
          {"order_center", r.order_center},
          {"order_frattini", r.order_frattini},
          {"order_agemo", r.order_agemo},
          {"quantities", quantities},
          {"all_match_paper", r.all_match_paper}};
}

nlohmann::json to_json(const CenterInfo& c) {
  return {{"order", c.order}, {"gen_exp_parts", c.gen_exp_parts}, {"elementary_abelian", c.elementary_abelian}};
}

}  // namespace pgc
