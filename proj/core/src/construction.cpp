#include "pgc/construction.hpp"

#include <algorithm>
#include <set>

#include "pgc/serialize.hpp"
#include "pgc/subspace.hpp"

namespace pgc {

namespace {

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

nlohmann::json basis_json(const Subspace& s) { return to_json(s.basis()); }

}  // namespace

FMatrix::FMatrix(PrimeField field, std::size_t n, Vector b, Vector c, Matrix a, Matrix full)
    : field_(field),
      n_(n),
      b_(std::move(b)),
      c_(std::move(c)),
      a_(std::move(a)),
      full_(std::move(full)),
      basis_(n + 1) {}

FMatrix FMatrix::assemble(PrimeField field, Vector b, Vector c, Matrix a) {
  const std::size_t n = a.rows();
  if (!a.is_square()) throw InvalidArgument("A must be square");
  if (!(a.field() == field)) throw InvalidArgument("A is over a different field");
  if (b.size() != n) throw InvalidArgument("b must have length n = " + std::to_string(n));
  if (c.size() != choose2(n)) throw InvalidArgument("c must have length n(n-1)/2 = " + std::to_string(choose2(n)));
  for (auto& x : b) x %= field.p();
  for (auto& x : c) x %= field.p();
  const std::size_t dim_w = choose2(n + 1);
  Matrix full(field, n + 1, dim_w);
  // Row 0 = (b | c); rows 1..n = (A | 0). The v0 block occupies columns 0..n-1.
  for (std::size_t j = 0; j < n; ++j) full(0, j) = b[j];
  for (std::size_t j = 0; j < c.size(); ++j) full(0, n + j) = c[j];
  full.place(a, 1, 0);
  return FMatrix(field, n, std::move(b), std::move(c), std::move(a), std::move(full));
}

FMatrix build_f_matrix(const PrimeField& field, std::size_t n, Vector b, Vector c, const Polynomial& m) {
  if (n < 3) throw InvalidArgument("construction requires n+1 >= 4 (got n = " + std::to_string(n) + ")");
  if (b.size() != n) throw InvalidArgument("b must have length n = " + std::to_string(n));
  if (c.size() != choose2(n)) throw InvalidArgument("c must have length n(n-1)/2 = " + std::to_string(choose2(n)));
  for (auto& x : b) x %= field.p();
  for (auto& x : c) x %= field.p();
  if (is_zero_vector(b)) throw InvalidArgument("Assumption violated: b must be nonzero");
  if (is_zero_vector(c)) throw InvalidArgument("Assumption violated: c must be nonzero");
  if (!(m.field() == field)) throw InvalidArgument("polynomial is over a different field");
  if (m.degree() != static_cast<int>(n)) throw InvalidArgument("polynomial must have degree n = " + std::to_string(n));
  if (!m.is_monic()) throw InvalidArgument("polynomial must be monic: " + m.to_string());
  if (!poly_is_irreducible(m) || !poly_is_primitive(m)) {
    throw InvalidArgument("Assumption violated: " + m.to_string() + " is not primitive");
  }
  return FMatrix::assemble(field, std::move(b), std::move(c), companion_matrix(m));
}

Vector unit_vector(std::size_t length, std::size_t position) {
  Vector v(length, 0);
  if (position < length) v[position] = 1;
  return v;
}

FMatrix build_default_f(const PrimeField& field, std::size_t n) {
  if (n < 3) throw InvalidArgument("construction requires n+1 >= 4 (got n = " + std::to_string(n) + ")");
  return build_f_matrix(field, n, unit_vector(n), unit_vector(choose2(n)), find_primitive_polynomial(field, n));
}

Report check_companion_properties(const Matrix& a, const Polynomial& m) {
  Report report("companion matrix A");
  const auto& f = a.field();
  const auto n = static_cast<std::size_t>(std::max(m.degree(), 0));
  if (!a.is_square() || a.rows() != n || !(m.field() == f)) {
    report.add("A0", "A is n x n over the field of m", false, to_json(a));
    return report;
  }
  const std::uint64_t field_size = checked_pow(f.p(), n);
  const std::uint64_t group_order = field_size - 1;
  const auto id = Matrix::identity(f, n);

  // (1) characteristic polynomial and eigenvalues.
  {
    const auto chi = characteristic_polynomial(a);
    bool ok = chi == m && m.is_monic() && poly_is_irreducible(m);
    // The conjugates x, x^p, ..., x^(p^(n-1)) mod m are roots of m and pairwise distinct.
    nlohmann::json roots = nlohmann::json::array();
    if (ok) {
      const Polynomial x = Polynomial::monomial(f, 1);
      std::vector<Polynomial> conj;
      Polynomial r = x % m;
      for (std::size_t i = 0; i < n; ++i) {
        // m(r) mod m by Horner.
        Polynomial value(f);
        for (std::size_t k = m.coeffs().size(); k-- > 0;) value = (value * r + Polynomial::constant(f, m.coefficient(k))) % m;
        ok = ok && value.is_zero();
        for (const auto& prev : conj) ok = ok && !(prev == r);
        conj.push_back(r);
        roots.push_back(to_json(r));
        r = powmod(r, f.p(), m);
      }
    }
    nlohmann::json witness = {{"charpoly", to_json(chi)}, {"conjugates", roots}};
    report.add("A1", "char poly of A equals m; its roots are the n distinct conjugates alpha^(p^i)", ok, witness);
  }

  // (2) multiplicative order by power iteration.
  std::vector<Matrix> powers;  // A^0 .. A^(order-1)
  {
    Matrix acc = id;
    std::uint64_t order = 0;
    do {
      powers.push_back(acc);
      acc = acc * a;
      ++order;
    } while (!acc.is_identity() && order <= group_order);
    const bool ok = order == group_order && acc.is_identity();
    report.add("A2", "A has multiplicative order p^n - 1 = " + std::to_string(group_order), ok,
               {{"order", order}});
  }

  // (3) {0} u {A^i} has p^n elements and is closed under addition.
  {
    std::set<Matrix> elements(powers.begin(), powers.end());
    elements.insert(Matrix(f, n, n));
    bool closed = true;
    nlohmann::json witness = {{"size", elements.size()}};
    if (elements.size() == field_size) {
      for (auto it = elements.begin(); it != elements.end() && closed; ++it) {
        for (auto jt = it; jt != elements.end(); ++jt) {
          if (!elements.contains(*it + *jt)) {
            closed = false;
            witness["left"] = to_json(*it);
            witness["right"] = to_json(*jt);
            break;
          }
        }
      }
    }
    report.add("A3", "F[A] = {0} u {A^i} is a field of order p^n", elements.size() == field_size && closed, witness);
  }

  // (4) F^n is a cyclic F[A]-module generated by e_0.
  {
    std::vector<Vector> orbit;
    Vector v = unit_vector(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      orbit.push_back(v);
      v = vec_mul(v, a);
    }
    const auto span = Subspace::span(f, n, orbit);
    report.add("A4", "F^n is one-dimensional over F[A] (e_0 is a cyclic vector)", span.dim() == n,
               basis_json(span));
  }

  // (5) centralizer as the kernel of X -> XA - AX on n^2 coordinates.
  {
    const std::size_t n2 = n * n;
    Matrix commutator_map(f, n2, n2);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t s = 0; s < n; ++s) {
        Matrix e(f, n, n);
        e(r, s) = 1;
        const auto image = flatten(e * a - a * e);
        std::copy(image.begin(), image.end(), commutator_map.row(r * n + s).begin());
      }
    }
    const auto centralizer = rank_and_kernel(commutator_map).kernel;
    std::vector<Vector> poly_in_a;
    Matrix acc = id;
    for (std::size_t i = 0; i < n; ++i) {
      poly_in_a.push_back(flatten(acc));
      acc = acc * a;
    }
    const auto expected = Subspace::span(f, n2, poly_in_a);
    const bool ok = centralizer.dim() == n && centralizer == expected;
    report.add("A5", "centralizer of A in End(F^n) is span{I, A, ..., A^(n-1)} = F[A]", ok,
               {{"dimension", centralizer.dim()}, {"basis", basis_json(centralizer)}});
  }
  return report;
}

Report check_f_properties(const FMatrix& fm) {
  Report report("linear map f");
  const auto& f = fm.field();
  const std::size_t n = fm.n();
  const std::size_t dim_v = fm.dim_v();
  const std::size_t dim_w = fm.dim_w();
  const auto& basis = fm.basis();
  const auto& full = fm.full();

  // (1) injectivity.
  const auto rk = rank_and_kernel(full);
  report.add("f1", "f is injective (left kernel of the f-matrix is 0)", rk.kernel.dim() == 0, basis_json(rk.kernel));

  // (2) U f = v0 ^ V = v0 ^ U, of dimension n.
  const auto image = row_space(full);
  const auto u_image = row_space(full.submatrix(1, 0, n, dim_w));
  std::vector<Vector> v0_wedge_v, v0_wedge_u;
  const Vector v0 = unit_vector(dim_v, 0);
  for (std::size_t k = 0; k < dim_v; ++k) {
    auto w = wedge(f, v0, unit_vector(dim_v, k), basis);
    v0_wedge_v.push_back(w);
    if (k > 0) v0_wedge_u.push_back(w);
  }
  const auto v0v = Subspace::span(f, dim_w, v0_wedge_v);
  const auto v0u = Subspace::span(f, dim_w, v0_wedge_u);
  report.add("f2", "U f = v0 ^ V = v0 ^ U, a subspace of dimension n",
             u_image == v0v && v0v == v0u && u_image.dim() == n,
             {{"dim_Uf", u_image.dim()}, {"Uf", basis_json(u_image)}, {"v0^V", basis_json(v0v)}});
  report.add("f2q", "dim(V f / v0 ^ V) = 1", v0v.is_contained_in(image) && image.dim() == v0v.dim() + 1,
             {{"dim_Vf", image.dim()}, {"dim_v0^V", v0v.dim()}});

  // {x : x ^ V <= V f} as the kernel of x -> (x ^ v_l mod V f)_l.
  const std::size_t codim = dim_w - image.dim();
  Matrix quotient_map(f, dim_v, dim_v * codim);
  for (std::size_t i = 0; i < dim_v; ++i) {
    const Vector ei = unit_vector(dim_v, i);
    for (std::size_t l = 0; l < dim_v; ++l) {
      const auto q = image.quotient_coordinates(wedge(f, ei, unit_vector(dim_v, l), basis));
      std::copy(q.begin(), q.end(), quotient_map.row(i).begin() + static_cast<std::ptrdiff_t>(l * codim));
    }
  }
  const auto annihilated = rank_and_kernel(quotient_map).kernel;
  std::vector<Vector> u_basis;
  for (std::size_t i = 1; i < dim_v; ++i) u_basis.push_back(unit_vector(dim_v, i));
  const auto u_space = Subspace::span(f, dim_v, u_basis);
  const auto v0_line = Subspace::span(f, dim_v, {v0});

  const auto u_part = annihilated.intersection(u_space);
  report.add("f3", "u in U with u ^ V <= V f forces u = 0", u_part.dim() == 0, basis_json(u_part));
  report.add("f4", "{x in V : x ^ V <= V f} = <v0>", annihilated == v0_line, basis_json(annihilated));

  // (6) U = {x : x f in v0 ^ V}.
  Matrix to_quotient(f, dim_v, dim_w - v0v.dim());
  for (std::size_t i = 0; i < dim_v; ++i) {
    const auto q = v0v.quotient_coordinates(full.row(i));
    std::copy(q.begin(), q.end(), to_quotient.row(i).begin());
  }
  const auto preimage = rank_and_kernel(to_quotient).kernel;
  report.add("f6", "U = {x in V : x f in v0 ^ V}", preimage == u_space, basis_json(preimage));
  return report;
}

}  // namespace pgc
