#include "eqdecomp/join.hpp"

#include "eqdecomp/decomposition.hpp"
#include "eqdecomp/errors.hpp"
#include "eqdecomp/linalg.hpp"
#include "eqdecomp/zeta.hpp"

namespace eqdecomp {

namespace {

void require_simple_undirected(const SignedDigraph& g, const std::string& name) {
  for (Index i = 0; i < g.size(); ++i)
    for (Index j = 0; j < g.size(); ++j) {
      const Integer& a = g.adjacency()(i, j);
      if (a != 0 && a != 1) throw ValidationError(name + " is not simple: entry (" + std::to_string(i + 1) + "," +
                                                  std::to_string(j + 1) + ") is " + a.str());
      if (i == j && a != 0) throw ValidationError(name + " has a loop at vertex " + std::to_string(i + 1));
    }
  if (!is_undirected(g)) throw ValidationError(name + " is not undirected");
}

Integer product(const std::vector<Integer>& values) {
  Integer p(1);
  for (const auto& v : values) p *= v;
  return p;
}

UniPoly divide_identity(const UniPoly& num, const UniPoly& den, const std::string& what) {
  try {
    return poly_div_exact(num, den);
  } catch (const InexactDivisionError& e) {
    throw ConsistencyError(what + ": " + e.what());
  }
}

BiPoly divide_identity(const BiPoly& num, const BiPoly& den, const std::string& what) {
  try {
    return bipoly_div_exact(num, den);
  } catch (const InexactDivisionError& e) {
    throw ConsistencyError(what + ": " + e.what());
  }
}

}  // namespace

JoinSpec JoinSpec::make(SignedDigraph h, std::vector<SignedDigraph> components, bool require_regular) {
  if (components.empty()) throw ValidationError("a join needs at least one component");
  if (static_cast<std::size_t>(h.size()) != components.size())
    throw ValidationError("H has " + std::to_string(h.size()) + " vertices but " +
                          std::to_string(components.size()) + " components were given");
  require_simple_undirected(h, "H");
  JoinSpec spec;
  spec.regular_ = true;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const std::string name = "component " + std::to_string(i + 1);
    const SignedDigraph& c = components[i];
    if (c.size() == 0) throw ValidationError(name + " is empty");
    require_simple_undirected(c, name);
    const DegreeMatrix d = degree_matrix(c);
    Integer k = d(0, 0);
    for (Index v = 1; v < c.size(); ++v)
      if (d(v, v) != k) {
        if (require_regular)
          throw ValidationError(name + " is not regular: vertex " + to_string(c.labels()[v]) + " has degree " +
                                d(v, v).str() + ", expected " + k.str());
        spec.regular_ = false;
      }
    spec.degrees_.push_back(k);
  }
  spec.h_ = std::move(h);
  spec.components_ = std::move(components);
  return spec;
}

std::vector<Integer> JoinSpec::orders() const {
  std::vector<Integer> n;
  for (const auto& c : components_) n.emplace_back(c.size());
  return n;
}

Integer JoinSpec::outside_degree(std::size_t i) const {
  Integer total(0);
  for (std::size_t j = 0; j < components_.size(); ++j)
    if (j != i) total += h_.adjacency()(static_cast<Index>(i), static_cast<Index>(j)) * components_[j].size();
  return total;
}

JoinGraph build_join(const JoinSpec& spec) {
  std::vector<Index> offset{0};
  for (const auto& c : spec.components()) offset.push_back(offset.back() + c.size());
  const Index n = offset.back();
  IntMatrix a = IntMatrix::Zero(n, n);
  std::vector<std::vector<Index>> cells;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const Index ni = spec.components()[i].size();
    a.block(offset[i], offset[i], ni, ni) = spec.components()[i].adjacency();
    for (std::size_t j = 0; j < spec.size(); ++j) {
      if (i == j) continue;
      const Integer& h = spec.h().adjacency()(static_cast<Index>(i), static_cast<Index>(j));
      if (h != 0) a.block(offset[i], offset[j], ni, spec.components()[j].size()).setConstant(h);
    }
    std::vector<Index> cell;
    for (Index v = offset[i]; v < offset[i + 1]; ++v) cell.push_back(v);
    cells.push_back(std::move(cell));
  }
  std::vector<VertexId> labels;
  for (Index v = 0; v < n; ++v) labels.push_back({static_cast<int>(v + 1)});
  return {SignedDigraph(std::move(labels), std::move(a)), Partition(std::move(cells), n)};
}

QuotientMatrix join_quotient(const JoinSpec& spec) {
  const auto r = static_cast<Index>(spec.size());
  QuotientMatrix q(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j)
      q(i, j) = i == j ? Rational(spec.degrees()[i])
                       : Rational(spec.h().adjacency()(i, j) * spec.components()[j].size());
  return q;
}

JoinCharPoly join_char_poly(const JoinSpec& spec, const Rational& alpha, const std::vector<Rational>& d) {
  if (!spec.regular()) throw ValidationError("closed-form join factorization needs regular components");
  if (d.size() != spec.size()) throw DimensionError("need one diagonal value per component");
  const auto r = static_cast<Index>(spec.size());
  const std::vector<Integer> orders = spec.orders();
  JoinCharPoly out;

  UniPoly components = UniPoly::constant(Rational(1));
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const SignedDigraph& c = spec.components()[i];
    RationalMatrix m = alpha * c.adjacency_rational();
    for (Index v = 0; v < c.size(); ++v) m(v, v) += d[i];
    const Rational root = alpha * Rational(spec.degrees()[i]) + d[i];
    out.component_factors.push_back(
        divide_identity(char_poly(m), UniPoly::linear(root), "component " + std::to_string(i + 1)));
    components *= out.component_factors.back();
  }

  QuotientMatrix shifted_quotient = alpha * join_quotient(spec);
  for (Index i = 0; i < r; ++i) shifted_quotient(i, i) += d[i];
  const UniPoly quotient_form = char_poly(shifted_quotient);

  Matrix<UniPoly> rho(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      if (i == j) {
        const Rational inv_n(1, orders[i]);
        const Rational root = alpha * Rational(spec.degrees()[i]) + d[i];
        rho(i, i) = UniPoly::linear(root) * inv_n;
      } else {
        rho(i, j) = UniPoly::constant(-alpha * Rational(spec.h().adjacency()(i, j)));
      }
    }
  out.h_determinant = poly_matrix_det(rho, static_cast<std::size_t>(r)) * Rational(product(orders));
  if (out.h_determinant != quotient_form)
    throw ConsistencyError("phi(M/pi) differs from (prod n_i) det(-alpha A(H) + Delta(x))");

  out.via_quotient = quotient_form * components;
  out.via_h_form = out.h_determinant * components;

  const JoinGraph joined = build_join(spec);
  const RationalMatrix direct = alpha * joined.x.adjacency_rational() + cell_diagonal(joined.pi, d);
  const UniPoly expected = char_poly(direct);
  if (out.via_quotient != expected) throw ConsistencyError("quotient form differs from phi(alpha A(X) + D)");
  if (out.via_h_form != expected) throw ConsistencyError("H form differs from phi(alpha A(X) + D)");
  return out;
}

std::vector<BiPoly> join_zeta_diagonal(const JoinSpec& spec) {
  std::vector<BiPoly> out;
  for (std::size_t i = 0; i < spec.size(); ++i)
    out.push_back(zeta_diagonal_entry(spec.degrees()[i] + spec.outside_degree(i)));
  return out;
}

BiPoly join_gamma_closed_form(const JoinSpec& spec, std::size_t i) {
  const BiPoly u = BiPoly::u();
  const BiPoly t = BiPoly::t();
  const BiPoly k(spec.degrees()[i]);
  const BiPoly big_n(spec.outside_degree(i));
  return BiPoly(1) - t * k + (BiPoly(1) - u) * (k + big_n - BiPoly(1) + u) * t * t;
}

BiPoly join_gamma_from_degree(const JoinSpec& spec, std::size_t i) {
  return BiPoly(Integer(-spec.degrees()[i])) * BiPoly::t() + join_zeta_diagonal(spec)[i];
}

Matrix<BiPoly> bartholdi_component_matrix(const SignedDigraph& component, const std::vector<Integer>& f_diagonal) {
  const Index n = component.size();
  if (static_cast<Index>(f_diagonal.size()) != n) throw DimensionError("F must have one entry per vertex");
  const BiPoly t = BiPoly::t();
  const BiPoly one_minus_u = BiPoly(1) - BiPoly::u();
  Matrix<BiPoly> m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      m(i, j) = BiPoly(Integer(-component.adjacency()(i, j))) * t;
      if (i == j) m(i, j) += BiPoly(1) + one_minus_u * (BiPoly(f_diagonal[i]) - one_minus_u) * t * t;
    }
  return m;
}

Matrix<BiPoly> shifted_component_matrix(const JoinSpec& spec, std::size_t i) {
  const SignedDigraph& c = spec.components()[i];
  const BiPoly dz = join_zeta_diagonal(spec)[i];
  Matrix<BiPoly> m(c.size(), c.size());
  for (Index a = 0; a < c.size(); ++a)
    for (Index b = 0; b < c.size(); ++b) {
      m(a, b) = BiPoly(Integer(-c.adjacency()(a, b))) * BiPoly::t();
      if (a == b) m(a, b) += dz;
    }
  return m;
}

Matrix<RationalBiPoly> scaled_join_quotient(const JoinSpec& spec) {
  const auto r = static_cast<Index>(spec.size());
  const std::vector<Integer> orders = spec.orders();
  Matrix<RationalBiPoly> rho(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < r; ++j) {
      if (i == j)
        rho(i, i) = to_rational(join_gamma_from_degree(spec, static_cast<std::size_t>(i))) *
                    RationalBiPoly(Rational(1, orders[i]));
      else
        rho(i, j) = RationalBiPoly(Rational(-spec.h().adjacency()(i, j))) * RationalBiPoly::t();
    }
  return rho;
}

JoinZeta join_zeta_reciprocal(const JoinSpec& spec) {
  if (!spec.regular()) throw ValidationError("closed-form join zeta needs regular components");
  const JoinGraph joined = build_join(spec);
  const ZetaReciprocal direct = bartholdi_reciprocal(joined.x);
  const long exponent = static_cast<long>(direct.edges - direct.vertices);
  const std::vector<Integer> orders = spec.orders();
  const auto r = static_cast<Index>(spec.size());
  JoinZeta out;

  BiPoly components(1);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const BiPoly gamma = join_gamma_closed_form(spec, i);
    if (gamma != join_gamma_from_degree(spec, i))
      throw ConsistencyError("gamma_" + std::to_string(i + 1) + " expressions disagree");
    out.gamma.push_back(gamma);

    const SignedDigraph& c = spec.components()[i];
    std::vector<Integer> f(static_cast<std::size_t>(c.size()), spec.degrees()[i] + spec.outside_degree(i));
    const Matrix<BiPoly> shifted = shifted_component_matrix(spec, i);
    if (bartholdi_component_matrix(c, f) != shifted)
      throw ConsistencyError("M_X(D(X_i) + N_i I) differs from -t A(X_i) + d_i^Z I");
    const auto bound = static_cast<unsigned>(2 * c.size());
    components *= divide_identity(bipoly_det(shifted, bound, bound), gamma,
                                  "gamma_" + std::to_string(i + 1) + " division");
  }

  const IntMatrix quotient = to_integer(join_quotient(spec));
  const BiPoly quotient_det = zeta_determinant(quotient, join_zeta_diagonal(spec));

  const Matrix<RationalBiPoly> rho = scaled_join_quotient(spec);
  const BiPoly h_det = to_integer(bipoly_det(rho) * RationalBiPoly(Rational(product(orders))));
  Matrix<RationalBiPoly> column_scaled = rho;
  for (Index j = 0; j < r; ++j)
    for (Index i = 0; i < r; ++i) column_scaled(i, j) *= RationalBiPoly(Rational(orders[j]));
  if (to_integer(bipoly_det(column_scaled)) != h_det)
    throw ConsistencyError("det(rho' n_j) differs from (prod n_i) det(rho')");
  if (h_det != quotient_det) throw ConsistencyError("det M/pi differs from (prod n_i) det(-t A(H) + Delta)");

  auto with_s1 = [&](const BiPoly& p) {
    if (exponent >= 0) return zeta_s1().pow(static_cast<unsigned>(exponent)) * p;
    return divide_identity(p, zeta_s1(), "s1 division");
  };
  out.via_quotient = with_s1(quotient_det * components);
  out.via_h_form = with_s1(h_det * components);
  if (out.via_quotient != direct.value) throw ConsistencyError("quotient form differs from the zeta reciprocal");
  if (out.via_h_form != direct.value) throw ConsistencyError("H form differs from the zeta reciprocal");
  return out;
}

TeranishiFactors teranishi_factor(const JoinSpec& spec, const std::vector<Partition>& pis) {
  if (pis.size() != spec.size()) throw DimensionError("need one partition per component");
  TeranishiFactors out;
  std::vector<std::vector<Index>> cells;
  std::vector<Index> reps;
  Index offset = 0;
  UniPoly deletion_product = UniPoly::constant(Rational(1));
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const SignedDigraph& c = spec.components()[i];
    const Partition& pi = pis[i];
    if (pi.vertex_count() != c.size())
      throw ValidationError("partition " + std::to_string(i + 1) + " does not cover component " + std::to_string(i + 1));
    QuotientMatrix local;
    try {
      local = check_equitable(c.adjacency_rational(), pi);
    } catch (const NotEquitableError& e) {
      throw ValidationError("component " + std::to_string(i + 1) + ": " + e.what());
    }
    const CharPolyFactors f = factor_char_poly(c.adjacency_rational(), pi);
    out.component_deletion_factors.push_back(f.deletion_factor);
    out.component_ratio_factors.push_back(
        divide_identity(char_poly(c.adjacency()), char_poly(local), "component " + std::to_string(i + 1)));
    if (out.component_ratio_factors.back() != f.deletion_factor)
      throw ConsistencyError("component " + std::to_string(i + 1) + ": phi(X_i\\pi_i) differs from the ratio form");
    deletion_product *= f.deletion_factor;
    for (std::size_t k = 0; k < pi.cell_count(); ++k) {
      std::vector<Index> cell;
      for (Index v : pi.cells()[k]) cell.push_back(v + offset);
      cells.push_back(std::move(cell));
      reps.push_back(pi.representatives()[k] + offset);
    }
    offset += c.size();
  }
  out.pi = Partition(std::move(cells), std::move(reps), offset);
  const JoinGraph joined = build_join(spec);
  const CharPolyFactors whole = factor_char_poly(joined.x.adjacency_rational(), out.pi);
  out.quotient_factor = whole.quotient_factor;
  if (whole.deletion_factor != deletion_product)
    throw ConsistencyError("phi(X\\pi) differs from the product of component deletion factors");
  if (out.quotient_factor * deletion_product != char_poly(joined.x.adjacency()))
    throw ConsistencyError("Teranishi product differs from phi(A(X))");
  return out;
}

}  // namespace eqdecomp
