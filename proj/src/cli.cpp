#include "eqdecomp/cli.hpp"

#include "eqdecomp/decomposition.hpp"
#include "eqdecomp/errors.hpp"
#include "eqdecomp/io.hpp"
#include "eqdecomp/join.hpp"
#include "eqdecomp/linalg.hpp"
#include "eqdecomp/zeta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace eqdecomp {

namespace {

constexpr std::size_t kMaxRepresentativeChoices = 4096;

// ---- report fragments ----

Report rational_matrix_json(const RationalMatrix& m) {
  Report rows = Report::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Report row = Report::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Report int_matrix_json(const IntMatrix& m) { return rational_matrix_json(to_rational(m)); }

Report poly_json(const UniPoly& p, const std::string& var = "x") {
  Report coeffs = Report::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return {{"display", p.to_string(var)}, {"coefficients", coeffs}};
}

Report bipoly_json(const BiPoly& p) {
  Report terms = Report::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({m.t_deg, m.u_deg, to_string(c)});
  return {{"display", p.to_string()}, {"terms (t, u, coefficient)", terms}};
}

std::string product_display(const std::vector<std::string>& factors) {
  std::string out;
  for (const auto& f : factors) out += "(" + f + ")";
  return out;
}

int label_of(const SignedDigraph& x, Index v) { return x.labels()[static_cast<std::size_t>(v)].label; }

Report labels_json(const SignedDigraph& x, const std::vector<Index>& vs) {
  Report out = Report::array();
  for (Index v : vs) out.push_back(label_of(x, v));
  return out;
}

Report partition_json(const SignedDigraph& x, const Partition& pi) {
  Report cells = Report::array();
  for (const auto& c : pi.cells()) cells.push_back(labels_json(x, c));
  return {{"cells", cells}, {"representatives", labels_json(x, pi.representatives())}};
}

Report graph_json(const std::string& path, const SignedDigraph& x) {
  return {{"file", path}, {"vertices", x.size()}, {"kind", is_undirected(x) ? "undirected" : "directed"}};
}

// ---- verdicts ----

class Verdicts {
 public:
  /// `check` returns a witness on failure and nullopt on success. Library
  /// consistency errors count as failures with their message as witness.
  void check(const std::string& identity, const std::function<std::optional<std::string>()>& check) {
    std::optional<std::string> witness;
    try {
      witness = check();
    } catch (const ConsistencyError& e) {
      witness = e.what();
    } catch (const NotEquitableError& e) {
      witness = e.what();
    } catch (const InexactDivisionError& e) {
      witness = std::string("inexact division, remainder ") + e.what();
    }
    if (witness)
      add(identity, "FAIL", *witness);
    else
      add(identity, "PASS", "");
  }

  void skip(const std::string& identity, const std::string& reason) { add(identity, "SKIP", reason); }

  bool failed() const { return failed_; }
  const Report& json() const { return list_; }

 private:
  void add(const std::string& identity, const std::string& status, const std::string& note) {
    Report v = {{"identity", identity}, {"status", status}};
    if (!note.empty()) v[status == "FAIL" ? "witness" : "reason"] = note;
    if (status == "FAIL") failed_ = true;
    list_.push_back(std::move(v));
  }

  Report list_ = Report::array();
  bool failed_ = false;
};

std::optional<std::string> expect_equal(const UniPoly& lhs, const UniPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return lhs.to_string() + " != " + rhs.to_string();
}

std::optional<std::string> expect_equal(const BiPoly& lhs, const BiPoly& rhs) {
  if (lhs == rhs) return std::nullopt;
  return lhs.to_string() + " != " + rhs.to_string();
}

// ---- inputs ----

SignedDigraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph_file(text);
  } catch (const ParseError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Partition apply_reps(const SignedDigraph& x, Partition pi, const std::string& reps) {
  if (reps.empty()) return pi;
  std::vector<std::optional<Index>> chosen(pi.cell_count());
  std::stringstream ss(reps);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int label = 0;
    try {
      label = std::stoi(item);
    } catch (const std::exception&) {
      throw ValidationError("--reps expects comma-separated vertex labels, got '" + item + "'");
    }
    const Index v = x.require_index(VertexId{label});
    auto& slot = chosen[pi.cell_of(v)];
    if (slot) throw ValidationError("--reps names two vertices of the cell containing " + std::to_string(label));
    slot = v;
  }
  std::vector<Index> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (!chosen[i])
      throw ValidationError("--reps names no vertex of the cell containing " +
                            std::to_string(label_of(x, pi.cells()[i].front())));
    out.push_back(*chosen[i]);
  }
  return pi.with_representatives(std::move(out));
}

struct Input {
  std::string graph_path;
  std::string partition_path;
  std::string reps;
};

struct Loaded {
  SignedDigraph x;
  Partition pi;
  bool refined = false;
};

Loaded load(const Input& in) {
  Loaded l{load_graph(in.graph_path), {}, false};
  if (in.partition_path.empty()) {
    l.pi = coarsest_equitable(l.x);
    l.refined = true;
  } else {
    l.pi = parse_partition_file(read_file(in.partition_path), l.x.size());
  }
  l.pi = apply_reps(l.x, l.pi, in.reps);
  return l;
}

Report input_json(const Input& in, const Loaded& l) {
  Report j = {{"graph", graph_json(in.graph_path, l.x)}};
  j["partition source"] = l.refined ? "coarsest equitable refinement" : in.partition_path;
  j["partition"] = partition_json(l.x, l.pi);
  return j;
}

/// M/pi, or a FAIL verdict naming the witness when pi is not equitable.
std::optional<QuotientMatrix> equitable_quotient(const RationalMatrix& m, const Partition& pi, Verdicts& v) {
  std::optional<QuotientMatrix> q;
  v.check("partition is equitable", [&]() -> std::optional<std::string> {
    q = check_equitable(m, pi);
    return std::nullopt;
  });
  return q;
}

// ---- commands ----

void cmd_refine(const std::string& graph_path, const std::string& seed, Report& r, Verdicts& v) {
  const SignedDigraph x = load_graph(graph_path);
  Partition start = Partition::trivial(x.size());
  std::string seed_desc = "trivial";
  if (seed.rfind("singleton:", 0) == 0) {
    int label = 0;
    try {
      label = std::stoi(seed.substr(10));
    } catch (const std::exception&) {
      throw ValidationError("--seed singleton:<label> needs an integer label");
    }
    const Index s = x.require_index(VertexId{label});
    std::vector<Index> rest;
    for (Index i = 0; i < x.size(); ++i)
      if (i != s) rest.push_back(i);
    std::vector<std::vector<Index>> cells{{s}};
    if (!rest.empty()) cells.push_back(rest);
    start = Partition(cells, x.size());
    seed_desc = seed;
  } else if (!seed.empty()) {
    start = parse_partition_file(read_file(seed), x.size());
    seed_desc = seed;
  }
  const Partition pi = coarsest_equitable(x, start);
  r["input"] = {{"graph", graph_json(graph_path, x)}, {"seed", seed_desc}};
  r["partition"] = partition_json(x, pi);
  if (auto q = equitable_quotient(x.adjacency_rational(), pi, v)) r["quotient matrix"] = rational_matrix_json(*q);
  v.check("partition refines the seed",
          [&]() -> std::optional<std::string> {
            if (refines(pi, start)) return std::nullopt;
            return "refined partition does not refine the seed";
          });
}

void cmd_quotient(const Input& in, Report& r, Verdicts& v) {
  const Loaded l = load(in);
  r["input"] = input_json(in, l);
  const RationalMatrix m = l.x.adjacency_rational();
  const auto q = equitable_quotient(m, l.pi, v);
  if (!q) return;
  const RationalMatrix p = characteristic_matrix(l.pi);
  r["quotient matrix"] = rational_matrix_json(*q);
  r["characteristic matrix"] = rational_matrix_json(p);
  v.check("M P = P (M/pi)", [&]() -> std::optional<std::string> {
    if (RationalMatrix(m * p) == RationalMatrix(p * *q)) return std::nullopt;
    return "M P differs from P (M/pi)";
  });
}

void cmd_delete(const Input& in, Report& r, Verdicts& v) {
  const Loaded l = load(in);
  r["input"] = input_json(in, l);
  if (!equitable_quotient(l.x.adjacency_rational(), l.pi, v)) return;
  const DeletionResult dm = deletion_matrix(l.x.adjacency_rational(), l.pi);
  r["surviving vertices"] = labels_json(l.x, dm.non_representatives);
  r["selector matrix"] = rational_matrix_json(selector_matrix(l.pi));
  r["deletion matrix"] = rational_matrix_json(dm.deletion_matrix);
  v.check("A(X \\ pi) = A(X) \\ pi", [&]() -> std::optional<std::string> {
    const DeletionResult dg = deletion_graph(l.x, l.pi);
    r["deletion graph adjacency"] = int_matrix_json(dg.deletion_graph->adjacency());
    if (to_rational(dg.deletion_graph->adjacency()) == dm.deletion_matrix) return std::nullopt;
    return "deletion graph adjacency differs from the deletion matrix";
  });
}

void report_factors(const RationalMatrix& m, const Partition& pi, Report& r, Verdicts& v) {
  const auto q = equitable_quotient(m, pi, v);
  if (!q) return;
  const DeletionResult del = deletion_matrix(m, pi);
  const UniPoly qf = char_poly(*q);
  const UniPoly df = char_poly(del.deletion_matrix);
  const UniPoly full = char_poly(m);
  r["quotient matrix"] = rational_matrix_json(*q);
  r["deletion matrix"] = rational_matrix_json(del.deletion_matrix);
  r["quotient factor"] = poly_json(qf);
  r["deletion factor"] = poly_json(df);
  r["characteristic polynomial"] = poly_json(full);
  r["factored"] = product_display({qf.to_string(), df.to_string()});
  v.check("phi(M) = phi(M/pi) phi(M \\ pi)", [&] { return expect_equal(qf * df, full); });
}

void cmd_factor(const Input& in, Report& r, Verdicts& v) {
  const Loaded l = load(in);
  r["input"] = input_json(in, l);
  report_factors(l.x.adjacency_rational(), l.pi, r, v);
}

void cmd_laplacian(const Input& in, bool signless, Report& r, Verdicts& v) {
  const Loaded l = load(in);
  r["input"] = input_json(in, l);
  r["matrix"] = signless ? "signless Laplacian D + A" : "Laplacian D - A";
  if (!is_undirected(l.x)) throw ValidationError("laplacian needs an undirected graph");
  const RationalMatrix lap = laplacian(l.x, signless);
  if (!equitable_quotient(l.x.adjacency_rational(), l.pi, v)) return;
  std::optional<CharPolyFactors> f;
  v.check("cells have constant degree", [&]() -> std::optional<std::string> {
    f = laplacian_factors(l.x, l.pi, signless);
    return std::nullopt;
  });
  if (!f) return;
  const UniPoly full = char_poly(lap);
  r["quotient factor"] = poly_json(f->quotient_factor);
  r["deletion factor"] = poly_json(f->deletion_factor);
  r["characteristic polynomial"] = poly_json(full);
  r["factored"] = product_display({f->quotient_factor.to_string(), f->deletion_factor.to_string()});
  v.check(signless ? "phi(Q) = quotient factor * deletion factor" : "phi(L) = quotient factor * deletion factor",
          [&] { return expect_equal(f->quotient_factor * f->deletion_factor, full); });
}

/// det(I - tA), the zeta reciprocal at u = 1.
BiPoly det_i_minus_ta(const SignedDigraph& x) {
  std::vector<BiPoly> ones(static_cast<std::size_t>(x.size()), BiPoly(1));
  return zeta_determinant(x.adjacency(), ones);
}

void cmd_zeta(const std::string& graph_path, Report& r, Verdicts& v) {
  const SignedDigraph x = load_graph(graph_path);
  r["input"] = {{"graph", graph_json(graph_path, x)}};
  const ZetaReciprocal z = bartholdi_reciprocal(x);
  r["edges"] = to_string(z.edges);
  r["s1 exponent (m - n)"] = to_string(Integer(z.edges - z.vertices));
  r["zeta reciprocal"] = bipoly_json(z.value);
  r["ihara reciprocal (u = 0)"] = poly_json(ihara_specialize(z), "t");
  v.check("Z^-1(u = 1) = det(I - tA)", [&] {
    BiPoly at_one;
    for (const auto& [m, c] : z.value.terms()) at_one.add_term({0, m.t_deg}, c);
    return expect_equal(at_one, det_i_minus_ta(x));
  });
}

void cmd_zeta_factor(const Input& in, Report& r, Verdicts& v) {
  const Loaded l = load(in);
  r["input"] = input_json(in, l);
  require_zeta_input(l.x);
  const auto q = equitable_quotient(l.x.adjacency_rational(), l.pi, v);
  if (!q) return;
  r["quotient matrix"] = rational_matrix_json(*q);
  const ZetaReciprocal z = bartholdi_reciprocal(l.x);
  r["zeta reciprocal"] = bipoly_json(z.value);
  v.check("Z^-1 = s1^(m-n) * quotient factor * deletion factor", [&]() -> std::optional<std::string> {
    const ZetaFactors f = zeta_factor(l.x, l.pi);
    r["s1 exponent (m - n)"] = f.s1_exponent;
    r["quotient factor"] = bipoly_json(f.quotient_factor);
    r["deletion factor"] = bipoly_json(f.deletion_factor);
    return expect_equal(assemble(f), z.value);
  });
}

std::vector<Rational> parse_rational_list(const std::string& text, std::size_t count, const std::string& flag) {
  std::vector<Rational> out;
  if (text.empty()) return std::vector<Rational>(count, Rational(0));
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const std::exception&) {
      throw ValidationError(flag + " expects comma-separated rationals, got '" + item + "'");
    }
  }
  if (out.size() == 1) return std::vector<Rational>(count, out.front());
  if (out.size() != count)
    throw ValidationError(flag + " needs one value or one per component (" + std::to_string(count) + ")");
  return out;
}

void cmd_join(const std::vector<std::string>& files, const std::string& alpha_text, const std::string& d_text,
              Report& r, Verdicts& v) {
  if (files.size() < 2) throw ValidationError("join needs <h.graph> followed by one graph per vertex of H");
  std::vector<SignedDigraph> components;
  Report comp_json = Report::array();
  for (std::size_t i = 1; i < files.size(); ++i) {
    components.push_back(load_graph(files[i]));
    comp_json.push_back(graph_json(files[i], components.back()));
  }
  const JoinSpec spec = JoinSpec::make(load_graph(files[0]), std::move(components));
  const Rational alpha = alpha_text.empty() ? Rational(1) : parse_rational(alpha_text);
  const std::vector<Rational> d = parse_rational_list(d_text, spec.size(), "--d");

  Report orders = Report::array(), degrees = Report::array(), dj = Report::array();
  for (std::size_t i = 0; i < spec.size(); ++i) {
    orders.push_back(to_string(spec.orders()[i]));
    degrees.push_back(to_string(spec.degrees()[i]));
    dj.push_back(to_string(d[i]));
  }
  r["input"] = {{"h", graph_json(files[0], spec.h())}, {"components", comp_json}, {"alpha", to_string(alpha)},
                {"d", dj}};
  r["component orders"] = orders;
  r["component degrees"] = degrees;
  r["quotient matrix"] = rational_matrix_json(join_quotient(spec));

  const JoinGraph joined = build_join(spec);
  v.check("phi(alpha A + D) via the quotient", [&]() -> std::optional<std::string> {
    const JoinCharPoly cp = join_char_poly(spec, alpha, d);
    Report factors = Report::array();
    for (const auto& f : cp.component_factors) factors.push_back(poly_json(f));
    r["characteristic polynomial"] = poly_json(cp.via_quotient);
    r["component factors"] = factors;
    r["H determinant form"] = poly_json(cp.h_determinant);
    RationalMatrix shifted = alpha * joined.x.adjacency_rational();
    for (Index i = 0; i < joined.x.size(); ++i) shifted(i, i) += d[joined.pi.cell_of(i)];
    if (auto w = expect_equal(cp.via_h_form, cp.via_quotient)) return "H form: " + *w;
    return expect_equal(cp.via_quotient, char_poly(shifted));
  });

  try {
    require_zeta_input(joined.x);
  } catch (const ValidationError& e) {
    v.skip("zeta reciprocal of the join", e.what());
    return;
  }
  v.check("zeta reciprocal via the quotient and via H", [&]() -> std::optional<std::string> {
    const JoinZeta z = join_zeta_reciprocal(spec);
    Report gammas = Report::array();
    for (const auto& g : z.gamma) gammas.push_back(bipoly_json(g));
    r["gamma"] = gammas;
    r["zeta reciprocal"] = bipoly_json(z.via_quotient);
    if (auto w = expect_equal(z.via_h_form, z.via_quotient)) return "H form: " + *w;
    return expect_equal(z.via_quotient, bartholdi_reciprocal(joined.x).value);
  });
}

void cmd_teranishi(const std::vector<std::string>& files, Report& r, Verdicts& v) {
  if (files.size() < 3 || files.size() % 2 == 0)
    throw ValidationError("teranishi needs <h.graph> followed by <graph> <partition> pairs");
  std::vector<SignedDigraph> components;
  std::vector<Partition> pis;
  Report comp_json = Report::array();
  for (std::size_t i = 1; i < files.size(); i += 2) {
    components.push_back(load_graph(files[i]));
    pis.push_back(parse_partition_file(read_file(files[i + 1]), components.back().size()));
    comp_json.push_back({{"graph", graph_json(files[i], components.back())},
                         {"partition", partition_json(components.back(), pis.back())}});
  }
  const JoinSpec spec = JoinSpec::make(load_graph(files[0]), std::move(components), false);
  r["input"] = {{"h", graph_json(files[0], spec.h())}, {"components", comp_json}};
  const JoinGraph joined = build_join(spec);
  const UniPoly full = char_poly(joined.x.adjacency());
  r["characteristic polynomial"] = poly_json(full);
  v.check("phi(X) = phi(X/pi) prod phi(X_i \\ pi_i)", [&]() -> std::optional<std::string> {
    const TeranishiFactors f = teranishi_factor(spec, pis);
    Report del = Report::array(), ratio = Report::array();
    UniPoly product = f.quotient_factor;
    std::vector<std::string> shown{f.quotient_factor.to_string()};
    for (const auto& p : f.component_deletion_factors) {
      del.push_back(poly_json(p));
      product = product * p;
      shown.push_back(p.to_string());
    }
    for (const auto& p : f.component_ratio_factors) ratio.push_back(poly_json(p));
    r["partition"] = partition_json(joined.x, f.pi);
    r["quotient factor"] = poly_json(f.quotient_factor);
    r["component deletion factors"] = del;
    r["component ratio factors"] = ratio;
    r["factored"] = product_display(shown);
    return expect_equal(product, full);
  });
}

void cmd_verify(const Input& in, Report& r, Verdicts& v) {
  const Loaded l = load(in);
  r["input"] = input_json(in, l);
  const RationalMatrix m = l.x.adjacency_rational();
  const auto q = equitable_quotient(m, l.pi, v);
  if (!q) return;
  r["quotient matrix"] = rational_matrix_json(*q);

  const RationalMatrix p = characteristic_matrix(l.pi);
  v.check("M P = P (M/pi)", [&]() -> std::optional<std::string> {
    if (RationalMatrix(m * p) == RationalMatrix(p * *q)) return std::nullopt;
    return "M P differs from P (M/pi)";
  });
  v.check("P-bar^-1 M P-bar is block upper triangular", [&]() -> std::optional<std::string> {
    similarity_transform(m, l.pi);
    return std::nullopt;
  });
  v.check("A(X \\ pi) = A(X) \\ pi", [&]() -> std::optional<std::string> {
    const DeletionResult dg = deletion_graph(l.x, l.pi);
    if (to_rational(dg.deletion_graph->adjacency()) == dg.deletion_matrix) return std::nullopt;
    return "deletion graph adjacency differs from the deletion matrix";
  });

  const UniPoly qf = char_poly(*q);
  const UniPoly df = char_poly(deletion_matrix(m, l.pi).deletion_matrix);
  r["quotient factor"] = poly_json(qf);
  r["deletion factor"] = poly_json(df);
  r["factored"] = product_display({qf.to_string(), df.to_string()});
  v.check("phi(M) = phi(M/pi) phi(M \\ pi)", [&] { return expect_equal(qf * df, char_poly(m)); });

  const std::string independence = "phi(M \\ pi) does not depend on the representatives";
  if (l.pi.representative_choice_count() > kMaxRepresentativeChoices) {
    v.skip(independence, std::to_string(l.pi.representative_choice_count()) + " choices exceed the limit of " +
                             std::to_string(kMaxRepresentativeChoices));
  } else {
    v.check(independence, [&]() -> std::optional<std::string> {
      std::optional<std::string> witness;
      for_each_representative_choice(l.pi, [&](const Partition& alt) {
        if (witness) return;
        const UniPoly other = char_poly(deletion_matrix(m, alt).deletion_matrix);
        if (other != df) {
          std::string reps;
          for (Index rep : alt.representatives()) reps += " " + std::to_string(label_of(l.x, rep));
          witness = "representatives" + reps + " give " + other.to_string();
        }
      });
      return witness;
    });
  }

  const bool undirected = is_undirected(l.x);
  for (bool signless : {false, true}) {
    const std::string name = signless ? "phi(Q) factors with D(X) on V'" : "phi(L) factors with D(X) on V'";
    if (!undirected) {
      v.skip(name, "graph is directed");
      continue;
    }
    v.check(name, [&]() -> std::optional<std::string> {
      const CharPolyFactors f = laplacian_factors(l.x, l.pi, signless);
      return expect_equal(f.quotient_factor * f.deletion_factor, char_poly(laplacian(l.x, signless)));
    });
  }

  const std::string zeta_name = "Z^-1 = s1^(m-n) * quotient factor * deletion factor";
  try {
    require_zeta_input(l.x);
  } catch (const ValidationError& e) {
    v.skip(zeta_name, e.what());
    return;
  }
  v.check(zeta_name, [&] {
    const ZetaFactors f = zeta_factor(l.x, l.pi);
    return expect_equal(assemble(f), bartholdi_reciprocal(l.x).value);
  });
}

// ---- text rendering ----

bool is_scalar(const Report& j) { return !j.is_array() && !j.is_object(); }

std::string scalar_text(const Report& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_row_list(const Report& j) {
  return j.is_array() && !j.empty() && std::all_of(j.begin(), j.end(), [](const Report& row) {
           return row.is_array() && std::all_of(row.begin(), row.end(), is_scalar);
         });
}

void render(const Report& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    if (key == "verdicts") {
      os << pad << "verdicts:\n";
      for (const auto& verdict : value) {
        os << pad << "  " << verdict["status"].get<std::string>() << " " << verdict["identity"].get<std::string>();
        if (verdict.contains("witness")) os << ": " << verdict["witness"].get<std::string>();
        if (verdict.contains("reason")) os << ": " << verdict["reason"].get<std::string>();
        os << "\n";
      }
    } else if (is_scalar(value)) {
      os << pad << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), is_scalar)) {
      os << pad << key << ":";
      for (const auto& e : value) os << " " << scalar_text(e);
      os << "\n";
    } else if (is_row_list(value)) {
      std::size_t width = 0;
      for (const auto& row : value)
        for (const auto& e : row) width = std::max(width, scalar_text(e).size());
      os << pad << key << ":\n";
      for (const auto& row : value) {
        os << pad << "  [";
        bool first = true;
        for (const auto& e : row) {
          const std::string s = scalar_text(e);
          os << (first ? "" : " ") << std::string(width - s.size(), ' ') << s;
          first = false;
        }
        os << "]\n";
      }
    } else if (value.is_object()) {
      os << pad << key << ":\n";
      render(value, indent + 2, os);
    } else {
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << pad << key << " [" << i + 1 << "]:\n";
        if (value[i].is_object())
          render(value[i], indent + 2, os);
        else
          os << pad << "  " << scalar_text(value[i]) << "\n";
      }
    }
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quotient and deletion factorizations over equitable partitions", "eqdecomp"};
  app.require_subcommand(1);
  bool json = false;
  Input in;
  std::string seed, alpha, d;
  bool signless = false;
  std::vector<std::string> files;

  auto add_common = [&](CLI::App* sub, bool partition) {
    sub->add_flag("--json", json, "Emit the report as one JSON document");
    sub->add_option("graph", in.graph_path, "Graph file")->required();
    if (partition) {
      sub->add_option("partition", in.partition_path, "Partition file (default: coarsest equitable refinement)");
      sub->add_option("--reps", in.reps, "Comma-separated representative labels, one per cell");
    }
  };

  auto* refine = app.add_subcommand("refine", "Coarsest equitable partition refining a seed");
  add_common(refine, false);
  refine->add_option("--seed", seed, "singleton:<label> or a partition file");
  add_common(app.add_subcommand("quotient", "Quotient matrix M/pi"), true);
  add_common(app.add_subcommand("delete", "Deletion matrix and deletion graph"), true);
  add_common(app.add_subcommand("factor", "phi(M) = phi(M/pi) phi(M \\ pi)"), true);
  auto* lap = app.add_subcommand("laplacian", "Laplacian factorization");
  add_common(lap, true);
  lap->add_flag("--signless", signless, "Use D + A instead of D - A");
  add_common(app.add_subcommand("zeta", "Bartholdi zeta reciprocal"), false);
  add_common(app.add_subcommand("zeta-factor", "Zeta reciprocal split over pi"), true);
  auto* join = app.add_subcommand("join", "Join graph H[X_1, ..., X_r]");
  join->add_flag("--json", json, "Emit the report as one JSON document");
  join->add_option("files", files, "<h.graph> <x1.graph> ... <xr.graph>")->required();
  join->add_option("--alpha", alpha, "Coefficient of A (default 1)");
  join->add_option("--d", d, "Diagonal shift: one rational or one per component (default 0)");
  auto* teranishi = app.add_subcommand("teranishi", "Join factorization with partitioned components");
  teranishi->add_flag("--json", json, "Emit the report as one JSON document");
  teranishi->add_option("files", files, "<h.graph> <x1.graph> <x1.part> ...")->required();
  add_common(app.add_subcommand("verify", "Run every identity on the input"), true);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report = {{"command", command}};
  Verdicts verdicts;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (command == "refine")
      cmd_refine(in.graph_path, seed, report, verdicts);
    else if (command == "quotient")
      cmd_quotient(in, report, verdicts);
    else if (command == "delete")
      cmd_delete(in, report, verdicts);
    else if (command == "factor")
      cmd_factor(in, report, verdicts);
    else if (command == "laplacian")
      cmd_laplacian(in, signless, report, verdicts);
    else if (command == "zeta")
      cmd_zeta(in.graph_path, report, verdicts);
    else if (command == "zeta-factor")
      cmd_zeta_factor(in, report, verdicts);
    else if (command == "join")
      cmd_join(files, alpha, d, report, verdicts);
    else if (command == "teranishi")
      cmd_teranishi(files, report, verdicts);
    else
      cmd_verify(in, report, verdicts);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  report["verdicts"] = verdicts.json();
  report["timing"] = {{"elapsed ms", elapsed.count()}};

  out << (json ? report.dump(2) + "\n" : render_text(report));
  return verdicts.failed() ? kIdentityFailure : kPass;
}

}  // namespace eqdecomp
