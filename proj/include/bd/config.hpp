#pragma once
// JSON-driven front end: configuration parsing (field / group / module /
// structure), the fourteen toolkit commands, and a re-entrant run_command so
// tests can drive the CLI in process.

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bd/builtin.hpp"
#include "bd/cherednik.hpp"

namespace bd {

using njson = nlohmann::ordered_json;

struct CliOptions {
  std::string config_path;
  std::uint64_t seed = 0;
  int trials = 3;
  int threads = 1;
  std::size_t max_group_order = 100000;
  std::size_t max_matrix_dim = 4096;
  std::string format = "json";
  std::string output;
};

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
  bool wrote_file = false;
};

// ------------------------------------------------------------- field ------

namespace cfgdetail {

inline std::string scalar_str(const njson& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ConfigError("expected a scalar (string like \"2/3\" or an integer)");
}

template <class F>
typename F::Elem parse_scalar(const F& K, const njson& j) {
  auto v = K.parse(scalar_str(j));
  if (!v) throw ConfigError("cannot parse scalar '" + scalar_str(j) + "' over " + K.name());
  return *v;
}

template <class F>
Matrix<F> parse_matrix(const F& K, const njson& j, std::size_t rows,
                       std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw ConfigError("matrix: expected " + std::to_string(rows) + " rows");
  Matrix<F> M = mat_zeros(K, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ConfigError("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) M.at(i, c) = parse_scalar(K, j[i][c]);
  }
  return M;
}

inline std::string field_name(const njson& cfg) {
  if (!cfg.contains("field")) return "Q";
  return cfg.at("field").get<std::string>();
}

inline std::uint64_t field_prime(const std::string& name) {
  // accepts GF(p) / Fp / GF p spellings
  std::string digits;
  for (char c : name)
    if (c >= '0' && c <= '9') digits += c;
  if (digits.empty()) throw ConfigError("cannot parse field '" + name + "'");
  return std::stoull(digits);
}

}  // namespace cfgdetail

// Calls fn(K, cfg) with K = RatField or FpField according to cfg["field"].
template <class Fn>
int dispatch_field(const njson& cfg, Fn&& fn) {
  const std::string name = cfgdetail::field_name(cfg);
  if (name == "Q" || name == "QQ" || name == "rationals") {
    RatField K;
    return fn(K);
  }
  FpField K(cfgdetail::field_prime(name));
  return fn(K);
}

// ------------------------------------------------------------- group ------

inline std::shared_ptr<FinGroup> parse_group(const njson& j, const CliOptions& opt) {
  if (!j.is_object() || !j.contains("type"))
    throw ConfigError("group: need an object with a 'type'");
  const std::string type = j.at("type").get<std::string>();
  std::shared_ptr<FinGroup> G;
  if (type == "symmetric") {
    G = std::make_shared<FinGroup>(FinGroup::symmetric(j.at("n").get<std::size_t>()));
  } else if (type == "cyclic") {
    G = std::make_shared<FinGroup>(FinGroup::cyclic(j.at("n").get<std::size_t>()));
  } else if (type == "dihedral") {
    G = std::make_shared<FinGroup>(FinGroup::dihedral(j.at("n").get<std::size_t>()));
  } else if (type == "permutations") {
    std::vector<std::vector<gid>> gens;
    for (const auto& g : j.at("generators"))
      gens.push_back(g.get<std::vector<gid>>());
    G = std::make_shared<FinGroup>(
        FinGroup::from_permutations(gens, opt.max_group_order));
  } else {
    throw ConfigError("group: unknown type '" + type + "'");
  }
  if (G->order() > opt.max_group_order)
    throw ConfigError("group order exceeds --max-group-order");
  return G;
}

// ------------------------------------------------------------- module -----

template <class F>
GModule<F> parse_module(const F& K, const FinGroup& G, const njson& j) {
  if (!j.is_object() || !j.contains("type"))
    throw ConfigError("module: need an object with a 'type'");
  const std::string type = j.at("type").get<std::string>();
  if (type == "trivial")
    return module_trivial(K, G, j.value("dim", std::size_t{1}));
  if (type == "sign") return module_sign(K, G);
  if (type == "permutation") return module_permutation(K, G);
  if (type == "regular") return module_regular(K, G);
  if (type == "reflection") return module_reflection(K, G);
  if (type == "character") {
    std::vector<Matrix<F>> gens;
    for (const auto& v : j.at("values")) {
      Matrix<F> m = mat_zeros(K, 1, 1);
      m.at(0, 0) = cfgdetail::parse_scalar(K, v);
      gens.push_back(std::move(m));
    }
    return module_from_generator_matrices(K, G, gens);
  }
  if (type == "matrices") {
    const std::size_t d = j.at("dim").get<std::size_t>();
    std::vector<Matrix<F>> gens;
    for (const auto& m : j.at("generators"))
      gens.push_back(cfgdetail::parse_matrix(K, m, d, d));
    return module_from_generator_matrices(K, G, gens);
  }
  throw ConfigError("module: unknown type '" + type + "'");
}

// ------------------------------------------------------------ structure ---

template <class F>
struct Parsed {
  std::shared_ptr<FinGroup> G;
  GModule<F> M;
  QYD<F> q;
  std::optional<YDModule<F>> yd;
};

template <class F>
ReflectionParams<F> parse_params(const F& K, const GModule<F>& M, const njson& j) {
  std::map<gid, typename F::Elem> by;
  for (auto it = j.begin(); it != j.end(); ++it)
    by.emplace(M.G->by_label(it.key()), cfgdetail::parse_scalar(K, it.value()));
  return ReflectionParams<F>(M, by);
}

template <class F>
QYD<F> parse_structure_on(const F& K, const GModule<F>& M, const njson& j,
                          std::optional<YDModule<F>>* yd_out) {
  const std::string type = j.at("type").get<std::string>();
  const FinGroup& G = *M.G;
  if (type == "tc") {
    const auto t = j.contains("t") ? cfgdetail::parse_scalar(K, j.at("t")) : K.zero();
    ReflectionParams<F> c =
        j.contains("c") ? parse_params(K, M, j.at("c"))
                        : constant_params(M, K.zero());
    return cherednik_qyd(M, t, c);
  }
  if (type == "L") {
    QYD<F> q;
    q.M = M;
    const njson& entries = j.at("entries");
    for (auto it = entries.begin(); it != entries.end(); ++it) {
      Matrix<F> Lh = cfgdetail::parse_matrix(K, it.value(), M.d, M.d);
      if (!mat_is_zero(K, Lh)) q.L.emplace(G.by_label(it.key()), std::move(Lh));
    }
    return q;
  }
  if (type == "trivial") {
    auto lam = K.zero();
    if (j.contains("lambda")) lam = cfgdetail::parse_scalar(K, j.at("lambda"));
    return qyd_trivial(M, lam);
  }
  if (type == "mixture") {
    std::vector<QYD<F>> parts;
    std::vector<typename F::Elem> coeffs;
    for (const auto& term : j.at("terms")) {
      coeffs.push_back(cfgdetail::parse_scalar(K, term.at("coeff")));
      parts.push_back(parse_structure_on<F>(K, M, term.at("structure"), nullptr));
    }
    std::vector<std::pair<typename F::Elem, const QYD<F>*>> pv;
    for (std::size_t i = 0; i < parts.size(); ++i)
      pv.emplace_back(coeffs[i], &parts[i]);
    return qyd_mix(pv);
  }
  if (type == "yd") {
    YDModule<F> yd;
    yd.M = M;
    const njson& pj = j.at("P");
    for (auto it = pj.begin(); it != pj.end(); ++it)
      yd.P.emplace(G.by_label(it.key()),
                   cfgdetail::parse_matrix(K, it.value(), M.d, M.d));
    QYD<F> q = qyd_from_yd(yd);
    if (yd_out) *yd_out = std::move(yd);
    return q;
  }
  throw ConfigError("structure: unknown type '" + type + "'");
}

template <class F>
Parsed<F> parse_bundle(const F& K, const njson& cfg, const CliOptions& opt) {
  Parsed<F> out;
  const njson& sj = cfg.contains("structure") ? cfg.at("structure") : njson::object();
  if (sj.is_object() && sj.value("type", "") == std::string("example")) {
    const std::string name = sj.at("name").get<std::string>();
    ExampleBundle<F> b;
    if (name == "pathological") {
      b = pathological_example(K);
    } else if (name == "exterior" || name == "kaplansky") {
      b = exterior_example(K, sj.value("dim", std::size_t{2}));
    } else if (name == "transpositions" || name == "fomin-kirillov") {
      b = transposition_example(K, sj.value("n", std::size_t{3}),
                                sj.value("sign", true));
    } else if (name == "qline") {
      b = qline_example(K, sj.value("m", std::size_t{3}),
                        cfgdetail::parse_scalar(K, sj.at("q")));
    } else {
      throw ConfigError("unknown example '" + name + "'");
    }
    out.G = b.G;
    out.M = std::move(b.M);
    out.q = std::move(b.q);
    out.yd = std::move(b.yd);
    return out;
  }
  if (!cfg.contains("group")) throw ConfigError("config: missing 'group'");
  if (!cfg.contains("module")) throw ConfigError("config: missing 'module'");
  out.G = parse_group(cfg.at("group"), opt);
  out.M = parse_module(K, *out.G, cfg.at("module"));
  if (!sj.is_object() || sj.empty())
    throw ConfigError("config: missing 'structure'");
  out.q = parse_structure_on<F>(K, out.M, sj, &out.yd);
  return out;
}

// Require a valid YD structure (for braiding-based commands).
template <class F>
const YDModule<F>& require_yd(const Parsed<F>& p) {
  if (!p.yd)
    throw ConfigError("this command needs a Yetter-Drinfeld structure "
                      "(structure type 'yd' or a YD example)");
  CheckReport<F> r = yd_check(*p.yd);
  if (!r.ok) throw ConfigError("invalid YD structure: " + r.detail);
  return *p.yd;
}

inline void guard_qb(const CliOptions& opt, std::size_t d, std::size_t ng,
                     std::size_t N) {
  std::size_t worst = ng * d;
  for (std::size_t i = 1; i < N; ++i) {
    if (worst > opt.max_matrix_dim / std::max<std::size_t>(d, 1) + 1)
      throw ConfigError("computation exceeds --max-matrix-dim; lower N");
    worst *= d;
  }
  if (worst > opt.max_matrix_dim)
    throw ConfigError("computation exceeds --max-matrix-dim; lower N");
}

// ------------------------------------------------------------- helpers ----

template <class F>
std::string vec_poly_str(const F& K, const Vec<F>& v, std::size_t n,
                         std::size_t d, const std::string& var) {
  std::string out;
  for (std::size_t w = 0; w < v.size(); ++w) {
    if (K.is_zero(v[w])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + K.str(v[w]) + ")";
    std::vector<std::size_t> word = index_word(w, n, d);
    for (std::size_t t : word) out += "*" + var + std::to_string(t + 1);
  }
  return out.empty() ? "0" : out;
}

inline njson dims_json(const std::vector<std::size_t>& dims) {
  njson a = njson::array();
  for (auto d : dims) a.push_back(d);
  return a;
}

// ------------------------------------------------------------- commands ---

namespace cmd {

template <class F>
int check_qyd(const F& K, const njson& cfg, const CliOptions& opt, njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  CheckReport<F> mod = check_module(p.M);
  CheckReport<F> qr = qyd_check(p.q);
  out["module_ok"] = mod.ok;
  out["qyd_ok"] = qr.ok;
  out["detail"] = qr.ok ? mod.detail : qr.detail;
  bool ok = mod.ok && qr.ok;
  if (p.yd) {
    CheckReport<F> yr = yd_check(*p.yd);
    out["yd_ok"] = yr.ok;
    if (!yr.ok) out["detail"] = yr.detail;
    ok = ok && yr.ok;
  }
  if (ok) {
    out["commutative_left"] = qyd_commutative_left(p.q).ok;
    out["commutative_right"] = qyd_commutative_right(p.q).ok;
    if (p.M.d == 1) {
      std::vector<typename F::Elem> alpha;
      for (gid g = 0; g < p.G->order(); ++g) alpha.push_back(p.M.of(g).at(0, 0));
      GAVec<F> pv = ga_zero(K, *p.G);
      for (const auto& [h, Lh] : p.q.L) pv[h] = Lh.at(0, 0);
      OneDimReport<F> od = classify_one_dim(K, *p.G, alpha, pv);
      out["one_dim"] = njson{{"is_qyd", od.is_qyd},
                             {"is_genuine_yd", od.is_genuine_yd}};
    }
  }
  out["ok"] = ok;
  return ok ? 0 : 1;
}

template <class F>
int free_double_pbw(const F& K, const njson& cfg, const CliOptions& opt,
                    njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  DoubleSpec<F> spec = free_double(p.q, N);
  PBWReport<F> rep = pbw_check(spec, opt.seed);
  out["pass"] = rep.pass;
  out["detail"] = rep.detail;
  njson slices = njson::array();
  bool dims_ok = true;
  for (const auto& [ab, dim] : rep.slice_dims) {
    const std::size_t expect =
        ipow(p.M.d, ab.first) * p.G->order() * ipow(p.M.d, ab.second);
    if (dim != expect) dims_ok = false;
    slices.push_back(njson{{"a", ab.first}, {"b", ab.second}, {"dim", dim}});
  }
  out["slices"] = slices;
  out["dims_match_free_formula"] = dims_ok;
  return (rep.pass && dims_ok) ? 0 : 1;
}

template <class F>
int minimal_relations(const F& K, const njson& cfg, const CliOptions& opt,
                      njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  DoubleSpec<F> spec = minimal_double(p.q, N);
  njson left = njson::array(), right = njson::array();
  std::vector<std::size_t> ldims, rdims;
  for (std::size_t n = 0; n <= N; ++n) {
    ldims.push_back(spec.leftRel[n].dim());
    rdims.push_back(spec.rightRel[n].dim());
    if (cfg.value("print_relations", false)) {
      njson ln = njson::array(), rn = njson::array();
      for (std::size_t i = 0; i < spec.leftRel[n].dim(); ++i)
        ln.push_back(vec_poly_str(K, mat_row(K, spec.leftRel[n].rows, i), n,
                                  p.M.d, "v"));
      for (std::size_t i = 0; i < spec.rightRel[n].dim(); ++i)
        rn.push_back(vec_poly_str(K, mat_row(K, spec.rightRel[n].rows, i), n,
                                  p.M.d, "f"));
      left.push_back(ln);
      right.push_back(rn);
    }
  }
  out["left_relation_dims"] = dims_json(ldims);
  out["right_relation_dims"] = dims_json(rdims);
  out["left_quotient_dims"] = [&] {
    std::vector<std::size_t> v;
    for (std::size_t n = 0; n <= N; ++n) v.push_back(spec.leftBasis[n].size());
    return dims_json(v);
  }();
  out["right_quotient_dims"] = [&] {
    std::vector<std::size_t> v;
    for (std::size_t n = 0; n <= N; ++n) v.push_back(spec.rightBasis[n].size());
    return dims_json(v);
  }();
  if (cfg.value("print_relations", false)) {
    out["left_relations"] = left;
    out["right_relations"] = right;
  }
  CheckReport<F> tri = check_triangular(spec);
  out["triangular"] = tri.ok;
  out["ok"] = tri.ok;
  return tri.ok ? 0 : 1;
}

template <class F>
int nichols_hilbert(const F& K, const njson& cfg, const CliOptions& opt,
                    njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const YDModule<F>& yd = require_yd(p);
  const std::size_t N = cfg.value("N", std::size_t{4});
  guard_qb(opt, p.M.d, p.G->order(), N);
  Matrix<F> Psi = yd_braiding(yd);
  std::vector<std::size_t> dims = braided_hilbert(K, Psi, p.M.d, N);
  out["dims"] = dims_json(dims);
  // cross-check against the coaction kernels
  std::vector<Subspace<F>> ker = qb_kernel_chain(p.q, N);
  bool agree = true;
  for (std::size_t n = 0; n <= N; ++n)
    if (ipow(p.M.d, n) - ker[n].dim() != dims[n]) agree = false;
  out["kernel_cross_check"] = agree;
  if (cfg.value("oracle", false)) {
    std::vector<std::size_t> wor =
        woronowicz_hilbert(K, Psi, p.M.d, std::min<std::size_t>(N, 5));
    out["oracle_dims"] = dims_json(wor);
    bool oagree = true;
    for (std::size_t n = 0; n < wor.size(); ++n)
      if (wor[n] != dims[n]) oagree = false;
    out["oracle_agrees"] = oagree;
    agree = agree && oagree;
  }
  out["ok"] = agree;
  return agree ? 0 : 1;
}

template <class F>
int deformed_hilbert(const F& K, const njson& cfg, const CliOptions& opt,
                     njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const YDModule<F>& yd = require_yd(p);
  const std::size_t N = cfg.value("N", std::size_t{4});
  guard_qb(opt, p.M.d, p.G->order(), N);
  Matrix<F> Psi = yd_braiding(yd);
  GenericPolicy pol{opt.seed, opt.trials};
  DeformedKernels dk = generic_deformed_kernels(K, Psi, p.M.d, N, pol);
  out["sampling_prime"] = dk.prime;
  out["kernel_dims"] = dims_json(dk.dims);
  std::vector<std::size_t> qdims;
  for (std::size_t n = 0; n <= N; ++n) qdims.push_back(ipow(p.M.d, n) - dk.dims[n]);
  out["quotient_dims"] = dims_json(qdims);
  out["trials"] = std::max(opt.trials, 3);
  out["ok"] = true;
  return 0;
}

template <class F>
DoubleSpec<F> double_by_choice(const F& K, const Parsed<F>& p, const njson& cfg,
                               std::size_t N) {
  const std::string choice = cfg.value("relations", "minimal");
  if (choice == "free") return free_double(p.q, N);
  if (choice == "minimal") return minimal_double(p.q, N);
  if (choice == "quadratic") return quadratic_double(p.q, N);
  if (choice == "symmetric") {
    Subspace<F> r2 = antisymmetric_relations(K, p.M.d);
    std::map<std::size_t, Subspace<F>> gens{{2, r2}};
    return double_from_relations(p.q, N, ideal_slices(K, p.M.d, gens, N),
                                 ideal_slices(K, p.M.d, gens, N));
  }
  if (choice == "coinvariant")
    return double_from_relations(p.q, N, coinvariant_relations(p.M, N),
                                 coinvariant_relations(module_dual(p.M), N));
  throw ConfigError("unknown relations choice '" + choice + "'");
}

template <class F>
int hc_gram_cmd(const F& K, const njson& cfg, const CliOptions& opt, njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  DoubleSpec<F> spec = double_by_choice(K, p, cfg, N);
  njson per = njson::array();
  bool cross_ok = true, nondeg = true;
  for (std::size_t n = 1; n <= N; ++n) {
    HCGram<F> g = hc_gram(spec, n);
    Matrix<F> alt = hc_gram_scalar_via_factorial(spec, n);
    const bool same = mat_eq(K, g.scalar, alt);
    cross_ok = cross_ok && same;
    if (g.rank != g.rows_words.size() || g.rank != g.cols_words.size())
      nondeg = false;
    njson e{{"degree", n},
            {"rows", g.rows_words.size()},
            {"cols", g.cols_words.size()},
            {"rank", g.rank},
            {"left_radical", g.left_radical},
            {"right_radical", g.right_radical},
            {"factorial_cross_check", same}};
    if (cfg.value("print_matrices", false)) {
      njson mg = njson::array();
      for (std::size_t r = 0; r < g.scalar.rows; ++r) {
        njson row = njson::array();
        for (std::size_t c = 0; c < g.scalar.cols; ++c)
          row.push_back(K.str(g.scalar.at(r, c)));
        mg.push_back(row);
      }
      e["scalar_gram"] = mg;
    }
    per.push_back(e);
  }
  out["degrees"] = per;
  out["factorial_cross_check"] = cross_ok;
  out["nondegenerate"] = nondeg;
  out["ok"] = cross_ok;
  return cross_ok ? 0 : 1;
}

template <class F>
int minimality_cmd(const F& K, const njson& cfg, const CliOptions& opt,
                   njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  DoubleSpec<F> spec = double_by_choice(K, p, cfg, N);
  MinimalityReport<F> rep = minimality_check(spec);
  out["minimal"] = rep.minimal;
  njson viol = njson::array();
  for (const auto& v : rep.violations) {
    njson w = njson::array();
    for (const auto& wit : v.witnesses)
      w.push_back(vec_poly_str(K, wit, v.degree, p.M.d, v.left ? "v" : "f"));
    viol.push_back(njson{
        {"degree", v.degree}, {"side", v.left ? "left" : "right"}, {"witnesses", w}});
  }
  out["violations"] = viol;
  out["ok"] = rep.minimal;
  return rep.minimal ? 0 : 1;
}

template <class F>
int cherednik_pbw(const F& K, const njson& cfg, const CliOptions& opt,
                  njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{4});
  guard_qb(opt, p.M.d, p.G->order(), N);
  const njson& sj = cfg.at("structure");
  const auto t = sj.contains("t") ? cfgdetail::parse_scalar(K, sj.at("t")) : K.zero();
  ReflectionParams<F> c = sj.contains("c") ? parse_params(K, p.M, sj.at("c"))
                                           : constant_params(p.M, K.zero());
  DoubleSpec<F> spec = cherednik_double(p.M, t, c, N);
  PBWReport<F> rep = pbw_check(spec, opt.seed);
  CheckReport<F> dims = cherednik_pbw_dims(spec);
  out["pass"] = rep.pass && dims.ok;
  out["detail"] = rep.pass ? dims.detail : rep.detail;
  njson slices = njson::array();
  for (const auto& [ab, dim] : rep.slice_dims)
    slices.push_back(njson{{"a", ab.first}, {"b", ab.second}, {"dim", dim}});
  out["slices"] = slices;
  out["ok"] = rep.pass && dims.ok;
  return (rep.pass && dims.ok) ? 0 : 1;
}

template <class F>
int dunkl_cmd(const F& K, const njson& cfg, const CliOptions& opt, njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  const njson& sj = cfg.at("structure");
  const auto t = sj.contains("t") ? cfgdetail::parse_scalar(K, sj.at("t")) : K.zero();
  ReflectionParams<F> c = sj.contains("c") ? parse_params(K, p.M, sj.at("c"))
                                           : constant_params(p.M, K.zero());
  CheckReport<F> rep = dunkl_check(p.M, t, c, N);
  out["ok"] = rep.ok;
  out["detail"] = rep.detail;
  return rep.ok ? 0 : 1;
}

template <class F>
int restricted_cmd(const F& K, const njson& cfg, const CliOptions& opt,
                   njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  const njson& sj = cfg.at("structure");
  ReflectionParams<F> c = sj.contains("c") ? parse_params(K, p.M, sj.at("c"))
                                           : constant_params(p.M, K.one());
  RestrictedReport<F> rep = restricted_dims(p.M, c, N);
  out["coinvariant_dims"] = dims_json(rep.coinv_dims);
  out["coinvariant_dual_dims"] = dims_json(rep.coinv_dual);
  out["complete"] = rep.complete;
  out["total_dim"] = rep.total_dim;
  bool ok = true;
  if (cfg.value("minimality", false)) {
    DoubleSpec<F> spec = restricted_cherednik_double(p.M, c, N);
    MinimalityReport<F> mr = minimality_check(spec);
    out["minimal"] = mr.minimal;
    ok = mr.minimal;
  }
  out["ok"] = ok;
  return ok ? 0 : 1;
}

template <class F>
int embed_cmd(const F& K, const njson& cfg, const CliOptions& opt, njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  const njson& sj = cfg.at("structure");
  const auto t = sj.contains("t") ? cfgdetail::parse_scalar(K, sj.at("t")) : K.zero();
  ReflectionParams<F> c = sj.contains("c") ? parse_params(K, p.M, sj.at("c"))
                                           : constant_params(p.M, K.one());
  guard_qb(opt, reflections(p.M).size(), p.G->order(), N);
  EmbedReport<F> rep = embed_check(p.M, t, c, N);
  out["pass"] = rep.pass;
  out["degenerate"] = rep.degenerate;
  out["detail"] = rep.detail;
  out["t_prime"] = K.str(rep.t_prime);
  out["cover_dims"] = dims_json(rep.quad_tau_dims);
  out["relations_ok"] = rep.relations_ok;
  out["commutators_ok"] = rep.commutators_ok;
  out["injective"] = rep.injective;
  out["ok"] = rep.pass;
  return rep.pass ? 0 : 1;
}

template <class F>
int fk_cmd(const F& K, const njson& cfg, const CliOptions& opt, njson& out) {
  const std::size_t m = cfg.value("n", std::size_t{3});
  const std::size_t N = cfg.value("N", std::size_t{5});
  ExampleBundle<F> b = transposition_example(K, m, true);
  guard_qb(opt, b.M.d, b.G->order(), N);
  Matrix<F> Psi = yd_braiding(*b.yd);
  std::vector<std::size_t> dims = braided_hilbert(K, Psi, b.M.d, N);
  out["dims"] = dims_json(dims);
  std::size_t total = 0;
  for (auto dd : dims) total += dd;
  out["total"] = total;
  // quadratic cover: same dimensions means the quadratic relations already
  // present the Nichols quotient in this range.
  DoubleSpec<F> quad = quadratic_double(b.q, N);
  std::vector<std::size_t> qdims;
  for (std::size_t n = 0; n <= N; ++n) qdims.push_back(quad.leftBasis[n].size());
  out["quadratic_cover_dims"] = dims_json(qdims);
  bool agree = qdims.size() == dims.size();
  for (std::size_t n = 0; agree && n <= N; ++n) agree = qdims[n] == dims[n];
  out["quadratic_cover_agrees"] = agree;
  if (cfg.value("oracle", false)) {
    std::vector<std::size_t> wor = woronowicz_hilbert(
        K, Psi, b.M.d, std::min<std::size_t>(N, cfg.value("oracle_max", std::size_t{4})));
    out["oracle_dims"] = dims_json(wor);
    bool oagree = true;
    for (std::size_t n = 0; n < wor.size(); ++n)
      if (wor[n] != dims[n]) oagree = false;
    out["oracle_agrees"] = oagree;
  }
  out["ok"] = true;
  return 0;
}

template <class F>
int kaplansky_cmd(const F& K, const njson& cfg, const CliOptions& opt,
                  njson& out) {
  const std::size_t dim = cfg.value("dim", std::size_t{2});
  auto C2 = std::make_shared<FinGroup>(FinGroup::cyclic(2));
  guard_qb(opt, dim, 2, dim + 1);
  ExteriorSmashReport<F> rep = exterior_smash_report(K, *C2, dim);
  out["nichols_dims"] = dims_json(rep.nichols_dims);
  out["smash_dim"] = rep.smash_dim;
  if (dim == 2) {
    out["omega_central"] = rep.omega_central;
    out["omega_square_zero"] = rep.omega_square_zero;
  }
  out["delta_multiplicative"] = rep.delta_multiplicative;
  out["pass"] = rep.pass;
  out["detail"] = rep.detail;
  out["ok"] = rep.pass;
  return rep.pass ? 0 : 1;
}

template <class F>
int standard_module_cmd(const F& K, const njson& cfg, const CliOptions& opt,
                        njson& out) {
  Parsed<F> p = parse_bundle(K, cfg, opt);
  const std::size_t N = cfg.value("N", std::size_t{3});
  guard_qb(opt, p.M.d, p.G->order(), N);
  DoubleSpec<F> spec = double_by_choice(K, p, cfg, N);
  GModule<F> rho = cfg.contains("rho")
                       ? parse_module(K, *p.G, cfg.at("rho"))
                       : module_trivial(K, *p.G, 1);
  StandardModule<F> sm = standard_module(spec, rho);
  CheckReport<F> ax = standard_module_check(spec, rho, sm);
  out["total_dim"] = sm.total_dim;
  std::vector<std::size_t> per;
  for (std::size_t n = 0; n <= N; ++n)
    per.push_back(spec.leftBasis[n].size() * rho.d);
  out["degree_dims"] = dims_json(per);
  out["axioms_ok"] = ax.ok;
  out["detail"] = ax.detail;
  if (cfg.value("print_matrices", false)) {
    auto dump = [&](const Matrix<F>& M) {
      njson rows = njson::array();
      for (std::size_t r = 0; r < M.rows; ++r) {
        njson row = njson::array();
        for (std::size_t cc = 0; cc < M.cols; ++cc) row.push_back(K.str(M.at(r, cc)));
        rows.push_back(row);
      }
      return rows;
    };
    njson av = njson::array(), af = njson::array();
    for (const auto& M : sm.act_v) av.push_back(dump(M));
    for (const auto& M : sm.act_f) af.push_back(dump(M));
    out["act_v"] = av;
    out["act_f"] = af;
  }
  out["ok"] = ax.ok;
  return ax.ok ? 0 : 1;
}

}  // namespace cmd

// ------------------------------------------------------------- driver -----

namespace cfgdetail {

inline void csv_flatten(const njson& j, const std::string& prefix,
                        std::string& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      csv_flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(),
                  out);
  } else if (j.is_array()) {
    bool scalar_only = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) scalar_only = false;
    if (scalar_only) {
      out += prefix + ",";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ";";
        out += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
      }
      out += "\n";
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        csv_flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out += prefix + "," +
           (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace cfgdetail

inline RunResult run_command(const std::vector<std::string>& args) {
  RunResult rr;
  CLI::App app{"braided doubles over finite group algebras"};
  app.require_subcommand(1);
  CliOptions opt;
  app.add_option("--config", opt.config_path, "path to a JSON configuration");
  app.add_option("--seed", opt.seed, "RNG seed for sampling-based checks");
  app.add_option("--trials", opt.trials, "genericity trials (>= 2)");
  app.add_option("--output", opt.output, "write the result to this file");
  app.add_option("--format", opt.format, "output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", opt.threads, "reserved; computations are exact");
  app.add_option("--max-group-order", opt.max_group_order,
                 "refuse groups larger than this");
  app.add_option("--max-matrix-dim", opt.max_matrix_dim,
                 "refuse computations with larger matrices");
  const std::vector<std::string> names = {
      "check-qyd",      "free-double-pbw", "minimal-relations",
      "nichols-hilbert", "deformed-hilbert", "hc-gram",
      "minimality",     "cherednik-pbw",   "dunkl-check",
      "restricted-dims", "embed-check",     "fomin-kirillov",
      "kaplansky",      "standard-module"};
  const std::vector<std::string> descr = {
      "validate a quasicoaction and classify its shape",
      "PBW slices of the free double",
      "degreewise minimal relation spaces of both halves",
      "graded dimensions of the Nichols-Woronowicz quotient",
      "generic deformed kernel dimensions",
      "Harish-Chandra pairing Gram matrices and ranks",
      "degreewise minimality audit of a double",
      "PBW slices of a rational Cherednik algebra",
      "Dunkl-operator form of the cross commutators",
      "coinvariant dimensions of the restricted quotient",
      "embedding into the double over the reflection-conjugation module",
      "transposition-module Nichols dimensions",
      "exterior smash example audit",
      "standard module matrices and axioms"};
  for (std::size_t i = 0; i < names.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descr[i]);
    sub->fallthrough();
  }
  std::vector<const char*> argv;
  argv.push_back("bdtool");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream so, se;
    const int code = app.exit(e, so, se);
    rr.out = so.str();
    rr.err = se.str();
    rr.code = code == 0 ? 0 : 2;
    return rr;
  }
  njson cfg = njson::object();
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) {
      rr.err = "cannot open config file: " + opt.config_path + "\n";
      rr.code = 2;
      return rr;
    }
    try {
      in >> cfg;
    } catch (const std::exception& e) {
      rr.err = std::string("config parse error: ") + e.what() + "\n";
      rr.code = 2;
      return rr;
    }
  }
  std::string cmd_name;
  for (const auto& n : names)
    if (app.got_subcommand(n)) cmd_name = n;
  njson out;
  out["command"] = cmd_name;
  out["field"] = cfgdetail::field_name(cfg);
  out["seed"] = opt.seed;
  int code = 2;
  try {
    code = dispatch_field(cfg, [&](const auto& K) {
      if (cmd_name == "check-qyd") return cmd::check_qyd(K, cfg, opt, out);
      if (cmd_name == "free-double-pbw") return cmd::free_double_pbw(K, cfg, opt, out);
      if (cmd_name == "minimal-relations")
        return cmd::minimal_relations(K, cfg, opt, out);
      if (cmd_name == "nichols-hilbert")
        return cmd::nichols_hilbert(K, cfg, opt, out);
      if (cmd_name == "deformed-hilbert")
        return cmd::deformed_hilbert(K, cfg, opt, out);
      if (cmd_name == "hc-gram") return cmd::hc_gram_cmd(K, cfg, opt, out);
      if (cmd_name == "minimality") return cmd::minimality_cmd(K, cfg, opt, out);
      if (cmd_name == "cherednik-pbw") return cmd::cherednik_pbw(K, cfg, opt, out);
      if (cmd_name == "dunkl-check") return cmd::dunkl_cmd(K, cfg, opt, out);
      if (cmd_name == "restricted-dims") return cmd::restricted_cmd(K, cfg, opt, out);
      if (cmd_name == "embed-check") return cmd::embed_cmd(K, cfg, opt, out);
      if (cmd_name == "fomin-kirillov") return cmd::fk_cmd(K, cfg, opt, out);
      if (cmd_name == "kaplansky") return cmd::kaplansky_cmd(K, cfg, opt, out);
      if (cmd_name == "standard-module")
        return cmd::standard_module_cmd(K, cfg, opt, out);
      throw ConfigError("unknown command");
    });
  } catch (const ConfigError& e) {
    rr.err = std::string("input error: ") + e.what() + "\n";
    rr.code = 2;
    return rr;
  } catch (const ComputeError& e) {
    rr.err = std::string("input error: ") + e.what() + "\n";
    rr.code = 2;
    return rr;
  } catch (const std::exception& e) {
    rr.err = std::string("error: ") + e.what() + "\n";
    rr.code = 2;
    return rr;
  }
  std::string payload;
  if (opt.format == "csv") {
    cfgdetail::csv_flatten(out, "", payload);
  } else {
    payload = out.dump(2) + "\n";
  }
  rr.out = payload;
  rr.code = code;
  if (!opt.output.empty()) {
    std::ofstream of(opt.output);
    if (!of) {
      rr.err = "cannot write output file: " + opt.output + "\n";
      rr.code = 2;
      return rr;
    }
    of << payload;
    rr.wrote_file = true;
  }
  return rr;
}

}  // namespace bd
