// hinv: command-line front end for invariant computations and classification.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hinv/classify.hpp"
#include "hinv/corpus.hpp"
#include "hinv/json_io.hpp"
#include "hinv/twist.hpp"

using namespace hinv;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInputError = 2 };

struct Config {
  std::string command;
  std::string input;
  int trunc = 6;
  std::string format = "json";
  std::string out;
  std::string r, s;
  bool pairs = true;
  bool timings = false;
  unsigned threads = 0;
};

struct Result {
  Json json;
  std::string text;
  int status = kOk;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

Json header(const Config& c) {
  Json j;
  j["schema_version"] = kReportSchemaVersion;
  j["command"] = c.command;
  j["input"] = c.input;
  return j;
}

Json wedge_json(const WedgeElement& r, const LieAlgebra& g) {
  Json j = wedge_to_json(r);
  j["text"] = format_wedge(r, g);
  return j;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Algebra that passed validate(); anything else is reported as a failed run.
std::optional<Result> reject_invalid(const Config& c, const LieAlgebra& g) {
  ValidationReport v = validate(g);
  if (v.valid()) return std::nullopt;
  Result res{header(c), "invalid Lie algebra:\n", kFailed};
  Json list = Json::array();
  for (const auto& x : v.violations) {
    list.push_back(x.message);
    res.text += "  " + x.message + "\n";
  }
  res.json["valid"] = false;
  res.json["violations"] = list;
  return res;
}

// --r given: that element; otherwise the invariant basis.
std::vector<WedgeElement> targets(const Config& c, const LieAlgebra& g) {
  if (!c.r.empty()) return {parse_wedge_argument(c.r, g.dim())};
  return invariant_wedge2(g);
}

Result cmd_validate(const Config& c) {
  LieAlgebra g = load_lie(c.input);
  ValidationReport v = validate(g);
  Result res{header(c), "", v.valid() ? kOk : kFailed};
  res.json["dim"] = g.dim();
  res.json["valid"] = v.valid();
  Json list = Json::array();
  for (const auto& x : v.violations) {
    const char* kind = x.kind == Violation::Kind::antisymmetry ? "antisymmetry"
                       : x.kind == Violation::Kind::jacobi     ? "jacobi"
                                                               : "ideal";
    list.push_back({{"kind", kind}, {"indices", x.indices}, {"message", x.message}});
  }
  res.json["violations"] = list;
  std::ostringstream text;
  text << "dimension " << g.dim() << ": " << (v.valid() ? "valid" : "INVALID") << "\n";
  for (const auto& x : v.violations) text << "  " << x.message << "\n";
  if (v.valid()) {
    auto lcs = lower_central_series(g);
    res.json["nilpotency_class"] = lcs.nilpotency_class ? Json(*lcs.nilpotency_class) : Json();
    res.json["center_dim"] = center(g).dim();
    text << "nilpotency class: " << (lcs.nilpotency_class ? std::to_string(*lcs.nilpotency_class) : "not nilpotent")
         << "\ncenter dimension: " << center(g).dim() << "\n";
  }
  res.text = text.str();
  return res;
}

Result cmd_invariants(const Config& c) {
  LieAlgebra g = load_lie(c.input);
  if (auto bad = reject_invalid(c, g)) return *bad;
  auto basis = invariant_wedge2(g);
  Result res{header(c), {}, kOk};
  res.json["dimension"] = basis.size();
  Json arr = Json::array();
  std::ostringstream text;
  text << "invariant subspace of dimension " << basis.size() << "\n";
  for (const auto& r : basis) {
    arr.push_back(wedge_json(r, g));
    text << "  " << format_wedge(r, g) << "\n";
  }
  res.json["basis"] = arr;
  res.text = text.str();
  return res;
}

Result cmd_cyb(const Config& c) {
  LieAlgebra g = load_lie(c.input);
  if (auto bad = reject_invalid(c, g)) return *bad;
  Result res{header(c), {}, kOk};
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& r : targets(c, g)) {
    Tensor3 t = cyb_residual(g, r);
    bool commute = components_commute(g, r);
    if (!t.empty()) res.status = kFailed;
    arr.push_back({{"r", wedge_json(r, g)},
                   {"invariant", is_invariant(g, r)},
                   {"residual", tensor3_to_json(t)},
                   {"residual_zero", t.empty()},
                   {"components_commute", commute}});
    text << format_wedge(r, g) << "\n  CYB(r) = " << format_tensor3(t, g)
         << "\n  components commute: " << yes_no(commute) << "\n";
  }
  res.json["results"] = arr;
  res.text = text.str();
  return res;
}

Result cmd_support(const Config& c) {
  LieAlgebra g = load_lie(c.input);
  if (auto bad = reject_invalid(c, g)) return *bad;
  Result res{header(c), {}, kOk};
  Json arr = Json::array();
  std::ostringstream text;
  for (const auto& r : targets(c, g)) {
    SupportData d = theta_lie(g, r);
    bool cocycle = check_symplectic_cocycle(g, d.omega, d.support);
    bool round_trip = theta_lie_inverse(d) == r;
    bool abelian = is_abelian_ideal(g, d.support);
    if (!cocycle || !round_trip || !abelian) res.status = kFailed;
    arr.push_back({{"r", wedge_json(r, g)},
                   {"support_dim", d.support.dim()},
                   {"support_basis", vectors_to_json(d.support.basis())},
                   {"omega", matrix_to_json(d.omega)},
                   {"abelian_ideal", abelian},
                   {"symplectic_cocycle", cocycle},
                   {"round_trip", round_trip},
                   {"minimal", is_minimal(r, Subspace::whole(g.dim()))}});
    text << format_wedge(r, g) << "\n  support dimension " << d.support.dim() << ", abelian ideal: " << yes_no(abelian)
         << ", cocycle: " << yes_no(cocycle) << ", round trip: " << yes_no(round_trip) << "\n";
  }
  res.json["results"] = arr;
  res.text = text.str();
  return res;
}

void require_trunc(const Config& c) {
  if (c.trunc < 3) throw UsageError("--trunc must be at least 3 for " + c.command);
}

Result cmd_central_z(const Config& c) {
  require_trunc(c);
  if (c.r.empty() || c.s.empty()) throw UsageError("central-z needs --r and --s");
  LieAlgebra g = load_lie(c.input);
  if (auto bad = reject_invalid(c, g)) return *bad;
  auto engine = std::make_shared<const pbw::Engine>(g);
  WedgeElement r = parse_wedge_argument(c.r, g.dim()), s = parse_wedge_argument(c.s, g.dim());
  CentralElement ce = central_element_z(engine, r, s);
  bool ok = ce.identity_holds && ce.z_central && ce.c_symmetric && ce.nested_commute && ce.z_routes_agree;
  // the identity is exact; also report it at the requested truncation
  pbw::Tensor one = pbw::Tensor::one(engine, 1);
  pbw::Tensor lhs = pbw::coproduct(ce.z) - pbw::outer(ce.z, one) - pbw::outer(one, ce.z);
  bool truncated_ok = (lhs - ce.bracket_rs).truncated_degree(c.trunc).is_zero();
  Result res{header(c), "", ok && truncated_ok ? kOk : kFailed};
  res.json["trunc"] = c.trunc;
  res.json["r"] = wedge_json(r, g);
  res.json["s"] = wedge_json(s, g);
  res.json["bracket_rs"] = tensor_to_json(ce.bracket_rs);
  res.json["bracket_rs_text"] = format_tensor(ce.bracket_rs);
  res.json["z"] = tensor_to_json(ce.z);
  res.json["z_text"] = format_tensor(ce.z);
  res.json["identity_holds"] = ce.identity_holds && truncated_ok;
  res.json["z_central"] = ce.z_central;
  res.json["c_symmetric"] = ce.c_symmetric;
  res.json["nested_commute"] = ce.nested_commute;
  res.json["z_routes_agree"] = ce.z_routes_agree;
  std::ostringstream text;
  text << "[r, s] = " << format_tensor(ce.bracket_rs) << "\nz = " << format_tensor(ce.z)
       << "\nDelta(z) - z (x) 1 - 1 (x) z = [r, s]: " << yes_no(ce.identity_holds && truncated_ok)
       << "\nz central: " << yes_no(ce.z_central) << "\n";
  res.text = text.str();
  return res;
}

Result cmd_twist_verify(const Config& c) {
  require_trunc(c);
  LieAlgebra g = load_lie(c.input);
  if (auto bad = reject_invalid(c, g)) return *bad;
  auto engine = std::make_shared<const pbw::Engine>(g);
  const int n = c.trunc;
  Result res{header(c), {}, kOk};
  res.json["trunc"] = n;
  std::ostringstream text;

  auto list = targets(c, g);
  Json twists = Json::array();
  for (const auto& r : list) {
    if (!is_invariant(g, r)) throw PreconditionError("twist-verify: " + format_wedge(r, g) + " is not ad-invariant");
    pbw::Tensor j = pbw::twist_from_wedge(engine, r, pbw::degree_window(*engine, n, 2, 2));
    pbw::Tensor defect = pbw::twist_defect(j, n);
    auto inv = pbw::invariance_defect(j, n);
    bool inv_zero = std::all_of(inv.begin(), inv.end(), [](const pbw::Tensor& t) { return t.is_zero(); });
    if (!defect.is_zero() || !inv_zero) res.status = kFailed;
    twists.push_back({{"r", wedge_json(r, g)},
                      {"twist_defect", tensor_to_json(defect)},
                      {"twist_defect_zero", defect.is_zero()},
                      {"invariance_defect_zero", inv_zero}});
    text << "J = exp(" << format_wedge(r, g) << " / 2): twist defect " << (defect.is_zero() ? "0" : "NONZERO")
         << ", invariance defect " << (inv_zero ? "0" : "NONZERO") << "\n";
  }
  res.json["twists"] = twists;

  std::vector<std::pair<WedgeElement, WedgeElement>> pairs;
  if (!c.s.empty()) {
    WedgeElement s = parse_wedge_argument(c.s, g.dim());
    for (const auto& r : list) pairs.emplace_back(r, s);
  } else if (c.r.empty() && c.pairs) {
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = 0; b < list.size(); ++b)
        if (a != b) pairs.emplace_back(list[a], list[b]);
  }
  Json products = Json::array();
  for (const auto& [r, s] : pairs) {
    pbw::ProductRelation rel = pbw::verify_product_relation(engine, r, s, n);
    if (!rel.holds()) res.status = kFailed;
    products.push_back({{"r", wedge_json(r, g)},
                        {"s", wedge_json(s, g)},
                        {"z", format_tensor(rel.z)},
                        {"product_residual_zero", rel.product_residual.is_zero()},
                        {"gauge_residual_zero", rel.gauge_residual.is_zero()}});
    text << "J_r J_s = J_{r+s} exp([r,s]/8) for r = " << format_wedge(r, g) << ", s = " << format_wedge(s, g) << ": "
         << yes_no(rel.product_residual.is_zero()) << "; gauge = coboundary(exp(z/8)): "
         << yes_no(rel.gauge_residual.is_zero()) << "\n";
  }
  res.json["product_relations"] = products;
  res.text = text.str();
  return res;
}

Result cmd_classify(const Config& c) {
  GroupInput in = load_group(c.input);
  ClassificationReport r = classify_connected(in);
  Result res{header(c), {}, kOk};
  Json body = report_to_json(r, in.lie);
  for (const auto& [k, v] : body.items()) res.json[k] = v;
  std::ostringstream text;
  text << "H^2_inv ~ " << (r.is_trivial() ? "trivial group" : r.isomorphism_type()) << "\n"
       << "lattice part: (k^x)^" << r.kx_rank;
  for (const auto& d : r.finite_factors) text << " x Z/" << d.get_str();
  text << "\nadditive part: k^" << r.additive_dim << " (dim z_r = " << r.z_r_dim << ", dim z_u = " << r.z_u_dim
       << ", invariants in wedge^2 g_u: " << r.invariant_basis.size() << ")\n";
  for (const auto& w : r.mixed_basis) text << "  " << format_wedge(w, in.lie) << "\n";
  for (const auto& w : r.invariant_basis) text << "  " << format_wedge(w, in.lie) << "\n";
  res.text = text.str();
  return res;
}

Result cmd_bset(const Config& c) {
  GroupInput in = load_group(c.input);
  ClassificationReport report = classify_connected(in);
  auto elems = bset_elements(in);
  std::vector<WedgeElement> basis = report.mixed_basis;
  basis.insert(basis.end(), report.invariant_basis.begin(), report.invariant_basis.end());
  Result res{header(c), {}, kOk};
  Json arr = Json::array();
  std::ostringstream text;
  if (elems.empty()) text << "only the identity element e\n";
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const auto& e = elems[k];
    arr.push_back({{"r", wedge_json(basis[k], in.lie)},
                   {"support_dim", e.data.support.dim()},
                   {"support_basis", vectors_to_json(e.data.support.basis())},
                   {"omega", matrix_to_json(e.data.omega)},
                   {"minimal", e.minimal}});
    text << format_wedge(basis[k], in.lie) << ": support dimension " << e.data.support.dim()
         << (e.minimal ? ", minimal" : "") << "\n";
  }
  res.json["identity_only"] = elems.empty();
  res.json["elements"] = arr;
  res.text = text.str();
  return res;
}

Result cmd_corpus(const Config& c) {
  CorpusOptions opt;
  opt.trunc = c.trunc;
  opt.pairs = c.pairs;
  opt.threads = c.threads;
  auto reports = run_corpus(c.input, opt);
  Result res{header(c), {}, kOk};
  Json files = Json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    if (!r.passed()) res.status = kFailed;
    files.push_back(check_report_to_json(r, c.timings));

    text << (r.passed() ? "PASS " : "FAIL ") << r.file << "  dim " << r.dim << ", invariants " << r.invariant_dim;
    if (c.timings) text << ", " << r.seconds << " s";
    text << "\n";
    if (!r.error.empty()) text << "    error: " << r.error << "\n";
    for (const auto& t : r.checks)
      if (!t.ok()) text << "    " << t.name << ": " << t.passed << "/" << t.total << " (" << t.first_failure << ")\n";
  }
  std::size_t passed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  res.json["files"] = files;
  res.json["passed"] = passed;
  res.json["total"] = reports.size();
  text << passed << "/" << reports.size() << " files passed\n";
  res.text = text.str();
  return res;
}

Result dispatch(const Config& c) {
  if (c.command == "validate") return cmd_validate(c);
  if (c.command == "invariants") return cmd_invariants(c);
  if (c.command == "cyb") return cmd_cyb(c);
  if (c.command == "support") return cmd_support(c);
  if (c.command == "central-z") return cmd_central_z(c);
  if (c.command == "twist-verify") return cmd_twist_verify(c);
  if (c.command == "classify") return cmd_classify(c);
  if (c.command == "bset") return cmd_bset(c);
  return cmd_corpus(c);
}

int emit(const Config& c, const Result& res) {
  std::string body = c.format == "json" ? res.json.dump(2) + "\n" : res.text;
  if (c.out.empty()) {
    std::cout << body;
    return res.status;
  }
  std::ofstream out(c.out);
  if (!out || !(out << body)) {
    std::cerr << "hinv: cannot write " << c.out << "\n";
    return kInputError;
  }
  return res.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant wedge elements, twists and classification for Lie algebra data"};
  app.require_subcommand(1);
  Config c;

  struct Spec {
    const char* name;
    const char* help;
    bool wedges;
  };
  const Spec specs[] = {
      {"validate", "Check antisymmetry, Jacobi and the unipotent ideal", false},
      {"invariants", "Basis of the ad-invariant part of wedge^2 g", false},
      {"cyb", "Classical Yang-Baxter residual of --r (default: every basis invariant)", true},
      {"support", "Support and symplectic form of --r (default: every basis invariant)", true},
      {"central-z", "Central element z for invariants --r and --s", true},
      {"twist-verify", "Twist, invariance and product identities of exp(r/2)", true},
      {"classify", "Classify invariant cohomology of a connected group input", false},
      {"bset", "Support pairs of the basis invariants of a group input", false},
      {"corpus", "Run the property suite over every JSON file in a directory", false},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("input", c.input, std::string(s.name) == "corpus" ? "Directory of inputs" : "Input JSON file")
        ->required();
    sub->add_option("--trunc", c.trunc, "Per-factor PBW degree bound N")->capture_default_str();
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_option("--out", c.out, "Write the report here instead of standard output");
    if (s.wedges) {
      sub->add_option("--r", c.r, "Wedge element: \"i,j\" for x_i ^ x_j, or {\"terms\": {...}}");
      sub->add_option("--s", c.s, "Second wedge element, same syntax");
    }
    if (std::string(s.name) == "corpus" || std::string(s.name) == "twist-verify") {
      app.get_subcommand(s.name)->add_flag("!--no-pairs", c.pairs, "Skip pairwise product-relation checks");
    }
    if (std::string(s.name) == "corpus") {
      sub->add_flag("--timings", c.timings, "Include per-file timings (reports are then not reproducible)");
      sub->add_option("--threads", c.threads, "Worker threads (0: hardware concurrency)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  c.command = app.get_subcommands().front()->get_name();
  if (c.trunc < 0) {
    std::cerr << "hinv: --trunc must be nonnegative\n";
    return kInputError;
  }

  try {
    return emit(c, dispatch(c));
  } catch (const SchemaError& e) {
    std::cerr << "hinv: schema error: " << e.what() << "\n";
    return kInputError;
  } catch (const IoError& e) {
    std::cerr << "hinv: " << e.what() << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    std::cerr << "hinv: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "hinv: " << e.what() << "\n";
    return kFailed;
  }
}
