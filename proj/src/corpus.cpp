#include "hinv/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "hinv/invariants.hpp"
#include "hinv/json_io.hpp"
#include "hinv/twist.hpp"

namespace hinv {

namespace {

class Tallies {
 public:
  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    CheckTally& t = get(name);
    ++t.total;
    if (ok)
      ++t.passed;
    else if (t.first_failure.empty())
      t.first_failure = detail.empty() ? "failed" : detail;
  }
  CheckTally& get(const std::string& name) {
    for (auto& t : tallies_)
      if (t.name == name) return t;
    CheckTally& t = tallies_.emplace_back();
    t.name = name;
    return t;
  }
  std::vector<CheckTally> take() { return std::move(tallies_); }

 private:
  std::vector<CheckTally> tallies_;
};

const char* const kPbwChecks[] = {"twist_defect", "invariance_defect"};
const char* const kPairChecks[] = {"central_z", "product_relation"};

}  // namespace

bool AlgebraCheckReport::passed() const {
  if (!error.empty()) return false;
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.ok(); });
}

AlgebraCheckReport check_algebra(const LieAlgebra& g, const CorpusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  AlgebraCheckReport rep;
  rep.dim = g.dim();
  Tallies tallies;
  const int n = options.trunc;

  try {
    ValidationReport v = validate(g);
    tallies.record("valid", v.valid(), v.valid() ? "" : v.violations.front().message);
    if (v.valid()) {
      auto basis = invariant_wedge2(g);
      rep.invariant_dim = basis.size();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const WedgeElement& r = basis[k];
        const std::string which = "basis element " + std::to_string(k);
        tallies.record("cyb", cyb_residual(g, r).empty(), which);
        tallies.record("components_commute", components_commute(g, r), which);
        Subspace h = support(r);
        auto failure = abelian_ideal_failure(g, h);
        tallies.record("support_abelian_ideal", !failure, which + ": " + failure.value_or(""));
        try {
          SupportData d = theta_lie(g, r);
          tallies.record("support_symplectic", check_symplectic_cocycle(g, d.omega, d.support), which);
          tallies.record("theta_round_trip", theta_lie_inverse(d) == r, which);
        } catch (const Error& e) {
          tallies.record("support_symplectic", false, which + ": " + e.what());
          tallies.record("theta_round_trip", false, which + ": " + e.what());
        }
      }

      auto engine = std::make_shared<const pbw::Engine>(g);
      if (!basis.empty() && !engine->has_weights()) {
        for (const char* name : kPbwChecks) tallies.record(name, false, "basis admits no weight filtration");
      } else {
        const pbw::Bounds bound = basis.empty() ? pbw::Bounds{} : pbw::degree_window(*engine, n, 2, 2);
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const std::string which = "basis element " + std::to_string(k);
          pbw::Tensor j = pbw::twist_from_wedge(engine, basis[k], bound);
          tallies.record("twist_defect", pbw::twist_defect(j, n).is_zero(), which);
          auto defects = pbw::invariance_defect(j, n);
          bool all_zero = std::all_of(defects.begin(), defects.end(), [](const pbw::Tensor& t) { return t.is_zero(); });
          tallies.record("invariance_defect", all_zero, which);
        }
        if (options.pairs)
          for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
              if (a == b) continue;
              const std::string which = "pair (" + std::to_string(a) + ", " + std::to_string(b) + ")";
              CentralElement ce = central_element_z(engine, basis[a], basis[b]);
              tallies.record("central_z",
                             ce.identity_holds && ce.z_central && ce.c_symmetric && ce.nested_commute &&
                                 ce.z_routes_agree,
                             which);
              tallies.record("product_relation", pbw::verify_product_relation(engine, basis[a], basis[b], n).holds(),
                             which);
            }
      }
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  // keep every column present so tables line up across algebras
  for (const char* name : {"cyb", "components_commute", "support_abelian_ideal", "support_symplectic",
                           "theta_round_trip"})
    tallies.get(name);
  for (const char* name : kPbwChecks) tallies.get(name);
  if (options.pairs)
    for (const char* name : kPairChecks) tallies.get(name);
  rep.checks = tallies.take();
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::vector<AlgebraCheckReport> run_corpus(const std::filesystem::path& dir, const CorpusOptions& options) {
  if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<AlgebraCheckReport> out(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) {
      try {
        out[k] = check_algebra(load_lie(files[k]), options);
      } catch (const std::exception& e) {
        out[k].error = e.what();
      }
      out[k].file = files[k].filename().string();
    }
  };
  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace hinv
