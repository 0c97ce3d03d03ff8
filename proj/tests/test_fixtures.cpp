#include <doctest.h>

#include <algorithm>
#include <set>

#include "hinv/json_io.hpp"
#include "hinv/oracle.hpp"
#include "support.hpp"

using namespace hinv;
using testing::fixture;

namespace {

std::vector<std::filesystem::path> json_files(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Subspace span(const std::vector<WedgeElement>& basis, std::size_t dim) {
  std::vector<Vector> coords;
  for (const auto& r : basis) coords.push_back(r.pair_coordinates());
  return Subspace(pair_count(dim), coords);
}

std::set<std::string> stems(const std::filesystem::path& dir) {
  std::set<std::string> out;
  for (const auto& p : json_files(dir)) out.insert(p.stem().string());
  return out;
}

}  // namespace

TEST_CASE("corpus covers the nilpotent list, abelians and controls") {
  auto names = stems(fixture("lie"));
  for (const char* n : {"L3_2", "L4_2", "L4_3", "L5_2", "L5_3", "L5_4", "L5_5", "L5_6", "L5_7", "L5_8", "L5_9",
                        "heisenberg3", "heisenberg5", "sl2", "abelian1", "abelian2", "abelian3", "abelian4",
                        "abelian5", "abelian6"})
    CHECK_MESSAGE(names.count(n) == 1, n);
  for (const auto& p : json_files(fixture("lie"))) {
    LieAlgebra g = load_lie(p);
    CHECK_MESSAGE(validate(g).valid(), p.filename().string());
    CHECK(g.dim() <= 6);
  }
}

TEST_CASE("invariant_wedge2 matches the frozen oracle output") {
  CHECK(stems(fixture("lie")) == stems(fixture("expected/invariants")));
  for (const auto& p : json_files(fixture("expected/invariants"))) {
    CAPTURE(p.filename().string());
    Json doc = read_json_file(p);
    CHECK(doc.at("source") == "oracle");
    LieAlgebra g = load_lie(fixture("lie") / doc.at("algebra").get<std::string>());
    std::vector<WedgeElement> frozen;
    for (const auto& w : doc.at("basis")) frozen.push_back(wedge_from_json(w, g.dim()));
    CHECK(frozen.size() == doc.at("dimension").get<std::size_t>());

    auto basis = invariant_wedge2(g);
    CHECK(basis == frozen);
    CHECK(span(oracle_invariants(g), g.dim()) == span(basis, g.dim()));
  }
}

TEST_CASE("classification reports match hand-checked fixtures") {
  CHECK(stems(fixture("groups")) == stems(fixture("expected/classify")));
  for (const auto& p : json_files(fixture("expected/classify"))) {
    CAPTURE(p.filename().string());
    Json doc = read_json_file(p);
    CHECK(doc.at("source") == "hand");
    GroupInput in = load_group(fixture("groups") / doc.at("group").get<std::string>());
    ClassificationReport r = classify_connected(in);
    CHECK(report_to_json(r, in.lie) == doc.at("report"));
    CHECK(r.additive_dim == r.mixed_basis.size() + r.invariant_basis.size());
    CHECK(r.bset_summary.size() == r.additive_dim);
  }
}

TEST_CASE("oracle examples") {
  CHECK(oracle_invariants(load_lie(fixture("lie/heisenberg3.json"))).size() == 2);
  CHECK(oracle_invariants(load_lie(fixture("lie/abelian4.json"))).size() == 6);
  CHECK(oracle_invariants(load_lie(fixture("lie/sl2.json"))).empty());
}
