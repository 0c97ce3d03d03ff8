// Writes the oracle's invariant bases for every Lie fixture:
//   freeze_expected <fixtures/v1/lie> <fixtures/v1/expected/invariants>

#include <algorithm>
#include <fstream>
#include <iostream>

#include "hinv/json_io.hpp"
#include "hinv/oracle.hpp"

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: freeze_expected LIE_DIR OUT_DIR\n";
    return 2;
  }
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(argv[1]))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  fs::create_directories(argv[2]);
  for (const auto& f : files) {
    hinv::LieAlgebra g = hinv::load_lie(f);
    auto basis = hinv::oracle_invariants(g);
    hinv::Json out;
    out["algebra"] = f.filename().string();
    out["source"] = "oracle";
    out["oracle"] = "oracle_invariants: kernel of the full tensor-expansion invariance system";
    out["dimension"] = basis.size();
    hinv::Json arr = hinv::Json::array();
    for (const auto& r : basis) {
      hinv::Json w = hinv::wedge_to_json(r);
      w["text"] = hinv::format_wedge(r, g);
      arr.push_back(w);
    }
    out["basis"] = arr;
    std::ofstream(fs::path(argv[2]) / f.filename()) << out.dump(2) << "\n";
    std::cout << f.filename().string() << ": " << basis.size() << "\n";
  }
}
