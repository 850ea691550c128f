#pragma once

// Runs ingest over a .conllu fixture and compares it with the sibling
// .expected file. Lines there are either
//   <keep|drop> <n_min> <read> <kept> <non_tree> <below_n_min>
// or
//   error <line>
// meaning ingestion must fail with a parse error at that line.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "deplen/error.hpp"
#include "deplen/treebank_io.hpp"

namespace fixtures {

// Empty result means every expectation held.
inline std::vector<std::string> check(const std::filesystem::path& conllu) {
  std::filesystem::path expected = conllu;
  expected.replace_extension(".expected");
  std::ifstream in(expected);
  if (!in) return {"missing " + expected.string()};

  std::vector<std::string> problems;
  std::string line;
  int cases = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string mode;
    ss >> mode;
    ++cases;
    if (mode == "error") {
      std::size_t want = 0;
      ss >> want;
      try {
        deplen::io::ingest_file(conllu.string(), {});
        problems.push_back(conllu.filename().string() + ": expected a parse error at line " + std::to_string(want));
      } catch (const deplen::ParseError& e) {
        if (e.line() != want) {
          problems.push_back(conllu.filename().string() + ": parse error at line " + std::to_string(e.line()) +
                             ", expected " + std::to_string(want));
        }
      }
      continue;
    }
    int n_min = 0;
    deplen::io::IngestReport want;
    ss >> n_min >> want.sentences_read >> want.sentences_kept >> want.rejected_non_tree >> want.rejected_below_n_min;
    const auto punct = mode == "drop" ? deplen::io::PunctMode::drop : deplen::io::PunctMode::keep;
    try {
      const auto got = deplen::io::ingest_file(conllu.string(), {n_min, punct}).report;
      if (!(got == want)) {
        std::ostringstream msg;
        msg << conllu.filename().string() << " [" << line << "]: got " << got.sentences_read << ' '
            << got.sentences_kept << ' ' << got.rejected_non_tree << ' ' << got.rejected_below_n_min;
        problems.push_back(msg.str());
      }
    } catch (const std::exception& e) {
      problems.push_back(conllu.filename().string() + " [" + line + "]: " + e.what());
    }
  }
  if (cases == 0) problems.push_back(expected.string() + " has no cases");
  return problems;
}

inline std::vector<std::filesystem::path> list(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".conllu") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
