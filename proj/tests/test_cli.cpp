// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "textreuse/consolidate.hpp"
#include "textreuse/edge.hpp"
#include "textreuse/synthbench.hpp"

using namespace textreuse;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int status = 0;
  std::string out;
};

// Runs the CLI with stderr discarded; captures stdout.
RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + TEXTREUSE_CLI + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("synth, detect, consolidate, eval and search through the command line") {
  const fs::path dir = fs::temp_directory_path() / "textreuse_cli";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream spec(dir / "spec.toml");
    spec << "num_docs = 8\ndoc_length_range = [5000, 7000]\nnum_plants = 6\nplant_length_range = [300, 700]\n"
            "cliques = [[4, 400]]\nseed = 12\n";
  }
  const fs::path corpus = dir / "corpus";
  REQUIRE(run("synth --spec " + (dir / "spec.toml").string() + " --out " + corpus.string()).status == 0);
  CHECK(fs::exists(corpus / "metadata.tsv"));
  CHECK(fs::exists(corpus / "truth.tsv"));
  CHECK(fs::exists(corpus / "manifest.tsv"));

  const fs::path edges = dir / "edges.tsv";
  REQUIRE(run("detect --corpus " + corpus.string() + " --out " + edges.string()).status == 0);
  const auto parsed = read_edges(edges.string());
  CHECK(!parsed.empty());
  CHECK(slurp(edges).rfind(std::string(kEdgeHeader), 0) == 0);

  const auto eval = run("eval --edges " + edges.string() + " --truth " + (corpus / "truth.tsv").string());
  REQUIRE(eval.status == 0);
  CHECK(eval.out.rfind("plant_id\tpairs\trecalled\n", 0) == 0);
  const auto report = evaluate(parsed, read_truth(corpus / "truth.tsv"));
  CHECK(report.recall >= 0.9);

  const fs::path passages = dir / "passages.tsv";
  const fs::path clusters = dir / "clusters.tsv";
  REQUIRE(run("consolidate --edges " + edges.string() + " --corpus " + corpus.string() + " --out-passages " +
              passages.string() + " --out-clusters " + clusters.string())
              .status == 0);
  CHECK(fs::file_size(passages) > 0);
  CHECK(fs::file_size(clusters) > 0);

  // Every generated title contains one of these words.
  const auto search = run("search --corpus " + corpus.string() + " --q 'on upon of concerning into' --limit 3");
  CHECK(search.status == 0);
  CHECK(search.out.rfind("doc_id\tyear\tauthor\ttitle\tscore\n", 0) == 0);
  CHECK(std::count(search.out.begin(), search.out.end(), '\n') == 4);

  CHECK(run("detect --corpus " + (dir / "missing").string() + " --out " + edges.string()).status != 0);
  CHECK(run("eval --edges " + (dir / "missing.tsv").string() + " --truth " + (corpus / "truth.tsv").string()).status != 0);
  CHECK(run("frobnicate").status != 0);
  fs::remove_all(dir);
}
