// sfs_embed: classify Seifert fibered spaces for smooth embedding in S^4.

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include <CLI11.hpp>

#include "sfs/report.hpp"

namespace {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SFS_EMBED_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "ignoring malformed SFS_EMBED_BUDGET=" << env << "\n";
    }
  }
  return 20'000'000;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Portable corpus: raw engine output only, no std distributions.
std::vector<std::string> random_corpus(const std::string& command, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s;
    if (command == "pretzel") {
      long k = 2 * draw(rng, 1, 3) + 1;
      s = "P(";
      for (long j = 0; j < k; ++j) {
        long c = 2 * draw(rng, 0, 4) + 1;
        if (rng() & 1) c = -c;
        s += (j ? "," : "") + std::to_string(c);
      }
      s += ")";
    } else {
      bool g0 = command == "mubar" || command == "lattice" || command == "plumbing";
      long g = g0 ? 0 : draw(rng, 0, 2);
      long k = draw(rng, 1, 6);
      s = "SFS(g=" + std::to_string(g) + "; e=" + std::to_string(draw(rng, 0, 4)) + ";";
      for (long j = 0; j < k; ++j) {
        long p = draw(rng, 2, 12), q = draw(rng, 1, p - 1);
        while (std::gcd(p, q) != 1) q = draw(rng, 1, p - 1);
        s += (j ? ", " : " ") + std::to_string(p) + "/" + std::to_string(q);
      }
      s += ")";
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth embedding of Seifert fibered spaces in S^4"};
  app.require_subcommand(1);

  std::string input, file;
  bool json = false, no_structure = false;
  std::uint64_t budget = default_budget();
  std::uint64_t seed = 0;
  std::size_t random_n = 0, threads = 1, max_k = 14, max_results = 0, ambient = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"classify", "EMBEDS / OBSTRUCTED / UNKNOWN verdict with trace"},
      {"homology", "H_1 by closed formula and by Smith normal form"},
      {"partitions", "search for a partitionable pair"},
      {"mubar", "spin structures and their mubar values (genus 0, eps != 0)"},
      {"plumbing", "star-shaped plumbing graph (genus 0)"},
      {"lattice", "embeddings of the intersection lattice into Z^N (genus 0, eps != 0)"},
      {"pretzel", "doubly slice classification of an odd pretzel knot P(c1,...,ck)"},
      {"reduce", "inverse expansions down to a minimal space"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "one input, e.g. \"SFS(g=0; e=2; 3/2, 3, 3/2)\" or \"P(3,-3,3)\"");
    sub->add_option("--file", file, "file with one input per line ('-' for stdin)");
    sub->add_flag("--json", json, "one JSON object per input");
    sub->add_option("--budget", budget, "search node budget (default from SFS_EMBED_BUDGET or 20000000)");
    sub->add_option("--random", random_n, "generate this many random inputs instead of reading them");
    sub->add_option("--seed", seed, "seed for --random");
    sub->add_option("--threads", threads, "worker threads for batch input")->check(CLI::Range(1, 256));
    sub->add_option("--max-k", max_k, "largest fiber count for the partition search");
    if (name == "lattice") {
      sub->add_flag("--no-structure", no_structure, "search without fixing the central vertex");
      sub->add_option("--max-results", max_results, "stop after this many embeddings");
      sub->add_option("--ambient", ambient, "rank of the diagonal lattice (default |Gamma|)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  std::string command = app.get_subcommands().front()->get_name();

  std::vector<std::string> lines;
  if (random_n) {
    lines = random_corpus(command, random_n, seed);
  } else if (!file.empty()) {
    std::ifstream f;
    std::istream* in = &std::cin;
    if (file != "-") {
      f.open(file);
      if (!f) {
        std::cerr << "cannot open " << file << "\n";
        return 1;
      }
      in = &f;
    }
    for (std::string l; std::getline(*in, l);) {
      auto b = l.find_first_not_of(" \t\r");
      if (b == std::string::npos || l[b] == '#') continue;
      lines.push_back(l.substr(b, l.find_last_not_of(" \t\r") - b + 1));
    }
  } else if (!input.empty()) {
    lines.push_back(input);
  } else {
    std::cerr << "no input: pass an input string, --file or --random\n";
    return 1;
  }

  sfs::CommandOptions opts;
  opts.node_budget = budget;
  opts.max_k = max_k;
  opts.max_results = max_results;
  opts.ambient = ambient;
  opts.structure = !no_structure;

  std::vector<sfs::CommandResult> results(lines.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < lines.size();) results[i] = sfs::run_command(command, lines[i], opts);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::min(threads, lines.size()); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  int code = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    if (json) {
      std::cout << r.json.dump() << "\n";
    } else {
      if (i) std::cout << "\n";
      std::cout << sfs::render_text(r.json);
    }
    int c = static_cast<int>(r.code);
    if (c == 1 || (c == 2 && code == 0)) code = c;
  }
  return code;
}
