// Acceptance suite: runs the ten verification criteria and prints one
// pass/fail line per criterion (plus details). With --criterion N only the
// selected criterion runs. Exit code 0 iff everything that ran passed.

#include "leibniz/verification.hpp"

#include <cstring>
#include <iostream>
#include <string>

using namespace leibniz;

int main(int argc, char** argv) {
  VerifyOptions opts;
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << '\n';
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--criterion") selected = std::stoi(next());
    else if (arg == "--max-p") opts.max_p = Int(next());
    else if (arg == "--max-m") opts.max_m = Int(next());
    else if (arg == "--max-k") opts.max_k = Int(next());
    else if (arg == "--seed") opts.seed = std::stoull(next());
    else if (arg == "--jobs") opts.jobs = static_cast<unsigned>(std::stoul(next()));
    else {
      std::cerr << "usage: acceptance [--criterion N] [--max-p P] [--max-m M] [--max-k K] "
                   "[--seed S] [--jobs J]\n";
      return 2;
    }
  }

  std::cout << "seed: " << opts.seed << '\n';
  bool all = true;
  for (int id = 1; id <= 10; ++id) {
    if (selected != 0 && id != selected) continue;
    CriterionResult r = run_criterion(id, opts);
    std::cout << criterion_line(r) << '\n';
    if (!r.details.empty()) std::cout << r.details;
    std::cout.flush();
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
