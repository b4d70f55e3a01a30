#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "bisetkit/library.hpp"
#include "checks.hpp"

using namespace bisetkit;
using checks::Result;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = true;
  std::string detail;
  double seconds = 0;
};

Outcome combine(const std::vector<Result>& parts, double budget = 0) {
  Outcome o;
  for (const auto& r : parts) {
    o.pass = o.pass && r.pass;
    o.seconds += r.seconds;
    o.detail += (o.detail.empty() ? "" : "; ") + r.name + ": " + r.detail;
  }
  if (budget > 0 && o.seconds >= budget) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(budget)) + " s budget";
  }
  return o;
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

Outcome determinism() {
  auto start = std::chrono::steady_clock::now();
  std::string cmd = std::string("\"") + BISETKIT_CLI + "\" --seed 7 verify all 2>/dev/null";
  int s1 = 0, s2 = 0;
  std::string first = run_capture(cmd, s1);
  std::string second = run_capture(cmd, s2);
  Outcome o;
  o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t lines = std::count(first.begin(), first.end(), '\n');
  o.pass = s1 == 0 && s2 == 0 && !first.empty() && first == second;
  o.detail = std::to_string(lines) + " lines, " + (first == second ? "identical" : "different") +
             ", exit codes " + std::to_string(s1) + "/" + std::to_string(s2);
  return o;
}

}  // namespace

int main() {
  auto upto6 = builtin_universe("upto6");
  auto upto8 = builtin_universe("upto8");
  auto upto12 = builtin_universe("upto12");
  auto small = upto6->members();

  ExtensionFunctor constant(std::make_shared<ConstantFunctor>(), upto6);
  ExtensionFunctor signs(std::make_shared<SignFunctor>(), upto12);

  struct Criterion {
    std::string id;
    std::string title;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"AC1", "biset category laws",
       [&] { return combine({checks::biset_category_laws(small, 300, kSeed + 1)}, 60); }},
      {"AC2", "decomposition isomorphisms",
       [&] { return combine({checks::decomposition(small, 200, kSeed + 2)}, 120); }},
      {"AC3", "functoriality",
       [&] {
         return combine({checks::functoriality(constant, small, true, 100, kSeed + 3),
                         checks::functoriality(signs, small, true, 100, kSeed + 4)});
       }},
      {"AC4", "extension identities",
       [&] {
         return combine({checks::extension_identities(constant, small, kSeed + 5),
                         checks::extension_identities(signs, small, kSeed + 6)});
       }},
      {"AC5", "adjunction round trips", [&] { return combine({checks::adjunction(50, kSeed + 7)}); }},
      {"AC6", "tilde deflation",
       [&] { return combine({checks::deflation({"C2", "C3", "C4", "V4", "C6", "S3", "D4", "Q8"}, upto8)}, 300); }},
      {"AC7", "burnside comparison", [&] { return combine({checks::burnside_correspondence(small, upto6)}); }},
      {"AC8", "linear algebra kernels",
       [&] {
         return combine({checks::smith_forms(500, 20, kSeed + 8), checks::module_reduction(1000, kSeed + 9)});
       }},
      {"AC9", "determinism", [&] { return determinism(); }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Outcome{false, std::string("error: ") + e.what(), 0};
    }
    all = all && o.pass;
    std::cout << c.id << " " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << " [" << std::fixed
              << std::setprecision(2) << o.seconds << " s]  " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
