#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "seaweed/pipeline.hpp"

namespace seaweed::cli {

// SEAWEED_THREADS, else hardware concurrency, else 1.
unsigned default_threads();

// Static sharding over [0, count); rethrows the first worker exception.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// All valid cut sets of one side for a flavor (every subset of the simple
// root indices, nonempty when affine), in mask order.
std::vector<std::vector<int>> enumerate_cut_sets(const Flavor& fl);

struct VerifyOptions {
  std::vector<Family> families{Family::AffineA, Family::AffineC, Family::FiniteA,
                               Family::FiniteB, Family::FiniteC};
  int max_n = 8;  // A-family bound
  int max_r = 5;  // B/C-family bound
  bool with_brute = false;
  int brute_max_n = 6;
  int trials = 5;
  std::uint64_t seed = kDefaultSeed;
  bool check_invariants = true;
  unsigned threads = 0;  // 0 = default_threads()
  std::uint64_t budget = 5'000'000;
};

struct InstanceFailure {
  Flavor flavor;
  CutPair cuts;
  std::string what;
};

struct VerifyResult {
  struct FlavorTally {
    Flavor flavor;
    std::uint64_t instances = 0;
  };
  std::vector<FlavorTally> tallies;
  std::uint64_t total = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t violations = 0;
  std::vector<InstanceFailure> first_failures;  // earliest few, in sweep order

  bool ok() const { return disagreements == 0 && violations == 0; }
};

VerifyResult run_verify(const VerifyOptions& opts);
std::string render_verify_summary(const VerifyResult& res);

struct TableOptions {
  Flavor flavor{Family::AffineA, 2};  // family + rank_max; rank sweeps up from rank_min
  int rank_min = 2;
  int rank_max = 2;
  enum class CutMode { Maximal, Empty, Fixed } mode = CutMode::Maximal;
  CutPair fixed;
  unsigned threads = 0;
};

std::string run_table_csv(const TableOptions& opts);

}  // namespace seaweed::cli
