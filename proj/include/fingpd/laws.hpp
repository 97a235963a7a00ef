#pragma once

// Generic law engine. A law prepares its data once and then exposes a
// finite domain of independent probes; a failing probe returns a witness.
// Replaying a law at the witness index re-runs just that probe on freshly
// prepared data, so every failure is reproducible in isolation.

#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace fingpd {

using Witness = std::optional<std::string>;

struct LawBody {
  std::size_t                          domain = 0;
  std::function<Witness(std::size_t)> probe;
  std::string                          note;  // summary shown on success
  std::string                          skip;  // non-empty: law does not apply
};

struct Law {
  std::string                id;
  std::function<LawBody()>   prepare;
};

enum class LawStatus { pass, fail, skipped };

std::string_view to_string(LawStatus s);

// Witness index of failures raised while preparing the data.
inline constexpr std::size_t kSetupWitness = std::numeric_limits<std::size_t>::max();

struct LawReport {
  std::string law;
  LawStatus   status = LawStatus::pass;
  std::string witness;
  std::size_t witness_index = 0;
  std::string detail;
  double      millis = 0;
};

LawReport run_law(const Law& law);

// Runs the single probe; CapExceeded and HypothesisNotMet during setup
// mean skipped and are reported as nullopt.
Witness replay(const Law& law, std::size_t index);

// Runs every law on a pool of worker threads (0: hardware concurrency) and
// returns reports sorted by law id.
std::vector<LawReport> run_laws(const std::vector<Law>& laws, unsigned threads = 0);

std::string format_text(const std::vector<LawReport>& reports);
// One JSON object per line: law, status, witness, witness_index, millis.
std::string format_machine(const std::vector<LawReport>& reports);

bool all_passed(const std::vector<LawReport>& reports);

}  // namespace fingpd
