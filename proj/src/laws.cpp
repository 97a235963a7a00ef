#include "fingpd/laws.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "fingpd/error.hpp"
#include "json.hpp"

namespace fingpd {

std::string_view to_string(LawStatus s) {
  switch (s) {
    case LawStatus::pass:
      return "pass";
    case LawStatus::fail:
      return "fail";
    case LawStatus::skipped:
      return "skipped";
  }
  return "fail";
}

namespace {

// Probes report errors from the library as witnesses.
Witness guarded_probe(const LawBody& body, std::size_t i) {
  try {
    return body.probe(i);
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  } catch (const std::out_of_range& e) {
    return std::string("out of range: ") + e.what();
  }
}

}  // namespace

LawReport run_law(const Law& law) {
  LawReport  r;
  r.law = law.id;
  auto const start = std::chrono::steady_clock::now();
  auto       finish = [&] {
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
    return r;
  };
  LawBody body;
  try {
    body = law.prepare();
  } catch (const CapExceeded& e) {
    r.status = LawStatus::skipped;
    r.detail = e.what();
    return finish();
  } catch (const HypothesisNotMet& e) {
    r.status = LawStatus::skipped;
    r.detail = e.what();
    return finish();
  } catch (const std::exception& e) {
    r.status = LawStatus::fail;
    r.witness = std::string("setup: ") + e.what();
    r.witness_index = kSetupWitness;
    return finish();
  }
  if (!body.skip.empty()) {
    r.status = LawStatus::skipped;
    r.detail = body.skip;
    return finish();
  }
  for (std::size_t i = 0; i < body.domain; ++i) {
    if (auto w = guarded_probe(body, i)) {
      r.status = LawStatus::fail;
      r.witness = *w;
      r.witness_index = i;
      return finish();
    }
  }
  r.detail = body.note.empty() ? std::to_string(body.domain) + " cases" : body.note;
  return finish();
}

Witness replay(const Law& law, std::size_t index) {
  LawBody body;
  try {
    body = law.prepare();
  } catch (const CapExceeded&) {
    return std::nullopt;
  } catch (const HypothesisNotMet&) {
    return std::nullopt;
  } catch (const std::exception& e) {
    return std::string("setup: ") + e.what();
  }
  if (index == kSetupWitness || !body.skip.empty() || index >= body.domain) {
    return std::nullopt;
  }
  return guarded_probe(body, index);
}

std::vector<LawReport> run_laws(const std::vector<Law>& laws, unsigned threads) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = std::min<unsigned>(threads, std::max<std::size_t>(1, laws.size()));
  std::vector<LawReport>   out(laws.size());
  std::atomic<std::size_t> next{0};
  auto                     worker = [&] {
    for (std::size_t i = next++; i < laws.size(); i = next++) {
      out[i] = run_law(laws[i]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto& t : pool) {
    t.join();
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LawReport& a, const LawReport& b) { return a.law < b.law; });
  return out;
}

std::string format_text(const std::vector<LawReport>& reports) {
  std::ostringstream os;
  std::size_t        counts[3] = {0, 0, 0};
  for (auto const& r : reports) {
    ++counts[static_cast<int>(r.status)];
    switch (r.status) {
      case LawStatus::pass:
        os << "PASS  " << r.law << "  (" << r.detail << ")\n";
        break;
      case LawStatus::fail:
        os << "FAIL  " << r.law << "  witness #"
           << (r.witness_index == kSetupWitness ? std::string("setup")
                                                : std::to_string(r.witness_index))
           << ": " << r.witness << "\n";
        break;
      case LawStatus::skipped:
        os << "SKIP  " << r.law << "  (" << r.detail << ")\n";
        break;
    }
  }
  os << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " skipped\n";
  return os.str();
}

std::string format_machine(const std::vector<LawReport>& reports) {
  std::string out;
  for (auto const& r : reports) {
    nlohmann::ordered_json j;
    j["law"] = r.law;
    j["status"] = std::string(to_string(r.status));
    if (r.status == LawStatus::fail) {
      j["witness"] = r.witness;
      if (r.witness_index == kSetupWitness) {
        j["witness_index"] = "setup";
      } else {
        j["witness_index"] = r.witness_index;
      }
    } else {
      j["detail"] = r.detail;
    }
    j["millis"] = static_cast<std::int64_t>(r.millis);
    out += j.dump() + "\n";
  }
  return out;
}

bool all_passed(const std::vector<LawReport>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const LawReport& r) { return r.status == LawStatus::fail; });
}

}  // namespace fingpd
