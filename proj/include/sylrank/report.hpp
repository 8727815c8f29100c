#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sylrank/matrix.hpp"
#include "sylrank/value.hpp"

namespace sylrank {

class FPModule;

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Status { Pass, Fail, Skipped };
std::string status_text(Status s);

struct ClauseResult {
  std::string clause;
  std::size_t samples = 0;
  Status status = Status::Pass;
  /// Index of the first failing sample, with its witness.
  std::size_t failing_sample = 0;
  Json witness;
  std::string note;
};

/// Per-clause outcome of a randomized check. Samples are recorded in index
/// order, so the kept witness is always the lowest failing index.
class VerificationReport {
 public:
  VerificationReport(std::string kind, std::string subject, std::string ring);

  /// Counts one sample for the clause; on failure keeps the witness if it is the first.
  void record(const std::string& clause, bool ok, const std::function<Json()>& witness);
  void skip(const std::string& clause, const std::string& note);
  /// Clause entry, created on first use (fixes output order).
  ClauseResult& clause(const std::string& name);

  bool passed() const;
  const std::vector<ClauseResult>& clauses() const { return clauses_; }
  const ClauseResult* find(const std::string& name) const;

  void set_seed(std::uint64_t seed) { seed_ = seed; }
  /// Extra top-level fields, written after the standard ones.
  Json& extra() { return extra_; }

  Json to_json() const;
  std::string to_tsv() const;

 private:
  std::string kind_;
  std::string subject_;
  std::string ring_;
  std::uint64_t seed_ = 0;
  std::vector<ClauseResult> clauses_;
  Json extra_ = Json::object();
};

/// {"ring":..., "rows":n, "cols":m, "entries":"a,b;c,d"}
Json matrix_json(const Matrix& a);
Json module_json(const FPModule& m);

}  // namespace sylrank
