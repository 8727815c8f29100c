#include "sylrank/report.hpp"

#include <algorithm>

#include "sylrank/module.hpp"

namespace sylrank {

std::string status_text(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

VerificationReport::VerificationReport(std::string kind, std::string subject, std::string ring)
    : kind_(std::move(kind)), subject_(std::move(subject)), ring_(std::move(ring)) {}

ClauseResult& VerificationReport::clause(const std::string& name) {
  for (auto& c : clauses_) {
    if (c.clause == name) return c;
  }
  ClauseResult fresh;
  fresh.clause = name;
  clauses_.push_back(std::move(fresh));
  return clauses_.back();
}

void VerificationReport::record(const std::string& name, bool ok, const std::function<Json()>& witness) {
  ClauseResult& c = clause(name);
  const std::size_t index = c.samples++;
  if (!ok && c.status != Status::Fail) {
    c.status = Status::Fail;
    c.failing_sample = index;
    c.witness = witness();
  }
}

void VerificationReport::skip(const std::string& name, const std::string& note) {
  ClauseResult& c = clause(name);
  if (c.status == Status::Pass && c.samples == 0) c.status = Status::Skipped;
  c.note = note;
}

bool VerificationReport::passed() const {
  return std::none_of(clauses_.begin(), clauses_.end(), [](const ClauseResult& c) { return c.status == Status::Fail; });
}

const ClauseResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : clauses_) {
    if (c.clause == name) return &c;
  }
  return nullptr;
}

Json VerificationReport::to_json() const {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = kind_;
  out["subject"] = subject_;
  out["ring"] = ring_;
  out["seed"] = seed_;
  out["passed"] = passed();
  Json list = Json::array();
  for (const auto& c : clauses_) {
    Json j;
    j["clause"] = c.clause;
    j["samples"] = c.samples;
    j["status"] = status_text(c.status);
    if (c.status == Status::Fail) {
      j["failing_sample"] = c.failing_sample;
      j["witness"] = c.witness;
    }
    if (!c.note.empty()) j["note"] = c.note;
    list.push_back(std::move(j));
  }
  out["clauses"] = std::move(list);
  for (auto it = extra_.begin(); it != extra_.end(); ++it) out[it.key()] = it.value();
  return out;
}

std::string VerificationReport::to_tsv() const {
  std::string out = "clause\tsamples\tstatus\n";
  for (const auto& c : clauses_) out += c.clause + "\t" + std::to_string(c.samples) + "\t" + status_text(c.status) + "\n";
  return out;
}

Json matrix_json(const Matrix& a) {
  Json j;
  j["ring"] = a.ring().name();
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["entries"] = a.to_text();
  return j;
}

Json module_json(const FPModule& m) {
  Json j;
  j["generators"] = m.generators();
  j["relations"] = matrix_json(m.relations());
  return j;
}

}  // namespace sylrank
