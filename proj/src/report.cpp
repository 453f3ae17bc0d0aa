#include "nacalg/report.hpp"

namespace nacalg {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::UpToTruncation:
      return "verified up to truncation";
    case Status::Skipped:
      return "skipped";
  }
  return "?";
}

void Report::add(std::string name, const Verdict& v, bool required) {
  entries.push_back({std::move(name), v.holds ? Status::Pass : Status::Fail, v.witness, v.detail, required});
}

void Report::skip(std::string name, std::string why) {
  entries.push_back({std::move(name), Status::Skipped, {}, std::move(why), true});
}

const CheckEntry* Report::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  auto e = find(name);
  return e && (e->status == Status::Pass || e->status == Status::UpToTruncation);
}

bool Report::axioms_hold() const {
  for (const auto& e : entries)
    if (e.required && (e.status == Status::Fail || e.status == Status::Skipped)) return false;
  return true;
}

bool Report::all_pass() const {
  for (const auto& e : entries)
    if (e.status == Status::Fail || e.status == Status::Skipped) return false;
  return true;
}

}  // namespace nacalg
