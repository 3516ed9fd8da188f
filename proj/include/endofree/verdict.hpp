#pragma once

#include <json.hpp>
#include <string>

namespace endofree {

using Json = nlohmann::ordered_json;

enum class Status { Holds, Fails, Unknown };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

/// Three-valued check outcome. Fails carries a witness; Unknown carries the
/// exhausted budget; `checked` counts the cases examined.
struct Verdict {
  Status status = Status::Holds;
  Json witness;  // null unless Fails (counterexample) or Holds-with-witness
  long long checked = 0;

  static Verdict holds(long long count = 0, Json w = nullptr) {
    return {Status::Holds, std::move(w), count};
  }
  static Verdict fails(Json w, long long count = 0) {
    return {Status::Fails, std::move(w), count};
  }
  static Verdict unknown(long long budget, long long count = 0) {
    Json w;
    w["exhausted_budget"] = budget;
    return {Status::Unknown, std::move(w), count};
  }

  bool ok() const { return status == Status::Holds; }
  Json to_json() const {
    Json j;
    j["status"] = status_name(status);
    j["witness"] = witness;
    j["count"] = checked;
    return j;
  }
};

}  // namespace endofree
