#include "supercong/outcome.hpp"

namespace supercong {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

std::optional<Status> parse_status(std::string_view name) {
  if (name == "pass") return Status::pass;
  if (name == "fail") return Status::fail;
  if (name == "skipped") return Status::skipped;
  return std::nullopt;
}

}  // namespace supercong
