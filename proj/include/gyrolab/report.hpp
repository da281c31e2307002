#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "element_set.hpp"

namespace gyrolab {

enum class CheckStatus { Pass, Fail, Skipped };

constexpr const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

/// Outcome of one mechanical check. A failure always carries a witness
/// tuple; a skip always carries the unmet hypothesis in `reason`.
struct CheckReport {
  std::string check_id;
  std::string statement;
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
  std::vector<Elem> witness;
  std::string detail;
  std::chrono::duration<double, std::milli> elapsed{0};

  bool passed() const noexcept { return status == CheckStatus::Pass; }
  bool failed() const noexcept { return status == CheckStatus::Fail; }
  bool skipped() const noexcept { return status == CheckStatus::Skipped; }

  static CheckReport pass(std::string id, std::string statement, std::string detail = {}) {
    CheckReport r;
    r.check_id = std::move(id);
    r.statement = std::move(statement);
    r.detail = std::move(detail);
    return r;
  }

  static CheckReport fail(std::string id, std::string statement, std::vector<Elem> witness, std::string detail) {
    CheckReport r;
    r.check_id = std::move(id);
    r.statement = std::move(statement);
    r.status = CheckStatus::Fail;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }

  static CheckReport skip(std::string id, std::string statement, std::string reason) {
    CheckReport r;
    r.check_id = std::move(id);
    r.statement = std::move(statement);
    r.status = CheckStatus::Skipped;
    r.reason = std::move(reason);
    return r;
  }
};

}  // namespace gyrolab
