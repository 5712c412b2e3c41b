#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfcore {

enum class Status { pass, fail, inconclusive, skipped };

const char* status_name(Status s);

struct CheckLine {
  std::string check;    // e.g. "tech1"
  std::string subject;  // the index or basis element checked
  Status status;
  std::string detail;   // witness on failure, free text otherwise
};

// Ordered list of check outcomes. Order is insertion order, which all
// callers keep deterministic.
class Report {
public:
  void add(std::string check, std::string subject, Status status,
           std::string detail = {});
  void pass(std::string check, std::string subject, std::string detail = {}) {
    add(std::move(check), std::move(subject), Status::pass, std::move(detail));
  }
  void fail(std::string check, std::string subject, std::string detail = {}) {
    add(std::move(check), std::move(subject), Status::fail, std::move(detail));
  }
  void check(bool ok, std::string check, std::string subject,
             std::string detail = {}) {
    add(std::move(check), std::move(subject), ok ? Status::pass : Status::fail,
        std::move(detail));
  }
  void append(const Report& other);

  const std::vector<CheckLine>& lines() const noexcept { return lines_; }
  std::size_t count(Status s) const;
  std::size_t count(Status s, const std::string& check) const;
  bool passed() const { return count(Status::fail) == 0; }
  bool empty() const noexcept { return lines_.empty(); }

  // One line per check: "PASS check subject[: detail]".
  std::string text() const;

private:
  std::vector<CheckLine> lines_;
};

} // namespace hopfcore
