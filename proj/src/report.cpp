#include "hopfcore/report.hpp"

#include <algorithm>

namespace hopfcore {

const char* status_name(Status s) {
  switch (s) {
  case Status::pass:
    return "PASS";
  case Status::fail:
    return "FAIL";
  case Status::inconclusive:
    return "INCONCLUSIVE";
  case Status::skipped:
    return "SKIP";
  }
  return "?";
}

void Report::add(std::string check, std::string subject, Status status,
                 std::string detail) {
  lines_.push_back({std::move(check), std::move(subject), status, std::move(detail)});
}

void Report::append(const Report& other) {
  lines_.insert(lines_.end(), other.lines_.begin(), other.lines_.end());
}

std::size_t Report::count(Status s) const {
  return std::count_if(lines_.begin(), lines_.end(),
                       [s](const CheckLine& l) { return l.status == s; });
}

std::size_t Report::count(Status s, const std::string& check) const {
  return std::count_if(lines_.begin(), lines_.end(), [&](const CheckLine& l) {
    return l.status == s && l.check == check;
  });
}

std::string Report::text() const {
  std::string out;
  for (const auto& l : lines_) {
    out += status_name(l.status);
    out += ' ';
    out += l.check;
    if (!l.subject.empty()) {
      out += ' ';
      out += l.subject;
    }
    if (!l.detail.empty()) {
      out += ": ";
      out += l.detail;
    }
    out += '\n';
  }
  return out;
}

} // namespace hopfcore
