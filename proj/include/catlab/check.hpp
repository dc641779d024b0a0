#pragma once
// Named pass / fail / skipped outcomes collected by the structural checks.

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catlab {

enum class Status { pass, fail, skipped };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string detail;  // witness on failure, reason when skipped, note otherwise
};

struct CheckList {
  std::vector<Check> items;

  void pass(std::string name, std::string note = {}) {
    items.push_back({std::move(name), Status::pass, std::move(note)});
  }
  void fail(std::string name, std::string witness) {
    items.push_back({std::move(name), Status::fail, std::move(witness)});
  }
  void skip(std::string name, std::string reason) {
    items.push_back({std::move(name), Status::skipped, std::move(reason)});
  }
  void expect(std::string name, bool ok, std::string witness = {}, std::string note = {}) {
    if (ok) pass(std::move(name), std::move(note));
    else fail(std::move(name), std::move(witness));
  }
  void append(const CheckList& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }

  bool ok() const {
    return std::none_of(items.begin(), items.end(),
                        [](const Check& c) { return c.status == Status::fail; });
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : items)
      if (c.name == name) return &c;
    return nullptr;
  }
};

}  // namespace catlab
