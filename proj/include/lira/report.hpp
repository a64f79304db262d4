#pragma once

// Check reports: a list of named pass/fail/skipped items with witnesses,
// plus the JSON run-report envelope emitted by the command-line tool.

#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace lira {

enum class Status { pass, fail, skipped };

inline const char* status_str(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skipped";
  }
}

struct CheckItem {
  std::string name;
  Status status = Status::pass;
  std::string witness;  // failure witness, or reason when skipped

  friend bool operator==(const CheckItem& a, const CheckItem& b) {
    return a.name == b.name && a.status == b.status && a.witness == b.witness;
  }
};

struct Report {
  std::vector<CheckItem> items;

  void pass(std::string name) { items.push_back({std::move(name), Status::pass, ""}); }
  void fail(std::string name, std::string witness) {
    items.push_back({std::move(name), Status::fail, std::move(witness)});
  }
  void skip(std::string name, std::string reason) {
    items.push_back({std::move(name), Status::skipped, std::move(reason)});
  }
  void check(std::string name, bool ok, std::string witness) {
    if (ok)
      pass(std::move(name));
    else
      fail(std::move(name), std::move(witness));
  }

  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& it : other.items)
      items.push_back({prefix.empty() ? it.name : prefix + ": " + it.name, it.status, it.witness});
  }

  bool ok() const {
    for (const auto& it : items)
      if (it.status == Status::fail) return false;
    return true;
  }
  size_t failures() const {
    size_t n = 0;
    for (const auto& it : items) n += it.status == Status::fail;
    return n;
  }
  const CheckItem* first_failure() const {
    for (const auto& it : items)
      if (it.status == Status::fail) return &it;
    return nullptr;
  }

  friend bool operator==(const Report& a, const Report& b) { return a.items == b.items; }

  std::string text() const {
    std::string out;
    for (const auto& it : items) {
      out += "[";
      out += it.status == Status::pass ? "PASS" : (it.status == Status::fail ? "FAIL" : "SKIP");
      out += "] " + it.name;
      if (!it.witness.empty()) out += ": " + it.witness;
      out += "\n";
    }
    return out;
  }
};

// Stable content digest for inputs (FNV-1a, 64-bit).
inline std::string digest_hex(std::string_view data) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
  return std::string(buf);
}

struct RunReport {
  std::string command;
  std::string inputs_digest;
  long long wall_ms = 0;
  Report report;

  bool ok() const { return report.ok(); }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& it : report.items) {
      nlohmann::json j{{"name", it.name}, {"status", status_str(it.status)}};
      if (it.status == Status::fail) j["witness"] = it.witness;
      if (it.status == Status::skipped) j["reason"] = it.witness;
      checks.push_back(std::move(j));
    }
    return nlohmann::json{{"command", command},
                          {"inputs_digest", inputs_digest},
                          {"wall_ms", wall_ms},
                          {"ok", ok()},
                          {"checks", std::move(checks)}};
  }

  static RunReport from_json(const nlohmann::json& j) {
    RunReport r;
    r.command = j.at("command").get<std::string>();
    r.inputs_digest = j.at("inputs_digest").get<std::string>();
    r.wall_ms = j.at("wall_ms").get<long long>();
    for (const auto& c : j.at("checks")) {
      CheckItem it;
      it.name = c.at("name").get<std::string>();
      std::string st = c.at("status").get<std::string>();
      it.status = st == "pass" ? Status::pass : (st == "fail" ? Status::fail : Status::skipped);
      if (c.contains("witness")) it.witness = c["witness"].get<std::string>();
      if (c.contains("reason")) it.witness = c["reason"].get<std::string>();
      r.report.items.push_back(std::move(it));
    }
    return r;
  }

  friend bool operator==(const RunReport& a, const RunReport& b) {
    return a.command == b.command && a.inputs_digest == b.inputs_digest &&
           a.wall_ms == b.wall_ms && a.report == b.report;
  }
};

}  // namespace lira
