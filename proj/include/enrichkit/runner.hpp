#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enrichkit/spec.hpp"
#include "json.hpp"

namespace enrichkit {

enum class Verdict { pass, fail, error };

struct CheckRecord {
  std::string check;
  std::string instance;
  Verdict verdict = Verdict::pass;
  std::optional<ErrorKind> error;  // set when a validator or a resource cap fired
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  std::vector<std::string> witnesses;
  double seconds = 0;  // human output only
};

struct Report {
  std::string command;
  std::string spec;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> records;

  std::size_t count(Verdict v) const;
  bool resource_error() const;
  /// 0 when nothing failed, 3 when a resource cap fired, 1 otherwise.
  int exit_code() const;

  /// Deterministic JSON: no timings, fields in a fixed order.
  std::string machine() const;
  std::string human() const;
};

struct RunOptions {
  std::uint64_t seed = 1;
  std::size_t max_size = 3;         // largest |Ob A| drawn by fuzz
  std::size_t fuzz_instances = 100; // random (M, A) for the Yoneda side
  std::size_t fuzz_colimits = 20;   // random (A, F, W) for the colimit side
  std::size_t probes = 20;          // random probes per colimit
};

const std::vector<std::string>& commands();

/// Runs one command. `spec` may be null only for fuzz. Inner errors are
/// recorded, never swallowed: a declaration that fails its validator is a
/// failed record carrying the error kind and witness.
Report run(const std::string& command, const SpecFile* spec, const RunOptions& options = {});

}  // namespace enrichkit
