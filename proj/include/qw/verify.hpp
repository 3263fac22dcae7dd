#pragma once

// Window sweeps behind `qw verify`.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qw/rewrite.hpp"

namespace qw {

struct SuiteConfig {
  RelationMode mode = RelationMode::central;
  int window = 4;
  std::uint64_t seed = 0;
  std::size_t samples = 500;
};

struct CheckInstance {
  std::string check;
  std::string instance;
  bool pass = false;
  std::optional<std::string> counterexample;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckInstance> instances;  // in enumeration order
  std::vector<std::string> notes;

  bool passed() const;
  std::size_t failure_count() const;
  const CheckInstance* first_failure() const;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite or a window below 1.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& config);

SuiteReport verify_jacobi(const SuiteConfig& config);
SuiteReport verify_cocycle(const SuiteConfig& config);
SuiteReport verify_hopf(const SuiteConfig& config);
SuiteReport verify_relations(const SuiteConfig& config);
SuiteReport verify_confluence(const SuiteConfig& config);
SuiteReport verify_limit(const SuiteConfig& config);

}  // namespace qw
