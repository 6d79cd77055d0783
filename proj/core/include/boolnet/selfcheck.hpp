#pragma once

#include <string>
#include <vector>

#include "boolnet/certify.hpp"

namespace boolnet {

struct SelfcheckReport {
  std::vector<RuleReport> rules;

  bool ok() const noexcept;
  std::size_t failures() const noexcept;
  // One line per rule: name, checked, skipped, failures.
  std::string text() const;
  std::string json() const;
};

// Every certify() rule plus the reference truth tables: the three-valued
// connectives, the variation table of xor, the XOR-neuron weight variation
// table and the optimization-logic table. options.xnor, when set, replaces
// XNOR wherever the checks compose variations.
SelfcheckReport run_selfcheck(const CertifyOptions& options = {});

// The table checks on their own.
RuleReport check_connective_tables(const CertifyOptions& options = {});
RuleReport check_xor_variation_table();
RuleReport check_xor_neuron_table();
RuleReport check_optimization_table();

}  // namespace boolnet
