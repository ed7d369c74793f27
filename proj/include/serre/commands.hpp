#pragma once

// Batch command layer shared by the CLI tool and the tests.  Exit-code
// contract: 0 = computed (including "not adequate" / "absent" / "none"),
// 1 = usage or parse error, 2 = resource cap exceeded.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "serre/specio.hpp"

namespace serre {

struct CommandOptions {
  std::string format = "table";  // "table" | "json-lines"
  i64 cap = kDefaultGroupCap;
  int jobs = 1;
};

int exit_code_for(const Error& err);

int cmd_weights(const std::string& input_path, const std::string& which,
                const std::optional<std::vector<i64>>& query_weight,
                const CommandOptions& opt, std::ostream& out,
                std::ostream& err);

int cmd_detset(i64 l, int f, const std::vector<i64>& exponents, i64 e,
               const CommandOptions& opt, std::ostream& out,
               std::ostream& err);

int cmd_witness(const std::string& input_path, const std::vector<i64>& weight,
                const CommandOptions& opt, std::ostream& out,
                std::ostream& err);

int cmd_equiv(i64 l, int f, const std::vector<i64>& a,
              const std::vector<i64>& b, std::ostream& out, std::ostream& err);

int cmd_adequacy(const std::string& input_path, const CommandOptions& opt,
                 std::ostream& out, std::ostream& err);

int cmd_verify_paper(const CommandOptions& opt, std::ostream& out,
                     std::ostream& err);

}  // namespace serre
