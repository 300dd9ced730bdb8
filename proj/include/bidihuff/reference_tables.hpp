#pragma once

#include <string>
#include <vector>

// Published delay tables used as side-by-side references by the reproduction
// commands and the acceptance suite.
namespace bidihuff::reference {

struct AntiUniformRow {
  int n;
  double theory;      // as printed, truncated to the printed precision
  int theory_digits;  // decimals printed in the theory column
  double simulation;
};

struct SweepRow {
  const char* lengths;  // "(1,2,3,4,5,6,6)"
  int count;
  double min_dbar;
  double max_dbar;
  double selected_dbar;
  double delta_d;
  // Rows whose printed values look like transcription artifacts.
  bool anomalous;
};

const std::vector<AntiUniformRow>& anti_uniform_table();  // n = 3..12
const std::vector<SweepRow>& sweep_table(int alphabet_size);  // 7, 8 or 9

}  // namespace bidihuff::reference
