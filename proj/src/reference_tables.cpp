#include "bidihuff/reference_tables.hpp"

#include <stdexcept>

namespace bidihuff::reference {

const std::vector<AntiUniformRow>& anti_uniform_table() {
  static const std::vector<AntiUniformRow> rows = {
      {3, 1.66, 2, 1.66},      {4, 1.428, 3, 1.414},    {5, 1.266, 3, 1.259},
      {6, 1.1612, 4, 1.1730},  {7, 1.0952, 4, 1.0861},  {8, 1.0551, 4, 1.0535},
      {9, 1.0313, 4, 1.0369},  {10, 1.0176, 4, 1.0179}, {11, 1.010, 3, 1.010},
      {12, 1.005, 3, 1.005},
  };
  return rows;
}

namespace {

const std::vector<SweepRow> kSeven = {
    {"(2,2,2,3,4,5,5)", 16, 6.728, 35.624, 7.483, 0.755, false},
    {"(2,2,2,4,4,4,4)", 4, 1.608, 1.608, 1.608, 0, false},
    {"(2,2,3,3,3,4,4)", 24, 4.450, 40.653, 4.450, 0, false},
    {"(2,3,3,3,3,3,3)", 4, 12.956, 39.839, 12.956, 0, false},
    {"(1,2,3,4,5,6,6)", 32, 1.094, 39.466, 1.094, 0, false},
    {"(1,2,3,5,5,5,5)", 8, 3.250, 13.566, 3.250, 0, false},
    {"(1,2,4,4,4,5,5)", 16, 3.257, 10.703, 3.460, 0.203, false},
    {"(1,3,3,3,4,5,5)", 16, 3.331, 13.123, 4.198, 0.867, false},
    {"(1,3,3,4,4,4,4)", 12, 4.036, 7.838, 4.036, 0, false},
};

const std::vector<SweepRow> kEight = {
    {"(2,2,2,3,4,5,6,6)", 32, 7.488, 42.357, 7.488, 0, false},
    {"(2,2,2,3,5,5,5,5)", 8, 8.211, 28.391, 8.952, 0.741, false},
    {"(2,2,2,4,4,4,5,5)", 16, 18.819, 67.086, 18.819, 0, false},
    {"(2,2,3,3,3,4,5,5)", 48, 6.079, 25.644, 6.189, 0.110, false},
    {"(2,2,3,3,4,4,4,4)", 36, 6.086, 36.040, 7.939, 1.852, false},
    {"(2,3,3,3,3,3,4,4)", 24, 6.774, 55.138, 6.774, 0, false},
    {"(3,3,3,3,3,3,3,3)", 1, 13.063, 55.138, 13.063, 0, false},
    {"(1,2,3,4,5,6,7,7)", 64, 1.057, 60.347, 1.057, 0, false},
    {"(1,2,3,4,6,6,6,6)", 16, 3.147, 25.035, 3.147, 0, false},
    {"(1,2,3,5,5,5,6,6)", 32, 3.097, 20.024, 3.111, 0.014, false},
    {"(1,2,4,4,4,5,6,6)", 32, 3.274, 13.746, 3.403, 0.129, false},
    {"(1,2,4,4,5,5,5,5)", 24, 3.229, 14.043, 3.354, 0.125, false},
    {"(1,3,3,3,4,5,6,6)", 32, 3.784, 19.109, 4.181, 0.397, false},
    {"(1,3,3,3,5,5,5,5)", 8, 4.267, 13.254, 4.267, 0, false},
    {"(1,3,3,4,4,4,5,5)", 48, 3.641, 12.113, 3.871, 0.230, false},
    {"(1,3,4,4,4,4,4,4)", 8, 4.356, 9.025, 4.356, 0, false},
};

const std::vector<SweepRow> kNine = {
    {"(2,2,2,3,4,5,6,7,7)", 64, 7.222, 44.570, 7.920, 0.698, false},
    {"(2,2,2,3,4,6,6,6,6)", 16, 11.044, 40.799, 11.075, 0.031, false},
    {"(2,2,2,3,5,5,5,6,6)", 32, 5.982, 37.447, 5.982, 0, false},
    {"(2,2,2,4,4,4,5,6,6)", 32, 34.993, 112.367, 34.993, 0, false},
    {"(2,2,2,4,4,5,5,5,5)", 24, 10.576, 34.471, 34.471, 23.895, true},
    {"(2,2,3,3,3,4,5,6,6)", 96, 5.248, 54.348, 6.117, 0.869, false},
    {"(2,2,3,3,3,5,5,5,5)", 24, 9.790, 17.570, 9.790, 0, false},
    {"(2,2,3,3,4,4,4,5,5)", 144, 4.276, 64.249, 7.465, 3.189, false},
    {"(2,2,3,4,4,4,4,4,4)", 24, 12.030, 41.574, 12.218, 0.187, false},
    {"(2,3,3,3,3,3,4,5,5)", 48, 7.445, 127.587, 7.445, 0, false},
    {"(2,3,3,3,3,4,4,4,4)", 60, 0, 33.112, 6.020, 6.020, true},
    {"(3,3,3,3,3,3,3,4,4)", 8, 33.262, 79.019, 33.471, 0.209, false},
    {"(1,2,3,4,5,6,7,8,8)", 128, 1.027, 105.722, 1.027, 0, false},
    {"(1,2,3,4,5,7,7,7,7)", 32, 3.056, 44.114, 3.056, 0, false},
    {"(1,2,3,4,6,6,6,7,7)", 64, 3.024, 35.558, 3.043, 0.018, false},
    {"(1,2,3,5,5,5,6,7,7)", 64, 3.051, 25.370, 3.157, 0.106, false},
    {"(1,2,3,5,5,6,6,6,6)", 48, 3.061, 25.011, 3.126, 0.064, false},
    {"(1,2,4,4,4,5,6,7,7)", 64, 2.984, 15.837, 3.362, 0.377, false},
    {"(1,2,4,4,4,6,6,6,6)", 16, 3.460, 12.112, 3.460, 0, false},
    {"(1,2,4,4,5,5,5,6,6)", 96, 3.141, 19.986, 3.275, 0.135, false},
    {"(1,2,4,5,5,5,5,5,5)", 16, 3.274, 13.958, 3.274, 0, false},
    {"(1,3,3,3,4,5,6,7,7)", 64, 3.735, 23.543, 4.155, 0.420, false},
    {"(1,3,3,3,4,6,6,6,6)", 16, 4.200, 18.584, 4.200, 0, false},
    {"(1,3,3,3,5,5,5,6,6)", 32, 3.729, 17.673, 4.479, 0.749, false},
    {"(1,3,3,4,4,4,5,6,6)", 96, 3.281, 16.307, 3.961, 0.680, false},
    {"(1,3,3,4,4,5,5,5,5)", 72, 3.640, 14.973, 3.928, 0.287, false},
    {"(1,3,4,4,4,4,4,5,5)", 48, 4.261, 14.806, 4.411, 0.150, false},
    {"(1,4,4,4,4,4,4,4,4)", 2, 8.763, 8.763, 8.763, 0, false},
};

}  // namespace

const std::vector<SweepRow>& sweep_table(int alphabet_size) {
  switch (alphabet_size) {
    case 7: return kSeven;
    case 8: return kEight;
    case 9: return kNine;
  }
  throw std::out_of_range("no reference sweep table for alphabet size " + std::to_string(alphabet_size));
}

}  // namespace bidihuff::reference
