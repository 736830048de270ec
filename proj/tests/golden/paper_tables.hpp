#pragma once

// Rows of the published product-state and bracelet-state tables.

#include <array>
#include <string_view>
#include <vector>

namespace golden {

struct ProductRow {
  int n;
  int subspace_size;
  std::string_view state;
  int p;
  double tau0;
  double tau1;
  double j_eff;
  int naive_hits;
  int naive_shots;
  double perfect;
  double emulation;
  double em_hw;
  double em_hw_low;
  double em_hw_high;
  double em_emu;
  double em_emu_low;
  double em_emu_high;
};

inline const std::vector<ProductRow> kProductRows = {
    {5, 11, "00101", 1, 0.532, 1.146, 0.936, 278, 954, 0.964, 0.481, 0.32, 0.28, 0.35, 0.48, 0.44, 0.51},
    {5, 11, "00101", 2, 0.330, 0.642, 0.973, 166, 948, 1.000, 0.554, 0.15, 0.12, 0.18, 0.56, 0.52, 0.59},
    {5, 11, "00101", 3, 0.225, 0.456, 0.987, 127, 955, 1.000, 0.503, 0.08, 0.05, 0.10, 0.50, 0.45, 0.54},
    {6, 18, "000101", 1, 0.606, 0.960, 1.003, 444, 1882, 0.789, 0.396, 0.28, 0.25, 0.30, 0.40, 0.35, 0.44},
    {6, 18, "000101", 2, 0.268, 0.655, 0.995, 456, 1874, 0.915, 0.504, 0.26, 0.24, 0.29, 0.51, 0.46, 0.55},
    {6, 18, "000101", 3, 0.275, 0.435, 0.995, 314, 1870, 0.963, 0.620, 0.15, 0.12, 0.17, 0.59, 0.54, 0.64},
    {7, 29, "0000101", 1, 0.639, 0.878, 1.035, 336, 1884, 0.704, 0.356, 0.21, 0.18, 0.23, 0.38, 0.34, 0.43},
    {7, 29, "0000101", 2, 0.226, 0.663, 1.012, 632, 1855, 0.857, 0.613, 0.47, 0.43, 0.50, 0.63, 0.58, 0.68},
    {7, 29, "0000101", 3, 0.302, 0.423, 0.999, 454, 1862, 0.947, 0.669, 0.28, 0.25, 0.30, 0.69, 0.64, 0.73},
    {8, 47, "00010101", 1, 0.578, 0.992, 1.001, 351, 1857, 0.706, 0.487, 0.23, 0.21, 0.26, 0.45, 0.40, 0.50},
    {8, 47, "00010101", 2, 0.285, 0.649, 0.992, 314, 1859, 0.911, 0.511, 0.19, 0.16, 0.21, 0.51, 0.46, 0.55},
    {8, 47, "00010101", 3, 0.264, 0.439, 0.994, 255, 1902, 0.957, 0.614, 0.12, 0.10, 0.15, 0.63, 0.58, 0.68},
    {9, 76, "000010101", 1, 0.615, 0.908, 1.032, 144, 929, 0.657, 0.374, 0.18, 0.15, 0.22, 0.39, 0.35, 0.43},
    {9, 76, "000010101", 2, 0.250, 0.656, 1.006, 361, 1841, 0.849, 0.596, 0.26, 0.23, 0.29, 0.60, 0.55, 0.65},
    {9, 76, "000010101", 3, 0.289, 0.428, 0.998, 202, 1841, 0.929, 0.551, 0.10, 0.08, 0.12, 0.54, 0.49, 0.60},
    {10, 123, "0000010101", 1, 0.636, 0.861, 1.049, 276, 1822, 0.620, 0.397, 0.18, 0.16, 0.20, 0.40, 0.34, 0.44},
    {10, 123, "0000010101", 2, 0.223, 0.661, 1.016, 238, 944, 0.796, 0.552, 0.35, 0.31, 0.39, 0.54, 0.49, 0.59},
    {10, 123, "0000010101", 3, 0.305, 0.422, 1.000, 247, 1844, 0.926, 0.584, 0.17, 0.15, 0.19, 0.61, 0.55, 0.66},
    {11, 199, "00000010101", 1, 0.650, 0.831, 1.061, 115, 914, 0.564, 0.326, 0.14, 0.11, 0.17, 0.31, 0.27, 0.36},
    {11, 199, "00000010101", 2, 0.202, 0.665, 1.025, 333, 1828, 0.748, 0.474, 0.27, 0.24, 0.29, 0.52, 0.46, 0.57},
    {11, 199, "00000010101", 3, 0.317, 0.417, 1.002, 135, 1812, 0.913, 0.442, 0.08, 0.06, 0.10, 0.42, 0.37, 0.47},
    {12, 322, "000001010101", 1, 0.620, 0.885, 1.044, 172, 1821, 0.525, 0.298, 0.13, 0.11, 0.15, 0.25, 0.21, 0.30},
    {12, 322, "000001010101", 2, 0.241, 0.657, 1.011, 252, 1792, 0.761, 0.514, 0.21, 0.18, 0.24, 0.52, 0.47, 0.58},
    {12, 322, "000001010101", 3, 0.296, 0.426, 0.999, 123, 1800, 0.919, 0.512, 0.07, 0.05, 0.09, 0.56, 0.50, 0.60},
    {13, 521, "0000001010101", 1, 0.635, 0.852, 1.056, 135, 1765, 0.483, 0.324, 0.11, 0.08, 0.13, 0.32, 0.27, 0.37},
    {13, 521, "0000001010101", 2, 0.221, 0.660, 1.019, 253, 1784, 0.755, 0.510, 0.23, 0.20, 0.26, 0.51, 0.46, 0.58},
    {13, 521, "0000001010101", 3, 0.308, 0.421, 1.001, 122, 1802, 0.892, 0.562, 0.09, 0.07, 0.11, 0.54, 0.48, 0.59},
    {14, 843, "00000001010101", 1, 0.646, 0.829, 1.065, 132, 1806, 0.482, 0.288, 0.09, 0.07, 0.11, 0.29, 0.25, 0.35},
    {14, 843, "00000001010101", 2, 0.205, 0.664, 1.025, 279, 1804, 0.689, 0.463, 0.25, 0.22, 0.28, 0.43, 0.38, 0.50},
    {14, 843, "00000001010101", 3, 0.317, 0.417, 1.002, 120, 1814, 0.882, 0.500, 0.09, 0.07, 0.11, 0.52, 0.47, 0.59},
    {15, 1364, "000000001010101", 1, 0.654, 0.812, 1.071, 121, 1756, 0.459, 0.296, 0.10, 0.08, 0.12, 0.31, 0.26, 0.35},
    {15, 1364, "000000001010101", 2, 0.191, 0.667, 1.031, 245, 1767, 0.684, 0.485, 0.27, 0.24, 0.29, 0.52, 0.48, 0.60},
    {15, 1364, "000000001010101", 3, 0.324, 0.414, 1.003, 126, 1776, 0.884, 0.544, 0.11, 0.09, 0.13, 0.53, 0.48, 0.60},
    {16, 2207, "0000000101010101", 1, 0.635, 0.847, 1.060, 78, 1754, 0.399, 0.221, 0.07, 0.05, 0.09, 0.27, 0.23, 0.32},
    {16, 2207, "0000000101010101", 2, 0.220, 0.660, 1.020, 153, 1749, 0.664, 0.439, 0.15, 0.12, 0.17, 0.49, 0.44, 0.56},
    {16, 2207, "0000000101010101", 3, 0.309, 0.420, 1.001, 40, 1727, 0.896, 0.412, 0.03, 0.02, 0.04, 0.42, 0.37, 0.49},
    {17, 3571, "00000000101010101", 1, 0.644, 0.828, 1.067, 74, 1740, 0.385, 0.206, 0.06, 0.04, 0.08, 0.22, 0.18, 0.26},
    {17, 3571, "00000000101010101", 2, 0.207, 0.663, 1.025, 106, 1700, 0.662, 0.440, 0.10, 0.08, 0.12, 0.42, 0.37, 0.49},
    {17, 3571, "00000000101010101", 3, 0.317, 0.417, 1.002, 60, 1741, 0.856, 0.446, 0.06, 0.04, 0.08, 0.49, 0.43, 0.53},
    {18, 5778, "000000000101010101", 1, 0.651, 0.814, 1.072, 66, 1706, 0.370, 0.246, 0.05, 0.04, 0.07, 0.24, 0.20, 0.28},
    {18, 5778, "000000000101010101", 2, 0.195, 0.665, 1.030, 166, 1711, 0.637, 0.419, 0.22, 0.19, 0.24, 0.45, 0.40, 0.51},
    {18, 5778, "000000000101010101", 3, 0.323, 0.414, 1.003, 52, 1685, 0.857, 0.442, 0.06, 0.04, 0.07, 0.39, 0.34, 0.45},
    {19, 9349, "0000000000101010101", 1, 0.657, 0.802, 1.076, 67, 1713, 0.350, 0.204, 0.07, 0.05, 0.08, 0.21, 0.17, 0.26},
    {19, 9349, "0000000000101010101", 2, 0.184, 0.667, 1.034, 118, 1704, 0.622, 0.386, 0.15, 0.12, 0.18, 0.47, 0.41, 0.52},
    {19, 9349, "0000000000101010101", 3, 0.328, 0.412, 1.004, 56, 1678, 0.856, 0.446, 0.07, 0.05, 0.09, 0.48, 0.41, 0.51},
    {20, 15127, "00000000010101010101", 1, 0.643, 0.828, 1.068, 40, 1698, 0.352, 0.161, 0.03, 0.02, 0.05, 0.20, 0.16, 0.24},
    {20, 15127, "00000000010101010101", 2, 0.208, 0.662, 1.025, 112, 1753, 0.608, 0.356, 0.14, 0.12, 0.17, 0.35, 0.31, 0.44},
    {20, 15127, "00000000010101010101", 3, 0.316, 0.417, 1.002, 23, 1721, 0.837, 0.331, 0.02, 0.01, 0.04, 0.36, 0.30, 0.41},
    {21, 24476, "000000000010101010101", 1, 0.649, 0.815, 1.073, 35, 1708, 0.324, 0.175, 0.03, 0.01, 0.04, 0.19, 0.14, 0.22},
    {21, 24476, "000000000010101010101", 2, 0.198, 0.664, 1.029, 58, 1726, 0.558, 0.319, 0.07, 0.05, 0.09, 0.36, 0.31, 0.42},
    {21, 24476, "000000000010101010101", 3, 0.322, 0.415, 1.003, 30, 1722, 0.851, 0.407, 0.02, 0.01, 0.04, 0.41, 0.35, 0.46},
    {22, 39603, "0000000000010101010101", 1, 0.655, 0.804, 1.077, 39, 1696, 0.322, 0.192, 0.04, 0.02, 0.05, 0.21, 0.16, 0.24},
    {22, 39603, "0000000000010101010101", 2, 0.189, 0.666, 1.033, 106, 1719, 0.557, 0.335, 0.17, 0.14, 0.20, 0.44, 0.38, 0.49},
    {22, 39603, "0000000000010101010101", 3, 0.326, 0.413, 1.004, 13, 1691, 0.827, 0.368, 0.010, 0.000, 0.019, 0.43, 0.37, 0.48},
    {23, 64079, "00000000000010101010101", 1, 0.659, 0.796, 1.080, 33, 1652, 0.322, 0.150, 0.04, 0.02, 0.05, 0.17, 0.13, 0.20},
    {23, 64079, "00000000000010101010101", 2, 0.180, 0.668, 1.036, 64, 1631, 0.546, 0.346, 0.13, 0.10, 0.15, 0.47, 0.39, 0.49},
    {23, 64079, "00000000000010101010101", 3, 0.330, 0.411, 1.004, 19, 1667, 0.838, 0.382, 0.02, 0.01, 0.04, 0.41, 0.35, 0.46},
    {6, 18, "010101", 1, 0.439, 1.202, 0.957, 534, 1880, 0.990, 0.617, 0.32, 0.29, 0.35, 0.60, 0.56, 0.64},
    {6, 18, "010101", 2, 0.340, 0.632, 0.980, 74, 860, 0.998, 0.232, 0.06, 0.03, 0.08, 0.22, 0.18, 0.26},
    {7, 29, "0010101", 1, 0.506, 1.153, 0.947, 475, 1889, 0.954, 0.633, 0.29, 0.26, 0.32, 0.63, 0.59, 0.66},
    {7, 29, "0010101", 2, 0.332, 0.639, 0.975, 157, 860, 0.999, 0.536, 0.18, 0.14, 0.21, 0.52, 0.47, 0.56},
    {8, 47, "01010101", 1, 0.439, 1.201, 0.958, 353, 1862, 0.981, 0.690, 0.22, 0.19, 0.25, 0.73, 0.68, 0.77},
    {8, 47, "01010101", 2, 0.340, 0.632, 0.980, 57, 821, 0.998, 0.364, 0.07, 0.05, 0.10, 0.40, 0.36, 0.44},
    {9, 76, "001010101", 1, 0.492, 1.160, 0.950, 342, 1821, 0.930, 0.675, 0.23, 0.20, 0.26, 0.68, 0.64, 0.72},
    {9, 76, "001010101", 2, 0.334, 0.637, 0.977, 115, 840, 0.996, 0.540, 0.14, 0.11, 0.17, 0.53, 0.48, 0.57},
    {10, 123, "0101010101", 1, 0.439, 1.201, 0.958, 202, 933, 0.991, 0.722, 0.29, 0.25, 0.33, 0.73, 0.68, 0.77},
    {10, 123, "0101010101", 2, 0.340, 0.632, 0.980, 54, 809, 0.998, 0.390, 0.07, 0.04, 0.10, 0.40, 0.35, 0.44},
    {11, 199, "00101010101", 1, 0.483, 1.166, 0.952, 143, 884, 0.934, 0.612, 0.23, 0.20, 0.27, 0.64, 0.59, 0.68},
    {11, 199, "00101010101", 2, 0.335, 0.636, 0.977, 56, 819, 0.995, 0.432, 0.07, 0.04, 0.10, 0.42, 0.38, 0.47},
    {12, 322, "010101010101", 1, 0.439, 1.201, 0.958, 262, 1789, 0.990, 0.731, 0.20, 0.17, 0.23, 0.77, 0.71, 0.80},
    {12, 322, "010101010101", 2, 0.340, 0.632, 0.980, 48, 834, 0.998, 0.436, 0.06, 0.04, 0.09, 0.42, 0.37, 0.47},
    {13, 521, "0010101010101", 1, 0.477, 1.170, 0.953, 100, 844, 0.926, 0.653, 0.19, 0.15, 0.23, 0.66, 0.61, 0.70},
    {13, 521, "0010101010101", 2, 0.336, 0.635, 0.978, 77, 814, 0.997, 0.530, 0.12, 0.08, 0.15, 0.54, 0.49, 0.58},
    {14, 843, "01010101010101", 1, 0.439, 1.201, 0.958, 98, 896, 0.980, 0.729, 0.16, 0.12, 0.20, 0.70, 0.65, 0.75},
    {14, 843, "01010101010101", 2, 0.340, 0.632, 0.980, 34, 828, 0.996, 0.409, 0.04, 0.02, 0.07, 0.40, 0.35, 0.45},
    {15, 1364, "001010101010101", 1, 0.472, 1.174, 0.954, 156, 1760, 0.904, 0.671, 0.13, 0.11, 0.15, 0.67, 0.62, 0.71},
    {15, 1364, "001010101010101", 2, 0.336, 0.635, 0.978, 46, 800, 0.998, 0.456, 0.08, 0.05, 0.11, 0.49, 0.44, 0.54},
    {16, 2207, "0101010101010101", 1, 0.439, 1.201, 0.958, 157, 1776, 0.978, 0.689, 0.14, 0.11, 0.17, 0.71, 0.65, 0.75},
    {16, 2207, "0101010101010101", 2, 0.340, 0.632, 0.980, 61, 2576, 0.997, 0.388, 0.03, 0.02, 0.04, 0.42, 0.37, 0.48},
    {17, 3571, "00101010101010101", 1, 0.468, 1.177, 0.955, 114, 1769, 0.905, 0.611, 0.10, 0.08, 0.12, 0.64, 0.58, 0.67},
    {17, 3571, "00101010101010101", 2, 0.337, 0.635, 0.978, 80, 2644, 0.992, 0.396, 0.04, 0.03, 0.05, 0.40, 0.35, 0.46},
    {18, 5778, "010101010101010101", 1, 0.439, 1.201, 0.958, 108, 1716, 0.968, 0.675, 0.10, 0.08, 0.13, 0.67, 0.61, 0.72},
    {18, 5778, "010101010101010101", 2, 0.340, 0.632, 0.980, 32, 2558, 0.997, 0.362, 0.01, 0.00, 0.02, 0.39, 0.34, 0.45},
    {19, 9349, "0010101010101010101", 1, 0.465, 1.179, 0.955, 84, 1708, 0.907, 0.621, 0.08, 0.06, 0.10, 0.67, 0.61, 0.70},
    {19, 9349, "0010101010101010101", 2, 0.337, 0.634, 0.978, 18, 1671, 0.997, 0.386, 0.006, 0.000, 0.017, 0.40, 0.35, 0.46},
    {20, 15127, "01010101010101010101", 1, 0.439, 1.201, 0.958, 66, 1736, 0.964, 0.658, 0.06, 0.04, 0.09, 0.67, 0.62, 0.72},
    {20, 15127, "01010101010101010101", 2, 0.340, 0.632, 0.980, 22, 2576, 0.995, 0.317, 0.008, 0.000, 0.017, 0.34, 0.30, 0.40},
    {21, 24476, "001010101010101010101", 1, 0.463, 1.181, 0.955, 103, 1736, 0.901, 0.617, 0.11, 0.09, 0.14, 0.67, 0.61, 0.70},
    {21, 24476, "001010101010101010101", 2, 0.337, 0.634, 0.979, 30, 2534, 0.995, 0.411, 0.02, 0.01, 0.03, 0.41, 0.36, 0.47},
    {22, 39603, "0101010101010101010101", 1, 0.439, 1.201, 0.958, 73, 1718, 0.974, 0.612, 0.08, 0.06, 0.11, 0.64, 0.57, 0.67},
    {22, 39603, "0101010101010101010101", 2, 0.340, 0.632, 0.980, 25, 2537, 0.993, 0.292, 0.015, 0.006, 0.024, 0.30, 0.26, 0.38},
    {23, 64079, "00101010101010101010101", 1, 0.461, 1.183, 0.956, 58, 1630, 0.902, 0.561, 0.08, 0.06, 0.10, 0.60, 0.54, 0.63},
    {23, 64079, "00101010101010101010101", 2, 0.337, 0.634, 0.979, 19, 2520, 0.995, 0.355, 0.012, 0.004, 0.021, 0.38, 0.33, 0.44},
};

struct BraceletRow {
  int n;
  int subspace_size;
  std::string_view representative;
  int depth;
  double tau_eff;
  std::vector<double> gamma;
  int naive_hits;
  int naive_shots;
  double perfect;
  double emulation;
  double em_hw;
  double em_hw_low;
  double em_hw_high;
  double em_emu;
  double em_emu_low;
  double em_emu_high;
};

inline const std::vector<BraceletRow> kBraceletRows = {
    {5, 11, "00101", 38, 15.708,
     {0.494, 0.074, -0.008, 0.019, -0.023, 0.211, -0.046,
      0.009, 0.388, 0.012, 0.056, -0.075, -0.040, 0.019,
      0.031, 0.015, -0.283, 0.709, 0.051, -0.011, -0.174,
      0.034, 0.034, 0.020, 0.035, -0.043, 0.033, -0.163,
      0.110, -0.170, -0.048, -0.122, 0.116, -0.029, 0.008,
      0.064, -0.225, 0.107},
     460, 947, 1.000, 0.994, 0.57, 0.52, 0.61, 0.97, 0.94, 0.99},
    {6, 18, "000101", 25, 10.485,
     {0.109, 0.230, 0.002, 0.087, -0.285, 0.556, 0.141,
      0.108, 0.578, -0.244, 0.191, -0.060, -0.106, -0.304,
      -0.077, -0.108, -0.330, -0.162, -0.014, 0.526, 0.155,
      0.591, 0.284, -0.266, 0.104},
     453, 940, 0.996, 0.994, 0.53, 0.49, 0.57, 0.98, 0.95, 0.99},
    {7, 29, "0000101", 19, 8.234,
     {-0.286, -0.024, 0.156, 0.335, 0.451, 1.000, 0.814,
      -0.008, -0.623, -0.354, 0.564, 0.230, 0.066, -0.640,
      -0.225, -0.349, -0.173, -0.221, -0.486},
     529, 924, 0.960, 0.943, 0.66, 0.62, 0.69, 0.93, 0.90, 0.95},
    {8, 47, "00010101", 47, 19.320,
     {0.123, 0.300, -0.245, 1.259, 0.720, -0.236, -0.194,
      -0.003, -0.098, 0.006, 1.157, 0.730, -0.447, -0.100,
      -0.068, 0.092, -0.244, 0.405, 0.095, 0.168, 0.118,
      -0.369, -0.277, -0.255, -0.318, -0.342, -0.078, -0.090,
      -0.005, 0.066, -0.451, -0.102, 0.352, 0.252, -0.023,
      0.609, 0.361, -0.013, -0.287, -0.389, -0.114, -0.537,
      0.009, -0.276, -0.126, 0.509, 0.043},
     190, 938, 0.984, 0.970, 0.19, 0.15, 0.23, 0.94, 0.91, 0.96},
    {9, 76, "000010101", 41, 16.708,
     {-0.026, -0.205, -0.368, -0.118, -0.337, -0.132, 0.319,
      -0.064, -0.066, 0.981, -0.275, -0.109, -0.011, -0.037,
      -0.208, -0.522, 0.924, 0.205, -0.071, 0.078, -0.050,
      0.201, 0.255, -0.030, -0.116, 0.037, 0.011, -0.025,
      0.016, 0.012, 0.270, 0.203, 0.059, 0.273, -0.044,
      1.012, 0.049, 0.288, -0.183, 0.799, 0.206},
     181, 934, 0.970, 0.797, 0.22, 0.19, 0.25, 0.78, 0.74, 0.81},
    {10, 123, "0000010101", 47, 18.979,
     {1.204, -0.112, 0.011, -0.081, 0.427, 0.420, -0.922,
      0.020, 0.077, -0.402, 0.323, 0.834, -0.081, 0.417,
      -0.013, -0.368, 1.169, 0.916, -0.199, 0.341, 0.284,
      -0.046, -0.087, -0.264, 0.085, -0.548, 0.349, -0.217,
      0.102, 0.125, 0.135, 0.057, -0.022, 0.076, -0.371,
      -0.178, -0.153, 0.306, 0.758, -0.036, 0.006, 0.024,
      -0.035, 0.002, -0.039, 0.100, -0.020},
     98, 907, 0.859, 0.835, 0.12, 0.09, 0.15, 0.81, 0.76, 0.82},
    {11, 199, "00000010101", 48, 19.670,
     {0.002, 0.274, 0.363, 0.147, 0.039, 0.054, -0.247,
      -0.058, -0.068, 0.066, 0.711, -0.184, 0.104, 0.929,
      0.098, 0.051, 0.191, -0.083, -0.227, 0.185, -0.208,
      -0.173, -0.173, -0.106, 0.004, -0.031, -0.232, -0.285,
      -0.218, -0.120, -0.197, -0.131, -0.287, -0.149, -0.044,
      -0.446, -0.271, -0.210, -0.290, -0.067, -0.157, -0.007,
      -0.069, 0.141, 0.056, -0.234, -0.177, 0.332},
     65, 909, 0.751, 0.643, 0.07, 0.05, 0.09, 0.61, 0.56, 0.64},
    {12, 322, "000001010101", 43, 17.459,
     {0.983, 0.241, 0.820, 0.094, 0.044, 0.996, 0.136,
      -0.012, 0.072, 0.547, 0.165, 0.120, -0.004, -0.083,
      0.487, -0.094, 0.271, -0.016, 0.020, 0.281, 0.409,
      0.319, 0.681, -0.069, -0.061, 0.887, -0.056, -0.238,
      -0.505, -0.036, 0.073, -0.192, 0.535, -0.234, 0.073,
      -0.534, -0.750, -0.393, -0.169, -0.522, -0.436, 0.019,
      0.472},
     68, 909, 0.580, 0.568, 0.10, 0.07, 0.12, 0.56, 0.50, 0.58},
    {6, 18, "010101", 24, 10.095,
     {0.921, 0.081, -0.386, -0.371, -0.530, 0.084, 0.064,
      0.035, -0.321, 0.254, 0.245, 0.035, -0.056, 0.248,
      0.065, 0.009, -0.068, 0.102, 0.016, 0.103, 0.353,
      0.396, -0.422, -0.587},
     521, 934, 0.996, 0.986, 0.72, 0.67, 0.75, 0.98, 0.95, 0.98},
    {7, 29, "0010101", 24, 9.925,
     {0.244, -0.004, -0.228, 0.175, 0.096, 0.023, -0.277,
      -0.143, -0.022, -0.300, 1.014, 0.060, -0.009, -0.176,
      -0.094, -0.212, 0.061, 0.056, 0.343, 0.190, 0.000,
      -0.164, -0.121, -0.242},
     456, 936, 0.988, 0.988, 0.62, 0.58, 0.66, 0.96, 0.93, 0.98},
    {8, 47, "01010101", 40, 16.398,
     {0.826, -0.028, -0.126, -0.179, 0.098, -0.082, -0.030,
      -0.202, -0.426, -0.028, 0.686, 0.090, -0.212, 0.150,
      0.202, -0.386, -0.154, 0.122, 0.044, 0.225, -0.001,
      0.182, 0.127, -0.315, -0.191, 0.481, 0.259, -0.473,
      0.095, 0.977, 1.219, -0.070, 0.359, -0.027, 0.213,
      -0.088, -0.018, 0.212, 0.141, -0.035},
     259, 920, 0.990, 0.957, 0.38, 0.35, 0.42, 0.95, 0.91, 0.96},
    {9, 76, "001010101", 18, 7.884,
     {1.435, 0.430, 0.101, 0.216, -0.042, 0.105, -0.295,
      0.352, -0.023, 0.099, -0.002, 0.212, 0.417, -0.052,
      -0.118, 0.243, -0.634, -1.151},
     542, 895, 0.976, 0.938, 0.87, 0.81, 0.88, 0.92, 0.88, 0.93},
    {10, 123, "0101010101", 34, 14.027,
     {-0.869, -0.385, -0.024, 0.184, -0.497, 0.415, 0.155,
      0.084, 0.025, -0.128, 0.238, 0.162, 0.214, 0.964,
      0.872, 0.155, 0.056, 0.115, -0.170, -0.052, -0.037,
      0.192, 0.103, 0.148, 0.061, 0.061, 0.124, -0.244,
      -0.121, 0.063, -0.111, 0.035, 1.110, 1.184},
     272, 911, 0.960, 0.903, 0.44, 0.40, 0.48, 0.88, 0.84, 0.90},
    {11, 199, "00101010101", 10, 4.572,
     {1.577, 0.240, -0.008, 0.129, -0.432, 0.005, -0.759,
      -0.388, -0.622, -1.846},
     513, 913, 0.990, 0.929, 0.85, 0.79, 0.86, 0.93, 0.88, 0.93},
    {12, 322, "010101010101", 26, 10.825,
     {1.178, 0.160, -0.266, -0.031, 0.387, 0.053, 0.220,
      0.115, -0.098, -0.315, -0.460, -0.357, -0.380, -0.076,
      -0.167, -0.070, 0.228, 0.123, 0.036, 0.485, 0.331,
      0.258, 0.252, 0.086, -0.358, -1.016},
     213, 883, 0.765, 0.856, 0.39, 0.35, 0.43, 0.83, 0.79, 0.85},
    {13, 521, "0010101010101", 20, 8.674,
     {-1.181, -0.232, -0.033, 0.031, 0.086, 0.149, -0.183,
      0.216, -0.231, 0.038, -0.242, 0.014, -0.107, 0.246,
      0.217, 0.356, 0.689, 0.745, 0.809, 1.815},
     369, 893, 0.974, 0.893, 0.68, 0.62, 0.70, 0.89, 0.83, 0.89},
    {14, 843, "01010101010101", 26, 10.825,
     {-1.159, -0.479, -0.159, -0.025, -0.041, 0.027, 0.270,
      0.414, 0.449, 0.621, 0.533, 0.429, 0.264, -0.251,
      0.199, 0.416, 0.132, 1.116, 1.318, 0.926, 0.774,
      0.951, 0.156, 0.191, 1.008, 1.032},
     218, 913, 0.845, 0.875, 0.41, 0.36, 0.44, 0.86, 0.81, 0.87},
    {15, 1364, "001010101010101", 20, 8.624,
     {1.492, 0.149, 0.268, 0.127, 0.035, -0.067, -0.073,
      0.060, -0.261, -0.003, 0.059, -0.452, 0.259, -0.545,
      -0.513, 0.329, 1.458, -0.224, 0.320, 0.192},
     183, 876, 0.830, 0.737, 0.35, 0.29, 0.37, 0.74, 0.67, 0.75},
    {17, 3571, "00101010101010101", 15, 6.383,
     {0.972, 1.184, 0.297, 1.054, -0.300, 1.005, -0.772,
      -0.410, -0.740, -0.186, 0.058, 0.397, 0.054, 0.015,
      -0.583},
     182, 876, 0.708, 0.557, 0.37, 0.30, 0.38, 0.52, 0.45, 0.53},
};

}  // namespace golden
