#pragma once

// A lower-triangular table of integer coefficients: row n holds the
// entries for s = 0..n, and row_sums[n] is their total.

#include "umbra/exactnum.hpp"

#include <vector>

namespace umbra {

struct Triangle {
    std::vector<std::vector<BigInt>> rows;
    std::vector<BigInt> row_sums;
};

}  // namespace umbra
