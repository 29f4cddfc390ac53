#pragma once

#include <ostream>

#include "convcodes/conversion.hpp"

namespace fixtures {

// The two [3,2] initial codes merged into the [5,4] even-weight code.
inline convcodes::BitMatrix example_gi() {
    return convcodes::BitMatrix::from_strings({"101000", "011000", "000110", "000011"});
}

inline convcodes::BitMatrix example_gf() {
    return convcodes::BitMatrix::from_strings({"10001", "01001", "00101", "00011"});
}

inline convcodes::ConvertibleInstance example_instance() {
    using convcodes::LinearCode;
    using convcodes::BitMatrix;
    return convcodes::make_instance({LinearCode::from_generator(BitMatrix::from_strings({"101", "011"})),
                                     LinearCode::from_generator(BitMatrix::from_strings({"110", "011"}))},
                                    LinearCode::from_generator(example_gf()));
}

// sigma(x) = (x1, x2, x4, x5, x3 + x6)
inline convcodes::BitMatrix example_y() {
    return convcodes::BitMatrix::from_strings({"10000", "01000", "00001", "00100", "00010", "00001"});
}

// sigma(x) = (x1 + x4, x2 + x5, x1, x2, x6): valid, with only three final
// symbols that equal an initial symbol on every codeword.
inline convcodes::BitMatrix example_three_unchanged_y() {
    return convcodes::BitMatrix::from_strings({"10100", "01010", "00000", "10000", "01000", "00001"});
}

}  // namespace fixtures

namespace convcodes {

// Readable gtest failure output.
inline void PrintTo(const BitMatrix& m, std::ostream* os) {
    *os << m.rows() << "x" << m.cols();
    for (const auto& row : m.to_strings()) *os << " " << row;
}

inline void PrintTo(const BitVector& v, std::ostream* os) { *os << v.to_string(); }

}  // namespace convcodes
