// Shared test fixtures: small reference codes used across the test binaries.
#ifndef TCC_TESTS_FIXTURES_HPP
#define TCC_TESTS_FIXTURES_HPP

#include <string>
#include <vector>

#include "tcc/code.hpp"

namespace tcc::fixtures {

// Generator rows of the unique [10,5,5] code, in (I | A) form with circulant A.
inline std::vector<std::string> unique_10_5_5_rows() {
    return {
        "1000012210",
        "0100001221",
        "0010010122",
        "0001021012",
        "0000122101",
    };
}

inline LinearCode unique_10_5_5() { return LinearCode::parse(unique_10_5_5_rows()); }

}  // namespace tcc::fixtures

#endif
