#pragma once

// Cayley tables transcribed by hand from the reference examples, plus a few
// small groups. These are golden data: never regenerate them from the library.

#include <string>

#include <nafil/latin.hpp>

namespace fixtures {

inline nafil::Table l5() {
    return nafil::Table::from_rows({{1, 2, 3, 4, 5},  //
                                    {2, 1, 5, 3, 4},
                                    {3, 4, 1, 5, 2},
                                    {4, 5, 2, 1, 3},
                                    {5, 3, 4, 2, 1}});
}

inline nafil::Table l9() {
    return nafil::Table::from_rows({{1, 2, 3, 4, 5, 6, 7, 8, 9},
                                    {2, 3, 4, 1, 6, 7, 8, 9, 5},
                                    {3, 4, 1, 2, 7, 8, 9, 5, 6},
                                    {4, 1, 2, 3, 9, 5, 6, 7, 8},
                                    {5, 6, 7, 8, 1, 9, 4, 3, 2},
                                    {6, 7, 8, 9, 2, 1, 5, 4, 3},
                                    {7, 8, 9, 5, 3, 2, 1, 6, 4},
                                    {8, 9, 5, 6, 4, 3, 2, 1, 7},
                                    {9, 5, 6, 7, 8, 4, 3, 2, 1}});
}

inline nafil::Table c4() { return nafil::Table::from_rows({{1, 2, 3, 4}, {2, 3, 4, 1}, {3, 4, 1, 2}, {4, 1, 2, 3}}); }

inline std::string data_path(const std::string& name) { return std::string(NAFIL_TEST_DATA_DIR) + "/" + name; }

}  // namespace fixtures
