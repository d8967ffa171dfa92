#pragma once

#include "webdimer/core.hpp"

#include "json.hpp"
#include <set>
#include <vector>

namespace wd {

// Rectangular tableau, entries row-major.
struct Tableau {
    int rows = 0, cols = 0;
    std::vector<int> e;

    Tableau() = default;
    Tableau(int r, int c) : rows(r), cols(c), e(size_t(r) * c, 0) {}
    static Tableau from_rows(const std::vector<std::vector<int>>& rows);

    int& at(int i, int j) { return e[size_t(i) * cols + j]; }
    int at(int i, int j) const { return e[size_t(i) * cols + j]; }
    int size() const { return rows * cols; }
    std::vector<std::vector<int>> to_rows() const;

    bool operator==(const Tableau& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
    bool operator<(const Tableau& o) const;

    bool is_standard() const;
    bool is_semistandard() const;  // rows weak, columns strict
    std::string str() const;
};

std::vector<Tableau> syt_enumerate(int r, int k);
std::int64_t hook_length_count(int r, int k);

Tableau promotion(const Tableau& T);
Tableau evacuation(const Tableau& T);
Tableau transpose(const Tableau& T);

// For each value in increasing order, the (1-based) rows containing it.
std::vector<int> yamanouchi_word(const Tableau& T);
// Inverse for standard tableaux: word of row indices -> tableau.
Tableau tableau_from_word(const std::vector<int>& word, int rows);
std::set<int> descent_set(const Tableau& T);

nlohmann::json tableau_to_json(const Tableau& T);
Tableau tableau_from_json(const nlohmann::json& j);

}  // namespace wd
