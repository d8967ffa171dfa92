#include "doctest.h"

#include "webdimer/basisgen.hpp"

#include <map>

using namespace wd;

namespace {

// Orbit representatives of the 12-point SL_3 basis with the words of their
// SL_4 duals: (index, dual word, word). Index 19's dual is a formal difference
// and carries no single word.
struct Row {
    int index;
    const char* dual;
    const char* word;
};
const Row kRows[] = {
    {1, "111222333444", "123123123123"},  {2, "111222334344", "123123121323"},  {4, "111222334434", "123123121233"},
    {5, "111222343434", "123123112233"},  {6, "111223234344", "123121321323"},  {7, "111223234434", "123121321233"},
    {8, "111223243344", "123121312323"},  {20, "111223243434", "123121312233"}, {13, "111223342344", "123121213323"},
    {10, "111223342434", "123121213233"}, {12, "111223344234", "123121212333"}, {21, "111223423434", "123121132233"},
    {15, "111223432344", "123121123323"}, {26, "111223432434", "123121123233"}, {28, "111223434234", "123121122333"},
    {19, "", "123112321233"},             {25, "111232342434", "123112213233"}, {23, "111232344234", "123112212333"},
    {29, "111232434234", "123112122333"}, {30, "111234234234", "123111222333"}, {31, "112122334344", "121323121323"},
    {32, "112122343434", "121323112233"}, {33, "112123234344", "121321321323"}, {39, "112123243434", "121321312233"},
    {35, "112123423344", "121321132323"}, {40, "112123423434", "121321132233"}, {37, "112123434234", "121321122333"},
    {44, "112132324344", "121312231323"}, {38, "112132342344", "121312213323"}, {41, "112234123434", "121211332233"},
    {42, "112312423434", "121132132233"}, {43, "112341234234", "121113222333"},
};

std::vector<int> digits(const std::string& s) {
    std::vector<int> w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

bool fork3(const Web& W, int i) {
    int n = W.n;
    auto at = [&](int x) { return W.edges[W.bnd[(x - 1) % n][0]].u >= 0 ? W.edges[W.bnd[(x - 1) % n][0]].u
                                                                         : W.edges[W.bnd[(x - 1) % n][0]].v; };
    return at(i) == at(i + 1) && at(i + 1) == at(i + 2);
}

}  // namespace

TEST_CASE("dual words are transposes") {
    int pairs = 0;
    for (auto& r : kRows) {
        if (!*r.dual) continue;
        CAPTURE(r.index);
        Tableau W = tableau_from_word(digits(r.dual), 4), X = tableau_from_word(digits(r.word), 3);
        CHECK(W.is_standard());
        CHECK(X.is_standard());
        CHECK(W == transpose(X));
        ++pairs;
    }
    CHECK(pairs == 31);
}

TEST_CASE("the listed webs represent the 32 dihedral orbits of the 12-point basis") {
    auto B = sl3_basis(12);
    std::map<std::vector<int>, int> by_word;
    std::map<std::string, int> by_key;
    for (size_t i = 0; i < B.size(); ++i) {
        by_word[word_and_sign(B[i]).word] = int(i);
        by_key[canonical_key(B[i])] = int(i);
    }
    REQUIRE(by_key.size() == 462);

    std::vector<int> orbit(462, -1);
    int orbits = 0;
    for (size_t i = 0; i < B.size(); ++i) {
        if (orbit[i] >= 0) continue;
        for (Web V : {B[i], reflect(B[i])})
            for (int t = 0; t < 12; ++t, V = rotate(V)) {
                auto it = by_key.find(canonical_key(V));
                REQUIRE(it != by_key.end());
                orbit[it->second] = orbits;
            }
        ++orbits;
    }
    CHECK(orbits == 32);

    std::set<int> hit;
    for (auto& r : kRows) {
        auto it = by_word.find(digits(r.word));
        REQUIRE(it != by_word.end());
        hit.insert(orbit[it->second]);
    }
    CHECK(hit.size() == 32);
}

TEST_CASE("webs with index at most 20 have a three-point fork") {
    auto B = sl3_basis(12);
    std::map<std::vector<int>, int> by_word;
    for (size_t i = 0; i < B.size(); ++i) by_word[word_and_sign(B[i]).word] = int(i);
    for (auto& r : kRows) {
        const Web& X = B[by_word.at(digits(r.word))];
        bool has = false;
        for (int i = 1; i <= 12; ++i) has = has || fork3(X, i);
        CAPTURE(r.index);
        if (r.index <= 20) CHECK(has);
    }
}
