#include "doctest.h"

#include "algrest/driver.hpp"

#include <fstream>
#include <sstream>

namespace {

std::string slurp(const std::string &name) {
    std::ifstream in(std::string(GOLDEN_DIR) + "/" + name);
    REQUIRE_MESSAGE(in.good(), "missing golden file ", name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void check_table(const std::string &file, const std::string &family, long long a,
                 long long b, int n) {
    auto doc = algrest::driver::table(family, a, b, n, 24);
    CHECK(algrest::driver::to_json_text(doc) == slurp(file));
}

}  // namespace

TEST_CASE("table output is byte-stable against the golden files") {
    check_table("Iab_a2_b2_n1.json", "Iab", 2, 2, 1);
    check_table("Iab_a2_b2_n2.json", "Iab", 2, 2, 2);
    check_table("I2a1_a3_n2.json", "I2a+1", 3, 0, 2);
    check_table("I2a4_a2_n2.json", "I2a+4", 2, 0, 2);
    check_table("Ia5_a4_n2.json", "Ia+5", 4, 0, 2);
    check_table("I10star_n1.json", "I10star", 0, 0, 1);
    check_table("I10star_n2.json", "I10star", 0, 0, 2);
}

TEST_CASE("golden values pin the published invariants") {
    auto doc = algrest::driver::table("I10star", 0, 0, 2, 24);
    const auto &classes = doc["classes"];
    REQUIRE(classes.size() == 4);
    std::vector<int> mu, cod;
    std::vector<std::string> iota;
    for (const auto &c : classes) {
        mu.push_back(c["mu"].get<int>());
        cod.push_back(c["cod"].get<int>());
        iota.push_back(c["iota"].is_string() ? c["iota"].get<std::string>()
                                             : std::to_string(c["iota"].get<int>()));
        CHECK(c["realizable"].get<bool>());
    }
    CHECK(mu == std::vector<int>{0, 1, 2, 3});
    CHECK(cod == mu);
    CHECK(iota == std::vector<std::string>{"0", "1", "2", "inf"});
}
