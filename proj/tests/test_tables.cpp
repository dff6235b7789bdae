#include <fstream>
#include <sstream>

#include "doctest.h"
#include "reference_data.hpp"

#include "circulant/errors.hpp"
#include "circulant/tables.hpp"

using namespace circulant;

namespace {

// One shared catalog so the search-derived degree-6 rows materialize once.
Catalog& shared_catalog() {
    static Catalog cat;
    return cat;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("table ids are stable") {
    CHECK(table_ids() == std::vector<std::string>{"t2", "t3", "t5", "t6", "t7", "t7a", "t7b",
                                                  "t7c", "t8"});
    CHECK_THROWS_AS(table_csv("nope", shared_catalog()), UnknownFamily);
}

TEST_CASE("table output is byte-identical to the golden files") {
    for (const std::string& id : table_ids()) {
        INFO("table ", id);
        CHECK(table_csv(id, shared_catalog()) == read_file("data/golden/" + id + ".csv"));
    }
}

TEST_CASE("table output is identical across repeated runs") {
    CHECK(table_csv("t3", shared_catalog()) == table_csv("t3", shared_catalog()));
    CHECK(table_csv("t8", shared_catalog()) == table_csv("t8", shared_catalog()));
}

TEST_CASE("spot cells agree with the frozen references") {
    std::string t5 = table_csv("t5", shared_catalog());
    CHECK(t5.find("9,40,120,280,552,968,1560,2360,3400,4712") != std::string::npos);
    std::string t8 = table_csv("t8", shared_catalog());
    CHECK(t8.find("8,-,4,4") != std::string::npos);
    CHECK(t8.find("6,2,4,2") != std::string::npos);
    std::string t2 = table_csv("t2", shared_catalog());
    CHECK(t2.find("6,144,1,5,12,20,28,36,42") != std::string::npos);
}
