// Copyright 2026 The qsig Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qsig/cli.hpp"
#include "qsig/csv.hpp"

using namespace qsig;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("qsig_test_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("csv reading") {
    std::istringstream with_header("x,y\n1,2\n3/2,-4\n");
    const auto t = read_csv_exact(with_header);
    CHECK(t.columns == 2);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[1][0] == Rational(3, 2));
    std::istringstream floats("0.5\n-1e-3\n");
    CHECK(read_csv_float(floats).rows[1][0] == -1e-3);

    auto error_at = [](const std::string& text, bool exact) -> std::pair<std::size_t, std::size_t> {
        std::istringstream in(text);
        try {
            if (exact) {
                read_csv_exact(in);
            } else {
                read_csv_float(in);
            }
        } catch (const CsvError& e) {
            return {e.row(), e.column()};
        }
        return {0, 0};
    };
    CHECK(error_at("1,2\n3\n", true) == std::pair<std::size_t, std::size_t>{2, 0});
    CHECK(error_at("1,2\n3,abc\n", true) == std::pair<std::size_t, std::size_t>{2, 2});
    CHECK(error_at("1\n0.5\n", true) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("1\n1/2\n", false) == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(error_at("1\n1/0\n", true).first == 2);
    std::istringstream empty("a,b,c\n");
    const auto e = read_csv_exact(empty);
    CHECK(e.columns == 3);
    CHECK(e.rows.empty());
}

TEST_CASE("sig command") {
    const std::string csv = temp_file("small.csv", "x\n0\n1\n3\n");
    auto r = run({"sig", csv, "--max-weight", "2", "--exact"});
    CHECK(r.code == cli::kPass);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["coefficients"]["e"] == "1");
    CHECK(doc["coefficients"]["[1]"] == "3");
    CHECK(doc["coefficients"]["[1][1]"] == "2");
    CHECK(doc["coefficients"]["[1,1]"] == "5");
    CHECK(doc["d"] == 1);
    CHECK(doc["m"] == 2);

    r = run({"sig", csv, "--max-weight", "2", "--exact", "--words", "[1,1]"});
    CHECK(nlohmann::json::parse(r.out)["coefficients"].size() == 2);
    r = run({"sig", csv, "--max-weight", "2", "--exact", "--words", "[1][1][1]"});
    CHECK(r.code == cli::kUsage);
    r = run({"sig", csv, "--exact", "--from", "2", "--to", "1"});
    CHECK(r.code == cli::kUsage);
    r = run({"sig", csv, "--max-weight", "2"});
    CHECK(nlohmann::json::parse(r.out)["coefficients"]["[1,1]"] == 5.0);

    const std::string empty = temp_file("empty.csv", "a,b\n");
    r = run({"sig", empty, "--exact"});
    const auto e = nlohmann::json::parse(r.out);
    CHECK(e["coefficients"].size() == 1);
    CHECK(e["coefficients"]["e"] == "1");

    const std::string ragged = temp_file("ragged.csv", "1,2\n3\n");
    r = run({"sig", ragged});
    CHECK(r.code == cli::kUsage);
    CHECK(r.err.find("row 2") != std::string::npos);
}

TEST_CASE("sig output is deterministic across chunk counts") {
    std::string text;
    for (int i = 0; i < 20; ++i) text += std::to_string((i * 7) % 5 - 2) + "," + std::to_string((i * 3) % 4) + "\n";
    const std::string csv = temp_file("chunks.csv", text);
    const auto one = run({"sig", csv, "--exact", "--max-weight", "3", "--chunks", "1"});
    const auto four = run({"sig", csv, "--exact", "--max-weight", "3", "--chunks", "4"});
    CHECK(one.out == four.out);
    CHECK(one.out == run({"sig", csv, "--exact", "--max-weight", "3"}).out);
    const auto window = run({"sig", csv, "--exact", "--from", "3", "--to", "11", "--chunks", "3"});
    CHECK(window.out == run({"sig", csv, "--exact", "--from", "3", "--to", "11"}).out);
}

TEST_CASE("emitted words re-parse") {
    const std::string csv = temp_file("reparse.csv", "1,2\n3,4\n0,1\n");
    const auto doc = nlohmann::json::parse(run({"sig", csv, "--exact"}).out);
    for (const auto& [key, value] : doc["coefficients"].items()) CHECK(print_word(parse_word(key)) == key);
}

TEST_CASE("qsh and hoffman commands") {
    CHECK(run({"qsh", "prod", "[2]", "[3]"}).out == "[2][3] + [3][2] + [2,3]\n");
    CHECK(run({"qsh", "antipode", "[1][2]"}).out == "[2][1] + [1,2]\n");
    CHECK(run({"qsh", "coproduct", "e"}).out == "e ⊗ e\n");
    CHECK(run({"qsh", "shuffle", "[1]", "[2]"}).out == "[1][2] + [2][1]\n");
    CHECK(run({"hoffman", "exp", "[1][2]"}).out == "[1][2] + 1/2 [1,2]\n");
    CHECK(run({"hoffman", "log", "[1][2]"}).out == "[1][2] - 1/2 [1,2]\n");
    CHECK(run({"hoffman", "exp", "[1]"}).out == "[1]\n");
    const auto bad = run({"qsh", "prod", "[1", "[2]"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("offset 2") != std::string::npos);
    CHECK(run({"qsh", "nope", "[1]"}).code == cli::kUsage);
    CHECK(run({}).code == cli::kUsage);
}

TEST_CASE("dims command") {
    auto r = run({"dims", "--d", "1", "--max-n", "4"});
    CHECK(r.code == cli::kPass);
    CHECK(r.out.find("dim: 1 1 2 4 8") != std::string::npos);
    r = run({"dims", "--d", "2", "--max-n", "2"});
    CHECK(r.out.find("dim: 1 2 7") != std::string::npos);
    CHECK(r.out.find("series=ok enumeration=ok") != std::string::npos);
}

TEST_CASE("check command") {
    const std::string csv = temp_file("check.csv", "t,x\n0,0\n1,-2\n3,1/2\n2,2\n");
    for (const char* prop : {"invariance", "character", "chen", "hoffman-transfer"}) {
        const auto r = run({"check", prop, csv, "--exact"});
        CHECK(r.code == cli::kPass);
        CHECK(r.out.rfind("PASS", 0) == 0);
    }
    const std::string floats = temp_file("checkf.csv", "0.1,0.2\n0.5,-0.25\n0.3,0.7\n");
    CHECK(run({"check", "character", floats}).code == cli::kPass);

    const auto sig = run({"sig", csv, "--exact", "--max-weight", "3"});
    auto doc = nlohmann::json::parse(sig.out);
    const std::string good = temp_file("good.json", doc.dump());
    CHECK(run({"check", "character", "--signature", good}).code == cli::kPass);
    doc["coefficients"]["[1][2]"] = "12345";
    const std::string corrupt = temp_file("corrupt.json", doc.dump());
    const auto r = run({"check", "character", "--signature", corrupt});
    CHECK(r.code == cli::kViolation);
    CHECK(r.out.find("FAIL") == 0);
    CHECK(r.out.find("u=") != std::string::npos);
}

TEST_CASE("area command") {
    CHECK(run({"area", "[1]", "[2]"}).out == "[1][2] - [2][1]\n");
    CHECK(run({"area", "[1]", "[2]", "--discrete"}).out == "[1][2] - [2][1]\n");
}

TEST_CASE("max weight from the environment") {
    ::setenv("QSIG_MAX_WEIGHT", "2", 1);
    CHECK(cli::default_max_weight() == 2);
    ::setenv("QSIG_MAX_WEIGHT", "x", 1);
    CHECK_THROWS(cli::default_max_weight());
    ::unsetenv("QSIG_MAX_WEIGHT");
    CHECK(cli::default_max_weight() == 3);
}
