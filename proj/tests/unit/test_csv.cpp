#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/issues_csv.hpp"

using namespace wall;

namespace {

std::vector<IssueRecord> sample_rows() {
    return {
        make_issue("client/src/App.jsx", 12, "A fragment with only one child is redundant.", IssueType::CodeSmell),
        make_issue("client/src/components/OfflineControl.jsx", 116,
                   "Visible, non-interactive elements with click handlers must have at least one keyboard listener.",
                   IssueType::Bug),
        make_issue("deploy/helm/dis/deployment.yaml", 20, "Specify a CPU limit for this container.",
                   IssueType::Vulnerability),
    };
}

/// Independent RFC 4180 field encoder used as the quoting oracle.
std::string rfc4180(const std::string& field) {
    bool needs = false;
    for (char c : field) needs = needs || c == ',' || c == '"' || c == '\n' || c == '\r';
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

TEST_CASE("empty list writes the header only") {
    std::ostringstream os;
    const auto n = write_csv({}, os);
    CHECK(os.str() == "File_Location,File_Name,Line,Message,Type\n");
    CHECK(n == os.str().size());
    CHECK(parse_csv(os.str()).empty());
}

TEST_CASE("sample rows match the golden file and parse back") {
    const auto rows = sample_rows();
    const std::string csv = to_csv(rows);
    CHECK(csv == read_file(test::kFixtures / "sample/issues.csv"));
    CHECK(parse_csv(csv) == rows);
}

TEST_CASE("quoting follows RFC 4180") {
    CHECK(csv_escape("Use \"x\", not 'y'") == "\"Use \"\"x\"\", not 'y'\"");
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("reader errors carry the row") {
    const std::string header = "File_Location,File_Name,Line,Message,Type\n";
    SUBCASE("header mismatch") {
        CHECK_THROWS_AS(parse_csv("file,name,line,message,type\n"), HeaderMismatch);
    }
    SUBCASE("non-numeric line") {
        try {
            parse_csv(header + "a/b.py,b.py,3,ok,BUG\na/c.py,c.py,abc,msg,BUG\n");
            FAIL("expected BadLineNumber");
        } catch (const BadLineNumber& e) {
            CHECK(e.row() == 2);
            CHECK(std::string(e.what()).find("row 2") != std::string::npos);
        }
    }
    SUBCASE("bad type") {
        CHECK_THROWS_AS(parse_csv(header + "a.py,a.py,1,m,SECURITY_HOTSPOT\n"), BadType);
    }
    SUBCASE("wrong field count") {
        CHECK_THROWS_AS(parse_csv(header + "a.py,a.py,1\n"), RowParseError);
    }
    SUBCASE("unterminated quote") {
        CHECK_THROWS_AS(parse_csv(header + "a.py,a.py,1,\"open,BUG\n"), RowParseError);
    }
    SUBCASE("zero line") {
        CHECK_THROWS_AS(parse_csv(header + "a.py,a.py,0,m,BUG\n"), BadLineNumber);
    }
    SUBCASE("file name must be the basename") {
        CHECK_THROWS_AS(parse_csv(header + "a/b.py,c.py,1,m,BUG\n"), RowParseError);
    }
}

TEST_CASE("reader tolerates CRLF, BOM and backslash paths") {
    const std::string text =
        "\xEF\xBB\xBF" "File_Location,File_Name,Line,Message,Type\r\n"
        "Project\\client\\src\\App.jsx,App.jsx,12,A fragment with only one child is redundant.,CODE_SMELL\r\n";
    const auto rows = parse_csv(text);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].file_location == "Project/client/src/App.jsx");
    CHECK(rows[0].file_name == "App.jsx");
}

TEST_CASE("property: randomized records round-trip byte-exact") {
    test::Gen gen(20240611);
    const std::vector<std::string> pieces = {"a", "Z", " ", ",", "\"", "'", "\n", "\r\n", "\xc3\xa9", "\xe2\x82\xac",
                                             "\xf0\x9f\x90\x9b", "x,y", ";", "\t", "line"};
    const std::vector<std::string> segs = {"src", "client", "deploy", "a b", "x,y", "caf\xc3\xa9", "q\"t", "lib"};
    for (int round = 0; round < 1000; ++round) {
        std::vector<IssueRecord> records;
        const int n = gen.between(0, 6);
        for (int i = 0; i < n; ++i) {
            std::string path;
            const int depth = gen.between(1, 4);
            for (int d = 0; d < depth; ++d) path += (d ? "/" : "") + gen.pick(segs);
            path += "." + gen.from_alphabet("pyjsx", 1, 3);
            std::string msg;
            const int parts = gen.between(1, 8);
            for (int p = 0; p < parts; ++p) msg += gen.pick(pieces);
            records.push_back(make_issue(path, gen.between(1, 100000), msg,
                                         kIssueTypes[static_cast<std::size_t>(gen.between(0, 2))]));
        }
        const std::string first = to_csv(records);
        const auto parsed = parse_csv(first);
        REQUIRE(parsed == records);
        CHECK(to_csv(parsed) == first);

        // Rows are the oracle's encoding of each field.
        std::string expected = "File_Location,File_Name,Line,Message,Type\n";
        for (const auto& r : records) {
            expected += rfc4180(r.file_location) + "," + rfc4180(r.file_name) + "," + std::to_string(r.line) + "," +
                        rfc4180(r.message) + "," + std::string(to_string(r.type)) + "\n";
        }
        CHECK(first == expected);
    }
}
