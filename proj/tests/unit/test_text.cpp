#include <doctest.h>

#include "support.hpp"
#include "wall/errors.hpp"
#include "wall/text.hpp"

using namespace wall;

TEST_CASE("glob matching") {
    CHECK(glob_match("**", "a/b/c.py"));
    CHECK(glob_match("*.py", "c.py"));
    CHECK_FALSE(glob_match("*.py", "a/c.py"));
    CHECK(glob_match("**/*.py", "c.py"));
    CHECK(glob_match("**/*.py", "a/b/c.py"));
    CHECK(glob_match("client/**", "client/src/App.jsx"));
    CHECK_FALSE(glob_match("client/**", "server/src/App.jsx"));
    CHECK(glob_match("a/?.txt", "a/b.txt"));
    CHECK_FALSE(glob_match("a/?.txt", "a/bb.txt"));
    CHECK(glob_match("**/OfflineControl.jsx", "client/src/components/OfflineControl.jsx"));
}

TEST_CASE("utf-8 sanitizing") {
    std::string ok = "caf\xc3\xa9";
    CHECK(sanitize_utf8(ok));
    CHECK(ok == "caf\xc3\xa9");
    std::string bad = "a\xff" "b";
    CHECK_FALSE(sanitize_utf8(bad));
    CHECK(bad == "a\xef\xbf\xbd" "b");
}

TEST_CASE("thousands separators") {
    CHECK(with_thousands(0) == "0");
    CHECK(with_thousands(999) == "999");
    CHECK(with_thousands(7304) == "7,304");
    CHECK(with_thousands(-1234567) == "-1,234,567");
}

TEST_CASE("terminator detection and trimming") {
    CHECK(detect_terminator("a\r\nb\r\n") == "\r\n");
    CHECK(detect_terminator("a\nb") == "\n");
    CHECK(detect_terminator("abc") == "\n");
    CHECK(trim("  x \t") == "x");
    CHECK(ends_with_newline("x\n"));
    CHECK_FALSE(ends_with_newline("x"));
}

TEST_CASE("file io") {
    test::TempDir dir;
    write_file(dir / "a/b/c.txt", "hello");
    CHECK(read_file(dir / "a/b/c.txt") == "hello");
    CHECK_THROWS_AS(read_file(dir / "missing.txt"), IoError);
}
