#include <doctest.h>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "support.hpp"
#include "wall/diff.hpp"

using namespace wall;

namespace {

using Lines = std::vector<std::string>;

DiffLine row(DiffKind k, std::optional<int> o, std::optional<int> r, std::string text) {
    return {k, o, r, std::move(text)};
}

}  // namespace

TEST_CASE("identical inputs are all unchanged") {
    const Lines a = {"x", "y", "z"};
    const auto d = line_diff(a, a);
    REQUIRE(d.size() == 3);
    for (const auto& l : d) CHECK(l.kind == DiffKind::Unchanged);
    const auto m = compute_metrics(d);
    CHECK(m.summary() == "precision=1.0000 recall=1.0000 f1=1.0000");
}

TEST_CASE("a/b/c against a/x/c") {
    const Lines o = {"a", "b", "c"};
    const Lines r = {"a", "x", "c"};
    const auto d = line_diff(o, r);
    const std::vector<DiffLine> expected = {
        row(DiffKind::Unchanged, 1, 1, "a"),
        row(DiffKind::Removed, 2, std::nullopt, "b"),
        row(DiffKind::Added, std::nullopt, 2, "x"),
        row(DiffKind::Unchanged, 3, 3, "c"),
    };
    CHECK(d == expected);
    const auto m = compute_metrics(d);
    CHECK(m.matched == 2);
    CHECK(m.removed == 1);
    CHECK(m.added == 1);
    CHECK(format_ratio(m.precision) == "0.6667");
    CHECK(format_ratio(m.recall) == "0.6667");
    CHECK(format_ratio(m.f1) == "0.6667");
}

TEST_CASE("empty-side conventions") {
    const Lines empty;
    const Lines one = {"a"};
    const auto added = line_diff(empty, one);
    REQUIRE(added.size() == 1);
    CHECK(added[0] == row(DiffKind::Added, std::nullopt, 1, "a"));

    const auto gone = compute_metrics(line_diff(one, empty));
    CHECK(gone.precision == 0.0);
    CHECK(gone.recall == 0.0);
    CHECK(gone.f1 == 0.0);

    const auto both = compute_metrics(line_diff(empty, empty));
    CHECK(both.precision == 1.0);
    CHECK(both.recall == 1.0);
    CHECK(both.f1 == 1.0);

    const auto fresh = compute_metrics(added);
    CHECK(fresh.precision == 0.0);
    CHECK(fresh.recall == 0.0);
    CHECK(fresh.f1 == 0.0);
}

TEST_CASE("line splitting") {
    auto s = split_lines("a\nb\n");
    CHECK(s.lines == Lines{"a", "b"});
    CHECK(s.final_terminator);
    CHECK(join_lines(s) == "a\nb\n");
    s = split_lines("a\r\nb");
    CHECK(s.lines == Lines{"a", "b"});
    CHECK(s.terminator == "\r\n");
    CHECK(join_lines(s) == "a\r\nb");
    CHECK(split_lines("").lines.empty());
    CHECK(split_lines("\n").lines == Lines{""});
}

TEST_CASE("trailing whitespace normalization is opt-in") {
    const Lines o = {"a  ", "b"};
    const Lines r = {"a", "b"};
    CHECK(compute_metrics(line_diff(o, r)).matched == 1);
    CHECK(compute_metrics(line_diff(o, r, DiffOptions{true})).matched == 2);
}

TEST_CASE("compare_texts agrees with line_diff") {
    const auto report = compare_texts("a\nb\nc\n", "a\nx\nc\n");
    CHECK(report.metrics.matched == 2);
    CHECK(report.lines.size() == 4);
}

TEST_CASE("property: matched equals the LCS oracle, replay reconstructs both sides") {
    test::Gen gen(1729);
    for (int round = 0; round < 1500; ++round) {
        const Lines o = test::random_lines(gen, 30, 5);
        const Lines r = test::random_lines(gen, 30, 5);
        const auto d = line_diff(o, r);
        const auto m = compute_metrics(d);
        CAPTURE(round);
        REQUIRE(m.matched == test::lcs_dp(o, r));
        CHECK(m.matched + m.removed == o.size());
        CHECK(m.matched + m.added == r.size());
        CHECK(replay_revised(d) == r);
        CHECK(replay_original(d) == o);

        int on = 0, rn = 0;
        for (const auto& l : d) {
            if (l.kind != DiffKind::Added) CHECK(l.original_line_no == ++on);
            else CHECK_FALSE(l.original_line_no.has_value());
            if (l.kind != DiffKind::Removed) CHECK(l.revised_line_no == ++rn);
            else CHECK_FALSE(l.revised_line_no.has_value());
        }
    }
}

TEST_CASE("property: exhaustive oracle on short inputs") {
    test::Gen gen(31337);
    for (int round = 0; round < 1000; ++round) {
        const Lines o = test::random_lines(gen, 10, 4);
        const Lines r = test::random_lines(gen, 10, 4);
        CHECK(compute_metrics(line_diff(o, r)).matched == test::lcs_enumerate(o, r));
    }
}

TEST_CASE("property: metric bounds and symmetry") {
    test::Gen gen(2718);
    for (int round = 0; round < 1000; ++round) {
        const Lines o = test::random_lines(gen, 20, 5);
        const Lines r = test::random_lines(gen, 20, 5);
        const auto fwd = compute_metrics(line_diff(o, r));
        const auto back = compute_metrics(line_diff(r, o));
        for (double v : {fwd.precision, fwd.recall, fwd.f1}) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
        CHECK(fwd.precision == back.recall);
        CHECK(fwd.recall == back.precision);
        CHECK((fwd.f1 == 1.0) == (fwd.removed == 0 && fwd.added == 0));
        CHECK(fwd.f1 <= std::max(fwd.precision, fwd.recall) + 1e-12);
        CHECK(fwd.f1 >= std::min(fwd.precision, fwd.recall) - 1e-12);
    }
}

TEST_CASE("large inputs stay fast and exact") {
    test::Gen gen(8);
    Lines o, r;
    for (int i = 0; i < 20000; ++i) o.push_back("line " + std::to_string(i));
    r = o;
    for (int k = 0; k < 200; ++k) r[static_cast<std::size_t>(gen.between(0, 19999))] = "changed";
    const auto m = compute_metrics(line_diff(o, r));
    CHECK(m.matched + m.added == r.size());
    CHECK(m.matched >= 19800);
}

TEST_CASE("html marks removed rows yellow and added rows green") {
    const Lines o = {"a", "b", "c"};
    const Lines r = {"a", "x", "c"};
    const auto d = line_diff(o, r);
    const std::string html = render_diff(d, RenderFormat::SideBySideHtml);
    auto count = [&](const std::string& needle) {
        std::size_t n = 0;
        for (auto p = html.find(needle); p != std::string::npos; p = html.find(needle, p + 1)) ++n;
        return n;
    };
    CHECK(count("<tr class=\"wall-removed\">") == 1);
    CHECK(count("<tr class=\"wall-added\">") == 1);
    CHECK(html.find(".wall-removed") != std::string::npos);
    CHECK(html.find(".wall-added") != std::string::npos);
    CHECK(html.find("<html") != std::string::npos);

    const std::string empty = render_diff({}, RenderFormat::SideBySideHtml);
    CHECK(empty.find("</html>") != std::string::npos);
    CHECK(empty.find("wall-added\"") == std::string::npos);
}

TEST_CASE("html escapes content") {
    const Lines o = {"<script>&"};
    const auto html = render_diff(line_diff(o, Lines{}), RenderFormat::SideBySideHtml);
    CHECK(html.find("<script>&") == std::string::npos);
    CHECK(html.find("&lt;script&gt;&amp;") != std::string::npos);
}

TEST_CASE("terminal rendering uses markers") {
    const auto d = line_diff(Lines{"a", "b"}, Lines{"a", "c"});
    RenderOptions opts;
    opts.color = false;
    const auto text = render_diff(d, RenderFormat::Terminal, opts);
    CHECK(text.find("- b") != std::string::npos);
    CHECK(text.find("+ c") != std::string::npos);
}

TEST_CASE("property: structured rows round-trip") {
    test::Gen gen(77);
    for (int round = 0; round < 300; ++round) {
        const auto d = line_diff(test::random_lines(gen, 15, 4), test::random_lines(gen, 15, 4));
        const auto doc = nlohmann::json::parse(render_diff(d, RenderFormat::Structured));
        CHECK(diff_from_json(doc) == d);
        CHECK(diff_from_json(diff_to_json(d)) == d);
    }
}
