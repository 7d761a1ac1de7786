#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "charvar/document.hpp"
#include "charvar/svg.hpp"

using namespace charvar;

namespace {

std::string slurp(const std::string& name) {
    std::ifstream in(std::string(CHARVAR_CONFIG_DIR) + "/" + name,
                     std::ios::binary);
    REQUIRE(in);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + needle.size()))
        ++count;
    return count;
}

} // namespace

TEST_CASE("gl document parses to the worked example", "[document]") {
    const auto doc = parse_document(slurp("gl-rank10.json"));
    REQUIRE(doc.kind == ConfigDocument::Kind::Gl);
    CHECK(gl_dimension(*doc.gl) == 4);
}

TEST_CASE("quad documents parse with their typings", "[document]") {
    const auto a = parse_document(slurp("quad-rank10-a.json"));
    REQUIRE(a.kind == ConfigDocument::Kind::Quad);
    CHECK(linear_correction(*a.quad) == -8);
    const auto b = parse_document(slurp("quad-rank10-b.json"));
    CHECK(linear_correction(*b.quad) == 8);
}

TEST_CASE("overlapping document parses", "[document]") {
    const auto doc = parse_document(slurp("overlap-rank20.json"));
    REQUIRE(doc.kind == ConfigDocument::Kind::QuadOverlapping);
    CHECK(doc.overlapping->mu == 3);
    CHECK(doc.overlapping->free_column() == 0);
}

TEST_CASE("tuple document parses", "[document]") {
    const auto doc = parse_document(slurp("tuple-hypergeometric.json"));
    REQUIRE(doc.kind == ConfigDocument::Kind::MonodromyTuple);
    CHECK(doc.tuple->rank == 2);
    CHECK(doc.tuple->arity() == 3);
}

TEST_CASE("serialization is canonical and idempotent", "[document]") {
    for (const char* name :
         {"gl-rank10.json", "quad-rank10-a.json", "quad-rank48-min3.json",
          "overlap-rank20.json", "tuple-hypergeometric.json"}) {
        const std::string once = serialize_document(parse_document(slurp(name)));
        const std::string twice = serialize_document(parse_document(once));
        CHECK(once == twice);
    }
}

TEST_CASE("invalid documents name the problem", "[document]") {
    CHECK_THROWS_AS(parse_document("{"), ParseError);
    CHECK_THROWS_AS(parse_document("{\"kind\": \"nope\"}"), ParseError);
    CHECK_THROWS_WITH(
        parse_document(slurp("bad-widths.json")),
        Catch::Matchers::ContainsSubstring("sum"));

    // unknown fields are rejected
    CHECK_THROWS_WITH(
        parse_document(R"({"kind": "gl", "rank": 3, "surprise": 1,
            "columns": [{"width": 1, "parts": [1, 1, 1]},
                        {"width": 1, "parts": [1, 1, 1]},
                        {"width": 1, "parts": [1, 1, 1]}]})"),
        Catch::Matchers::ContainsSubstring("surprise"));

    // malformed rationals are reported with their text
    CHECK_THROWS_WITH(
        parse_document(R"({"kind": "monodromy-tuple", "rank": 1, "points":
            [[{"eigenvalue": "one half", "parts": [1]}],
             [{"eigenvalue": "0/1", "parts": [1]}],
             [{"eigenvalue": "0/1", "parts": [1]}]]})"),
        Catch::Matchers::ContainsSubstring("one half"));
}

TEST_CASE("kernel documents parse and validate", "[document]") {
    const auto kernel = parse_kernel(
        R"({"kind": "kernel",
            "betaH": ["1/2", "2/3", "3/4"],
            "betaV": ["11/12", "0/1", "0/1"],
            "betaT": "1/12"})");
    CHECK(kernel.betaT == Exponent(Rational(1, 12)));
    CHECK_THROWS_AS(parse_kernel(
                        R"({"kind": "kernel",
            "betaH": ["1/2", "1/2", "0/1"],
            "betaV": ["0/1", "0/1", "0/1"],
            "betaT": "0/1"})"),
                    DegenerateKernel);
}

TEST_CASE("report serialization carries the stable fields", "[document]") {
    VerificationReport report;
    report.theorem = "gl-rank-bound";
    report.lo = 3;
    report.hi = 12;
    report.pass = true;
    report.elapsed_ms = 7;
    const json out = report_to_json(report);
    for (const char* key : {"theorem", "range", "epsilon", "status",
                            "witnesses", "violations", "elapsed_ms"})
        CHECK(out.contains(key));
    CHECK(out["status"] == "pass");
    CHECK(out["range"] == json::array({3, 12}));
}

TEST_CASE("gl diagram labels every square", "[document]") {
    const auto doc = parse_document(slurp("gl-rank10.json"));
    const std::string svg = render_svg(doc);
    CHECK(count_of(svg, "<text") == 12);
    CHECK(count_of(svg, "<rect") == 13); // frame plus one per square
    CHECK(count_of(svg, "stroke-dasharray=\"8 6\"") == 0);
}

TEST_CASE("overlapping diagram draws the dashed box", "[document]") {
    const auto doc = parse_document(slurp("overlap-rank20.json"));
    const std::string svg = render_svg(doc);
    CHECK(count_of(svg, "stroke-dasharray=\"8 6\"") == 1);
    CHECK(count_of(svg, "<tspan") > 0); // typed labels carry superscripts
}

TEST_CASE("diagrams require configuration documents", "[document]") {
    const auto doc = parse_document(slurp("tuple-hypergeometric.json"));
    CHECK_THROWS_AS(render_svg(doc), Error);
}
