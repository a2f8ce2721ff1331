#include <doctest.h>

#include <string>

#include "stoim/render.hpp"

using namespace stoim;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("ascii diagram of a single arc") {
  CHECK(render_ascii(Matching::parse("2 1")) ==
        ".-.\n"
        "* #\n"
        "1 2\n");
}

TEST_CASE("ascii diagram stacks crossing arcs") {
  CHECK(render_ascii(Matching::parse("3 4 1 2")) ==
        "  .---.\n"
        ".-|-. |\n"
        "* * # #\n"
        "1 2 3 4\n");
}

TEST_CASE("ascii diagram is stable and validity-agnostic") {
  const Matching nested = Matching::parse("4 3 2 1");
  CHECK(render_ascii(nested) == render_ascii(nested));
  CHECK(contains(render_ascii(nested), "*"));
  CHECK(contains(render_ascii(nested), "#"));
  CHECK(render(nested, RenderFormat::Ascii) == render_ascii(nested));
}

TEST_CASE("svg output uses the fixed coordinate grid") {
  const Matching m = Matching::parse("3 4 1 2 6 5");
  const std::string svg = render_svg(m);
  CHECK(svg == render_svg(m));  // byte-stable
  CHECK(contains(svg, "<?xml version=\"1.0\" encoding=\"UTF-8\"?>"));
  // spans 2, 2, 1 -> max radius 40 -> baseline 80
  CHECK(contains(svg, "<path d=\"M 40 80 A 40 40 0 0 1 120 80\""));
  CHECK(contains(svg, "<path d=\"M 80 80 A 40 40 0 0 1 160 80\""));
  CHECK(contains(svg, "<path d=\"M 200 80 A 20 20 0 0 1 240 80\""));
  // openers 1, 2, 5 as circles; closers 3, 4, 6 as squares
  CHECK(contains(svg, "<circle cx=\"40\""));
  CHECK(contains(svg, "<circle cx=\"80\""));
  CHECK(contains(svg, "<circle cx=\"200\""));
  CHECK(contains(svg, "<rect x=\"116\""));
  CHECK(contains(svg, "<rect x=\"156\""));
  CHECK(contains(svg, "<rect x=\"236\""));
  CHECK(contains(svg, "</svg>"));
  CHECK(render(m, RenderFormat::Svg) == svg);
}

TEST_CASE("svg renders non-Stoimenow matchings too") {
  CHECK(contains(render_svg(Matching::parse("4 3 2 1")), "<path"));
}
