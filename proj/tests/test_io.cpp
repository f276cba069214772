#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "symca/csv.hpp"
#include "symca/datasets.hpp"
#include "symca/errors.hpp"
#include "symca/io.hpp"
#include "symca/random_instances.hpp"
#include "symca/svg.hpp"

using namespace symca;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kDataDir = SYMCA_TEST_DATA_DIR;

struct SvgRect {
  std::string group;
  std::string shape;
  double x, y, w, h;
};

struct SvgPoint {
  double cx, cy;
};

std::vector<std::pair<SvgRect, SvgPoint>> modalities_of(const std::string& svg) {
  static const std::regex group(
      R"re(<g class="modality (row|col)">\s*<rect class="(point|box)" x="([-0-9.]+)" y="([-0-9.]+)" width="([-0-9.]+)" height="([-0-9.]+)"[^>]*/>\s*<circle cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  std::vector<std::pair<SvgRect, SvgPoint>> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), group); it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    out.push_back({{m[1], m[2], std::stod(m[3]), std::stod(m[4]), std::stod(m[5]), std::stod(m[6])},
                   {std::stod(m[7]), std::stod(m[8])}});
  }
  return out;
}

}  // namespace

TEST_CASE("csv parser") {
  const auto records = csv::parse("\xEF\xBB\xBF" "a,\"b,c\"\r\n\n\"say \"\"hi\"\"\",d\n");
  REQUIRE(records.size() == 2);
  CHECK(records[0].fields == std::vector<std::string>{"a", "b,c"});
  CHECK(records[1].line == 3);
  CHECK(records[1].fields == std::vector<std::string>{"say \"hi\"", "d"});
  CHECK_THROWS_AS(csv::parse("\"open,x\n"), ParseError);
  CHECK_THROWS_AS(csv::parse("\"a\"b,c\n"), ParseError);
  CHECK(csv::escape("plain") == "plain");
  CHECK(csv::escape("a,b") == "\"a,b\"");
  CHECK(csv::trim("  x y \t") == "x y");
}

TEST_CASE("survey csv reproduces the eyes/hair example") {
  const auto [eyes, hair] = io::read_survey_csv(slurp(kDataDir + "/eye_hair_survey.csv"));
  CHECK(eyes.name() == "eyes");
  CHECK(hair.name() == "hair");
  CHECK(eyes.modalities() == std::vector<std::string>{"blue", "brown", "green"});
  CHECK(hair.modalities() == std::vector<std::string>{"black", "blond"});
  CHECK(eyes.observations() == std::vector<std::vector<int>>{{0, 2}, {1}, {2}, {1}, {2}});
  CHECK(hair.observations() == std::vector<std::vector<int>>{{0}, {0}, {0, 1}, {1}, {1}});
  CHECK(io::read_survey_csv(datasets::kEyeHairSurveyCsv).first == eyes);
}

TEST_CASE("survey csv edge cases and errors") {
  const auto [x, y] = io::read_survey_csv("x,y\na,b\n");
  CHECK(x.num_individuals() == 1);
  CHECK(y.modalities() == std::vector<std::string>{"b"});

  const auto quoted = io::read_survey_csv("x,y\n\"a, b|c\", d \n");
  CHECK(quoted.first.modalities() == std::vector<std::string>{"a, b", "c"});
  CHECK(quoted.second.modalities() == std::vector<std::string>{"d"});

  CHECK_THROWS_WITH_AS(io::read_survey_csv("x,y\na,b\n,b\n"), "empty cell in column 1 at line 3", ParseError);
  CHECK_THROWS_AS(io::read_survey_csv("x,y\na|,b\n"), ParseError);
  CHECK_THROWS_AS(io::read_survey_csv("x,y,z\na,b,c\n"), ParseError);
  CHECK_THROWS_AS(io::read_survey_csv("x,y\na,b,c\n"), ParseError);
  CHECK_THROWS_AS(io::read_survey_csv("x,y\n"), Error);
}

TEST_CASE("interval table csv") {
  const auto t = io::read_interval_table(slurp(kDataDir + "/eye_hair_592.csv"), io::TableFormat::Csv);
  CHECK(t == datasets::eye_hair_592());

  const auto single = io::read_interval_table(",x\na,5:5\n", io::TableFormat::Csv);
  CHECK(single.is_degenerate());
  CHECK(single.lower()(0, 0) == 5);

  CHECK_THROWS_WITH_AS(io::read_interval_table(",x\na,7:4\n", io::TableFormat::Csv), "inverted interval at (0,0)",
                       ParseError);
  CHECK_THROWS_AS(io::read_interval_table(",x\na,-1:4\n", io::TableFormat::Csv), ParseError);
  CHECK_THROWS_AS(io::read_interval_table(",x,y\na,1:2\n", io::TableFormat::Csv), ParseError);
  CHECK_THROWS_AS(io::read_interval_table(",x\na,1-2\n", io::TableFormat::Csv), ParseError);
  CHECK_THROWS_AS(io::read_interval_table(",x\na,1.5:2\n", io::TableFormat::Csv), ParseError);

  const auto round = io::read_interval_table(io::write_interval_table(t, io::TableFormat::Csv), io::TableFormat::Csv);
  CHECK(round == t);
}

TEST_CASE("interval table json") {
  const auto t = datasets::eye_hair_592();
  const auto json = io::write_interval_table(t, io::TableFormat::Json);
  CHECK(io::read_interval_table(json, io::TableFormat::Json) == t);
  CHECK(io::write_interval_table(io::read_interval_table(json, io::TableFormat::Json), io::TableFormat::Json) == json);

  CHECK_THROWS_AS(io::read_interval_table("{", io::TableFormat::Json), ParseError);
  CHECK_THROWS_AS(io::read_interval_table(R"({"row_labels":["a"],"col_labels":["x"]})", io::TableFormat::Json),
                  ParseError);
  CHECK_THROWS_AS(
      io::read_interval_table(R"({"row_labels":["a"],"col_labels":["x"],"cells":[[[3,1]]]})", io::TableFormat::Json),
      ParseError);
  CHECK_THROWS_AS(
      io::read_interval_table(R"({"row_labels":["a"],"col_labels":["x"],"cells":[[[1]]]})", io::TableFormat::Json),
      ParseError);

  CHECK(io::format_for_path("t.csv") == io::TableFormat::Csv);
  CHECK(io::format_for_path("t.json") == io::TableFormat::Json);
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(0.5) == "0.5");
  CHECK(io::format_number(1.0 / 3.0) == "0.333333333333333");
}

TEST_CASE("result json round trip") {
  const auto r = symca::symca(datasets::eye_hair_592());
  const auto json = io::write_result_json(r);
  const auto doc = io::read_result_json(json);
  CHECK(doc.n_axes() == 3);
  REQUIRE(doc.rows.size() == 4);
  REQUIRE(doc.cols.size() == 4);
  CHECK(doc.rows.front().label == "black-e");
  CHECK(doc.cols.front().label == "black-h");
  CHECK(doc.cols.front().rect_lo == doc.cols.front().rect_hi);
  CHECK(io::write_result_json(doc) == json);
  CHECK(json.back() == '\n');

  // sorted keys at every level
  CHECK(json.find("\"cols\"") < json.find("\"eigenvalues\""));
  CHECK(json.find("\"eigenvalues\"") < json.find("\"inertia_share\""));
  CHECK(json.find("\"inertia_share\"") < json.find("\"rows\""));
  const auto first_col = json.find("\"coords\"");
  CHECK(first_col < json.find("\"label\""));
  CHECK(json.find("\"label\"") < json.find("\"rect_hi\""));
  CHECK(json.find("\"rect_hi\"") < json.find("\"rect_lo\""));
}

TEST_CASE("degenerate results are points in the json") {
  const auto t = random::degenerate_table(99);
  const auto doc = io::summarize(symca::symca(t));
  for (const auto* side : {&doc.rows, &doc.cols})
    for (const auto& m : *side) {
      CHECK(m.rect_lo == m.rect_hi);
      CHECK(m.rect_lo == m.coords);
    }
}

TEST_CASE("result json schema errors") {
  CHECK_THROWS_AS(io::read_result_json("[]"), ParseError);
  CHECK_THROWS_AS(io::read_result_json(R"({"eigenvalues":[0.1],"inertia_share":[1],"rows":[]})"), ParseError);
  CHECK_THROWS_AS(io::read_result_json(
                      R"({"cols":[],"eigenvalues":[0.1],"inertia_share":[1],"rows":[{"coords":[1,2],"label":"a","rect_hi":[1],"rect_lo":[1]}]})"),
                  ParseError);
}

TEST_CASE("svg of the eye/hair principal plane") {
  const auto doc = io::summarize(symca::symca(datasets::eye_hair_592()));
  const auto svg = io::render_principal_plane_svg(doc, io::PlotSpec{});
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("Axis 1 (") != std::string::npos);
  CHECK(svg.find("Axis 2 (") != std::string::npos);
  CHECK(io::render_principal_plane_svg(doc, io::PlotSpec{}) == svg);

  const auto shapes = modalities_of(svg);
  REQUIRE(shapes.size() == 8);
  for (std::size_t k = 0; k < 4; ++k) CHECK(shapes[k].first.group == "row");
  CHECK(shapes[4].first.shape == "point");  // black-h
  CHECK(shapes[4].first.w == doctest::Approx(io::kPointMarkerSize));
  CHECK(shapes[6].first.shape == "box");  // red-h
  CHECK(shapes[7].first.shape == "box");  // blond-h
  CHECK(shapes[6].first.w * shapes[6].first.h > shapes[4].first.w * shapes[4].first.h);
  CHECK(shapes[7].first.w * shapes[7].first.h > shapes[4].first.w * shapes[4].first.h);

  // every center marker sits inside its drawn rectangle
  for (const auto& [rect, center] : shapes) {
    CHECK(rect.x <= center.cx);
    CHECK(center.cx <= rect.x + rect.w + 1e-9);
    CHECK(rect.y <= center.cy);
    CHECK(center.cy <= rect.y + rect.h + 1e-9);
  }
}

TEST_CASE("svg rejects bad axis choices") {
  const auto doc = io::summarize(symca::symca(datasets::eye_hair_592(), 2));
  io::PlotSpec same;
  same.axis_y = 0;
  CHECK_THROWS_AS(io::render_principal_plane_svg(doc, same), ValidationError);
  io::PlotSpec missing;
  missing.axis_y = 2;
  CHECK_THROWS_AS(io::render_principal_plane_svg(doc, missing), ValidationError);
  io::PlotSpec tiny;
  tiny.width = 100;
  CHECK_THROWS_AS(io::render_principal_plane_svg(doc, tiny), ValidationError);

  io::PlotSpec other;
  other.axis_x = 1;
  other.axis_y = 0;
  CHECK_NOTHROW(io::render_principal_plane_svg(doc, other));
}

TEST_CASE("svg escapes labels") {
  const IntervalTable t({"a<b", "c&d", "e"}, {"x", "y\"z", "w"},
                        (CountMatrix(3, 3) << 1, 2, 3, 3, 1, 2, 0, 4, 1).finished(),
                        (CountMatrix(3, 3) << 2, 2, 3, 4, 1, 2, 1, 6, 1).finished());
  const auto doc = io::summarize(symca::symca(t));
  const auto svg = io::render_principal_plane_svg(doc, io::PlotSpec{});
  CHECK(svg.find("a&lt;b") != std::string::npos);
  CHECK(svg.find("c&amp;d") != std::string::npos);
  CHECK(svg.find("y&quot;z") != std::string::npos);
}

TEST_CASE("svg containment on random tables") {
  for (std::uint64_t k = 0; k < 30; ++k) {
    const auto t = random::interval_table(random::instance_seed(31, 9, k));
    const auto doc = io::summarize(symca::symca(t));
    if (doc.n_axes() < 2) continue;
    for (const auto& [rect, center] : modalities_of(io::render_principal_plane_svg(doc, io::PlotSpec{}))) {
      CHECK(rect.x <= center.cx);
      CHECK(center.cx <= rect.x + rect.w + 1e-9);
      CHECK(rect.y <= center.cy);
      CHECK(center.cy <= rect.y + rect.h + 1e-9);
    }
  }
}
