#include <doctest.h>

#include <set>

#include "symca/errors.hpp"
#include "symca/multivalued_data.hpp"
#include "symca/random_instances.hpp"

using namespace symca;

namespace {

// Individuals of the eyes/hair example, in the order green, blue, brown and blond, black.
MultiValuedVariable eyes() {
  return parse_observations({{"green", "blue"}, {"brown"}, {"green"}, {"brown"}, {"green"}},
                            std::vector<std::string>{"green", "blue", "brown"}, "eyes");
}

MultiValuedVariable hair() {
  return parse_observations({{"black"}, {"black"}, {"blond", "black"}, {"blond"}, {"blond"}},
                            std::vector<std::string>{"blond", "black"}, "hair");
}

BinaryMatrix rows(std::initializer_list<std::initializer_list<int>> values) {
  BinaryMatrix m(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : values) {
    Eigen::Index j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("parse_observations sorts the vocabulary when none is given") {
  const auto v = parse_observations({{"green", "blue"}, {"brown"}, {"green"}, {"brown"}, {"green"}});
  CHECK(v.modalities() == std::vector<std::string>{"blue", "brown", "green"});
  CHECK(v.observations() == std::vector<std::vector<int>>{{0, 2}, {1}, {2}, {1}, {2}});
}

TEST_CASE("parse_observations honours an explicit vocabulary") {
  const auto v = parse_observations({{"black"}}, std::vector<std::string>{"blond", "black"});
  CHECK(v.num_individuals() == 1);
  CHECK(v.observations().front() == std::vector<int>{1});
}

TEST_CASE("parse_observations rejects bad input") {
  CHECK_THROWS_WITH_AS(parse_observations({{}}), "empty observation set at individual 0", ValidationError);
  CHECK_THROWS_WITH_AS(parse_observations({{"a"}, {}}), "empty observation set at individual 1", ValidationError);
  CHECK_THROWS_AS(parse_observations({{"red"}}, std::vector<std::string>{"blond", "black"}), ValidationError);
  CHECK_THROWS_AS(parse_observations({}), ValidationError);
  CHECK_THROWS_AS(MultiValuedVariable("x", {"a", "a"}, {{0}}), ValidationError);
  CHECK_THROWS_AS(MultiValuedVariable("x", {"a", "b"}, {{2}}), ValidationError);
}

TEST_CASE("duplicate indices collapse") {
  const MultiValuedVariable v("x", {"a", "b"}, {{1, 0, 1}});
  CHECK(v.observations().front() == std::vector<int>{0, 1});
}

TEST_CASE("meet and join matrices of the eyes/hair example") {
  CHECK(meet_matrix(eyes()) == rows({{0, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(join_matrix(eyes()) == rows({{1, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(meet_matrix(hair()) == rows({{0, 1}, {0, 1}, {0, 0}, {1, 0}, {1, 0}}));
  CHECK(join_matrix(hair()) == rows({{0, 1}, {0, 1}, {1, 1}, {1, 0}, {1, 0}}));
}

TEST_CASE("singleton-only data has meet == join == its only completion") {
  const MultiValuedVariable v("x", {"a", "b", "c"}, {{2}, {0}, {1}, {0}});
  const auto completions = enumerate_completions(v);
  REQUIRE(completions.size() == 1);
  CHECK(meet_matrix(v) == join_matrix(v));
  CHECK(meet_matrix(v) == completions.front());
}

TEST_CASE("full modality sets force nothing") {
  const MultiValuedVariable v("x", {"a", "b"}, {{0, 1}, {0, 1}});
  CHECK(meet_matrix(v).isZero());
  CHECK((join_matrix(v).array() == 1).all());
}

TEST_CASE("completions of the eyes example are the two disjunctive tables") {
  const auto completions = enumerate_completions(eyes());
  REQUIRE(completions.size() == 2);
  CHECK(completions[0] == rows({{1, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}}));
  CHECK(completions[1] == rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}}));

  const auto hair_completions = enumerate_completions(hair());
  REQUIRE(hair_completions.size() == 2);
  CHECK(hair_completions[0] == rows({{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 0}}));
  CHECK(hair_completions[1] == rows({{0, 1}, {0, 1}, {0, 1}, {1, 0}, {1, 0}}));
}

TEST_CASE("enumeration guard") {
  const MultiValuedVariable v("x", {"a", "b"}, {{0, 1}, {0, 1}, {0, 1}});
  try {
    enumerate_completions(v, 4);
    FAIL("expected EnumerationTooLarge");
  } catch (const EnumerationTooLarge& e) {
    CHECK(e.count() == 8);
    CHECK(e.limit() == 4);
  }
  CHECK(enumerate_completions(v, 8).size() == 8);
}

TEST_CASE("completions are sandwiched between meet and join") {
  for (std::uint64_t k = 0; k < 150; ++k) {
    const auto [x, y] = random::survey(random::instance_seed(7, 0, k));
    for (const auto* v : {&x, &y}) {
      const auto meet = meet_matrix(*v);
      const auto join = join_matrix(*v);
      const auto completions = enumerate_completions(*v);
      CHECK(completions.size() == v->completion_count());
      CHECK(((meet.rowwise().sum().array() == 0) || (meet.rowwise().sum().array() == 1)).all());
      for (int i = 0; i < v->num_individuals(); ++i)
        CHECK(join.row(i).sum() == static_cast<int>(v->observations()[static_cast<std::size_t>(i)].size()));

      std::set<std::vector<int>> distinct;
      for (const auto& c : completions) {
        CHECK((c.rowwise().sum().array() == 1).all());
        CHECK((meet.array() <= c.array()).all());
        CHECK((c.array() <= join.array()).all());
        distinct.insert(std::vector<int>(c.data(), c.data() + c.size()));
      }
      CHECK(distinct.size() == completions.size());
    }
  }
}

TEST_CASE("parsing rendered labels reproduces a canonical-order variable") {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto [x, y] = random::survey(random::instance_seed(11, 0, k));
    std::vector<std::set<std::string>> raw;
    for (int i = 0; i < x.num_individuals(); ++i) {
      const auto labels = x.labels_of(i);
      raw.emplace_back(labels.begin(), labels.end());
    }
    // Unused modalities vanish from an inferred vocabulary, so pass it explicitly.
    CHECK(parse_observations(raw, x.modalities(), x.name()) == x);
  }
}
