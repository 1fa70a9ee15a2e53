#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "zinbiel/problem_file.hpp"

namespace zinb {
namespace {

using testing::S;

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect_parse_error(const std::string& text, std::size_t line, const std::string& fragment) {
  try {
    parse_problem(text);
    ADD_FAILURE() << "accepted:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(ParseProblem, EmptyIsAnEmptyModel) {
  const auto p = parse_problem("");
  EXPECT_TRUE(p.algebras.empty());
  EXPECT_TRUE(p.field.is_rational());
  EXPECT_EQ(parse_problem("# nothing\nfield Fp:5\n").field, Field::prime(5));
}

TEST(ParseProblem, NilpotentDim2) {
  const auto p = parse_problem("field Q\nalgebra N 2\n  0 0 1 = 1\nend\n");
  ASSERT_EQ(p.algebras.size(), 1u);
  const auto v = validate_zinbiel(p.algebras[0].constants);
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(*v.value, testing::nilpotent2(Field::rationals()));
}

TEST(ParseProblem, ScalarsFollowTheField) {
  const auto q = parse_problem("field Q\nalgebra A 1\n0 0 0 = -3/6\nend\n");
  EXPECT_EQ(q.algebras[0].constants.at(0, 0, 0), Scalar::parse(Field::rationals(), "-1/2"));
  const auto p = parse_problem("field Fp:7\nalgebra A 1\n0 0 0 = 1/2\nend\n");
  EXPECT_EQ(p.algebras[0].constants.at(0, 0, 0), S(Field::prime(7), 4));
  const auto o = parse_problem("field Q\nalgebra A 1\n0 0 0 = 9\nend\n", Field::prime(5));
  EXPECT_EQ(o.field, Field::prime(5));
  EXPECT_EQ(o.algebras[0].constants.at(0, 0, 0), S(Field::prime(5), 4));
}

TEST(ParseProblem, IndexOutOfRange) {
  expect_parse_error("algebra N 2\n  0 0 2 = 1\nend\n", 2, "out of range");
  expect_parse_error("algebra N 2\nend\nmorphism f N N\n2 0 = 1\nend\n", 4, "out of range");
}

TEST(ParseProblem, SyntaxErrorsCarryLocation) {
  expect_parse_error("field Q\nalgebra N 2\n  0 0 1 1\nend\n", 3, "=");
  expect_parse_error("field Q\nalgebras N 2\n", 2, "unknown key");
  expect_parse_error("algebra N 2\n0 0 1 = 1\n", 1, "end");
  expect_parse_error("algebra N 2\n0 0 1 = x\nend\n", 2, "");
  expect_parse_error("algebra N 2\n0 0 1 = 1\n0 0 1 = 2\nend\n", 3, "duplicate");
  expect_parse_error("field Fp:4\n", 1, "");
  expect_parse_error("algebra N 1\nend\nfield Q\n", 3, "precede");
  expect_parse_error("morphism f A A\nend\n", 1, "unknown algebra");
  expect_parse_error("algebra A 1\nend\nalgebra A 1\nend\n", 3, "already defined");
  expect_parse_error("algebra A 1\nend\ndeformation D f 1\nend\n", 3, "unknown morphism");
  expect_parse_error("algebra A 1\nend\nmorphism f A A\nend\ndeformation D f 1\n1 mX 0 0 0 = 1\nend\n", 6, "component");
  expect_parse_error("algebra A 1\nend\nmorphism f A A\nend\ndeformation D f 1\n2 mR 0 0 0 = 1\nend\n", 6, "range");
}

TEST(ParseProblem, ColumnPointsAtTheToken) {
  try {
    parse_problem("algebra N 2\n  0 0 7 = 1\nend\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 7u);
  }
}

TEST(ParseProblem, DeformationsAndIsomorphisms) {
  const std::string text = R"(field Q
algebra A 1
end
morphism f A A
  0 0 = 1
end
deformation D f 2
  1 mR 0 0 0 = 1
  1 mS 0 0 0 = 1
  2 f 0 0 = 1/2
end
isomorphism P f 1
  1 R 0 0 = 2
end
)";
  const auto p = parse_problem(text);
  const auto* d = p.find_deformation("D");
  ASSERT_NE(d, nullptr);
  ASSERT_EQ(d->order(), 2u);
  EXPECT_EQ(d->terms[0].xi, testing::mu(Field::rationals()));
  EXPECT_EQ(d->terms[0].pi, testing::mu(Field::rationals()));
  EXPECT_TRUE(d->terms[0].phi.is_zero());
  EXPECT_EQ(d->terms[1].phi.at(std::array<std::size_t, 1>{0}, 0), Scalar::parse(Field::rationals(), "1/2"));
  const auto* iso = p.find_isomorphism("P");
  ASSERT_NE(iso, nullptr);
  EXPECT_EQ(iso->terms[0].first.at(std::array<std::size_t, 1>{0}, 0), S(Field::rationals(), 2));
  EXPECT_TRUE(iso->terms[0].second.is_zero());
}

TEST(SerializeProblem, RoundTripsRandomContent) {
  for (const auto& f : testing::suite_fields()) {
    InstanceGenerator gen(f, 70);
    ProblemFile p;
    p.field = f;
    const auto r = gen.algebra_or_abelian(3);
    const auto s = gen.algebra_or_abelian(2);
    p.algebras.push_back({"R", r.constants()});
    p.algebras.push_back({"S", s.constants()});
    auto m = gen.morphism(r, s);
    const auto fm = m ? std::move(*m) : AlgebraMorphism::zero(r, s);
    p.morphisms.push_back({"f", "R", "S", fm.matrix()});
    for (std::size_t n = 1; n <= 4; ++n) p.cochains.push_back({"c" + std::to_string(n), "R", "S", gen.cochain(n, 3, 2)});
    const MorphismComplex c(fm);
    const auto theta = gen.deformation(c, 3);
    p.deformations.push_back({"D", "f", std::vector<TripleCochain>(theta.terms().begin() + 1, theta.terms().end())});
    const auto phi = gen.isomorphism(c, 2);
    p.isomorphisms.push_back(
        {"P", "f", std::vector<std::pair<Cochain, Cochain>>(phi.terms().begin() + 1, phi.terms().end())});
    const auto text = serialize_problem(p);
    EXPECT_EQ(parse_problem(text), p) << text;
    EXPECT_EQ(serialize_problem(parse_problem(text)), text);
  }
}

TEST(SerializeProblem, CuratedFilesRoundTrip) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(ZINBIEL_DATA_DIR)) {
    if (entry.path().extension() != ".zin") continue;
    ++seen;
    const auto p = parse_problem(slurp(entry.path()));
    EXPECT_EQ(parse_problem(serialize_problem(p)), p) << entry.path();
  }
  EXPECT_GE(seen, 4u);
}

}  // namespace
}  // namespace zinb
