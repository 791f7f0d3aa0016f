#include "guardian/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace guardian {
namespace {

using json = nlohmann::ordered_json;

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("guardian_io_test_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(MatrixJsonTest, RoundTripIsBitExact) {
  const Matrix a{{0.1, -1.0 / 3.0, 1e-300}, {6.02214076e23, -0.0, 2.0}};
  const std::string text = io::dump(io::to_json(a));
  const Matrix b = io::matrix_from_json(json::parse(text));
  EXPECT_EQ(a, b);
}

TEST(MatrixJsonTest, Golden) {
  EXPECT_EQ(io::dump(io::to_json(Matrix{{0.0}})), R"({"rows":1,"cols":1,"data":[[0.0]]})");
}

TEST(MatrixJsonTest, RowsAndColsOptional) {
  const Matrix m = io::matrix_from_json(json::parse(R"({"data": [[1, 2], [3, 4]]})"));
  EXPECT_EQ(m, (Matrix{{1, 2}, {3, 4}}));
}

TEST(MatrixJsonTest, Malformed) {
  for (const char* text : {R"({"rows": 2, "cols": 2, "data": [[1, 2]]})", R"({"data": [[1, 2], [3]]})",
                           R"({"data": [[1, "x"]]})", R"({"data": []})", R"([1, 2])",
                           R"({"rows": "two", "data": [[1]]})"}) {
    EXPECT_THROW(io::matrix_from_json(json::parse(text)), io::InputError) << text;
  }
}

TEST(MatrixCsvTest, Parses) {
  std::istringstream in("1, 2.5,-3\r\n\n4,5,6e-1\n");
  EXPECT_EQ(io::matrix_from_csv(in), (Matrix{{1, 2.5, -3}, {4, 5, 0.6}}));
}

TEST(MatrixCsvTest, Malformed) {
  for (const char* text : {"1,2\n3\n", "1,abc\n", "1,2x\n", "", "nan\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(io::matrix_from_csv(in), io::InputError) << text;
  }
}

TEST(ReadMatrixTest, ChoosesFormatBySuffix) {
  const auto csv = write_temp("m.csv", "1,2\n3,4\n");
  const auto js = write_temp("m.json", R"({"rows":2,"cols":2,"data":[[1,2],[3,4]]})");
  EXPECT_EQ(io::read_matrix(csv.string()), io::read_matrix(js.string()));
  EXPECT_THROW(io::read_matrix("/nonexistent/guardian.json"), io::InputError);
  const auto bad = write_temp("bad.json", "{not json");
  EXPECT_THROW(io::read_matrix(bad.string()), io::InputError);
}

TEST(FamilyJsonTest, RoundTrip) {
  const ParamFamily f(Matrix{{0, 1}, {-1, 0}}, Matrix::identity(2), Matrix{{0, 0.5}, {0, 0}});
  const ParamFamily g = io::family_from_json(json::parse(io::dump(io::to_json(f))));
  EXPECT_EQ(g.base(), f.base());
  EXPECT_EQ(g.dir1(), f.dir1());
  ASSERT_TRUE(g.dir2().has_value());
  EXPECT_EQ(*g.dir2(), *f.dir2());
  const ParamFamily h = io::family_from_json(json::parse(io::dump(io::to_json(ParamFamily(f.base(), f.dir1())))));
  EXPECT_FALSE(h.dir2().has_value());
}

TEST(FamilyJsonTest, Malformed) {
  EXPECT_THROW(io::family_from_json(json::parse(R"({"base": {"data": [[1]]}})")), io::InputError);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n": "x", "base": {"data": [[1]]}, "dir1": {"data": [[1]]}})")),
               io::InputError);
  EXPECT_THROW(io::family_from_json(json::parse(R"({"n": 2, "base": {"data": [[1]]}, "dir1": {"data": [[1]]}})")),
               DimensionError);
}

TEST(ReportJsonTest, Fields) {
  const auto boundary = io::to_json(guardian_evaluate(GuardianMapKind::AdditiveCompound2, Matrix{{0, 1}, {-1, 0}}));
  EXPECT_EQ(boundary.at("kind"), "add2");
  EXPECT_EQ(boundary.at("g_sign"), 0);
  EXPECT_TRUE(boundary.at("g_logmag").is_null());
  EXPECT_EQ(boundary.at("det_a_sign"), 1);
  EXPECT_EQ(boundary.at("f_sign"), 0);
  EXPECT_EQ(boundary.at("verdict"), "zero_boundary");
  EXPECT_EQ(boundary.at("oracle"), "boundary");

  const auto stable = io::to_json(guardian_evaluate(GuardianMapKind::KroneckerSum, -Matrix::identity(2)));
  EXPECT_DOUBLE_EQ(stable.at("g_logmag").get<double>(), 4.0 * std::log(2.0));
  EXPECT_EQ(stable.at("verdict"), "nonzero_stable");
}

TEST(SweepJsonTest, SampleTable) {
  const ParamFamily f(Matrix{{0, 1}, {-1, 0}}, Matrix::identity(2));
  const auto j = io::to_json(sweep(f, GuardianMapKind::Bialternate, -1.0, 1.0, 4, {.refine = true}));
  ASSERT_EQ(j.at("samples").size(), 4u);
  for (const auto& s : j.at("samples")) {
    for (const char* key : {"theta", "f_sign", "f_logmag", "oracle_max_re", "verdict"}) EXPECT_TRUE(s.contains(key));
  }
  ASSERT_EQ(j.at("crossings").size(), 1u);
  EXPECT_EQ(j.at("crossings")[0].at("type"), "sign_change");
  EXPECT_TRUE(j.at("crossings")[0].at("refined").get<bool>());
}

}  // namespace
}  // namespace guardian
