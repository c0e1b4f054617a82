#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "support/oracles.hpp"
#include "toeplitz/matrix_file.hpp"

using namespace toeplitz;
namespace tt = toeplitz::testing;

TEST(MatrixFile, ParseToeplitz) {
  const MatrixValue v = parse_matrix(R"({"kind": "toeplitz", "rows": 2, "cols": 3,
      "first_row": [[1, 0], [2, 1], [3, 0]], "first_col": [[1, 0], [4, -1]]})");
  const auto& a = std::get<AsymToeplitz>(v);
  EXPECT_EQ(a.first_row(), (CVector{1, {2, 1}, 3}));
  EXPECT_EQ(a.first_col(), (CVector{1, {4, -1}}));
  EXPECT_EQ(a.row_params()[1], Complex(2, -1));
}

TEST(MatrixFile, ParseHankelAndDense) {
  const MatrixValue h = parse_matrix(R"({"kind": "hankel", "rows": 2, "cols": 2,
      "first_row": [[1, 0], [2, 0]], "last_col": [[2, 0], [3, 0]]})");
  EXPECT_EQ(dense_of(h), DenseMatrix(2, 2, {1, 2, 2, 3}));
  const MatrixValue d = parse_matrix(
      R"({"kind": "dense", "rows": 1, "cols": 2, "data": [[1, 0], [0, 1]]})");
  EXPECT_EQ(dense_of(d), DenseMatrix(1, 2, {1, Complex(0, 1)}));
  EXPECT_EQ(kind_of(h), "hankel");
  EXPECT_EQ(kind_of(d), "dense");
}

TEST(MatrixFile, Rejections) {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"rows": 1, "cols": 1, "data": [[1, 0]]})",
      R"({"kind": "dense", "rows": 0, "cols": 1, "data": []})",
      R"({"kind": "dense", "rows": 1.5, "cols": 1, "data": [[1, 0]]})",
      R"({"kind": "dense", "rows": 1, "cols": 1, "data": [[1, 0]], "extra": 1})",
      R"({"kind": "dense", "rows": 1, "cols": 2, "data": [[1, 0]]})",
      R"({"kind": "dense", "rows": 1, "cols": 1, "data": [[1]]})",
      R"({"kind": "dense", "rows": 1, "cols": 1, "data": [["1", 0]]})",
      R"({"kind": "dense", "rows": 1, "cols": 1, "data": [[1e999, 0]]})",
      R"({"kind": "toeplitz", "rows": 1, "cols": 1, "first_row": [[1, 0]], "first_col": [[2, 0]]})",
      R"({"kind": "toeplitz", "rows": 1, "cols": 1, "first_row": [[1, 0]], "last_col": [[1, 0]]})",
      R"({"kind": "hankel", "rows": 2, "cols": 2, "first_row": [[1, 0], [2, 0]], "last_col": [[3, 0], [3, 0]]})",
      R"({"kind": "circulant", "rows": 1, "cols": 1})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_matrix(text), FormatError) << text;
  EXPECT_THROW(read_matrix_file("/nonexistent/file.json"), FormatError);
}

TEST(MatrixFile, CanonicalRoundtrip) {
  tt::Rng rng(61);
  const auto dir = std::filesystem::temp_directory_path() / "toeplitz_matrix_file_test";
  std::filesystem::create_directories(dir);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
    const AsymToeplitz a = trial % 2 ? tt::random_real_toeplitz(rng, n, m) : tt::random_toeplitz(rng, n, m);
    const MatrixValue v = trial % 3 == 0   ? MatrixValue(a)
                          : trial % 3 == 1 ? MatrixValue(flip_cols(a))
                                           : MatrixValue(to_dense(a));
    const std::string text = format_matrix(v);
    const MatrixValue back = parse_matrix(text);
    EXPECT_EQ(back, v);
    EXPECT_EQ(format_matrix(back), text);

    const auto path = dir / "m.json";
    write_matrix_file(path, v);
    EXPECT_EQ(read_matrix_file(path), v);
    write_matrix_file(path, read_matrix_file(path));
    std::ifstream in(path);
    const std::string disk((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_EQ(disk, text);
  }
  std::filesystem::remove_all(dir);
}

TEST(MatrixFile, CanonicalLayout) {
  const std::string text = format_matrix(AsymToeplitz(0.1, {0, 2}, {0, 0}));
  EXPECT_EQ(text,
            "{\n"
            "  \"cols\": 2,\n"
            "  \"first_col\": [[0.10000000000000001, 0], [2, 0]],\n"
            "  \"first_row\": [[0.10000000000000001, 0], [0, 0]],\n"
            "  \"kind\": \"toeplitz\",\n"
            "  \"rows\": 2\n"
            "}\n");
  EXPECT_EQ(format_number(1.0 / 3.0), "0.33333333333333331");
}
