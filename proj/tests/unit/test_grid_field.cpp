#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <limits>

#include "dbarkit/dbarkit.hpp"

using namespace dbarkit;

TEST(Grid, NodesAreCellCentered) {
  const Grid g = build_grid(6.0, 256);
  EXPECT_DOUBLE_EQ(g.spacing(), 12.0 / 256);
  EXPECT_NEAR(g.coord(0), -6.0 + 0.5 * g.spacing(), 1e-15);
  EXPECT_NEAR(g.coord(255), 6.0 - 0.5 * g.spacing(), 1e-15);
  for (int j = 0; j < 256; ++j) EXPECT_EQ(g.coord(j), -g.coord(255 - j));
  EXPECT_EQ(g.index(3, 5), 5u * 256 + 3);
  EXPECT_EQ(g.node(g.index(3, 5)), g.node(3, 5));
}

TEST(Grid, RingIndexCountsFromOutside) {
  const Grid g = build_grid(1.0, 8);
  EXPECT_EQ(g.ring(g.index(0, 4)), 0);
  EXPECT_EQ(g.ring(g.index(1, 1)), 1);
  EXPECT_EQ(g.ring(g.index(3, 4)), 3);
}

TEST(Grid, RejectsInvalidParameters) {
  for (auto [r, n] : {std::pair{0.0, 64}, std::pair{-1.0, 64}, std::pair{1.0, 7}}) {
    try {
      build_grid(r, n);
      FAIL() << "expected invalid-argument";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_argument);
    }
  }
}

TEST(Field, SamplingNamesTheBadNode) {
  const Grid g = build_grid(1.0, 8);
  const auto bad = g.index(2, 3);
  try {
    sample([&](cplx z) { return z == g.node(bad) ? cplx(std::numeric_limits<double>::quiet_NaN()) : z; }, g);
    FAIL() << "expected sampling-error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::sampling_error);
    EXPECT_NE(std::string(e.what()).find(std::to_string(bad)), std::string::npos);
  }
}

TEST(Field, ConstructorRejectsNonFiniteAndSizeMismatch) {
  const Grid g = build_grid(1.0, 8);
  std::vector<cplx> v(g.size(), 1.0);
  v[7] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(Field(g, v), Error);
  EXPECT_THROW(Field(g, std::vector<cplx>(3)), Error);
}

TEST(Field, ArithmeticPropagatesBand) {
  const Grid g = build_grid(1.0, 8);
  const Field a(g, std::vector<cplx>(g.size(), {1.0, 2.0}), 2);
  const Field b(g, std::vector<cplx>(g.size(), {3.0, -1.0}));
  const Field c = a * b + a - b;
  EXPECT_EQ(c.boundary_band(), 2);
  EXPECT_EQ(c[0], cplx(1.0, 2.0) * cplx(3.0, -1.0) + cplx(1.0, 2.0) - cplx(3.0, -1.0));
  EXPECT_EQ(a.conj()[5], cplx(1.0, -2.0));
  EXPECT_EQ(a.abs2()[5], cplx(5.0, 0.0));
  EXPECT_DOUBLE_EQ(a.max_abs(), std::sqrt(5.0));
  EXPECT_EQ((-a)[1], cplx(-1.0, -2.0));
}

TEST(Field, CsvWritesOneRowPerNode) {
  const Grid g = build_grid(1.0, 8);
  const Field f = sample([](cplx z) { return z * z; }, g);
  const std::string path = testing::TempDir() + "field.csv";
  write_field_csv(f, path);
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "re,im,val_re,val_im");
  int rows = 0;
  double re, im, vr, vi;
  while (std::getline(in, line)) {
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &re, &im, &vr, &vi), 4);
    EXPECT_EQ(cplx(vr, vi), cplx(re, im) * cplx(re, im));
    ++rows;
  }
  EXPECT_EQ(rows, 64);
  std::remove(path.c_str());
}

TEST(Field, CsvToUnwritablePathIsIoError) {
  const Field f = Field::zeros(build_grid(1.0, 8));
  try {
    write_field_csv(f, "/nonexistent-dir/x.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::io);
  }
}
