#include <gtest/gtest.h>

#include <cstring>
#include <sstream>

#include "rmt/error.hpp"
#include "rmt/matrix_io.hpp"

using namespace rmt;

TEST(MatrixIo, BinaryRoundTripIsBitExact) {
  for (Beta b : {Beta::Real, Beta::Complex}) {
    const HermitianMatrix h = sample_gaussian(b, 7, 99);
    std::stringstream ss;
    write_matrix(ss, h, 99);
    ContainerHeader hdr;
    const HermitianMatrix back = read_matrix(ss, &hdr);
    EXPECT_TRUE(back == h);
    EXPECT_EQ(hdr.seed, 99u);
    EXPECT_EQ(hdr.dim, 7u);
    EXPECT_EQ(hdr.beta, b);
    EXPECT_EQ(hdr.kind, ContainerKind::Matrix);
  }
}

TEST(MatrixIo, HeaderLayout) {
  RealMatrix m(2, 2);
  m << 1.0, 2.0, 2.0, 3.0;
  std::stringstream ss;
  write_matrix(ss, HermitianMatrix(m), 0x0102030405060708ull);
  const std::string bytes = ss.str();
  ASSERT_EQ(bytes.size(), 32u + 4u * 8u);
  EXPECT_EQ(bytes.substr(0, 4), "RMT1");
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 1u);  // beta, little endian
  EXPECT_EQ(static_cast<unsigned char>(bytes[8]), 2u);  // N
  EXPECT_EQ(static_cast<unsigned char>(bytes[24]), 0x08u);  // seed low byte
  double first = 0.0, second = 0.0;
  std::memcpy(&first, bytes.data() + 32, 8);
  std::memcpy(&second, bytes.data() + 40, 8);
  EXPECT_EQ(first, 1.0);
  EXPECT_EQ(second, 2.0);  // row-major
}

TEST(MatrixIo, SpectrumRoundTrip) {
  const SpectralSample s = eigen_decompose(sample_gaussian(Beta::Complex, 6, 1), true, 1);
  std::stringstream ss;
  write_spectrum(ss, s);
  const SpectralSample back = read_spectrum(ss);
  EXPECT_EQ(back.eigenvalues, s.eigenvalues);
  ASSERT_TRUE(back.has_vectors());
  EXPECT_EQ(*back.vectors, *s.vectors);
  EXPECT_EQ(back.seed, 1u);
}

TEST(MatrixIo, RejectsGarbage) {
  std::stringstream ss("XXXX this is not a container");
  EXPECT_THROW(read_matrix(ss), ValidationError);
}

TEST(MatrixIo, Csv) {
  ComplexMatrix m(1, 1);
  m(0, 0) = {0.5, 0.0};
  std::stringstream ss;
  write_matrix_csv(ss, HermitianMatrix(m));
  EXPECT_EQ(ss.str(), "row,col,re,im\n0,0,0.5,0\n");
}
