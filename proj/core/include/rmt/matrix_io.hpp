#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "rmt/matrix.hpp"
#include "rmt/random.hpp"
#include "rmt/spectral.hpp"

namespace rmt {

/// Binary container. 32-byte little-endian header:
///   char[4] "RMT1", u32 beta, u64 N, u32 kind, u32 reserved, u64 seed
/// followed by row-major doubles. Complex values are (re, im) pairs.
/// kind 0: N x N matrix. kind 1: N eigenvalues. kind 2: eigenvalues then the
/// N x N eigenvector matrix (real for beta 1, complex for beta 2).
enum class ContainerKind : std::uint32_t { Matrix = 0, Spectrum = 1, SpectrumWithVectors = 2 };

struct ContainerHeader {
  Beta beta = Beta::Real;
  std::uint64_t dim = 0;
  ContainerKind kind = ContainerKind::Matrix;
  Seed seed = 0;
};

void write_matrix(std::ostream& out, const HermitianMatrix& h, Seed seed = 0);
HermitianMatrix read_matrix(std::istream& in, ContainerHeader* header = nullptr);

void write_spectrum(std::ostream& out, const SpectralSample& sample);
SpectralSample read_spectrum(std::istream& in);

ContainerHeader read_header(std::istream& in);

void save_matrix(const std::string& path, const HermitianMatrix& h, Seed seed = 0);
HermitianMatrix load_matrix(const std::string& path, ContainerHeader* header = nullptr);
void save_spectrum(const std::string& path, const SpectralSample& sample);
SpectralSample load_spectrum(const std::string& path);

/// Debug CSV: row,col,re,im for every entry.
void write_matrix_csv(std::ostream& out, const HermitianMatrix& h);
/// index,eigenvalue with 1-based indices.
void write_spectrum_csv(std::ostream& out, const SpectralSample& sample);

}  // namespace rmt
