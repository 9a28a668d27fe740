#include "rmt/matrix_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "rmt/error.hpp"

namespace rmt {

namespace {

constexpr std::array<char, 4> kMagic = {'R', 'M', 'T', '1'};

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(v);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
}

template <class T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw ValidationError("container: truncated input");
  return to_little(v);
}

void put_doubles(std::ostream& out, const double* data, std::size_t count) {
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(count * sizeof(double)));
  } else {
    for (std::size_t i = 0; i < count; ++i) put(out, data[i]);
  }
}

void get_doubles(std::istream& in, double* data, std::size_t count) {
  in.read(reinterpret_cast<char*>(data), static_cast<std::streamsize>(count * sizeof(double)));
  if (!in) throw ValidationError("container: truncated payload");
  if constexpr (std::endian::native != std::endian::little)
    for (std::size_t i = 0; i < count; ++i) data[i] = to_little(data[i]);
}

void write_header(std::ostream& out, const ContainerHeader& h) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(as_int(h.beta)));
  put<std::uint64_t>(out, h.dim);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(h.kind));
  put<std::uint32_t>(out, 0u);
  put<std::uint64_t>(out, h.seed);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ContainerHeader read_header(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw ValidationError("container: bad magic, expected RMT1");
  ContainerHeader h;
  h.beta = beta_from_int(static_cast<int>(get<std::uint32_t>(in)));
  h.dim = get<std::uint64_t>(in);
  const auto kind = get<std::uint32_t>(in);
  require(kind <= 2, "container: unknown payload kind " + std::to_string(kind));
  h.kind = static_cast<ContainerKind>(kind);
  (void)get<std::uint32_t>(in);
  h.seed = get<std::uint64_t>(in);
  require(h.dim >= 1 && h.dim <= (1u << 20), "container: implausible dimension");
  return h;
}

void write_matrix(std::ostream& out, const HermitianMatrix& h, Seed seed) {
  write_header(out, {h.beta(), static_cast<std::uint64_t>(h.dim()), ContainerKind::Matrix, seed});
  const auto n = static_cast<std::size_t>(h.dim());
  if (h.is_real())
    put_doubles(out, h.real().data(), n * n);
  else
    put_doubles(out, reinterpret_cast<const double*>(h.complex().data()), 2 * n * n);
  if (!out) throw Error("container: write failed");
}

HermitianMatrix read_matrix(std::istream& in, ContainerHeader* header) {
  const ContainerHeader h = read_header(in);
  require(h.kind == ContainerKind::Matrix, "container: payload is not a matrix");
  if (header) *header = h;
  const auto n = static_cast<Index>(h.dim);
  const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (h.beta == Beta::Real) {
    RealMatrix m(n, n);
    get_doubles(in, m.data(), count);
    return HermitianMatrix(std::move(m));
  }
  ComplexMatrix m(n, n);
  get_doubles(in, reinterpret_cast<double*>(m.data()), 2 * count);
  return HermitianMatrix(std::move(m));
}

void write_spectrum(std::ostream& out, const SpectralSample& sample) {
  const auto kind = sample.has_vectors() ? ContainerKind::SpectrumWithVectors : ContainerKind::Spectrum;
  const auto n = static_cast<std::size_t>(sample.dim());
  write_header(out, {sample.beta, n, kind, sample.seed});
  put_doubles(out, sample.eigenvalues.data(), n);
  if (sample.has_vectors()) {
    // Row-major on disk; Eigen's default storage is column-major.
    const auto& u = *sample.vectors;
    if (sample.beta == Beta::Real) {
      const RealMatrix r = u.real();
      put_doubles(out, r.data(), n * n);
    } else {
      const ComplexMatrix c = u;
      put_doubles(out, reinterpret_cast<const double*>(c.data()), 2 * n * n);
    }
  }
  if (!out) throw Error("container: write failed");
}

SpectralSample read_spectrum(std::istream& in) {
  const ContainerHeader h = read_header(in);
  require(h.kind != ContainerKind::Matrix, "container: payload is a matrix, not a spectrum");
  SpectralSample s;
  s.beta = h.beta;
  s.seed = h.seed;
  const auto n = static_cast<Index>(h.dim);
  s.eigenvalues.resize(n);
  get_doubles(in, s.eigenvalues.data(), static_cast<std::size_t>(n));
  if (h.kind == ContainerKind::SpectrumWithVectors) {
    const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    if (h.beta == Beta::Real) {
      RealMatrix r(n, n);
      get_doubles(in, r.data(), count);
      s.vectors = r.cast<cplx>();
    } else {
      ComplexMatrix c(n, n);
      get_doubles(in, reinterpret_cast<double*>(c.data()), 2 * count);
      s.vectors = Eigen::MatrixXcd(c);
    }
  }
  return s;
}

void save_matrix(const std::string& path, const HermitianMatrix& h, Seed seed) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  write_matrix(out, h, seed);
}

HermitianMatrix load_matrix(const std::string& path, ContainerHeader* header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return read_matrix(in, header);
}

void save_spectrum(const std::string& path, const SpectralSample& sample) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  write_spectrum(out, sample);
}

SpectralSample load_spectrum(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  return read_spectrum(in);
}

void write_matrix_csv(std::ostream& out, const HermitianMatrix& h) {
  out << "row,col,re,im\n";
  for (Index i = 0; i < h.dim(); ++i)
    for (Index j = 0; j < h.dim(); ++j) {
      const cplx v = h(i, j);
      out << i << ',' << j << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
    }
}

void write_spectrum_csv(std::ostream& out, const SpectralSample& sample) {
  out << "index,eigenvalue\n";
  for (Index j = 0; j < sample.dim(); ++j) out << (j + 1) << ',' << fmt(sample.eigenvalues[j]) << '\n';
}

}  // namespace rmt
