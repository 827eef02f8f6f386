#include "galerkin/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include "galerkin/errors.hpp"

namespace galerkin {

namespace {

constexpr char kMagic[8] = {'G', 'L', 'S', 'P', 'E', 'C', 'F', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint32_t kEndianTag = 0x01020304u;

static_assert(std::endian::native == std::endian::little,
              "coefficient files are little-endian; byte swapping is not implemented");

template <typename T>
void put(std::ofstream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    return v;
}

} // namespace

void write_field(const std::filesystem::path& path, const SpectralField& f) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw MissingArtifactError("cannot open for writing: " + path.string());
    os.write(kMagic, sizeof(kMagic));
    put(os, kVersion);
    put(os, kEndianTag);
    put(os, static_cast<std::uint32_t>(f.grid().shape()));
    put(os, static_cast<std::uint32_t>(f.grid().resolution()));
    put(os, f.grid().shape() == Truncation::Ball ? f.grid().ball_bound() : 0.0);
    for (std::size_t i = 0; i < f.storage_size(); ++i) {
        put(os, f.data()[i].real());
        put(os, f.data()[i].imag());
    }
    if (!os) throw MissingArtifactError("short write: " + path.string());
}

SpectralField read_field(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw MissingArtifactError("cannot open coefficient file: " + path.string());
    char magic[8];
    is.read(magic, sizeof(magic));
    if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw MissingArtifactError("bad magic in coefficient file: " + path.string());
    if (get<std::uint32_t>(is) != kVersion) throw MissingArtifactError("unsupported coefficient file version");
    if (get<std::uint32_t>(is) != kEndianTag) throw MissingArtifactError("coefficient file endianness mismatch");
    const auto shape = static_cast<Truncation>(get<std::uint32_t>(is));
    const int n = static_cast<int>(get<std::uint32_t>(is));
    const double bound = get<double>(is);
    const WaveGrid grid = (shape == Truncation::Ball) ? WaveGrid::ball(n, bound) : WaveGrid::square(n);
    SpectralField f(grid);
    for (std::size_t i = 0; i < f.storage_size(); ++i) {
        const double re = get<double>(is);
        const double im = get<double>(is);
        f.data()[i] = Complex{re, im};
    }
    if (!is) throw MissingArtifactError("truncated coefficient file: " + path.string());
    return f;
}

} // namespace galerkin
