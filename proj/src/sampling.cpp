#include "tridef/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tridef {

namespace {

// Philox 4x32 round constants (Salmon et al., SC 2011).
constexpr std::uint32_t kMult0 = 0xD2511F53u;
constexpr std::uint32_t kMult1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

std::string_view to_string(EnsembleKind kind) {
  switch (kind) {
    case EnsembleKind::UnitSphere: return "unit-sphere";
    case EnsembleKind::GaussianIID: return "gaussian";
    case EnsembleKind::RademacherIID: return "rademacher";
  }
  return "unknown";
}

std::optional<EnsembleKind> parse_ensemble(std::string_view name) {
  if (name == "unit-sphere") return EnsembleKind::UnitSphere;
  if (name == "gaussian") return EnsembleKind::GaussianIID;
  if (name == "rademacher") return EnsembleKind::RademacherIID;
  return std::nullopt;
}

Ensemble::Ensemble(EnsembleKind kind_, std::size_t n_) : kind(kind_), n(n_) {
  if (n < 2) {
    throw std::invalid_argument("ensemble dimension must be at least 2, got " + std::to_string(n));
  }
}

std::uint64_t substream_id(std::uint64_t trial_index, MatrixSlot slot) {
  if (trial_index >> 62 != 0) {
    throw std::invalid_argument("trial index exceeds the 2^62 substream limit");
  }
  return (static_cast<std::uint64_t>(slot) << 62) | trial_index;
}

CounterRng::CounterRng(std::uint64_t key, std::uint64_t stream)
    : key_lo_(static_cast<std::uint32_t>(key)),
      key_hi_(static_cast<std::uint32_t>(key >> 32)),
      stream_lo_(static_cast<std::uint32_t>(stream)),
      stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

void CounterRng::refill() {
  std::uint32_t x0 = static_cast<std::uint32_t>(block_);
  std::uint32_t x1 = static_cast<std::uint32_t>(block_ >> 32);
  std::uint32_t x2 = stream_lo_;
  std::uint32_t x3 = stream_hi_;
  std::uint32_t k0 = key_lo_;
  std::uint32_t k1 = key_hi_;
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mul_hi_lo(kMult0, x0, hi0, lo0);
    mul_hi_lo(kMult1, x2, hi1, lo1);
    const std::uint32_t y0 = hi1 ^ x1 ^ k0;
    const std::uint32_t y1 = lo1;
    const std::uint32_t y2 = hi0 ^ x3 ^ k1;
    const std::uint32_t y3 = lo0;
    x0 = y0;
    x1 = y1;
    x2 = y2;
    x3 = y3;
    k0 += kWeyl0;
    k1 += kWeyl1;
  }
  buffer_ = {x0, x1, x2, x3};
  available_ = 4;
  ++block_;
}

std::uint32_t CounterRng::next_u32() {
  if (available_ == 0) refill();
  return buffer_[4 - available_--];
}

std::uint64_t CounterRng::next_u64() {
  const std::uint64_t lo = next_u32();
  const std::uint64_t hi = next_u32();
  return (hi << 32) | lo;
}

double CounterRng::next_unit_double() {
  // 53 random bits offset by half a step: never 0, never 1.
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

void CounterRng::next_normal_pair(double& z0, double& z1) {
  const double u1 = next_unit_double();
  const double u2 = next_unit_double();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  z0 = radius * std::cos(angle);
  z1 = radius * std::sin(angle);
}

namespace {

Matrix fill_gaussian(std::size_t n, CounterRng& rng) {
  Matrix m(n);
  double* p = m.data();
  const std::size_t count = m.size();
  std::size_t i = 0;
  for (; i + 1 < count; i += 2) {
    rng.next_normal_pair(p[i], p[i + 1]);
  }
  if (i < count) {
    double spare;
    rng.next_normal_pair(p[i], spare);
  }
  return m;
}

Matrix fill_rademacher(std::size_t n, CounterRng& rng) {
  Matrix m(n);
  double* p = m.data();
  for (std::size_t i = 0; i < m.size(); ++i) {
    p[i] = (rng.next_u32() & 1u) ? 1.0 : -1.0;
  }
  return m;
}

}  // namespace

Matrix sample(const Ensemble& ensemble, const SeedSpec& seed) {
  CounterRng rng(seed.master_seed, substream_id(seed.trial_index, seed.slot));
  switch (ensemble.kind) {
    case EnsembleKind::GaussianIID:
      return fill_gaussian(ensemble.n, rng);
    case EnsembleKind::RademacherIID:
      return fill_rademacher(ensemble.n, rng);
    case EnsembleKind::UnitSphere:
      return normalize_to_sphere(fill_gaussian(ensemble.n, rng));
  }
  throw std::invalid_argument("unknown ensemble kind");
}

MatrixTriple sample_triple(const Ensemble& ensemble, std::uint64_t master_seed,
                           std::uint64_t trial_index) {
  return MatrixTriple{
      sample(ensemble, SeedSpec{master_seed, trial_index, MatrixSlot::A}),
      sample(ensemble, SeedSpec{master_seed, trial_index, MatrixSlot::B}),
      sample(ensemble, SeedSpec{master_seed, trial_index, MatrixSlot::C}),
  };
}

}  // namespace tridef
