#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "tridef/matrix.hpp"

namespace tridef {

inline constexpr std::uint64_t kDefaultMasterSeed = 0x5EEDC0DEull;

enum class EnsembleKind { UnitSphere, GaussianIID, RademacherIID };

std::string_view to_string(EnsembleKind kind);

/// Accepts "unit-sphere", "gaussian", "rademacher".
std::optional<EnsembleKind> parse_ensemble(std::string_view name);

/// A matrix distribution: entry law plus dimension (n >= 2).
struct Ensemble {
  EnsembleKind kind;
  std::size_t n;
  Ensemble(EnsembleKind kind, std::size_t n);
};

enum class MatrixSlot : std::uint32_t { A = 0, B = 1, C = 2 };

/// Names one independent random substream. The (master_seed, trial_index,
/// slot) triple maps injectively onto counter-RNG streams, so any matrix of
/// any trial can be generated in isolation, in any order, on any thread.
struct SeedSpec {
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::uint64_t trial_index = 0;  // must stay below 2^62
  MatrixSlot slot = MatrixSlot::A;
};

/// Packs (trial_index, slot) into the upper 64 bits of the 128-bit counter:
/// slot in the top two bits, trial index below. Throws if the trial index
/// would collide with the slot bits.
std::uint64_t substream_id(std::uint64_t trial_index, MatrixSlot slot);

/// Philox-style 4x32 counter generator (10 rounds). The key carries the
/// master seed, the upper counter half the substream id, and the lower half
/// counts blocks, so streams never overlap. Stateless apart from the block
/// cursor; instances are cheap to construct per matrix.
class CounterRng {
 public:
  CounterRng(std::uint64_t key, std::uint64_t stream);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform double strictly inside (0, 1).
  double next_unit_double();

  /// Two independent standard normals (Box-Muller).
  void next_normal_pair(double& z0, double& z1);

 private:
  void refill();

  std::uint32_t key_lo_, key_hi_;
  std::uint32_t stream_lo_, stream_hi_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned available_ = 0;
};

/// Draws one matrix:
///   GaussianIID   - i.i.d. standard normal entries,
///   RademacherIID - i.i.d. entries uniform on {-1, +1},
///   UnitSphere    - Gaussian fill, then Frobenius normalization (the
///                   rotation-invariant construction of the uniform law on
///                   the unit sphere of matrices).
Matrix sample(const Ensemble& ensemble, const SeedSpec& seed);

struct MatrixTriple {
  Matrix a, b, c;
};

/// Three matrices from the independent substreams (slot A, B, C) of one
/// trial. Pure function of its arguments.
MatrixTriple sample_triple(const Ensemble& ensemble, std::uint64_t master_seed,
                           std::uint64_t trial_index);

}  // namespace tridef
