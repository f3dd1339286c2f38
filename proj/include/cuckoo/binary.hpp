#pragma once

#include <functional>

#include "cuckoo/search.hpp"
#include "cuckoo/variants.hpp"

namespace cuckoo {

inline constexpr double kBinaryLatentBound = 6.0;

/// Minimization over fixed-length bit strings.
struct BinaryProblem {
  std::size_t dimension = 0;
  std::function<double(const BitVector&)> objective;
};

struct BinaryRunResult {
  RunResult run;  ///< run.best.position is the latent vector.
  BitVector best_bits;
};

/// Decode a latent vector: binarize it with a stream keyed by the run seed
/// and the exact bit pattern of the latent coordinates, so the decode is a
/// pure function of (seed, latent).
BitVector decode_latent(std::span<const double> latent, std::uint64_t seed, TransferKind kind);

/// Cuckoo search over the latent box [-6, 6]^D; every evaluation decodes the
/// latent vector and scores the bits.
BinaryRunResult binary_cs_run(const BinaryProblem& problem, const CsParams& params);

}  // namespace cuckoo
