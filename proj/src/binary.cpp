#include "cuckoo/binary.hpp"

#include <bit>

namespace cuckoo {

BitVector decode_latent(std::span<const double> latent, std::uint64_t seed, TransferKind kind) {
  std::uint64_t key = 0xCBF29CE484222325ull;
  for (double v : latent) {
    key ^= std::bit_cast<std::uint64_t>(v);
    key *= 0x100000001B3ull;
    key ^= key >> 29;
  }
  RngStream rng = RngStream(seed).derive("binarize").derive(key);
  return binarize(latent, rng, kind);
}

BinaryRunResult binary_cs_run(const BinaryProblem& problem, const CsParams& params) {
  const auto* binary = std::get_if<BinaryVariant>(&params.variant.mechanism);
  if (binary == nullptr) throw ContractError("binary_cs_run: params.variant must be binary");
  if (problem.dimension == 0 || !problem.objective) throw ContractError("binary_cs_run: empty problem");

  const TransferKind kind = binary->transfer;
  const std::uint64_t seed = params.seed;
  ObjectiveProblem latent(Bounds::uniform(problem.dimension, -kBinaryLatentBound, kBinaryLatentBound),
                          [&problem, seed, kind](std::span<const double> x) {
                            return problem.objective(decode_latent(x, seed, kind));
                          });

  CsParams continuous = params;
  continuous.variant = VariantConfig{StandardVariant{}};
  BinaryRunResult result{cs_run(latent, continuous), {}};
  result.run.params_echo = params;
  result.best_bits = decode_latent(result.run.best.position, seed, kind);
  return result;
}

}  // namespace cuckoo
