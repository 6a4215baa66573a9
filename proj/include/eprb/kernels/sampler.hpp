#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

namespace eprb::kernels {

// SplitMix64 in pure counter form. Output n of the stream seeded with
// `seed` is mix(seed + (n+1)*golden); per-run substreams are carved out of
// one global stream by reserving draws_per_run consecutive outputs per run,
// so any run's draws can be produced independently, in any order, on any
// thread, with identical results.
inline constexpr std::uint64_t splitmix_golden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t draws_per_run = 4;  // context, component, inversion, spare

std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t n);

/// Uniform double in [0,1) from the top 53 bits.
double u01_from_bits(std::uint64_t z);

/// Stateful view of the same stream, for callers that just want draws.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return splitmix_at(seed_, n_++); }
  double next_u01() { return u01_from_bits(next()); }

 private:
  std::uint64_t seed_;
  std::uint64_t n_ = 0;
};

/// Everything the batch sampler needs, all plain scalars so the scalar and
/// SIMD variants share one contract.
struct SampleBatchParams {
  std::uint64_t seed = 0;
  std::uint64_t first_run = 0;  // global index of the first run produced
  std::size_t count = 0;
  // Cumulative context-selection thresholds over the joint contexts
  // (AB, AB', A'B, A'B'); last entry is 1. A fixed schedule is the
  // degenerate cdf that is 0 before the fixed context and 1 from it on.
  std::array<double, 4> context_cdf{};
  std::array<double, 4> left_angle{};   // per context, canonical radians
  std::array<double, 4> right_angle{};  // per context
  double alpha = 0.5;                   // weight of the left-device component
};

/// Caller-owned output spans, each of length params.count.
struct SampleBatchOut {
  std::uint32_t* context = nullptr;  // 0..3
  double* lambda = nullptr;          // canonical radians
  std::int8_t* left = nullptr;       // +1 / -1
  std::int8_t* right = nullptr;      // +1 / -1
};

/// Scalar reference kernel. The ground truth every variant must match
/// bit for bit.
void sample_batch_scalar(const SampleBatchParams& params, const SampleBatchOut& out);

#if defined(__x86_64__) || defined(_M_X64)
#define EPRB_HAVE_AVX2_KERNEL 1
/// AVX2 variant, four runs per lane-group. Identical output to the scalar
/// kernel (same draw indices, same rounding, same libm asin).
void sample_batch_avx2(const SampleBatchParams& params, const SampleBatchOut& out);
#endif

enum class Isa { automatic, scalar, avx2 };

using SampleBatchFn = void (*)(const SampleBatchParams&, const SampleBatchOut&);

/// Runtime selection: the widest variant the CPU supports, or the
/// requested one. Throws ValidationError for an unsupported request.
SampleBatchFn select_sample_batch(Isa isa = Isa::automatic);

const char* isa_name(SampleBatchFn fn);

}  // namespace eprb::kernels
