#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>
#include <vector>

namespace axelsmote {

/// Deterministic random stream keyed by (master seed, purpose, class, sample).
///
/// The generator is SplitMix64: the state starts at a 64-bit key obtained by
/// hashing the label components through the SplitMix64 finalizer, advances by
/// the golden-ratio increment, and each output is the finalizer applied to the
/// state. Output i is therefore a pure function of (key, i), so streams are
/// byte-stable across platforms and independent of scheduling.
///
/// All derived variates (uniforms, bounded integers, Beta(2,2), normals) are
/// computed here rather than through <random> distributions, whose algorithms
/// are implementation-defined.
class RngStream {
public:
    using result_type = std::uint64_t;

    explicit RngStream(std::uint64_t key) noexcept : state_(key) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept { return next_u64(); }
    std::uint64_t next_u64() noexcept;

    /// Uniform on [0, 1) with 53 bits of resolution.
    double uniform01() noexcept;
    /// Uniform on the open interval (0, 1).
    double uniform_open01() noexcept;
    /// Unbiased uniform integer in [0, bound). bound must be positive.
    std::size_t uniform_index(std::size_t bound) noexcept;
    /// Standard normal via Box-Muller (one variate per two uniforms).
    double standard_normal() noexcept;
    /// Beta(2,2) as the median of three open uniforms; always in (0, 1).
    double beta22() noexcept;

    /// Draws `count` distinct values from [0, n) in draw order (partial
    /// Fisher-Yates). count is clamped to n.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t count);

    [[nodiscard]] std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// SplitMix64 output finalizer (a bijection on 64-bit words).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// 64-bit FNV-1a hash of a purpose tag.
std::uint64_t hash_tag(std::string_view tag) noexcept;

RngStream derive_stream(std::uint64_t master_seed, std::string_view purpose,
                        std::int64_t class_id, std::uint64_t sample_index) noexcept;

namespace stream_tag {
inline constexpr std::string_view kBase = "base";
inline constexpr std::string_view kSubset = "subset";
inline constexpr std::string_view kExchange = "exchange";
inline constexpr std::string_view kBlend = "blend";
inline constexpr std::string_view kNoise = "noise";
inline constexpr std::string_view kSmoteBase = "smote-base";
inline constexpr std::string_view kSmoteNeighbor = "smote-neighbor";
inline constexpr std::string_view kSmoteGap = "smote-gap";
inline constexpr std::string_view kSplit = "split";
inline constexpr std::string_view kAxelrodInit = "axelrod-init";
inline constexpr std::string_view kAxelrodDynamics = "axelrod-dynamics";
}  // namespace stream_tag

}  // namespace axelsmote
