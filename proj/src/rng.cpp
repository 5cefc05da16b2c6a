#include "axelsmote/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace axelsmote {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;  // 2^-53

struct Wide {
    std::uint64_t hi;
    std::uint64_t lo;
};

// Full 128-bit product of two 64-bit words.
Wide multiply(std::uint64_t a, std::uint64_t b) noexcept {
    const std::uint64_t a_lo = a & 0xFFFFFFFFULL, a_hi = a >> 32;
    const std::uint64_t b_lo = b & 0xFFFFFFFFULL, b_hi = b >> 32;
    const std::uint64_t ll = a_lo * b_lo;
    const std::uint64_t lh = a_lo * b_hi;
    const std::uint64_t hl = a_hi * b_lo;
    const std::uint64_t hh = a_hi * b_hi;
    const std::uint64_t mid = (ll >> 32) + (lh & 0xFFFFFFFFULL) + (hl & 0xFFFFFFFFULL);
    return {hh + (lh >> 32) + (hl >> 32) + (mid >> 32), (mid << 32) | (ll & 0xFFFFFFFFULL)};
}
}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_tag(std::string_view tag) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    return h;
}

RngStream derive_stream(std::uint64_t master_seed, std::string_view purpose,
                        std::int64_t class_id, std::uint64_t sample_index) noexcept {
    std::uint64_t key = mix64(master_seed + kGolden);
    key = mix64(key ^ hash_tag(purpose));
    key = mix64(key ^ static_cast<std::uint64_t>(class_id));
    key = mix64(key ^ (sample_index + kGolden));
    return RngStream(key);
}

std::uint64_t RngStream::next_u64() noexcept {
    state_ += kGolden;
    return mix64(state_);
}

double RngStream::uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double RngStream::uniform_open01() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * kTwoPow53Inv;
}

std::size_t RngStream::uniform_index(std::size_t bound) noexcept {
    // Lemire's multiply-and-reject method.
    const auto range = static_cast<std::uint64_t>(bound);
    Wide product = multiply(next_u64(), range);
    if (product.lo < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (product.lo < threshold) product = multiply(next_u64(), range);
    }
    return static_cast<std::size_t>(product.hi);
}

double RngStream::standard_normal() noexcept {
    const double u1 = uniform_open01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::beta22() noexcept {
    const double a = uniform_open01();
    const double b = uniform_open01();
    const double c = uniform_open01();
    return std::max(std::min(a, b), std::min(std::max(a, b), c));
}

std::vector<std::size_t> RngStream::sample_without_replacement(std::size_t n, std::size_t count) {
    count = std::min(count, n);
    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + uniform_index(n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
}

}  // namespace axelsmote
