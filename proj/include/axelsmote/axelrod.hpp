#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "axelsmote/rng.hpp"

namespace axelsmote::axelrod {

enum class Boundary { Open, Periodic };

using Trait = std::uint32_t;

/// L x L lattice of agents, each holding f traits in [0, q). Agents are
/// indexed row-major. The grid owns the random stream that drives its
/// dynamics, so a grid snapshot plus its stream fully determines the future.
class CultureGrid {
public:
    CultureGrid(std::size_t side, std::size_t features, std::size_t traits, Boundary boundary,
                RngStream dynamics);

    [[nodiscard]] std::size_t side() const noexcept { return side_; }
    [[nodiscard]] std::size_t features() const noexcept { return features_; }
    [[nodiscard]] std::size_t trait_count() const noexcept { return traits_; }
    [[nodiscard]] Boundary boundary() const noexcept { return boundary_; }
    [[nodiscard]] std::size_t agent_count() const noexcept { return side_ * side_; }

    [[nodiscard]] std::span<const Trait> culture(std::size_t agent) const noexcept {
        return {cells_.data() + agent * features_, features_};
    }
    [[nodiscard]] std::span<Trait> culture(std::size_t agent) noexcept {
        return {cells_.data() + agent * features_, features_};
    }

    /// Von Neumann neighbors of an agent (2-4 with open boundaries). Never
    /// contains the agent itself.
    [[nodiscard]] std::vector<std::size_t> neighbors(std::size_t agent) const;

    [[nodiscard]] const std::vector<Trait>& cells() const noexcept { return cells_; }
    RngStream& rng() noexcept { return rng_; }

    friend bool operator==(const CultureGrid& a, const CultureGrid& b) noexcept {
        return a.side_ == b.side_ && a.features_ == b.features_ && a.traits_ == b.traits_ &&
               a.boundary_ == b.boundary_ && a.cells_ == b.cells_;
    }

private:
    std::size_t side_;
    std::size_t features_;
    std::size_t traits_;
    Boundary boundary_;
    std::vector<Trait> cells_;
    RngStream rng_;
};

/// Random initial lattice: every trait slot uniform over [0, q).
/// Throws InvalidDimension if L, f or q is zero.
CultureGrid init_grid(std::size_t side, std::size_t features, std::size_t traits,
                      std::uint64_t seed, Boundary boundary = Boundary::Open);

/// Fraction of positions on which the two cultures agree.
double cultural_similarity(std::span<const Trait> a, std::span<const Trait> b) noexcept;

/// One asynchronous update: a random agent meets a random neighbor and, with
/// probability equal to their similarity, copies one differing trait from it.
/// Returns true iff a trait was copied.
bool step(CultureGrid& grid);

/// True when every adjacent pair has similarity exactly 0 or 1.
bool is_absorbing(const CultureGrid& grid);

/// Connected components of identical-culture agents under the grid adjacency.
std::size_t count_regions(const CultureGrid& grid);

/// Number of distinct culture vectors on the grid.
std::size_t count_distinct_cultures(const CultureGrid& grid);

struct SimulationReport {
    std::size_t steps_executed = 0;
    std::size_t interactions = 0;
    bool converged = false;
    std::size_t region_count = 0;
    std::size_t distinct_cultures = 0;
    CultureGrid final_grid;
};

/// Steps until the absorbing state (checked before the first step and every
/// check_interval steps after) or max_steps.
SimulationReport run(CultureGrid grid, std::size_t max_steps, std::size_t check_interval);

/// One row per agent (row-major), f comma-separated trait integers, no header.
void write_grid_csv(const CultureGrid& grid, std::ostream& out);

}  // namespace axelsmote::axelrod
