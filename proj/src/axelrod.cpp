#include "axelsmote/axelrod.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>

#include "axelsmote/errors.hpp"

namespace axelsmote::axelrod {

CultureGrid::CultureGrid(std::size_t side, std::size_t features, std::size_t traits,
                         Boundary boundary, RngStream dynamics)
    : side_(side),
      features_(features),
      traits_(traits),
      boundary_(boundary),
      cells_(side * side * features, 0),
      rng_(dynamics) {
    if (side == 0 || features == 0 || traits == 0) {
        throw Error(ErrorCode::InvalidDimension, "grid side, feature count and trait count must be positive");
    }
}

std::vector<std::size_t> CultureGrid::neighbors(std::size_t agent) const {
    std::vector<std::size_t> out;
    out.reserve(4);
    const std::size_t r = agent / side_;
    const std::size_t c = agent % side_;
    auto push = [&](std::size_t rr, std::size_t cc) {
        const std::size_t idx = rr * side_ + cc;
        if (idx != agent) out.push_back(idx);
    };
    if (boundary_ == Boundary::Open) {
        if (r > 0) push(r - 1, c);
        if (r + 1 < side_) push(r + 1, c);
        if (c > 0) push(r, c - 1);
        if (c + 1 < side_) push(r, c + 1);
    } else {
        push((r + side_ - 1) % side_, c);
        push((r + 1) % side_, c);
        push(r, (c + side_ - 1) % side_);
        push(r, (c + 1) % side_);
    }
    return out;
}

CultureGrid init_grid(std::size_t side, std::size_t features, std::size_t traits,
                      std::uint64_t seed, Boundary boundary) {
    CultureGrid grid(side, features, traits, boundary,
                     derive_stream(seed, stream_tag::kAxelrodDynamics, 0, 0));
    auto init_rng = derive_stream(seed, stream_tag::kAxelrodInit, 0, 0);
    for (std::size_t a = 0; a < grid.agent_count(); ++a) {
        for (Trait& t : grid.culture(a)) t = static_cast<Trait>(init_rng.uniform_index(traits));
    }
    return grid;
}

double cultural_similarity(std::span<const Trait> a, std::span<const Trait> b) noexcept {
    std::size_t shared = 0;
    for (std::size_t j = 0; j < a.size(); ++j) shared += (a[j] == b[j]) ? 1 : 0;
    return static_cast<double>(shared) / static_cast<double>(a.size());
}

bool step(CultureGrid& grid) {
    auto& rng = grid.rng();
    const std::size_t agent = rng.uniform_index(grid.agent_count());
    const auto adjacent = grid.neighbors(agent);
    if (adjacent.empty()) return false;
    const std::size_t other = adjacent[rng.uniform_index(adjacent.size())];

    auto mine = grid.culture(agent);
    const auto theirs = grid.culture(other);
    const double similarity = cultural_similarity(mine, theirs);
    if (!(rng.uniform01() < similarity)) return false;

    std::vector<std::size_t> differing;
    for (std::size_t j = 0; j < mine.size(); ++j) {
        if (mine[j] != theirs[j]) differing.push_back(j);
    }
    if (differing.empty()) return false;
    const std::size_t feature = differing[rng.uniform_index(differing.size())];
    mine[feature] = theirs[feature];
    return true;
}

bool is_absorbing(const CultureGrid& grid) {
    for (std::size_t a = 0; a < grid.agent_count(); ++a) {
        const auto mine = grid.culture(a);
        for (std::size_t b : grid.neighbors(a)) {
            if (b < a) continue;
            const auto theirs = grid.culture(b);
            std::size_t shared = 0;
            for (std::size_t j = 0; j < mine.size(); ++j) shared += (mine[j] == theirs[j]) ? 1 : 0;
            if (shared != 0 && shared != mine.size()) return false;
        }
    }
    return true;
}

std::size_t count_regions(const CultureGrid& grid) {
    const std::size_t n = grid.agent_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : grid.neighbors(a)) {
            if (std::ranges::equal(grid.culture(a), grid.culture(b))) {
                parent[find(a)] = find(b);
            }
        }
    }
    std::size_t roots = 0;
    for (std::size_t a = 0; a < n; ++a) roots += (find(a) == a) ? 1 : 0;
    return roots;
}

std::size_t count_distinct_cultures(const CultureGrid& grid) {
    std::set<std::vector<Trait>> seen;
    for (std::size_t a = 0; a < grid.agent_count(); ++a) {
        const auto c = grid.culture(a);
        seen.emplace(c.begin(), c.end());
    }
    return seen.size();
}

SimulationReport run(CultureGrid grid, std::size_t max_steps, std::size_t check_interval) {
    if (max_steps < 1) throw Error(ErrorCode::InvalidArgument, "max_steps must be at least 1");
    if (check_interval < 1) throw Error(ErrorCode::InvalidArgument, "check_interval must be at least 1");

    std::size_t steps = 0;
    std::size_t interactions = 0;
    bool converged = is_absorbing(grid);
    while (!converged && steps < max_steps) {
        if (step(grid)) ++interactions;
        ++steps;
        if (steps % check_interval == 0 || steps == max_steps) converged = is_absorbing(grid);
    }
    const std::size_t regions = count_regions(grid);
    const std::size_t distinct = count_distinct_cultures(grid);
    return SimulationReport{steps, interactions, converged, regions, distinct, std::move(grid)};
}

void write_grid_csv(const CultureGrid& grid, std::ostream& out) {
    for (std::size_t a = 0; a < grid.agent_count(); ++a) {
        const auto c = grid.culture(a);
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (j) out << ',';
            out << c[j];
        }
        out << '\n';
    }
}

}  // namespace axelsmote::axelrod
