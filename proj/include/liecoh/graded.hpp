#ifndef LIECOH_GRADED_HPP
#define LIECOH_GRADED_HPP

#include "liecoh/bigint.hpp"

#include <map>
#include <string>
#include <vector>

namespace liecoh {

// Per-degree additive structure: free rank plus torsion orders d1 | d2 | ...
struct GradedAbelianGroup {
    struct Piece {
        long free_rank = 0;
        std::vector<Int> torsion; // each > 1, divisibility-sorted
        bool trivial() const { return free_rank == 0 && torsion.empty(); }
        bool operator==(const Piece& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
    };
    std::map<int, Piece> by_degree;

    Piece piece(int d) const
    {
        auto it = by_degree.find(d);
        return it == by_degree.end() ? Piece{} : it->second;
    }
    void set(int d, Piece p)
    {
        if (!p.trivial()) by_degree[d] = std::move(p);
    }
    long total_free_rank() const
    {
        long r = 0;
        for (const auto& [d, p] : by_degree) r += p.free_rank;
        return r;
    }
    long total_torsion_count() const
    {
        long r = 0;
        for (const auto& [d, p] : by_degree) r += static_cast<long>(p.torsion.size());
        return r;
    }
    bool torsion_free() const { return total_torsion_count() == 0; }
    std::string str() const;
};

} // namespace liecoh

#endif
