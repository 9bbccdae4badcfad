/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef OLSE_GUARD_APPROX_HH
#define OLSE_GUARD_APPROX_HH 1

#include <olse/instance.hh>

#include <vector>

namespace olse
{
    /// Greedy independent set: repeatedly take the lowest-indexed remaining
    /// vertex and discard its neighbours. Only adjacency between members of
    /// `vertices` matters.
    auto greedy_independent(const std::vector<int> & vertices, const Adjacency & adjacency) -> std::vector<int>;

    /// Ratio (Delta_G + 1) approximation for opt-OLSE.
    auto approx_olse(const Instance &) -> Solution;

    /// Ratio (Delta_G + 1)(Delta_H + 1) approximation for opt-OLISE.
    auto approx_olise(const Instance &) -> Solution;
}

#endif
