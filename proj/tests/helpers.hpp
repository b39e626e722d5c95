#pragma once

#include "oracles.hpp"
#include "ppav/intlin.hpp"

namespace testing_support {

inline ppav::IntMatrix to_int_matrix(const oracle::Mat& m)
{
    std::size_t r = m.size(), c = r ? m[0].size() : 0;
    ppav::IntMatrix out(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            out(i, j) = ppav::Integer(static_cast<long>(m[i][j]));
    return out;
}

inline ppav::RatMatrix to_rat_matrix(const oracle::Mat& m)
{
    return ppav::to_rational(to_int_matrix(m));
}

inline ppav::RatVector rat_vector(std::initializer_list<long> xs, long den = 1)
{
    ppav::RatVector v;
    for (long x : xs)
        v.push_back(ppav::make_rational(x, den));
    return v;
}

inline ppav::RatMatrix columns_of(const std::vector<ppav::RatVector>& cols)
{
    std::size_t n = cols.begin()->size();
    ppav::RatMatrix m(n, cols.size());
    std::size_t j = 0;
    for (const auto& c : cols)
        m.set_column(j++, c);
    return m;
}

} // namespace testing_support
