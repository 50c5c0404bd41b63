#ifndef GP_BERNOULLI_HPP
#define GP_BERNOULLI_HPP

#include <vector>

#include "gp/constants.hpp"

namespace gp {

/// Bernoulli numbers B_0..B_max_index, computed once at startup from the
/// defining recurrence in exact rational arithmetic and folded to double.
class BernoulliTable {
public:
    static constexpr int max_index = 60;

    static const BernoulliTable& instance();

    double number(int n) const;
    const std::vector<double>& numbers() const { return numbers_; }

private:
    BernoulliTable();
    std::vector<double> numbers_;
};

/// B_n as a double. n must lie in [0, BernoulliTable::max_index].
double bernoulli_number(int n);

/// Bernoulli polynomial B_m(q), evaluated from the binomial expansion.
Complex bernoulli_poly(int m, Complex q);

} // namespace gp

#endif
