#include "gp/bernoulli.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "gp/errors.hpp"

namespace gp {

namespace mp = boost::multiprecision;

// B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1,j) B_j, run in exact rationals so
// the large even indices come out with full double accuracy.
BernoulliTable::BernoulliTable() {
    const int n = max_index;
    std::vector<mp::cpp_rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        mp::cpp_rational acc = 0;
        mp::cpp_int binom = 1; // C(m+1, j), updated incrementally
        for (int j = 0; j < m; ++j) {
            acc += binom * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[m] = -acc / (m + 1);
    }
    numbers_.resize(n + 1);
    for (int m = 0; m <= n; ++m)
        numbers_[m] = b[m].convert_to<double>();
}

const BernoulliTable& BernoulliTable::instance() {
    static const BernoulliTable table;
    return table;
}

double BernoulliTable::number(int n) const {
    if (n < 0 || n > max_index)
        throw domain_error("bernoulli_number: index out of table range");
    return numbers_[static_cast<size_t>(n)];
}

double bernoulli_number(int n) {
    return BernoulliTable::instance().number(n);
}

Complex bernoulli_poly(int m, Complex q) {
    if (m < 0)
        throw domain_error("bernoulli_poly: order must be non-negative");
    const auto& table = BernoulliTable::instance();
    // B_m(q) = sum_k C(m,k) B_k q^{m-k}, Horner in q
    Complex result = table.number(0);
    double binom = 1.0;
    for (int k = 1; k <= m; ++k) {
        binom = binom * (m - k + 1) / k;
        result = result * q + binom * table.number(k);
    }
    return result;
}

} // namespace gp
