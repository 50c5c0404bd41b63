#ifndef GP_SUITES_HPP
#define GP_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gp/identities.hpp"

namespace gp {

/// Seeded, reproducible identity suites over random samples.
/// Suites: shift, mult, derivative, negapoly, taylor, fourier, grossman, all.
std::vector<IdentityReport> run_identity_suite(const std::string& suite,
                                               int samples, double tol,
                                               std::uint64_t seed);

/// Names accepted by run_identity_suite, in execution order of "all".
const std::vector<std::string>& identity_suite_names();

} // namespace gp

#endif
