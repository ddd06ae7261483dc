#include "charsum/bounds.hpp"

#include <cmath>

#include "charsum/errors.hpp"

namespace charsum {

void validate(const BoundParams& params) {
    if (!(params.lambda > 0) || !(params.kappa > 0))
        throw BadParametersError("lambda and kappa must be positive");
}

double gain_factor(std::uint64_t q, std::uint64_t n) {
    if (n <= 1) throw DomainError("gain factor needs n >= 2");
    const double qd = static_cast<double>(q);
    const double nd = static_cast<double>(n);
    const double ln = std::log(nd);
    const double first = std::sqrt(qd) / (std::sqrt(nd) * std::pow(ln, 2.75));
    const double second = std::pow(nd, 0.8) / (std::pow(qd, 0.4) * std::pow(ln, 3.1));
    return std::min(first, second);
}

double classical_bound(std::uint64_t c_size, std::uint64_t d_size, std::uint64_t q) {
    const double prod = static_cast<double>(c_size) * static_cast<double>(d_size);
    return std::min(std::sqrt(prod * static_cast<double>(q)), prod);
}

double energy_bound(std::uint64_t c_size, EnergyValue energy_u, std::uint64_t q) {
    const double c = static_cast<double>(c_size);
    const double e = static_cast<double>(energy_u);
    return std::pow(c * c * c * e * static_cast<double>(q), 0.25);
}

double refined_bound(std::uint64_t c_size, std::uint64_t d_size, std::uint64_t q,
                     const BoundParams& params) {
    validate(params);
    const double c = static_cast<double>(c_size);
    const double d = static_cast<double>(d_size);
    const double m = gain_factor(q, d_size);
    return params.kappa * std::pow(c * c * c * d * d * d * static_cast<double>(q) / m, 0.25);
}

ImprovementInterval improvement_interval(std::uint64_t q, std::uint64_t d_size, double lambda) {
    if (d_size < 2 || q < 3) throw DomainError("improvement interval needs |D| >= 2 and q >= 3");
    if (!(lambda > 0)) throw BadParametersError("lambda must be positive");
    const double qd = static_cast<double>(q);
    const double d = static_cast<double>(d_size);
    const double lq = std::log(qd);
    const double lo = lambda * std::max(std::sqrt(qd) * std::pow(lq, 2.75) / std::sqrt(d),
                                        std::pow(qd, 1.4) * std::pow(lq, 3.1) / std::pow(d, 1.8));
    const double hi = (1.0 / lambda) *
                      std::min(std::pow(qd, 1.5) / (std::pow(d, 1.5) * std::pow(lq, 2.75)),
                               std::pow(qd, 0.6) / (std::pow(d, 0.2) * std::pow(lq, 3.1)));
    ImprovementInterval out;
    out.lo = lo;
    out.hi = hi;
    out.nonempty = lo < hi;
    return out;
}

}  // namespace charsum
