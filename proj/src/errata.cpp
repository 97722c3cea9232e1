#include "pvmcat/errata.hpp"

#include <cstdio>

namespace pvmcat {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex(Complex z) {
    return "(" + format_real(z.real()) + "," + format_real(z.imag()) + ")";
}

double relative_error(Complex formula, Complex oracle) {
    const double denom = std::max(std::abs(oracle), 1e-30);
    return std::abs(formula - oracle) / denom;
}

void ErrataRegistry::add(ErrataRecord rec) {
    std::lock_guard<std::mutex> lock(mutex_);
    records_.push_back(std::move(rec));
}

std::vector<ErrataRecord> ErrataRegistry::records() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_;
}

std::size_t ErrataRegistry::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return records_.size();
}

const char* ErrataRegistry::header() {
    return "# alpha_abs delta omega theta phi gamma quantity formula_value oracle_value rel_error";
}

void ErrataRegistry::write(std::ostream& out) const {
    std::lock_guard<std::mutex> lock(mutex_);
    out << header() << '\n';
    for (const auto& r : records_) {
        out << format_real(r.cat.alpha_abs) << ' ' << format_real(r.cat.delta) << ' '
            << format_real(r.cat.omega) << ' ' << format_real(r.meas.theta) << ' '
            << format_real(r.meas.phi) << ' ' << format_real(r.meas.gamma) << ' ' << r.quantity
            << ' ' << r.formula_value << ' ' << r.oracle_value << ' ' << format_real(r.rel_error)
            << '\n';
    }
}

}  // namespace pvmcat
