#pragma once

#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "pvmcat/postselect.hpp"
#include "pvmcat/states.hpp"

namespace pvmcat {

// One analytic-vs-oracle disagreement: the full parameter point, the quantity,
// and both values. Errata are findings, not failures.
struct ErrataRecord {
    CatParams cat;
    MeasurementParams meas;
    std::string quantity;
    std::string formula_value;  // closed-form value as printed in the source expressions
    std::string oracle_value;   // truncated-Fock ground truth
    double rel_error = 0.0;
};

// Append-only registry with serialized writes; safe to share across scan threads.
class ErrataRegistry {
  public:
    void add(ErrataRecord rec);
    std::vector<ErrataRecord> records() const;
    std::size_t size() const;

    // One record per line:
    //   alpha_abs delta omega theta phi gamma quantity formula_value oracle_value rel_error
    // Reals use %.17g; complex values print as (re,im) with no inner spaces.
    void write(std::ostream& out) const;
    static const char* header();

  private:
    mutable std::mutex mutex_;
    std::vector<ErrataRecord> records_;
};

std::string format_real(double x);
std::string format_complex(Complex z);

// |formula - oracle| / max(|oracle|, 1e-30)
double relative_error(Complex formula, Complex oracle);

}  // namespace pvmcat
