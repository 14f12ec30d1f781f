#pragma once

#include <string>

#include "srsim/control.hpp"
#include "srsim/trainer.hpp"

namespace srsim {

struct SpectrumOptions {
    int n_orders = 96;
    int samples_per_rev = 4096;

    void validate() const;
};

/// One run's full configuration. Defaults reproduce the reference scenario:
/// 4 N m load at 500 rpm, triangular membership functions, 10 iterations.
struct RunConfig {
    DriveConfig drive;
    TrainerOptions training;
    SpectrumOptions spectrum;
    std::string out_dir = "out";
    unsigned seed = 1;  // reserved for randomized fixtures; the pipeline is deterministic

    void validate() const;

    /// Parse the sectioned key-value config format. Unknown sections/keys and
    /// out-of-range values raise ValidationError naming the offender.
    static RunConfig from_file(const std::string& path);
};

}  // namespace srsim
