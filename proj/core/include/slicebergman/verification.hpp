#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slicebergman/quaternion.hpp"

namespace slicebergman {

/// Run configuration shared by the verification suites and the CLI. The seed
/// fully determines every randomized sample set, so runs are reproducible.
struct VerifyConfig {
    double alpha = 1.0;
    double R = 1.0;
    double nu = 1.0;
    std::size_t halfline_nodes = 128;
    std::size_t radial_nodes = 64;
    std::size_t angular_nodes = 128;
    double rel_tol = 1e-14;
    std::size_t max_terms = 512;
    std::uint64_t seed = 0;
};

struct CheckResult {
    int criterion;  // 1..12, stable numbering
    std::string name;
    double max_residual;
    double tolerance;
    bool pass;
};

/// Suites: identity {1,2,3,4}, ortho {5,12}, isometry {7,8,9}, reproduce {10},
/// kkintegral {6}, asymptotic {11}.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one named suite (or "all") and returns its checks ordered by criterion.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& config);

/// Deterministic splitmix64-based sampler; identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();
    double uniform();                     // [0, 1)
    double uniform(double lo, double hi);
    Quaternion ball(double radius);       // uniform in the solid 4-ball
    ImaginaryUnit unit();                 // uniform direction on S^2

  private:
    std::uint64_t state_;
};

}  // namespace slicebergman
