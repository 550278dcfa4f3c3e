#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "omegalab/config.hpp"
#include "omegalab/instance.hpp"
#include "omegalab/partitions.hpp"
#include "omegalab/rational.hpp"

namespace omegalab::quantum {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Tolerances for density-matrix invariants (double-precision eigensolvers
// on dimensions up to 64).
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = -1e-9;
inline constexpr double kPurityTol = 1e-9;
inline constexpr double kDistinctTol = 1e-6;

// Dense operator on n qubits, dim = 2^n, row-major basis index with qubit 1
// as the most significant bit.
struct DensityMatrix {
    Matrix m;
    std::uint32_t n = 0;

    Eigen::Index dim() const { return m.rows(); }
};

struct StateReport {
    double herm_dev = 0.0;   // max entrywise |rho - rho^dagger|
    double trace_dev = 0.0;  // |tr rho - 1|
    double min_eig = 0.0;
    bool hermitian_ok = false;
    bool trace_ok = false;
    bool psd_ok = false;

    bool ok() const { return hermitian_ok && trace_ok && psd_ok; }
};

DensityMatrix make_density(Matrix m, std::uint32_t n, const RunConfig& config = RunConfig{});
StateReport check_state(const DensityMatrix& rho);

// |b1..bn><b1..bn| for a basis bitstring, qubit 1 first.
DensityMatrix basis_state(std::uint32_t n, std::uint64_t index);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                     const RunConfig& config = RunConfig{});

// keep: 1-based subsystem labels, nonempty subset of {1..n}.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::uint32_t>& keep);

// Transpose on the chosen tensor factors (any subset, possibly empty or full).
Matrix partial_transpose(const DensityMatrix& rho, const std::vector<std::uint32_t>& subsystems);

double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<std::uint32_t>& split);

double purity(const DensityMatrix& rho);  // tr(rho^2)

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// Wootters closed form, two qubits only.
double concurrence(const DensityMatrix& rho);
double eof_two_qubit(const DensityMatrix& rho);
double binary_entropy(double x);

// Product over blocks: singleton -> |0><0|, larger block -> GHZ-type state on
// the block's positions. Entries are exact dyadic rationals.
DensityMatrix canonical_term_state(const structures::SetPartition& partition, std::uint32_t n,
                                   const RunConfig& config = RunConfig{});

struct DecompositionTerm {
    structures::SetPartition partition;
    DensityMatrix state;
    Rational weight;
};

struct AssembledState {
    instance::ChaitinInstance inst;
    std::vector<DecompositionTerm> terms;
    DensityMatrix gamma;
};

AssembledState assemble_state(const instance::ChaitinInstance& inst,
                              const structures::PartitionCatalog& catalog,
                              const RunConfig& config = RunConfig{});

}  // namespace omegalab::quantum
