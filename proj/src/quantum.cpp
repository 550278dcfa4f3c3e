#include "omegalab/quantum.hpp"

#include <algorithm>
#include <cmath>

#include "omegalab/errors.hpp"

namespace omegalab::quantum {

namespace {

void require_power_of_two_dim(const Matrix& m, std::uint32_t n) {
    if (n == 0) throw DimensionMismatchError("state needs at least one subsystem");
    const Eigen::Index d = Eigen::Index(1) << n;
    if (m.rows() != d || m.cols() != d) {
        throw DimensionMismatchError("matrix is " + std::to_string(m.rows()) + "x" +
                                     std::to_string(m.cols()) + ", expected " + std::to_string(d) +
                                     "x" + std::to_string(d));
    }
}

void require_dim_cap(std::uint32_t n, const RunConfig& config) {
    if (n > config.dim_cap) throw CapExceededError("subsystem count", n, config.dim_cap);
}

// Bit position of 1-based qubit q in a basis index (qubit 1 = MSB).
unsigned bit_pos(std::uint32_t n, std::uint32_t q) { return n - q; }

std::vector<std::uint32_t> checked_subsystems(const std::vector<std::uint32_t>& subs,
                                              std::uint32_t n, bool allow_empty,
                                              const char* what) {
    if (!allow_empty && subs.empty()) {
        throw InvalidSubsystemError(std::string(what) + ": subsystem set is empty");
    }
    std::vector<std::uint32_t> sorted = subs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > n) {
            throw InvalidSubsystemError(std::string(what) + ": subsystem " +
                                        std::to_string(sorted[i]) + " outside 1.." +
                                        std::to_string(n));
        }
        if (i > 0 && sorted[i] == sorted[i - 1]) {
            throw InvalidSubsystemError(std::string(what) + ": duplicate subsystem " +
                                        std::to_string(sorted[i]));
        }
    }
    return sorted;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
    return solver.eigenvalues();
}

}  // namespace

DensityMatrix make_density(Matrix m, std::uint32_t n, const RunConfig& config) {
    require_dim_cap(n, config);
    require_power_of_two_dim(m, n);
    return DensityMatrix{std::move(m), n};
}

StateReport check_state(const DensityMatrix& rho) {
    StateReport report;
    report.herm_dev = (rho.m - rho.m.adjoint()).cwiseAbs().maxCoeff();
    report.trace_dev = std::abs(rho.m.trace() - Cplx(1.0, 0.0));
    // Eigenvalues of the Hermitian part; for near-Hermitian input this is the
    // right PSD measurement.
    const Matrix herm = (rho.m + rho.m.adjoint()) / 2.0;
    report.min_eig = hermitian_eigenvalues(herm).minCoeff();
    report.hermitian_ok = report.herm_dev <= kHermTol;
    report.trace_ok = report.trace_dev <= kTraceTol;
    report.psd_ok = report.min_eig >= kPsdTol;
    return report;
}

DensityMatrix basis_state(std::uint32_t n, std::uint64_t index) {
    const Eigen::Index d = Eigen::Index(1) << n;
    if (index >= static_cast<std::uint64_t>(d)) {
        throw DimensionMismatchError("basis index out of range");
    }
    Matrix m = Matrix::Zero(d, d);
    m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
    return DensityMatrix{std::move(m), n};
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b, const RunConfig& config) {
    const std::uint32_t n = a.n + b.n;
    require_dim_cap(n, config);
    const Eigen::Index da = a.dim();
    const Eigen::Index db = b.dim();
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i) {
        for (Eigen::Index j = 0; j < da; ++j) {
            out.block(i * db, j * db, db, db) = a.m(i, j) * b.m;
        }
    }
    return DensityMatrix{std::move(out), n};
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::uint32_t>& keep) {
    const auto kept = checked_subsystems(keep, rho.n, false, "partial_trace");
    std::vector<std::uint32_t> traced;
    for (std::uint32_t q = 1; q <= rho.n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
    }

    const std::uint64_t dk = 1ULL << kept.size();
    const std::uint64_t dt = 1ULL << traced.size();

    // Kept qubits keep their relative order, so reduced qubit 1 is the
    // smallest kept label and stays the most significant bit.
    auto embed = [&](std::uint64_t kept_index, std::uint64_t traced_index) {
        std::uint64_t full = 0;
        for (std::size_t a = 0; a < kept.size(); ++a) {
            const std::uint64_t bit = (kept_index >> (kept.size() - 1 - a)) & 1;
            full |= bit << bit_pos(rho.n, kept[a]);
        }
        for (std::size_t a = 0; a < traced.size(); ++a) {
            const std::uint64_t bit = (traced_index >> (traced.size() - 1 - a)) & 1;
            full |= bit << bit_pos(rho.n, traced[a]);
        }
        return full;
    };

    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
    for (std::uint64_t i = 0; i < dk; ++i) {
        for (std::uint64_t j = 0; j < dk; ++j) {
            Cplx sum = 0.0;
            for (std::uint64_t tix = 0; tix < dt; ++tix) {
                sum += rho.m(static_cast<Eigen::Index>(embed(i, tix)),
                             static_cast<Eigen::Index>(embed(j, tix)));
            }
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = sum;
        }
    }
    return DensityMatrix{std::move(out), static_cast<std::uint32_t>(kept.size())};
}

Matrix partial_transpose(const DensityMatrix& rho, const std::vector<std::uint32_t>& subsystems) {
    const auto subs = checked_subsystems(subsystems, rho.n, true, "partial_transpose");
    std::uint64_t mask = 0;
    for (std::uint32_t q : subs) mask |= 1ULL << bit_pos(rho.n, q);

    const Eigen::Index d = rho.dim();
    Matrix out(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) {
            const std::uint64_t ru = static_cast<std::uint64_t>(r);
            const std::uint64_t cu = static_cast<std::uint64_t>(c);
            const std::uint64_t rr = (ru & ~mask) | (cu & mask);
            const std::uint64_t cc = (cu & ~mask) | (ru & mask);
            out(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc)) = rho.m(r, c);
        }
    }
    return out;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const std::vector<std::uint32_t>& split) {
    const Matrix pt = partial_transpose(rho, split);
    return hermitian_eigenvalues((pt + pt.adjoint()) / 2.0).minCoeff();
}

double purity(const DensityMatrix& rho) {
    return (rho.m * rho.m).trace().real();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatchError("trace_distance: dimension mismatch");
    const Matrix diff = ((a.m - b.m) + (a.m - b.m).adjoint()) / 2.0;
    return hermitian_eigenvalues(diff).cwiseAbs().sum() / 2.0;
}

double binary_entropy(double x) {
    double h = 0.0;
    if (x > 0.0 && x < 1.0) h = -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
    return h;
}

double concurrence(const DensityMatrix& rho) {
    if (rho.n != 2) throw DimensionMismatchError("concurrence: defined for 2 qubits only");

    Matrix yy = Matrix::Zero(4, 4);  // sigma_y (x) sigma_y
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    const Matrix rho_tilde = yy * rho.m.conjugate() * yy;

    // sqrt(rho) via eigendecomposition, negatives clamped to zero.
    Eigen::SelfAdjointEigenSolver<Matrix> solver((rho.m + rho.m.adjoint()) / 2.0);
    if (solver.info() != Eigen::Success) throw Error("eigensolver failed to converge");
    Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Matrix sqrt_rho =
        solver.eigenvectors() * vals.asDiagonal() * solver.eigenvectors().adjoint();

    const Matrix a = sqrt_rho * rho_tilde * sqrt_rho;
    Eigen::VectorXd lams = hermitian_eigenvalues((a + a.adjoint()) / 2.0).cwiseMax(0.0).cwiseSqrt();
    std::sort(lams.data(), lams.data() + lams.size(), std::greater<double>());
    return std::max(0.0, lams(0) - lams(1) - lams(2) - lams(3));
}

double eof_two_qubit(const DensityMatrix& rho) {
    const double c = concurrence(rho);
    const double x = (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))) / 2.0;
    return binary_entropy(x);
}

DensityMatrix canonical_term_state(const structures::SetPartition& partition, std::uint32_t n,
                                   const RunConfig& config) {
    require_dim_cap(n, config);
    // Validate: disjoint nonempty blocks covering {1..n}.
    std::vector<bool> seen(n + 1, false);
    std::size_t covered = 0;
    for (const auto& block : partition) {
        if (block.empty()) throw InvalidPartitionError("empty block");
        for (std::uint32_t q : block) {
            if (q < 1 || q > n) {
                throw InvalidPartitionError("element " + std::to_string(q) + " outside 1.." +
                                            std::to_string(n));
            }
            if (seen[q]) throw InvalidPartitionError("element " + std::to_string(q) + " repeated");
            seen[q] = true;
            ++covered;
        }
    }
    if (covered != n) throw InvalidPartitionError("blocks do not cover 1.." + std::to_string(n));

    std::vector<const std::vector<std::uint32_t>*> big_blocks;
    for (const auto& block : partition) {
        if (block.size() >= 2) big_blocks.push_back(&block);
    }
    const std::size_t m = big_blocks.size();

    // Pure state: product of |0> singles and (|0..0>+|1..1>)/sqrt(2^1) per
    // big block; the projector entries are exactly 2^-m.
    const double amp2 = std::ldexp(1.0, -static_cast<int>(m));
    const Eigen::Index d = Eigen::Index(1) << n;
    Matrix out = Matrix::Zero(d, d);
    const std::uint64_t combos = 1ULL << m;
    auto index_of = [&](std::uint64_t combo) {
        std::uint64_t idx = 0;
        for (std::size_t bidx = 0; bidx < m; ++bidx) {
            if ((combo >> bidx) & 1) {
                for (std::uint32_t q : *big_blocks[bidx]) idx |= 1ULL << bit_pos(n, q);
            }
        }
        return idx;
    };
    for (std::uint64_t x = 0; x < combos; ++x) {
        for (std::uint64_t y = 0; y < combos; ++y) {
            out(static_cast<Eigen::Index>(index_of(x)), static_cast<Eigen::Index>(index_of(y))) =
                amp2;
        }
    }
    return DensityMatrix{std::move(out), n};
}

AssembledState assemble_state(const instance::ChaitinInstance& inst,
                              const structures::PartitionCatalog& catalog,
                              const RunConfig& config) {
    if (inst.policy != structures::CoefficientPolicy::TermsOnly) {
        throw PolicyUnsupportedError(
            "assembly is defined for terms-only instances; no canonical pure state is "
            "assigned to each uniform-caratheodory coefficient");
    }
    require_dim_cap(inst.n, config);
    if (catalog.n != inst.n) {
        throw DimensionMismatchError("catalog is for n " + std::to_string(catalog.n) +
                                     ", instance has n " + std::to_string(inst.n));
    }
    if (catalog.partitions.size() != inst.s) {
        throw DimensionMismatchError("catalog has " + std::to_string(catalog.partitions.size()) +
                                     " terms, instance has " + std::to_string(inst.s) +
                                     " weights");
    }

    Rational weight_sum = 0;
    for (const Rational& w : inst.b) weight_sum += w;
    if (weight_sum != 1) throw Error("assemble_state: weights do not sum to 1");

    AssembledState out;
    out.inst = inst;
    const Eigen::Index d = Eigen::Index(1) << inst.n;
    Matrix gamma = Matrix::Zero(d, d);
    out.terms.reserve(inst.s);
    for (std::uint64_t i = 0; i < inst.s; ++i) {
        DecompositionTerm term;
        term.partition = catalog.partitions[i];
        term.state = canonical_term_state(term.partition, inst.n, config);
        term.weight = inst.b[i];
        gamma += to_double(term.weight) * term.state.m;
        out.terms.push_back(std::move(term));
    }
    out.gamma = DensityMatrix{std::move(gamma), inst.n};

    // Distinctness across the catalog's canonical representatives.
    for (std::size_t i = 0; i < out.terms.size(); ++i) {
        for (std::size_t j = i + 1; j < out.terms.size(); ++j) {
            if (trace_distance(out.terms[i].state, out.terms[j].state) <= kDistinctTol) {
                throw Error("assemble_state: term states " + std::to_string(i) + " and " +
                            std::to_string(j) + " are not distinct");
            }
        }
    }

    const StateReport report = check_state(out.gamma);
    if (!report.ok()) throw Error("assemble_state: assembled state fails density invariants");
    return out;
}

}  // namespace omegalab::quantum
