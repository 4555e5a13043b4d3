#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "regconn/graph.hpp"

namespace regconn {

/// Absolute tolerance for every spectral comparison in the library.
inline constexpr double kSpectralTolerance = 1e-9;

/// Dense real symmetric matrix. set() writes both (i,j) and (j,i).
class SymmetricMatrix {
public:
    explicit SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {}

    std::size_t order() const noexcept { return order_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }
    void set(std::size_t i, std::size_t j, double value) {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }
    double trace() const;
    double frobenius_norm_squared() const;

private:
    std::size_t order_;
    std::vector<double> data_;
};

/// Ordered list of disjoint nonempty vertex blocks covering 0..n-1.
class Partition {
public:
    /// Throws InvalidPartition unless blocks are nonempty, disjoint and cover 0..n-1.
    Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);
    /// Block i holds the indices whose label is i; labels must be 0..m-1 with no gaps.
    static Partition from_labels(std::span<const std::size_t> labels);

    std::size_t element_count() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    std::span<const std::size_t> block(std::size_t i) const { return blocks_[i]; }
    std::size_t block_of(std::size_t element) const { return label_[element]; }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> label_;
};

/// Matrix of average block row sums. Entry (i,j) is the sum of the (i,j)
/// block of the source divided by the size of block i.
class QuotientMatrix {
public:
    /// Direct construction from entries (row-major, m*m) and the block sizes
    /// they were averaged over. Throws InvalidPartition on inconsistent sizes.
    QuotientMatrix(std::vector<double> entries, std::vector<double> block_sizes);

    std::size_t order() const noexcept { return block_sizes_.size(); }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * order() + j]; }
    std::span<const double> block_sizes() const noexcept { return block_sizes_; }

private:
    std::vector<double> entries_;
    std::vector<double> block_sizes_;
};

/// Eigenvalues sorted in descending order.
struct Spectrum {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](std::size_t i) const { return values[i]; }
};

SymmetricMatrix adjacency_matrix(const Graph& g);
/// diag(degrees) - A.
SymmetricMatrix laplacian_matrix(const Graph& g);

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-12;  ///< relative to max(1, ||A||_F)
    int max_sweeps = 100;
};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Throws ConvergenceFailure when the sweep cap is reached.
Spectrum eigenvalues(const SymmetricMatrix& m, const JacobiOptions& options = {});

QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const Partition& p);

/// Eigenvalues of a quotient through the similarity D^{1/2} Q D^{-1/2}, with D
/// the block sizes. Throws NotSymmetrizable if that form is not symmetric.
Spectrum quotient_eigenvalues(const QuotientMatrix& q);

struct InterlacingResult {
    bool holds = true;
    /// 1-based index i of the first violated inequality.
    std::optional<std::size_t> first_violation;
};

/// Checks large_i >= small_i >= large_{n-m+i} for i = 1..m.
/// Throws SizeMismatch when small is longer than large.
InterlacingResult check_interlacing(const Spectrum& large, const Spectrum& small,
                                    double tolerance = kSpectralTolerance);

/// Largest j in 0..m such that small_i = large_i for i <= j and
/// small_i = large_{n-m+i} for i > j, if any.
std::optional<std::size_t> interlacing_tightness(const Spectrum& large, const Spectrum& small,
                                                 double tolerance = kSpectralTolerance);

/// True iff every vertex of block i has the same number of neighbours in
/// block j, for all i and j.
bool is_equitable(const Graph& g, const Partition& p);

}  // namespace regconn
