#include "regconn/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "regconn/error.hpp"

namespace regconn {

double SymmetricMatrix::trace() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < order_; ++i) sum += (*this)(i, i);
    return sum;
}

double SymmetricMatrix::frobenius_norm_squared() const {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return sum;
}

Partition::Partition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : n_(n), blocks_(std::move(blocks)), label_(n, n) {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        auto& block = blocks_[b];
        if (block.empty()) {
            throw Error(ErrorKind::InvalidPartition, "block " + std::to_string(b) + " is empty");
        }
        std::sort(block.begin(), block.end());
        for (std::size_t x : block) {
            if (x >= n) {
                throw Error(ErrorKind::InvalidPartition,
                            "element " + std::to_string(x) + " out of range");
            }
            if (label_[x] != n) {
                throw Error(ErrorKind::InvalidPartition,
                            "element " + std::to_string(x) + " appears in two blocks");
            }
            label_[x] = b;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        if (label_[x] == n) {
            throw Error(ErrorKind::InvalidPartition,
                        "element " + std::to_string(x) + " is not covered");
        }
    }
}

Partition Partition::from_labels(std::span<const std::size_t> labels) {
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        if (labels[x] >= blocks.size()) blocks.resize(labels[x] + 1);
        blocks[labels[x]].push_back(x);
    }
    return Partition(labels.size(), std::move(blocks));
}

QuotientMatrix::QuotientMatrix(std::vector<double> entries, std::vector<double> block_sizes)
    : entries_(std::move(entries)), block_sizes_(std::move(block_sizes)) {
    if (entries_.size() != block_sizes_.size() * block_sizes_.size()) {
        throw Error(ErrorKind::InvalidPartition, "quotient entries do not match block count");
    }
    for (double s : block_sizes_) {
        if (!(s > 0.0)) throw Error(ErrorKind::InvalidPartition, "block sizes must be positive");
    }
}

SymmetricMatrix adjacency_matrix(const Graph& g) {
    SymmetricMatrix a(g.vertex_count());
    for (const auto& [u, w] : g.edges()) a.set(u, w, 1.0);
    return a;
}

SymmetricMatrix laplacian_matrix(const Graph& g) {
    SymmetricMatrix l(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) l.set(u, u, static_cast<double>(g.degree(u)));
    for (const auto& [u, w] : g.edges()) l.set(u, w, -1.0);
    return l;
}

Spectrum eigenvalues(const SymmetricMatrix& m, const JacobiOptions& options) {
    const std::size_t n = m.order();
    std::vector<double> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    }
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    const double threshold =
        options.off_diagonal_tolerance * std::max(1.0, std::sqrt(m.frobenius_norm_squared()));
    bool converged = false;
    for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
        }
        if (std::sqrt(off) < threshold) {
            converged = true;
            break;
        }
        if (sweep == options.max_sweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = at(r, p);
                    const double arq = at(r, q);
                    at(r, p) = at(p, r) = c * arp - s * arq;
                    at(r, q) = at(q, r) = c * arq + s * arp;
                }
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
            }
        }
    }
    if (!converged) {
        throw Error(ErrorKind::ConvergenceFailure,
                    "Jacobi iteration did not converge within " +
                        std::to_string(options.max_sweeps) + " sweeps");
    }
    Spectrum out;
    out.values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.values.push_back(at(i, i));
    std::sort(out.values.begin(), out.values.end(), std::greater<>());
    return out;
}

QuotientMatrix quotient_matrix(const SymmetricMatrix& m, const Partition& p) {
    if (p.element_count() != m.order()) {
        throw Error(ErrorKind::InvalidPartition, "partition does not match matrix order");
    }
    const std::size_t k = p.block_count();
    std::vector<double> entries(k * k, 0.0);
    std::vector<double> sizes(k);
    for (std::size_t bi = 0; bi < k; ++bi) {
        const auto rows = p.block(bi);
        sizes[bi] = static_cast<double>(rows.size());
        for (std::size_t r : rows) {
            for (std::size_t c = 0; c < m.order(); ++c) {
                entries[bi * k + p.block_of(c)] += m(r, c);
            }
        }
        for (std::size_t bj = 0; bj < k; ++bj) entries[bi * k + bj] /= sizes[bi];
    }
    return QuotientMatrix(std::move(entries), std::move(sizes));
}

Spectrum quotient_eigenvalues(const QuotientMatrix& q) {
    const std::size_t k = q.order();
    const auto sizes = q.block_sizes();
    SymmetricMatrix s(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            const double upper = q(i, j) * std::sqrt(sizes[i] / sizes[j]);
            const double lower = q(j, i) * std::sqrt(sizes[j] / sizes[i]);
            const double scale = std::max({1.0, std::abs(upper), std::abs(lower)});
            if (std::abs(upper - lower) > 1e-9 * scale) {
                throw Error(ErrorKind::NotSymmetrizable,
                            "size-weighted quotient is not symmetric at (" + std::to_string(i) +
                                "," + std::to_string(j) + ")");
            }
            s.set(i, j, 0.5 * (upper + lower));
        }
    }
    return eigenvalues(s);
}

InterlacingResult check_interlacing(const Spectrum& large, const Spectrum& small,
                                    double tolerance) {
    if (small.size() > large.size()) {
        throw Error(ErrorKind::SizeMismatch, "interlacing needs |small| <= |large|");
    }
    const std::size_t offset = large.size() - small.size();
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (large[i] + tolerance < small[i] || small[i] + tolerance < large[offset + i]) {
            return {false, i + 1};
        }
    }
    return {};
}

std::optional<std::size_t> interlacing_tightness(const Spectrum& large, const Spectrum& small,
                                                 double tolerance) {
    if (small.size() > large.size()) {
        throw Error(ErrorKind::SizeMismatch, "interlacing needs |small| <= |large|");
    }
    const std::size_t m = small.size();
    const std::size_t offset = large.size() - m;
    auto close = [&](double a, double b) { return std::abs(a - b) <= tolerance; };
    // top[j]: the first j values match from above; bottom[j]: values j..m-1 match from below.
    std::vector<bool> top(m + 1, true);
    std::vector<bool> bottom(m + 1, true);
    for (std::size_t i = 0; i < m; ++i) top[i + 1] = top[i] && close(large[i], small[i]);
    for (std::size_t i = m; i-- > 0;) bottom[i] = bottom[i + 1] && close(large[offset + i], small[i]);
    for (std::size_t j = m + 1; j-- > 0;) {
        if (top[j] && bottom[j]) return j;
    }
    return std::nullopt;
}

bool is_equitable(const Graph& g, const Partition& p) {
    if (p.element_count() != g.vertex_count()) {
        throw Error(ErrorKind::InvalidPartition, "partition does not match graph order");
    }
    const std::size_t k = p.block_count();
    std::vector<std::size_t> expected(k);
    std::vector<std::size_t> counts(k);
    for (std::size_t b = 0; b < k; ++b) {
        bool first = true;
        for (Vertex u : p.block(b)) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex w : g.neighbours(u)) ++counts[p.block_of(w)];
            if (first) {
                expected = counts;
                first = false;
            } else if (counts != expected) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace regconn
