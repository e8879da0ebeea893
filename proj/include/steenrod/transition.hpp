// Milnor <-> Cartan-Serre transition matrices and their memo.
//
// In reduced degree r the basis is Gamma_r, sorted descending right-lex.
// Entry (i, j) is <xi^{gamma(I_j)}, P^{I_i}>: row i is the Milnor expansion
// of the i-th admissible word, column j the Milnor monomial gamma(I_j).
// The matrix is upper triangular with unit (+-1) diagonal.
//
// On-disk format (all integers little-endian uint32):
//   magic "STMX", version (1), prime, topological degree, dimension n,
//   then the n(n+1)/2 upper-triangular entries row by row.
#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <vector>

#include "steenrod/fp.hpp"
#include "steenrod/seqcomb.hpp"

namespace steenrod {

/// Full square matrix over F_p, row-major.
struct DenseFpMatrix
{
    std::size_t dim = 0;
    std::vector<Coeff> entries;
    Coeff operator()(std::size_t i, std::size_t j) const { return entries[i * dim + j]; }
};

class TransitionMatrix
{
public:
    TransitionMatrix(Prime p, Entry reduced_degree, std::vector<Coeff> packed_upper);

    Prime prime() const { return p_; }
    Entry reduced_degree() const { return r_; }
    Entry degree() const { return 2 * (p_ - 1) * r_; }
    std::size_t dim() const { return words_.size(); }
    /// Gamma_r, descending right-lex.
    const std::vector<ExponentSeq>& words() const { return words_; }
    Coeff at(std::size_t i, std::size_t j) const;
    const std::vector<Coeff>& packed() const { return upper_; }

private:
    Prime p_;
    Entry r_;
    std::vector<ExponentSeq> words_;
    std::vector<Coeff> upper_;
};

/// Builds the full matrix in reduced degree r from Milnor products, without
/// assuming triangularity.
DenseFpMatrix dense_transition_matrix(Prime p, Entry r);

bool is_upper_unitriangular(const DenseFpMatrix& m, Prime p);

/// Builds and packs the matrix; throws std::logic_error if it is not upper
/// triangular with +-1 on the diagonal.
TransitionMatrix build_transition_matrix(Prime p, Entry r);

void write_transition_matrix(std::ostream& out, const TransitionMatrix& m);
/// Throws std::runtime_error on a malformed stream.
TransitionMatrix read_transition_matrix(std::istream& in);

/// Name of the environment variable naming the on-disk cache directory.
inline constexpr const char* kCacheDirEnv = "STEENROD_CACHE_DIR";

/// Process-wide memo keyed by (p, r). Each key is computed at most once even
/// under concurrent lookups. If a cache directory is configured, matrices are
/// loaded from it when present and written to it after computation.
class TransitionCache
{
public:
    static TransitionCache& instance();
    ~TransitionCache();

    std::shared_ptr<const TransitionMatrix> get(Prime p, Entry r);

    /// Overrides the directory taken from the environment; empty disables disk use.
    void set_directory(std::filesystem::path dir);
    std::filesystem::path directory() const;
    /// Number of matrices computed (not loaded) since the last clear().
    std::size_t computed_count() const;
    void clear();

    static std::filesystem::path file_name(Prime p, Entry r);

private:
    TransitionCache();
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace steenrod
